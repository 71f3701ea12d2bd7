import json

import numpy as np
import pytest
from numpy.testing import assert_allclose

from extropy.cli import main
from extropy.data import COVID_INFECTION_PERCENTAGES
from extropy.kde import estimate_pex, estimate_rex


@pytest.fixture
def datafile(tmp_path):
    p = tmp_path / "obs.txt"
    p.write_text("".join(f"{v}\n" for v in COVID_INFECTION_PERCENTAGES))
    return p


class TestEval:
    def test_rex_exponential(self, capsys):
        assert main(["eval", "--dist", "exp:1", "--kind", "rex", "--t", "0.5"]) == 0
        assert capsys.readouterr().out == "-0.250000\n"

    def test_pex_uniform(self, capsys):
        assert main(["eval", "--dist", "unif:0:1", "--kind", "pex", "--t", "0.5"]) == 0
        assert capsys.readouterr().out == "-1.000000\n"

    def test_rex_piecewise(self, capsys):
        assert main(["eval", "--dist", "example1", "--kind", "rex", "--t", "1.0"]) == 0
        assert capsys.readouterr().out == "-0.518519\n"

    def test_plain_extropy(self, capsys):
        assert main(["eval", "--dist", "exp:2", "--kind", "extropy"]) == 0
        assert capsys.readouterr().out == "-0.500000\n"

    def test_missing_t_fails_cleanly(self, capsys):
        assert main(["eval", "--dist", "exp:1", "--kind", "rex"]) == 2
        captured = capsys.readouterr()
        assert captured.out == ""
        assert "error:" in captured.err

    def test_bad_distribution(self, capsys):
        assert main(["eval", "--dist", "weibull:2", "--kind", "rex", "--t", "1"]) == 2
        assert "error:" in capsys.readouterr().err


class TestScan:
    def test_constant_curve(self, capsys):
        rc = main(
            ["scan", "--dist", "exp:1", "--kind", "rex", "--from", "0.1", "--to", "2.0", "--points", "5"]
        )
        assert rc == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "t,value"
        assert lines[-1] == "classification,constant"
        assert len(lines) == 7
        for row in lines[1:-1]:
            assert row.split(",")[1] == "-0.250000"

    def test_out_file(self, tmp_path, capsys):
        out = tmp_path / "curve.csv"
        rc = main(
            ["scan", "--dist", "example1", "--kind", "rex", "--from", "0.05",
             "--to", "1.95", "--points", "20", "--out", str(out)]
        )
        assert rc == 0
        assert capsys.readouterr().out == ""
        lines = out.read_text().splitlines()
        assert lines[0] == "t,value"
        assert lines[-1] == "classification,decreasing"

    def test_too_few_points(self, capsys):
        rc = main(["scan", "--dist", "exp:1", "--kind", "rex", "--from", "0.1", "--to", "1", "--points", "2"])
        assert rc == 2


class TestSystem:
    def test_bridge_drex(self, capsys):
        rc = main(["system", "--signature", "0,0,0.25,0.75", "--check", "drex"])
        assert rc == 0
        assert capsys.readouterr().out == "ordered=true rational_monotone=true\n"

    def test_half_ipex(self, capsys):
        rc = main(["system", "--signature", "0.5,0.5,0,0", "--check", "ipex"])
        assert rc == 0
        assert capsys.readouterr().out == "ordered=true rational_monotone=true\n"

    def test_series_fails_drex(self, capsys):
        rc = main(["system", "--signature", "1,0,0,0", "--check", "drex"])
        assert rc == 0
        assert capsys.readouterr().out.startswith("ordered=false")

    def test_bad_signature(self, capsys):
        assert main(["system", "--signature", "0.5,0.6", "--check", "drex"]) == 2


class TestRecord:
    def test_curve_values(self, capsys):
        rc = main(
            ["record", "--n", "2", "--k", "1", "--dist", "exp:1",
             "--from", "0.5", "--to", "1.5", "--points", "3"]
        )
        assert rc == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "t,pdf,survival,hazard"
        t, pdf, surv, haz = (float(v) for v in lines[2].split(","))
        assert t == pytest.approx(1.0)
        assert pdf == pytest.approx(np.exp(-1.0), abs=1e-6)
        assert surv == pytest.approx(2.0 * np.exp(-1.0), abs=1e-6)
        assert haz == pytest.approx(0.5, abs=1e-6)

    def test_default_range_covers_bulk(self, capsys):
        rc = main(["record", "--n", "2", "--k", "1", "--dist", "exp:1", "--points", "10"])
        assert rc == 0
        lines = capsys.readouterr().out.splitlines()
        assert len(lines) == 11

    def test_reversed_range(self, capsys):
        rc = main(
            ["record", "--n", "2", "--k", "1", "--dist", "exp:1",
             "--from", "2.0", "--to", "1.0"]
        )
        assert rc == 2


class TestEstimate:
    def test_rex_matches_library(self, datafile, capsys):
        rc = main(["estimate", "rex", "--data", str(datafile), "--h", "0.5", "--t", "0.1"])
        assert rc == 0
        got = float(capsys.readouterr().out)
        want = estimate_rex(list(COVID_INFECTION_PERCENTAGES), 0.5, 0.1)
        assert_allclose(got, want, atol=1e-6)

    def test_sample_range_flag(self, datafile, capsys):
        rc = main(
            ["estimate", "rex", "--data", str(datafile), "--h", "0.5", "--t", "0.1",
             "--sample-range"]
        )
        assert rc == 0
        got = float(capsys.readouterr().out)
        assert_allclose(got, -0.0799, atol=5e-4)

    def test_pex(self, datafile, capsys):
        rc = main(["estimate", "pex", "--data", str(datafile), "--h", "0.5", "--t", "2.0"])
        assert rc == 0
        want = estimate_pex(list(COVID_INFECTION_PERCENTAGES), 0.5, 2.0)
        assert_allclose(float(capsys.readouterr().out), want, atol=1e-6)

    def test_header_lines_skipped(self, tmp_path, capsys):
        p = tmp_path / "obs.csv"
        p.write_text("lifetime\n1.0\n2.0\n0.5\n")
        rc = main(["estimate", "rex", "--data", str(p), "--h", "0.3", "--t", "0.4"])
        assert rc == 0
        want = estimate_rex([1.0, 2.0, 0.5], 0.3, 0.4)
        assert_allclose(float(capsys.readouterr().out), want, atol=1e-6)

    def test_missing_file(self, capsys):
        rc = main(["estimate", "rex", "--data", "/nonexistent.txt", "--h", "0.3", "--t", "0.4"])
        assert rc == 2
        assert "error:" in capsys.readouterr().err


class TestSimulate:
    def test_golden_csv(self, capsys):
        rc = main(
            ["simulate", "--kind", "pex", "--n", "10", "--t", "0.3,0.9", "--h", "0.3",
             "--reps", "50", "--seed", "2"]
        )
        assert rc == 0
        assert capsys.readouterr().out == (
            "kind,n,t,h,bias,rmse,drops\r\n"
            "pex,10,0.300000,0.300000,-1.429579,4.621633,1\r\n"
            "pex,10,0.900000,0.300000,-0.092817,0.118385,0\r\n"
        )

    def test_drop_warning_on_stderr(self, capsys):
        rc = main(
            ["simulate", "--kind", "pex", "--n", "10", "--t", "0.3", "--h", "0.1",
             "--reps", "200", "--seed", "2"]
        )
        assert rc == 0
        assert "dropped 4/200" in capsys.readouterr().err

    def test_config_file(self, tmp_path, capsys):
        cfg = tmp_path / "study.json"
        cfg.write_text(
            json.dumps(
                {"kind": "rex", "sizes": [10], "t_grid": [0.5], "h_grid": [0.3],
                 "replications": 5, "master_seed": 1}
            )
        )
        rc = main(["simulate", "--config", str(cfg)])
        assert rc == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "kind,n,t,h,bias,rmse,drops"
        assert len(lines) == 2
        assert lines[1].startswith("rex,10,0.500000,0.300000,")

    def test_kind_required_without_config(self, capsys):
        assert main(["simulate", "--reps", "5"]) == 2

    def test_out_file(self, tmp_path, capsys):
        out = tmp_path / "rows.csv"
        rc = main(
            ["simulate", "--kind", "rex", "--n", "10", "--t", "0.5", "--h", "0.3",
             "--reps", "5", "--seed", "1", "--out", str(out)]
        )
        assert rc == 0
        assert capsys.readouterr().out == ""
        assert out.read_text().splitlines()[0] == "kind,n,t,h,bias,rmse,drops"


class TestRealdata:
    def test_rate_line_and_cells(self, capsys):
        rc = main(["realdata", "--t", "0.1,0.5", "--h", "0.5"])
        assert rc == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "lambda_hat,0.32"
        assert lines[1] == "t,h,theoretical,estimate"
        t01 = lines[2].split(",")
        assert t01[2] == "-0.080000"
        assert_allclose(float(t01[3]), -0.0799, atol=5e-4)
        t05 = lines[3].split(",")
        assert_allclose(float(t05[3]), -0.0852, atol=5e-4)

    def test_default_grid_shape(self, capsys):
        rc = main(["realdata"])
        assert rc == 0
        lines = capsys.readouterr().out.splitlines()
        # lambda line + header + 25 cells
        assert len(lines) == 27

    def test_out_file_still_prints_rate(self, tmp_path, capsys):
        out = tmp_path / "cells.csv"
        rc = main(["realdata", "--t", "0.1", "--h", "0.1", "--out", str(out)])
        assert rc == 0
        assert capsys.readouterr().out == "lambda_hat,0.32\n"
        lines = out.read_text().splitlines()
        assert lines[0] == "t,h,theoretical,estimate"
        assert_allclose(float(lines[1].split(",")[3]), -0.1090, atol=5e-4)


def test_no_arguments_is_usage_error(capsys):
    assert main([]) == 2
