import os
import subprocess
import sys

import numpy as np
import pytest
from numpy.testing import assert_allclose
from scipy.stats import norm

from extropy import _backend, _pykernels


def _have_compiled() -> bool:
    try:
        from extropy import _ckernels  # noqa: F401
    except ImportError:
        return False
    return True


RNG = np.random.default_rng(42)
DATA = np.sort(RNG.exponential(size=60))
H = 0.4


class TestPythonKernels:
    def test_pdf_matches_direct_sum(self):
        ts = np.linspace(-0.5, 4.0, 17)
        want = np.array(
            [np.mean(norm.pdf((t - DATA) / H)) / H for t in ts]
        )
        assert_allclose(_pykernels.pdf_points(DATA, H, ts), want, rtol=1e-12)

    def test_pdf_preserves_shape(self):
        ts = np.linspace(0.0, 2.0, 6).reshape(2, 3)
        out = _pykernels.pdf_points(DATA, H, ts)
        assert out.shape == (2, 3)

    def test_mass_matches_cdf_sum(self):
        want = np.mean(norm.cdf((1.5 - DATA) / H) - norm.cdf((0.5 - DATA) / H))
        assert_allclose(_pykernels.mass(DATA, H, 0.5, 1.5), want, rtol=1e-12)

    def test_mass_whole_line(self):
        assert_allclose(_pykernels.mass(DATA, H, -np.inf, np.inf), 1.0, atol=1e-14)

    def test_square_integral_single_kernel(self):
        # integral of phi(u-1)^2 over the line = 1/(2 sqrt(pi))
        got = _pykernels.square_integral(np.array([1.0]), 1.0, -7.0, 9.0)
        assert_allclose(got, 1.0 / (2.0 * np.sqrt(np.pi)), atol=1e-10)

    def test_square_integral_empty_range(self):
        assert _pykernels.square_integral(DATA, H, 2.0, 2.0) == 0.0
        assert _pykernels.square_integral(DATA, H, 3.0, 2.0) == 0.0


@pytest.mark.skipif(not _have_compiled(), reason="compiled extension not built")
class TestBackendParity:
    def test_pdf_points(self):
        from extropy import _ckernels

        ts = np.linspace(-1.0, 5.0, 33)
        assert_allclose(
            _ckernels.pdf_points(DATA, H, ts),
            _pykernels.pdf_points(DATA, H, ts),
            rtol=1e-12,
        )

    def test_mass(self):
        from extropy import _ckernels

        for lo, hi in ((0.0, np.inf), (-np.inf, 1.0), (0.3, 2.2), (5.0, np.inf)):
            assert_allclose(
                _ckernels.mass(DATA, H, lo, hi),
                _pykernels.mass(DATA, H, lo, hi),
                rtol=1e-12,
            )

    def test_square_integral(self):
        from extropy import _ckernels

        for a, b in ((0.0, 1.0), (0.5, 6.0), (-2.0, 0.1)):
            assert_allclose(
                _ckernels.square_integral(DATA, H, a, b, 1e-12),
                _pykernels.square_integral(DATA, H, a, b, 1e-12),
                atol=1e-11,
            )

    def test_read_only_input_accepted(self):
        from extropy import _ckernels

        frozen = DATA.copy()
        frozen.setflags(write=False)
        got = _ckernels.mass(frozen, H, 0.0, np.inf)
        assert_allclose(got, _pykernels.mass(DATA, H, 0.0, np.inf), rtol=1e-12)


class TestSelection:
    def test_active_backend_reports(self):
        name = _backend.active_backend()
        assert name in ("compiled", "python")
        if _have_compiled() and not os.environ.get("EXTROPY_PURE_PYTHON"):
            assert name == "compiled"

    def test_env_forces_python(self):
        env = dict(os.environ, EXTROPY_PURE_PYTHON="1")
        out = subprocess.run(
            [sys.executable, "-c", "from extropy._backend import active_backend; print(active_backend())"],
            capture_output=True,
            text=True,
            env=env,
            check=True,
        )
        assert out.stdout.strip() == "python"

    def test_estimates_agree_across_backends(self):
        code = (
            "import numpy as np\n"
            "from extropy.kde import estimate_rex, estimate_pex, Sample\n"
            "rng = np.random.default_rng(9)\n"
            "s = Sample(rng.exponential(size=80))\n"
            "print(repr(estimate_rex(s, 0.3, 0.5)))\n"
            "print(repr(estimate_pex(s, 0.3, 0.5)))\n"
        )
        runs = {}
        for tag, env in (
            ("default", dict(os.environ)),
            ("pure", dict(os.environ, EXTROPY_PURE_PYTHON="1")),
        ):
            out = subprocess.run(
                [sys.executable, "-c", code],
                capture_output=True,
                text=True,
                env=env,
                check=True,
            )
            runs[tag] = [float(v) for v in out.stdout.split()]
        assert_allclose(runs["default"], runs["pure"], rtol=1e-9)
