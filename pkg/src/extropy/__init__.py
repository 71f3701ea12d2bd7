"""Residual and past extropy of lifetime models.

Exact functionals and their identities, coherent-system and k-record
calculus, Gaussian-kernel estimation, and a reproducible Monte Carlo
harness.  See the README for the command-line interface.
"""

from ._backend import active_backend
from .data import COVID_INFECTION_PERCENTAGES
from .distributions import (
    DistributionModel,
    DomainError,
    hazard,
    make_exponential,
    make_piecewise_example,
    make_uniform,
    parse_distribution,
    residual_life,
    reversed_hazard,
    sample_iid,
)
from .functionals import (
    ExtropyCurve,
    classify_monotonicity,
    extropy,
    extropy_curve,
    hazard_from_rex,
    past_extropy,
    past_extropy_reversed_form,
    recover_hazard,
    residual_extropy,
    residual_extropy_hazard_form,
    shift_residual_check,
)
from .kde import (
    C_K,
    KdeErrorApprox,
    KdeModel,
    Sample,
    asymptotic_variance,
    estimate_pex,
    estimate_rex,
    kde_bias_variance,
    kde_eval,
    mle_exponential,
)
from .quadrature import QuadratureError, adaptive_simpson
from .records import k_record_distribution, record_hazard_ratio_pi, upper_incomplete_gamma
from .simulate import StudyConfig, StudyRow, bias_rmse, replication_seed, run_study, write_rows_csv
from .systems import (
    PremisesReport,
    RatioReport,
    Signature,
    check_ratio_monotone,
    order_statistic_distribution,
    preservation_premises,
    psi,
    psi_tilde,
    system_distribution,
)

__version__ = "0.1.0"

__all__ = [
    "COVID_INFECTION_PERCENTAGES",
    "C_K",
    "DistributionModel",
    "DomainError",
    "ExtropyCurve",
    "KdeErrorApprox",
    "KdeModel",
    "PremisesReport",
    "QuadratureError",
    "RatioReport",
    "Sample",
    "Signature",
    "StudyConfig",
    "StudyRow",
    "active_backend",
    "adaptive_simpson",
    "asymptotic_variance",
    "bias_rmse",
    "check_ratio_monotone",
    "classify_monotonicity",
    "estimate_pex",
    "estimate_rex",
    "extropy",
    "extropy_curve",
    "hazard",
    "hazard_from_rex",
    "k_record_distribution",
    "kde_bias_variance",
    "kde_eval",
    "make_exponential",
    "make_piecewise_example",
    "make_uniform",
    "mle_exponential",
    "order_statistic_distribution",
    "parse_distribution",
    "past_extropy",
    "past_extropy_reversed_form",
    "preservation_premises",
    "psi",
    "psi_tilde",
    "record_hazard_ratio_pi",
    "recover_hazard",
    "replication_seed",
    "residual_extropy",
    "residual_extropy_hazard_form",
    "residual_life",
    "reversed_hazard",
    "run_study",
    "sample_iid",
    "shift_residual_check",
    "system_distribution",
    "upper_incomplete_gamma",
    "write_rows_csv",
]
