"""Upper k-record values: distributions, hazards, and order-ratio curves.

For a base law with survival ``S`` write ``phi(t) = -log S(t)``.  The n-th
upper k-record has density

    k^n / (n-1)! * S(x)^(k-1) * phi(x)^(n-1) * f(x)

and survival ``Gamma(n, k phi(x)) / Gamma(n)``, an upper incomplete gamma
ratio that reduces to a finite exponential sum for integer ``n``.
"""

from __future__ import annotations

from math import exp, factorial, log

import numpy as np
from scipy.special import gammainccinv

from .distributions import DistributionModel, DomainError, _scalarize

_SURV_CLAMP = 1e-300


def upper_incomplete_gamma(a: float, x: float) -> float:
    """``int_x^inf u^(a-1) e^(-u) du`` for integer ``a >= 1``.

    Uses the exact finite sum ``(a-1)! e^(-x) sum_{i<a} x^i/i!``; non-integer
    orders are out of scope.
    """
    if not a > 0:
        raise ValueError(f"order must be positive, got {a}")
    if abs(a - round(a)) > 1e-9:
        raise ValueError(f"only integer orders are supported, got {a}")
    if x < 0:
        raise ValueError(f"lower limit must be nonnegative, got {x}")
    n = int(round(a))
    term = 1.0
    acc = 1.0
    for i in range(1, n):
        term *= x / i
        acc += term
    return factorial(n - 1) * exp(-x) * acc


def _survival_series(n: int, y):
    """``e^(-y) * sum_{i<n} y^i / i!``, the regularized upper gamma ratio."""
    y = np.asarray(y, dtype=float)
    term = np.ones_like(y)
    acc = np.ones_like(y)
    for i in range(1, n):
        term = term * y / i
        acc = acc + term
    return np.exp(-y) * acc


def k_record_distribution(base: DistributionModel, n: int, k: int) -> DistributionModel:
    """Law of the n-th upper k-record drawn from ``base``."""
    if not (isinstance(n, int) and n >= 1):
        raise ValueError(f"record index must be an integer >= 1, got {n}")
    if not (isinstance(k, int) and k >= 1):
        raise ValueError(f"record order must be an integer >= 1, got {k}")
    norm = k**n / factorial(n - 1)

    def _phi(x):
        s = np.maximum(np.asarray(base.survival(x), dtype=float), _SURV_CLAMP)
        return -np.log(s)

    def pdf(x):
        s = np.asarray(base.survival(x), dtype=float)
        f = np.asarray(base.pdf(x), dtype=float)
        return norm * s ** (k - 1) * _phi(x) ** (n - 1) * f

    def survival(x):
        return _survival_series(n, k * _phi(x))

    def cdf(x):
        return 1.0 - survival(x)

    def quantile(p):
        p = np.asarray(p, dtype=float)
        y = gammainccinv(n, 1.0 - p)
        return base.quantile(-np.expm1(-y / k))

    return DistributionModel(
        family=f"record(n={n},k={k}) of {base.family}",
        params=(*base.params, float(n), float(k)),
        support=base.support,
        pdf=_scalarize(pdf),
        cdf=_scalarize(cdf),
        survival=_scalarize(survival),
        quantile=_scalarize(quantile),
        breakpoints=base.breakpoints,
    )


def record_hazard_ratio_pi(
    base: DistributionModel, n: int, k1: int, k2: int, t: float
) -> float:
    """Failure-rate ratio of the order-``k2`` record to the order-``k1`` one.

    Equals ``(k2/k1)^n * sum_{i<n}(k1 phi)^i/i! / sum_{i<n}(k2 phi)^i/i!``
    with ``phi = -log S(t)``; requires ``t`` strictly inside the support.
    """
    for name, v in (("n", n), ("k1", k1), ("k2", k2)):
        if not (isinstance(v, int) and v >= 1):
            raise ValueError(f"{name} must be an integer >= 1, got {v}")
    s = float(base.survival(t))
    if not 0.0 < s < 1.0:
        raise DomainError(f"t={t} outside the open support of {base.family}")
    phi = -log(s)

    def series(kk):
        term = 1.0
        acc = 1.0
        for i in range(1, n):
            term *= kk * phi / i
            acc += term
        return acc

    return (k2 / k1) ** n * series(k1) / series(k2)
