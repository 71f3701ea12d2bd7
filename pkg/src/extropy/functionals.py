"""Extropy of a lifetime law and its residual / past conditionals.

For a density ``f`` with survival ``S`` and cdf ``F``, the quantities here
are

* extropy                ``-1/2 * int f(u)^2 du``
* residual extropy       ``-1/2 * int_t^inf (f(u)/S(t))^2 du``
* past extropy           ``-1/2 * int_0^t  (f(u)/F(t))^2 du``

both conditionals are strictly negative wherever defined.  Each one also has
an equivalent "rate" form: residual extropy equals ``-1/4`` times the mean
failure rate of the minimum of two fresh copies given survival past ``t``,
and past extropy equals ``-1/4`` times the mean reversed rate of the maximum
of two copies given failure by ``t``.  The rate forms are implemented
independently so the two routes can be cross-checked numerically.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import sqrt

import numpy as np

from .distributions import DistributionModel, DomainError, hazard, residual_life, reversed_hazard
from .quadrature import adaptive_simpson

_TAIL_MASS = 1e-12


def _tail_limit(d: DistributionModel) -> float:
    """Upper integration horizon: the support end, or the 1 - 1e-12 quantile."""
    b = d.support[1]
    if np.isfinite(b):
        return float(b)
    return float(d.quantile(1.0 - _TAIL_MASS))


def extropy(d: DistributionModel) -> float:
    """Unconditional extropy ``-1/2 * int f^2``."""
    lo = d.support[0]
    hi = _tail_limit(d)
    val = adaptive_simpson(
        lambda u: d.pdf(u) ** 2, lo, hi, breakpoints=d.breakpoints
    )
    return -0.5 * val


def residual_extropy(d: DistributionModel, t: float) -> float:
    """Extropy of the remaining lifetime at age ``t``."""
    t = float(t)
    s_t = float(d.survival(t))
    if s_t <= 0.0:
        raise DomainError(f"survival of {d.family} vanishes at t={t}")
    hi = _tail_limit(d)
    if t >= hi:
        raise DomainError(
            f"t={t} lies beyond the integration horizon of {d.family} "
            "(survival below 1e-12)"
        )
    lo = max(t, d.support[0])
    val = adaptive_simpson(
        lambda u: (d.pdf(u) / s_t) ** 2, lo, hi, breakpoints=d.breakpoints
    )
    return -0.5 * val


def past_extropy(d: DistributionModel, t: float) -> float:
    """Extropy of the inactivity time given failure by ``t``."""
    t = float(t)
    f_t = float(d.cdf(t))
    if f_t <= 0.0:
        raise DomainError(f"cdf of {d.family} vanishes at t={t}")
    a, b = d.support
    hi = min(t, b) if np.isfinite(b) else t
    val = adaptive_simpson(
        lambda u: (d.pdf(u) / f_t) ** 2, a, hi, breakpoints=d.breakpoints
    )
    return -0.5 * val


def residual_extropy_hazard_form(d: DistributionModel, t: float) -> float:
    """Residual extropy via the mean failure rate of a duplicated system.

    Evaluates ``-1/4 * int_t λ(u) f_min(u) du / S(t)^2`` where ``f_min`` is
    the density of the smaller of two fresh copies, taken from the order
    statistic machinery so the weight has a single source of truth.  This
    exercises a different code path than :func:`residual_extropy`.
    """
    from .systems import order_statistic_distribution

    t = float(t)
    s_t = float(d.survival(t))
    if s_t <= 0.0:
        raise DomainError(f"survival of {d.family} vanishes at t={t}")
    # stop just short of the support end so the rate stays finite
    hi = float(d.quantile(1.0 - _TAIL_MASS))
    if t >= hi:
        raise DomainError(f"t={t} too close to the support end of {d.family}")
    pair_min = order_statistic_distribution(d, 1, 2)

    def integrand(u):
        return hazard(d, u) * pair_min.pdf(u) / (s_t * s_t)

    val = adaptive_simpson(integrand, t, hi, breakpoints=d.breakpoints)
    return -0.25 * val


def past_extropy_reversed_form(d: DistributionModel, t: float) -> float:
    """Past extropy via the mean reversed rate of a duplicated system.

    Evaluates ``-1/4 * int_0^t τ(u) f_max(u) du / F(t)^2`` where ``f_max``
    is the density of the larger of two fresh copies, again sourced from the
    order statistic machinery.
    """
    from .systems import order_statistic_distribution

    t = float(t)
    f_t = float(d.cdf(t))
    if f_t <= 0.0:
        raise DomainError(f"cdf of {d.family} vanishes at t={t}")
    a, b = d.support
    # start just past the support start so the reversed rate stays finite
    lo = max(a, float(d.quantile(_TAIL_MASS)))
    hi = min(t, b) if np.isfinite(b) else t
    if hi <= lo:
        raise DomainError(f"no mass between the support start and t={t}")
    pair_max = order_statistic_distribution(d, 2, 2)

    def integrand(u):
        return reversed_hazard(d, u) * pair_max.pdf(u) / (f_t * f_t)

    val = adaptive_simpson(integrand, lo, hi, breakpoints=d.breakpoints)
    return -0.25 * val


def classify_monotonicity(values, tol: float = 1e-9) -> str:
    """Label a sequence as constant, decreasing, increasing or non-monotone.

    Differences within ``tol`` of zero are treated as ties; fewer than three
    values cannot be classified.
    """
    vals = np.asarray(values, dtype=float)
    if vals.size < 3:
        raise ValueError("need at least 3 values to classify monotonicity")
    if float(vals.max() - vals.min()) <= tol:
        return "constant"
    diffs = np.diff(vals)
    if np.all(diffs <= tol):
        return "decreasing"
    if np.all(diffs >= -tol):
        return "increasing"
    return "non-monotone"


@dataclass(frozen=True)
class ExtropyCurve:
    """A residual or past extropy curve sampled on a grid."""

    kind: str
    grid: np.ndarray
    values: np.ndarray
    classification: str

    @property
    def aging_class(self) -> str:
        """Reliability aging label implied by the curve shape."""
        table = {
            ("residual", "decreasing"): "DREX",
            ("residual", "increasing"): "IREX",
            ("past", "increasing"): "IPEX",
            ("past", "decreasing"): "DPEX",
        }
        if self.classification in ("constant", "non-monotone"):
            return self.classification
        return table[(self.kind, self.classification)]


def extropy_curve(
    d: DistributionModel,
    kind: str,
    grid=None,
    *,
    tol: float = 1e-9,
) -> ExtropyCurve:
    """Sample residual or past extropy on a grid and classify its shape.

    The default grid is 200 equally spaced ages between the 1e-6 and
    1 - 1e-6 quantiles, which keeps both conditioning probabilities positive.
    """
    if kind not in ("residual", "past"):
        raise ValueError(f"kind must be 'residual' or 'past', got {kind!r}")
    if grid is None:
        grid = np.linspace(d.quantile(1e-6), d.quantile(1.0 - 1e-6), 200)
    else:
        grid = np.asarray(grid, dtype=float)
    fn = residual_extropy if kind == "residual" else past_extropy
    values = np.empty_like(grid)
    for i, t in enumerate(grid):
        try:
            values[i] = fn(d, float(t))
        except DomainError as exc:
            raise DomainError(f"curve evaluation failed at t={t}: {exc}") from None
    return ExtropyCurve(
        kind=kind, grid=grid, values=values, classification=classify_monotonicity(values, tol)
    )


def shift_residual_check(
    d: DistributionModel, s: float, t: float
) -> tuple[float, float, float]:
    """Compare the residual extropy of the age-``s`` remaining life at ``t``
    with the original law's residual extropy at ``s + t``.

    The two agree for every absolutely continuous law; the returned triple is
    ``(left, right, |left - right|)``.
    """
    left = residual_extropy(residual_life(d, s), t)
    right = residual_extropy(d, s + t)
    return left, right, abs(left - right)


def hazard_from_rex(j: float, jprime: float) -> float:
    """Recover the failure rate from residual extropy and its derivative.

    The rate satisfies ``x^2/2 + 2 j x - jprime = 0``.  When ``jprime < 0``
    both roots of the quadratic are positive and pointwise data cannot fully
    separate them; the smaller root is returned unless it is negligible
    against the larger (below 1e-4 of it), which marks it as the degenerate
    zero root that constant-rate inputs produce.  Raises ``ValueError`` when
    the pair is not realizable (negative discriminant or no positive rate).
    """
    disc = 4.0 * j * j + 2.0 * jprime
    if disc < 0.0:
        raise ValueError(
            f"no real failure rate for j={j}, jprime={jprime} (discriminant {disc:.3e})"
        )
    root = sqrt(disc)
    big = -2.0 * j + root
    small = -2.0 * j - root
    if big <= 0.0:
        raise ValueError(f"no positive failure rate for j={j}, jprime={jprime}")
    return small if small > 1e-4 * big else big


def recover_hazard(d: DistributionModel, t: float, step: float = 1e-4) -> float:
    """Reconstruct the failure rate at ``t`` from the residual extropy curve.

    Uses a central difference of :func:`residual_extropy` for the derivative;
    ``t`` must sit at least ``step`` inside a smooth stretch of the support.
    """
    j = residual_extropy(d, t)
    jprime = (residual_extropy(d, t + step) - residual_extropy(d, t - step)) / (2.0 * step)
    return hazard_from_rex(j, jprime)
