"""Order statistics and coherent-system signature calculus.

A coherent system of ``n`` i.i.d. components with signature ``s`` has
lifetime distribution equal to the ``s``-weighted mixture of the order
statistic laws ``X_{i:n}``.  The system failure rate factors through the
component odds ``x = F/S``:

    rate_T(t) / rate(t)          = psi(s, F(t)/S(t))
    reversed_T(t) / reversed(t)  = psi_tilde(s, F(t)/S(t))

where ``psi`` and ``psi_tilde`` are the rational functions implemented
below.  Monotonicity of those functions (plus an ordered signature) is the
numeric premise of the shape-preservation results for residual and past
extropy, checked by :func:`preservation_premises`.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, inf, isinf

import numpy as np
from scipy.optimize import brentq

from .distributions import DistributionModel, DomainError, _scalarize, hazard, reversed_hazard
from .functionals import classify_monotonicity

_MAX_N = 60


@dataclass(frozen=True)
class Signature:
    """System signature: s[i-1] = P(system fails at the i-th component failure)."""

    s: tuple[float, ...]

    def __post_init__(self):
        s = tuple(float(v) for v in self.s)
        object.__setattr__(self, "s", s)
        if len(s) < 1:
            raise ValueError("signature needs at least one entry")
        if len(s) > _MAX_N:
            raise ValueError(f"signature length {len(s)} exceeds the supported n={_MAX_N}")
        if any(v < 0.0 for v in s):
            raise ValueError(f"signature entries must be nonnegative: {s}")
        if abs(sum(s) - 1.0) > 1e-12:
            raise ValueError(f"signature must sum to 1, got {sum(s)!r}")

    @property
    def n(self) -> int:
        return len(self.s)

    @classmethod
    def parse(cls, text: str) -> "Signature":
        """Parse a comma list such as ``0,0,0.25,0.75``."""
        try:
            return cls(tuple(float(tok) for tok in text.split(",")))
        except ValueError as exc:
            raise ValueError(f"bad signature {text!r}: {exc}") from None


def order_statistic_distribution(d: DistributionModel, i: int, n: int) -> DistributionModel:
    """Law of the i-th smallest of ``n`` i.i.d. copies of ``d``.

    Survival is the binomial tail ``sum_{k<i} C(n,k) F^k S^(n-k)`` and the
    density is ``i C(n,i) F^(i-1) S^(n-i) f``.
    """
    if not 1 <= i <= n:
        raise ValueError(f"order statistic index out of range: i={i}, n={n}")
    if n > _MAX_N:
        raise ValueError(f"n={n} exceeds the supported maximum {_MAX_N}")
    low_coef = [comb(n, k) for k in range(i)]
    high_coef = [comb(n, k) for k in range(i, n + 1)]
    pdf_coef = i * comb(n, i)

    def survival(t):
        F = np.asarray(d.cdf(t), dtype=float)
        S = np.asarray(d.survival(t), dtype=float)
        acc = np.zeros_like(F)
        for k, c in enumerate(low_coef):
            acc = acc + c * F**k * S ** (n - k)
        return acc

    def cdf(t):
        F = np.asarray(d.cdf(t), dtype=float)
        S = np.asarray(d.survival(t), dtype=float)
        acc = np.zeros_like(F)
        for k, c in enumerate(high_coef, start=i):
            acc = acc + c * F**k * S ** (n - k)
        return acc

    def pdf(t):
        F = np.asarray(d.cdf(t), dtype=float)
        S = np.asarray(d.survival(t), dtype=float)
        return pdf_coef * F ** (i - 1) * S ** (n - i) * np.asarray(d.pdf(t), dtype=float)

    def quantile(p):
        from scipy.special import betaincinv

        p = np.asarray(p, dtype=float)
        u = betaincinv(i, n - i + 1, p)
        return d.quantile(u)

    return DistributionModel(
        family=f"order({i}:{n}) of {d.family}",
        params=(*d.params, float(i), float(n)),
        support=d.support,
        pdf=_scalarize(pdf),
        cdf=_scalarize(cdf),
        survival=_scalarize(survival),
        quantile=_scalarize(quantile),
        breakpoints=d.breakpoints,
    )


def system_distribution(d: DistributionModel, sig: Signature) -> DistributionModel:
    """Lifetime law of the coherent system with the given signature.

    The mixture sums are collapsed into single binomial polynomials in
    ``(F, S)`` so every curve is one pass over ``n + 1`` terms.
    """
    if not isinstance(sig, Signature):
        sig = Signature(tuple(sig))
    n = sig.n
    s = sig.s
    tail = [sum(s[k:]) for k in range(n + 1)]  # tail[k] = s_{k+1} + ... + s_n
    surv_coef = [comb(n, k) * tail[k] for k in range(n)]
    cdf_coef = [comb(n, k) * (1.0 - tail[k]) for k in range(1, n + 1)]
    pdf_coef = [(idx + 1) * comb(n, idx + 1) * s[idx] for idx in range(n)]

    def survival(t):
        F = np.asarray(d.cdf(t), dtype=float)
        S = np.asarray(d.survival(t), dtype=float)
        acc = np.zeros_like(F)
        for k, c in enumerate(surv_coef):
            if c:
                acc = acc + c * F**k * S ** (n - k)
        return acc

    def cdf(t):
        F = np.asarray(d.cdf(t), dtype=float)
        S = np.asarray(d.survival(t), dtype=float)
        acc = np.zeros_like(F)
        for k, c in enumerate(cdf_coef, start=1):
            if c:
                acc = acc + c * F**k * S ** (n - k)
        return acc

    def pdf(t):
        F = np.asarray(d.cdf(t), dtype=float)
        S = np.asarray(d.survival(t), dtype=float)
        f = np.asarray(d.pdf(t), dtype=float)
        acc = np.zeros_like(F)
        for idx, c in enumerate(pdf_coef):
            if c:
                i = idx + 1
                acc = acc + c * F ** (i - 1) * S ** (n - i)
        return acc * f

    def _cdf_of_u(u):
        acc = 0.0
        for k, c in enumerate(cdf_coef, start=1):
            acc += c * u**k * (1.0 - u) ** (n - k)
        return acc

    def quantile(p):
        p = np.asarray(p, dtype=float)

        def solve(pv):
            if pv <= 0.0:
                return d.quantile(0.0)
            if pv >= 1.0:
                return d.quantile(1.0)
            u = brentq(lambda v: _cdf_of_u(v) - pv, 0.0, 1.0, xtol=1e-15, rtol=1e-15)
            return d.quantile(u)

        if p.ndim == 0:
            return solve(float(p))
        return np.array([solve(float(v)) for v in p.ravel()]).reshape(p.shape)

    label = ",".join(f"{v:g}" for v in s)
    return DistributionModel(
        family=f"system[{label}] of {d.family}",
        params=(*d.params, *s),
        support=d.support,
        pdf=_scalarize(pdf),
        cdf=_scalarize(cdf),
        survival=_scalarize(survival),
        quantile=_scalarize(quantile),
        breakpoints=d.breakpoints,
    )


def _poly_ratio(num: list[float], den: list[float], x: float) -> float:
    """Evaluate num(x)/den(x) with the x -> infinity limit handled by degree."""
    if x < 0.0:
        raise ValueError(f"odds argument must be nonnegative, got {x}")
    if isinf(x):
        deg_num = max((i for i, c in enumerate(num) if c), default=-1)
        deg_den = max((i for i, c in enumerate(den) if c), default=-1)
        if deg_num > deg_den:
            return inf
        if deg_num < deg_den:
            return 0.0
        return num[deg_num] / den[deg_den]
    top = 0.0
    bot = 0.0
    for c in reversed(num):
        top = top * x + c
    for c in reversed(den):
        bot = bot * x + c
    if bot <= 0.0:
        raise DomainError(f"rational-function denominator vanished at x={x}")
    return top / bot


def psi(sig: Signature, x: float) -> float:
    """System-to-component failure rate ratio as a function of odds ``x = F/S``.

    ``psi(s, F(t)/S(t))`` equals ``rate_T(t)/rate(t)`` for the system with
    signature ``s``.
    """
    if not isinstance(sig, Signature):
        sig = Signature(tuple(sig))
    n = sig.n
    s = sig.s
    num = [(n - i) * s[i] * comb(n, i) for i in range(n)]
    den = [sum(s[i:]) * comb(n, i) for i in range(n)]
    return _poly_ratio(num, den, float(x))


def psi_tilde(sig: Signature, x: float) -> float:
    """System-to-component reversed rate ratio as a function of ``x = F/S``.

    At ``x = 0`` both polynomials vanish; the limit (the index of the first
    positive signature entry) is returned instead.
    """
    if not isinstance(sig, Signature):
        sig = Signature(tuple(sig))
    n = sig.n
    s = sig.s
    num = [0.0] + [i * s[i - 1] * comb(n, i) for i in range(1, n + 1)]
    den = [0.0] + [sum(s[:i]) * comb(n, i) for i in range(1, n + 1)]
    x = float(x)
    if x == 0.0:
        return float(next(i for i in range(1, n + 1) if s[i - 1] > 0.0))
    return _poly_ratio(num, den, x)


@dataclass(frozen=True)
class RatioReport:
    """Pointwise ratio of two curves with its monotonicity verdict."""

    grid: np.ndarray
    values: np.ndarray
    verdict: str
    dropped: int


def check_ratio_monotone(
    dX: DistributionModel,
    dY: DistributionModel,
    which: str,
    grid,
    tol: float = 1e-9,
) -> RatioReport:
    """Classify the ratio of a curve of ``dY`` over the same curve of ``dX``.

    ``which`` selects density, hazard, or reversed_hazard.  A verdict of
    ``"increasing"`` for the density ratio attests the likelihood-ratio order
    of ``dX`` below ``dY``.  Grid points where either curve is undefined or
    the denominator vanishes are dropped and counted.
    """
    curves = {
        "density": lambda d, t: d.pdf(t),
        "hazard": hazard,
        "reversed_hazard": reversed_hazard,
    }
    if which not in curves:
        raise ValueError(f"which must be one of {sorted(curves)}, got {which!r}")
    fn = curves[which]
    kept, values = [], []
    dropped = 0
    for t in np.asarray(grid, dtype=float):
        try:
            den = float(fn(dX, float(t)))
            num = float(fn(dY, float(t)))
        except DomainError:
            dropped += 1
            continue
        if den <= 0.0 or not np.isfinite(num / den):
            dropped += 1
            continue
        kept.append(float(t))
        values.append(num / den)
    if len(kept) < 3:
        raise DomainError(
            f"ratio undefined on the grid: {dropped} of {np.size(grid)} points dropped"
        )
    values = np.asarray(values)
    return RatioReport(
        grid=np.asarray(kept),
        values=values,
        verdict=classify_monotonicity(values, tol),
        dropped=dropped,
    )


@dataclass(frozen=True)
class PremisesReport:
    """Outcome of the two numeric premises of a preservation theorem."""

    ordered: bool
    rational_monotone: bool


def preservation_premises(sig: Signature, mode: str, grid=None) -> PremisesReport:
    """Check the shape-preservation premises for a signature.

    ``mode="DREX"``: signature non-decreasing and ``psi`` increasing;
    ``mode="IPEX"``: signature non-increasing and ``psi_tilde`` decreasing.
    Monotonicity is judged on a log-spaced odds grid (default 400 points on
    [1e-4, 1e4]) extended by the two asymptotic limits; a constant ratio
    counts as (weakly) monotone in the required direction.
    """
    if not isinstance(sig, Signature):
        sig = Signature(tuple(sig))
    mode = mode.upper()
    if mode not in ("DREX", "IPEX"):
        raise ValueError(f"mode must be DREX or IPEX, got {mode!r}")
    if grid is None:
        grid = np.logspace(-4.0, 4.0, 400)
    s = sig.s
    if mode == "DREX":
        ordered = all(a <= b + 1e-12 for a, b in zip(s, s[1:]))
        fn, want = psi, "increasing"
    else:
        ordered = all(a >= b - 1e-12 for a, b in zip(s, s[1:]))
        fn, want = psi_tilde, "decreasing"
    values = [fn(sig, 0.0)]
    values += [fn(sig, float(x)) for x in np.asarray(grid, dtype=float)]
    limit = fn(sig, inf)
    if np.isfinite(limit):
        values.append(limit)
    verdict = classify_monotonicity(values, 1e-9)
    return PremisesReport(ordered=ordered, rational_monotone=verdict in (want, "constant"))
