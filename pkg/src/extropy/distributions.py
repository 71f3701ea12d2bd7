"""Lifetime distribution models and the rate functions built on them.

A :class:`DistributionModel` bundles the four curves (pdf, cdf, survival,
quantile) of an absolutely continuous law together with its support and the
interior points where the density is allowed to kink.  Everything downstream
(extropy functionals, order statistics, record values, simulation) works
against this one interface, so derived laws plug into the same machinery.

All curve callables accept a scalar or a NumPy array and return the matching
shape.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np


class DomainError(ValueError):
    """A curve was evaluated where it is undefined (vanishing denominator)."""


def _scalarize(fn: Callable[[np.ndarray], np.ndarray]) -> Callable:
    """Wrap an array-valued implementation so scalars map to floats."""

    def wrapped(t):
        arr = np.asarray(t, dtype=float)
        out = np.asarray(fn(arr))
        if arr.ndim == 0:
            return float(out)
        return out

    return wrapped


@dataclass(frozen=True)
class DistributionModel:
    """An absolutely continuous lifetime law.

    Fields
    ------
    family:      short tag such as ``"exponential"`` or ``"uniform"``
    params:      the numeric parameters behind the tag
    support:     pair ``(a, b)``; ``b`` may be ``math.inf``
    pdf, cdf, survival, quantile:
                 vectorized curve callables
    breakpoints: interior points where the pdf may be non-smooth, used to
                 split numerical integration ranges
    """

    family: str
    params: tuple[float, ...]
    support: tuple[float, float]
    pdf: Callable = field(repr=False)
    cdf: Callable = field(repr=False)
    survival: Callable = field(repr=False)
    quantile: Callable = field(repr=False)
    breakpoints: tuple[float, ...] = ()


def make_exponential(rate: float) -> DistributionModel:
    """Exponential law with the given hazard rate (support ``[0, inf)``)."""
    if not rate > 0:
        raise ValueError(f"rate must be positive, got {rate}")
    rate = float(rate)

    def pdf(t):
        t = np.asarray(t, dtype=float)
        return np.where(t >= 0, rate * np.exp(-rate * np.where(t >= 0, t, 0.0)), 0.0)

    def cdf(t):
        t = np.asarray(t, dtype=float)
        return np.where(t >= 0, -np.expm1(-rate * np.where(t >= 0, t, 0.0)), 0.0)

    def survival(t):
        t = np.asarray(t, dtype=float)
        return np.where(t >= 0, np.exp(-rate * np.where(t >= 0, t, 0.0)), 1.0)

    def quantile(p):
        p = _check_prob(p)
        return -np.log1p(-p) / rate

    return DistributionModel(
        family="exponential",
        params=(rate,),
        support=(0.0, np.inf),
        pdf=_scalarize(pdf),
        cdf=_scalarize(cdf),
        survival=_scalarize(survival),
        quantile=_scalarize(quantile),
    )


def make_uniform(a: float, b: float) -> DistributionModel:
    """Uniform law on ``[a, b]``."""
    if not a < b:
        raise ValueError(f"need a < b, got a={a}, b={b}")
    a, b = float(a), float(b)
    width = b - a

    def pdf(t):
        t = np.asarray(t, dtype=float)
        return np.where((t >= a) & (t <= b), 1.0 / width, 0.0)

    def cdf(t):
        t = np.asarray(t, dtype=float)
        return np.clip((t - a) / width, 0.0, 1.0)

    def survival(t):
        t = np.asarray(t, dtype=float)
        return np.clip((b - t) / width, 0.0, 1.0)

    def quantile(p):
        p = _check_prob(p)
        return a + p * width

    return DistributionModel(
        family="uniform",
        params=(a, b),
        support=(a, b),
        pdf=_scalarize(pdf),
        cdf=_scalarize(cdf),
        survival=_scalarize(survival),
        quantile=_scalarize(quantile),
    )


def make_piecewise_example() -> DistributionModel:
    """Two-branch triangular-like law on ``[0, 2)``.

    Density ``x`` on ``[0, 1)`` and ``x/3`` on ``[1, 2)``; the survival
    function is continuous but the density drops at ``x = 1``, which makes the
    law a useful stress case for monotonicity and shift identities.
    """

    def pdf(t):
        t = np.asarray(t, dtype=float)
        return np.select([(t >= 0) & (t < 1), (t >= 1) & (t < 2)], [t, t / 3.0], 0.0)

    def cdf(t):
        t = np.asarray(t, dtype=float)
        return np.select(
            [t < 0, t < 1, t < 2],
            [0.0, 0.5 * t * t, (t * t + 2.0) / 6.0],
            1.0,
        )

    def survival(t):
        t = np.asarray(t, dtype=float)
        return np.select(
            [t < 0, t < 1, t < 2],
            [1.0, 1.0 - 0.5 * t * t, (4.0 - t * t) / 6.0],
            0.0,
        )

    def quantile(p):
        p = _check_prob(p)
        return np.where(
            p <= 0.5,
            np.sqrt(np.maximum(2.0 * p, 0.0)),
            np.sqrt(np.maximum(6.0 * p - 2.0, 0.0)),
        )

    return DistributionModel(
        family="piecewise-example",
        params=(),
        support=(0.0, 2.0),
        pdf=_scalarize(pdf),
        cdf=_scalarize(cdf),
        survival=_scalarize(survival),
        quantile=_scalarize(quantile),
        breakpoints=(1.0,),
    )


def _check_prob(p):
    p = np.asarray(p, dtype=float)
    if np.any((p < 0) | (p > 1)):
        raise ValueError("probability argument outside [0, 1]")
    return p


def hazard(d: DistributionModel, t):
    """Failure rate ``pdf(t) / survival(t)``.

    Raises :class:`DomainError` where the survival function vanishes.
    """
    s = d.survival(t)
    if np.any(np.asarray(s) <= 0.0):
        raise DomainError(f"survival function of {d.family} vanishes at t={t}")
    return d.pdf(t) / s


def reversed_hazard(d: DistributionModel, t):
    """Reversed failure rate ``pdf(t) / cdf(t)``.

    Raises :class:`DomainError` where the cdf vanishes.
    """
    f = d.cdf(t)
    if np.any(np.asarray(f) <= 0.0):
        raise DomainError(f"cdf of {d.family} vanishes at t={t}")
    return d.pdf(t) / f


def sample_iid(d: DistributionModel, n: int, seed: int) -> np.ndarray:
    """Draw ``n`` inverse-cdf samples; identical seeds give identical output."""
    if n < 1:
        raise ValueError("sample size must be at least 1")
    rng = np.random.default_rng(seed)
    u = rng.random(n)
    return np.asarray(d.quantile(u), dtype=float)


def residual_life(d: DistributionModel, s: float) -> DistributionModel:
    """Law of ``X - s`` conditional on ``X > s``.

    Requires positive survival at the conditioning age ``s``.
    """
    s = float(s)
    keep = float(d.survival(s))
    if keep <= 0.0:
        raise DomainError(f"survival of {d.family} vanishes at age s={s}")
    a, b = d.support
    lo = max(a - s, 0.0)
    hi = b - s if np.isfinite(b) else np.inf

    def pdf(x):
        x = np.asarray(x, dtype=float)
        return np.where(x >= lo, d.pdf(np.maximum(x, lo) + s) / keep, 0.0)

    def survival(x):
        x = np.asarray(x, dtype=float)
        return np.where(x >= lo, d.survival(np.maximum(x, lo) + s) / keep, 1.0)

    def cdf(x):
        return 1.0 - survival(x)

    def quantile(p):
        p = _check_prob(p)
        return d.quantile(1.0 - (1.0 - p) * keep) - s

    return DistributionModel(
        family=f"residual({d.family}, s={s:g})",
        params=(*d.params, s),
        support=(lo, hi),
        pdf=_scalarize(pdf),
        cdf=_scalarize(cdf),
        survival=_scalarize(survival),
        quantile=_scalarize(quantile),
        breakpoints=tuple(x - s for x in d.breakpoints if x - s > lo),
    )


def parse_distribution(spec: str) -> DistributionModel:
    """Build a model from a compact spec string.

    Grammar: ``exp:RATE``, ``unif:A:B``, or ``example1`` (the two-branch law).
    """
    parts = spec.strip().split(":")
    name = parts[0].lower()
    try:
        if name == "exp" and len(parts) == 2:
            return make_exponential(float(parts[1]))
        if name == "unif" and len(parts) == 3:
            return make_uniform(float(parts[1]), float(parts[2]))
        if name == "example1" and len(parts) == 1:
            return make_piecewise_example()
    except ValueError as exc:
        raise ValueError(f"bad distribution spec {spec!r}: {exc}") from None
    raise ValueError(
        f"unknown distribution spec {spec!r} (expected exp:RATE, unif:A:B or example1)"
    )
