"""Adaptive Simpson integration with kink-aware range splitting."""

from __future__ import annotations

from typing import Callable, Iterable


class QuadratureError(RuntimeError):
    """Raised when refinement hits the depth cap without converging."""


_MAX_DEPTH = 48


def adaptive_simpson(
    f: Callable[[float], float],
    a: float,
    b: float,
    *,
    atol: float = 1e-10,
    rtol: float = 1e-9,
    breakpoints: Iterable[float] = (),
) -> float:
    """Integrate ``f`` over ``[a, b]``.

    The range is split at any supplied breakpoints that fall strictly inside
    it, so integrands that kink there stay piecewise smooth.  Refinement stops
    once the local Richardson error estimate drops below the (scaled)
    tolerance; hitting the depth cap raises :class:`QuadratureError`.
    """
    if b < a:
        raise ValueError(f"reversed integration range [{a}, {b}]")
    if b == a:
        return 0.0
    cuts = sorted({float(x) for x in breakpoints if a < x < b})
    edges = [a, *cuts, b]
    budget = atol / len(edges[:-1]) if len(edges) > 2 else atol
    total = 0.0
    for lo, hi in zip(edges[:-1], edges[1:]):
        total += _segment(f, lo, hi, budget, rtol)
    return total


def _segment(f, a, b, atol, rtol):
    # endpoints are sampled a hair inside the segment so that piecewise
    # integrands contribute their one-sided limits at branch edges
    nudge = 1e-13 * (b - a)
    m = 0.5 * (a + b)
    fa, fm, fb = f(a + nudge), f(m), f(b - nudge)
    whole = (b - a) * (fa + 4.0 * fm + fb) / 6.0
    return _refine(f, a, b, fa, fm, fb, whole, atol, rtol, _MAX_DEPTH)


def _refine(f, a, b, fa, fm, fb, whole, tol, rtol, depth):
    m = 0.5 * (a + b)
    lm = 0.5 * (a + m)
    rm = 0.5 * (m + b)
    flm, frm = f(lm), f(rm)
    left = (m - a) * (fa + 4.0 * flm + fm) / 6.0
    right = (b - m) * (fm + 4.0 * frm + fb) / 6.0
    delta = left + right - whole
    if abs(delta) <= 15.0 * max(tol, rtol * abs(left + right)):
        return left + right + delta / 15.0
    if depth <= 0:
        raise QuadratureError(
            f"integral failed to converge on [{a}, {b}] (residual {abs(delta):.3e})"
        )
    half = 0.5 * tol
    return _refine(f, a, m, fa, flm, fm, left, half, rtol, depth - 1) + _refine(
        f, m, b, fm, frm, fb, right, half, rtol, depth - 1
    )
