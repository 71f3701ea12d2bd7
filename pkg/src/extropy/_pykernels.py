"""NumPy implementation of the Gaussian-KDE kernels.

Reference semantics for the compiled backend: same adaptive-Simpson control
flow, same acceptance rule, so the two stay interchangeable.
"""

from __future__ import annotations

import numpy as np
from scipy.special import ndtr

BACKEND_NAME = "python"

_INV_SQRT_2PI = 0.3989422804014327
_MAX_DEPTH = 48


def _prep(data) -> np.ndarray:
    return np.ascontiguousarray(np.asarray(data, dtype=np.float64).ravel())


def pdf_points(data, h, ts):
    """Kernel density at each point of ``ts``: mean of N(x_i, h^2) densities."""
    data = _prep(data)
    ts = np.asarray(ts, dtype=np.float64)
    flat = np.atleast_1d(ts).ravel()
    out = np.empty(flat.size)
    block = max(1, 4_000_000 // data.size)
    for i in range(0, flat.size, block):
        z = (flat[i : i + block, None] - data[None, :]) / h
        out[i : i + block] = np.exp(-0.5 * z * z).sum(axis=1)
    out *= _INV_SQRT_2PI / (data.size * h)
    return out.reshape(np.atleast_1d(ts).shape)


def mass(data, h, lo, hi) -> float:
    """Integral of the kernel density over ``[lo, hi]`` (limits may be infinite)."""
    data = _prep(data)
    upper = 1.0 if hi == np.inf else ndtr((hi - data) / h)
    lower = 0.0 if lo == -np.inf else ndtr((lo - data) / h)
    return float(np.mean(upper - lower))


def _sq(data, h, u) -> float:
    z = (u - data) / h
    p = np.exp(-0.5 * z * z).sum() * _INV_SQRT_2PI / (data.size * h)
    return p * p


def square_integral(data, h, a, b, atol=1e-10) -> float:
    """Adaptive-Simpson integral of the squared kernel density over ``[a, b]``."""
    data = _prep(data)
    a, b = float(a), float(b)
    if b <= a:
        return 0.0
    m = 0.5 * (a + b)
    fa, fm, fb = _sq(data, h, a), _sq(data, h, m), _sq(data, h, b)
    whole = (b - a) * (fa + 4.0 * fm + fb) / 6.0
    return float(_refine(data, h, a, b, fa, fm, fb, whole, atol, _MAX_DEPTH))


def _refine(data, h, a, b, fa, fm, fb, whole, tol, depth):
    m = 0.5 * (a + b)
    lm = 0.5 * (a + m)
    rm = 0.5 * (m + b)
    flm = _sq(data, h, lm)
    frm = _sq(data, h, rm)
    left = (m - a) * (fa + 4.0 * flm + fm) / 6.0
    right = (b - m) * (fm + 4.0 * frm + fb) / 6.0
    delta = left + right - whole
    if abs(delta) <= 15.0 * tol:
        return left + right + delta / 15.0
    if depth <= 0:
        raise RuntimeError(f"kernel quadrature failed to converge on [{a}, {b}]")
    half = 0.5 * tol
    return _refine(data, h, a, m, fa, flm, fm, left, half, depth - 1) + _refine(
        data, h, m, b, fm, frm, fb, right, half, depth - 1
    )
