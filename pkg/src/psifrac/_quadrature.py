"""Product-integration kernels on uniform tau grids.

Two rules, both exact for their piecewise model integrated against the
weight (tau_i - tau)^{s-1}:

* ``fracint_values``  -- piecewise-linear interpolant of nodal values,
* ``fracint_slopes``  -- piecewise-constant derivative of that interpolant
  (the building block for the derivative-type operators).

Both reduce to causal convolutions with precomputed weight tables, which is
the hot O(n^2) loop of the whole package.  The loop runs through numba when
available; set ``PSIFRAC_BACKEND=numpy`` (or ``numba``) to force a backend.

``fracint_slopes`` additionally carries a starting correction over the
first few cells: nodal data are refit there with a sqrt(z) term and the
residual against the piecewise model is integrated exactly.  Without it any
polynomial cell model keeps an n-independent relative error a few nodes
from the base point whenever the data carry the z^(1/2)-type behaviour that
fractional operators produce.
"""

from __future__ import annotations

import math
import os
from functools import lru_cache

import numpy as np
from scipy.special import betainc

__all__ = [
    "backend_name",
    "set_backend",
    "fracint_values",
    "fracint_slopes",
    "trapezoid_cumulative",
    "CORRECTION_CELLS",
]

# cells refit with the sqrt term; fixed, so operators stay linear in f
CORRECTION_CELLS = 8


def _conv_numpy(x: np.ndarray, w: np.ndarray, nout: int) -> np.ndarray:
    return np.convolve(x, w)[:nout]


try:  # pragma: no cover - exercised via backend tests
    from numba import njit

    @njit(cache=True, fastmath=True)
    def _conv_numba_impl(x, w, out):  # pragma: no cover - compiled
        # scatter by weight index: the inner loop is contiguous, so it
        # vectorizes; only the first nout outputs are ever formed
        nout = out.size
        nx = x.size
        out[:] = 0.0
        mmax = w.size if w.size < nout else nout
        for m in range(mmax):
            wm = w[m]
            if wm != 0.0:
                hi = nx if nx < nout - m else nout - m
                for j in range(hi):
                    out[m + j] += wm * x[j]
        return out

    def _conv_numba(x: np.ndarray, w: np.ndarray, nout: int) -> np.ndarray:
        out = np.empty(nout)
        return _conv_numba_impl(
            np.ascontiguousarray(x), np.ascontiguousarray(w), out
        )

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    _conv_numba = None
    _HAVE_NUMBA = False


def _pick_backend(name: str | None):
    if name is None:
        name = os.environ.get("PSIFRAC_BACKEND", "").strip().lower() or None
    if name is None:
        name = "numba" if _HAVE_NUMBA else "numpy"
    if name == "numba":
        if not _HAVE_NUMBA:
            raise RuntimeError("numba backend requested but numba is not importable")
        return name, _conv_numba
    if name == "numpy":
        return name, _conv_numpy
    raise ValueError(f"unknown backend {name!r} (use 'numba' or 'numpy')")


_BACKEND_NAME, _conv = _pick_backend(None)


def backend_name() -> str:
    return _BACKEND_NAME


def set_backend(name: str) -> str:
    """Switch the convolution backend ('numba' or 'numpy'); returns old name."""
    global _BACKEND_NAME, _conv
    old = _BACKEND_NAME
    _BACKEND_NAME, _conv = _pick_backend(name)
    return old


@lru_cache(maxsize=128)
def _pwlinear_kernel(s: float, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Convolution kernel d and boundary column B for the value rule.

    Over cell m (counted back from the evaluation node), the linear model
    contributes a_m to the far node and b_m to the near node:
        a_m = (m^{s+1}-(m-1)^{s+1})/(s+1) - (m-1)(m^s-(m-1)^s)/s
        b_m = m(m^s-(m-1)^s)/s - (m^{s+1}-(m-1)^{s+1})/(s+1)
    Both are nonnegative for s > 0, which gives discrete positivity.
    """
    m = np.arange(0, n + 2, dtype=float)
    mp = m**s
    mp1 = m ** (s + 1.0)
    a = np.zeros(n + 2)
    b = np.zeros(n + 2)
    a[1:] = (mp1[1:] - mp1[:-1]) / (s + 1.0) - m[:-1] * (mp[1:] - mp[:-1]) / s
    b[1:] = m[1:] * (mp[1:] - mp[:-1]) / s - (mp1[1:] - mp1[:-1]) / (s + 1.0)
    d = a[: n + 1].copy()
    d[0] = 0.0
    d += b[1 : n + 2]
    d.setflags(write=False)
    b.setflags(write=False)
    return d, b


@lru_cache(maxsize=128)
def _pwconst_kernel(s: float, n: int) -> np.ndarray:
    v = np.zeros(n + 1)
    m = np.arange(0, n + 1, dtype=float)
    v[1:] = m[1:] ** s - m[:-1] ** s
    v.setflags(write=False)
    return v


def fracint_values(values: np.ndarray, s: float, h: float) -> np.ndarray:
    """I^s of the piecewise-linear interpolant of ``values``; zero at node 0."""
    n = values.size - 1
    d, b = _pwlinear_kernel(float(s), n)
    out = _conv(values, d, n + 1)
    out -= b[1 : n + 2] * values[0]
    out *= h**s / math.gamma(s)
    return out


def trapezoid_cumulative(values: np.ndarray, h: float) -> np.ndarray:
    out = np.zeros_like(values)
    np.cumsum((values[1:] + values[:-1]) * (0.5 * h), out=out[1:])
    return out


def _halfpow_correction(
    values: np.ndarray, s: float, h: float, ncells: int
) -> np.ndarray:
    """Exactness correction for sqrt(z) content in the first cells.

    Cell j is refit through nodes {j, j+1, j+2} with  f0 + a sqrt(z) + b z;
    the correction integrates a * d/dz[sqrt(z) - its chord] against the
    weight, leaving the piecewise-constant base rule untouched elsewhere.
    Linear in the data, so operator linearity is preserved exactly.
    """
    n = values.size - 1
    corr = np.zeros(n + 1)
    inv_gamma_s = 1.0 / math.gamma(s)
    beta_half_s = math.gamma(0.5) * math.gamma(s) / math.gamma(0.5 + s)
    for j in range(min(ncells, n - 1)):
        z0 = j * h
        z1 = (j + 1) * h
        r0 = math.sqrt(z0)
        r1 = math.sqrt(z1)
        r2 = math.sqrt((j + 2) * h)
        f0, f1, f2 = values[j], values[j + 1], values[j + 2]
        det = (r1 - r0) * 2.0 * h - (r2 - r0) * h
        a = ((f1 - f0) * 2.0 * h - (f2 - f0) * h) / det
        if a == 0.0:
            continue
        tk = np.arange(j + 1, n + 1, dtype=float) * h
        x0 = z0 / tk
        x1 = np.minimum(z1 / tk, 1.0)
        # int_{z0}^{z1} (tk-u)^{s-1} u^{-1/2} du via the incomplete beta
        i_inv_sqrt = (
            tk ** (s - 0.5)
            * (betainc(0.5, s, x1) - betainc(0.5, s, x0))
            * beta_half_s
        )
        w0 = tk - z0
        w1 = np.maximum(tk - z1, 0.0)
        i_flat = (w0**s - w1**s) / s
        corr[j + 1 :] += (a * inv_gamma_s) * (
            0.5 * i_inv_sqrt - (r1 - r0) / h * i_flat
        )
    return corr


def fracint_slopes(
    values: np.ndarray,
    s: float,
    h: float,
    correction_cells: int | None = None,
) -> np.ndarray:
    """I^s of the interpolant's derivative (piecewise-constant slopes).

    This is the exact tau-derivative of ``fracint_values(values, s+1)`` and
    the single quadrature behind every derivative-type operator.
    """
    n = values.size - 1
    slopes = np.diff(values) / h
    if s == 0.0:
        # I^0 of the slope function: backward difference quotients
        out = np.zeros(n + 1)
        out[1:] = slopes
        return out
    v = _pwconst_kernel(float(s), n)
    out = _conv(slopes, v, n + 1)
    out *= h**s / math.gamma(s + 1.0)
    ncells = CORRECTION_CELLS if correction_cells is None else correction_cells
    if ncells > 0:
        out += _halfpow_correction(values, s, h, ncells)
    return out
