"""Roots of the radial functions via the Pruefer phase transform.

The weighted function phi = r^((p+1)/2) Phi satisfies a second-order
equation phi'' + a(r) phi' + b(r) phi = 0 whose phase variable theta,
defined by phi'/phi = sqrt(b) tan(theta), decreases monotonically through
the oscillatory interval and passes pi/2 (mod pi) exactly at the roots.
Marching r as a function of theta therefore steps from one root to the
next; a Newton polish on Phi removes the marching error.
"""

from __future__ import annotations

import math

import numpy as np

from .prolate import NumericalError, ZernikeCoeffs, eval_phi, eval_phi_deriv, eval_phi_second_deriv

__all__ = ["find_roots", "pruefer_beta", "pruefer_beta_deriv", "pruefer_alpha"]

_NEWTON_MAX = 30
_RK_STEPS = 100  # per pi of phase, independent of n


def pruefer_alpha(r: float) -> float:
    """First-order coefficient a(r) = -2r / (1 - r^2)."""
    return -2.0 * r / (1.0 - r * r)


def pruefer_beta(mode: ZernikeCoeffs, r: float) -> float:
    """Zeroth-order coefficient b(r) of the weighted-equation form.

    b(r) = (1/4 - (N+p/2)^2) / (r^2 (1-r^2)) + (chi - c^2 r^2) / (1-r^2).
    Positive b marks the oscillatory region.
    """
    ch = mode.channel
    nt = ch.alpha
    r2 = r * r
    omr = 1.0 - r2
    return (0.25 - nt * nt) / (r2 * omr) + (mode.chi - ch.c * ch.c * r2) / omr


def pruefer_beta_deriv(mode: ZernikeCoeffs, r: float) -> float:
    """Derivative of :func:`pruefer_beta` with respect to r."""
    ch = mode.channel
    nt = ch.alpha
    c2 = ch.c * ch.c
    r2 = r * r
    omr = 1.0 - r2
    return (0.25 - nt * nt) * (4.0 * r2 - 2.0) / (r2 * r * omr * omr) + (
        -2.0 * c2 * r * omr + 2.0 * r * (mode.chi - c2 * r2)
    ) / (omr * omr)


def _theta_slope(mode: ZernikeCoeffs, r: float, theta: float) -> float:
    b = pruefer_beta(mode, r)
    if b <= 0.0:
        b = 1e-30
    return -math.sqrt(b) - (
        pruefer_beta_deriv(mode, r) / (4.0 * b) + pruefer_alpha(r) / 2.0
    ) * math.sin(2.0 * theta)


def _turning_point(mode: ZernikeCoeffs) -> float:
    """Upper root of b(r) in (0, 1) by bisection; 1 if b stays positive."""
    hi = 1.0 - 1e-12
    if pruefer_beta(mode, hi) > 0.0:
        return 1.0
    grid = np.linspace(1e-6, hi, 512)
    vals = np.array([pruefer_beta(mode, float(g)) for g in grid])
    pos = np.flatnonzero((vals[:-1] > 0.0) & (vals[1:] <= 0.0))
    if len(pos) == 0:
        return 1.0
    lo, up = float(grid[pos[-1]]), float(grid[pos[-1] + 1])
    while up - lo > 1e-14:
        mid = 0.5 * (lo + up)
        if pruefer_beta(mode, mid) > 0.0:
            lo = mid
        else:
            up = mid
    return 0.5 * (lo + up)


def _newton(mode: ZernikeCoeffs, r0: float, lo: float, hi: float):
    """Newton iteration on Phi with bisection fallback inside [lo, hi]."""
    r = r0
    prev_step = math.inf
    for it in range(1, _NEWTON_MAX + 1):
        f = eval_phi(mode, r)
        df = eval_phi_deriv(mode, r)
        if df == 0.0:
            break
        step = f / df
        rn = r - step
        if not lo < rn < hi:
            break
        r = rn
        scale = max(abs(r), 0.05)
        # converged, or cycling at the round-off floor
        if abs(step) < 1e-14 * scale or (abs(step) >= prev_step and abs(step) < 1e-9 * scale):
            return r, it
        prev_step = abs(step)
    # bisection fallback on a bracketing interval around the estimate
    a, b = lo, hi
    fa = eval_phi(mode, a)
    fb = eval_phi(mode, b)
    if fa == 0.0:
        return a, _NEWTON_MAX
    if fb == 0.0:
        return b, _NEWTON_MAX
    if fa * fb > 0.0:
        raise NumericalError(
            f"no sign change in [{a:.6g}, {b:.6g}] while polishing a root of {mode.mode_id}"
        )
    for _ in range(200):
        m = 0.5 * (a + b)
        fm = eval_phi(mode, m)
        if fm == 0.0 or b - a < 1e-16:
            return m, _NEWTON_MAX
        if fa * fm < 0.0:
            b, fb = m, fm
        else:
            a, fa = m, fm
    return 0.5 * (a + b), _NEWTON_MAX


def _largest_root_scan(mode: ZernikeCoeffs, x0: float):
    """Chebyshev-spaced sign scan below the turning point, then Newton."""
    n = mode.n
    m = max(5 * n, 16)
    j = np.arange(m + 1)
    pts = x0 / 2.0 * (1.0 + np.cos(math.pi * j / m))  # descending from x0
    pts = np.clip(pts, 1e-12, x0)
    vals = eval_phi(mode, pts)
    sgn = np.sign(vals)
    flips = np.flatnonzero(sgn[:-1] * sgn[1:] < 0.0)
    if len(flips) == 0:
        raise NumericalError(f"no sign change of {mode.mode_id} below the turning point")
    i = flips[0]  # first change moving down from x0
    lo, hi = float(pts[i + 1]), float(pts[i])
    return _newton(mode, 0.5 * (lo + hi), lo, hi)


def _largest_root_taylor(mode: ZernikeCoeffs, x0: float):
    """Quadratic local-model steps from x0 (low-eigenvalue branch), then Newton."""
    r = min(max(x0, 1e-6), 1.0 - 1e-9)
    for _ in range(3):
        f = eval_phi(mode, r)
        df = eval_phi_deriv(mode, r)
        d2f = eval_phi_second_deriv(mode, min(max(r, 1e-9), 1.0 - 1e-12))
        disc = df * df - 2.0 * f * d2f
        if disc > 0.0 and d2f != 0.0:
            root_disc = math.sqrt(disc)
            h = -2.0 * f / (df + math.copysign(root_disc, df))
        elif df != 0.0:
            h = -f / df
        else:
            break
        r = min(max(r + h, 1e-9), 1.0 - 1e-12)
    try:
        root, its = _newton(mode, r, 1e-12, 1.0)
    except NumericalError:
        return _largest_root_scan(mode, x0)
    # confirm nothing above it: otherwise fall back to the scanning branch
    probe = np.linspace(root * (1.0 + 1e-9) + 1e-12, max(x0, root + 1e-9), 64)
    vals = eval_phi(mode, probe)
    if np.any(np.sign(vals[:-1]) * np.sign(vals[1:]) < 0.0):
        return _largest_root_scan(mode, x0)
    return root, its


def _march_interval(mode: ZernikeCoeffs, r_start: float, x0: float) -> float:
    """RK2 march of r(theta) across one pi of phase, starting at a root."""
    h = math.pi / _RK_STEPS
    r = r_start
    theta = math.pi / 2.0
    lo_guard = 1e-9
    for _ in range(_RK_STEPS):
        k1 = 1.0 / _theta_slope(mode, r, theta)
        rm = min(max(r + 0.5 * h * k1, lo_guard), x0)
        k2 = 1.0 / _theta_slope(mode, rm, theta + 0.5 * h)
        r = min(max(r + h * k2, lo_guard), x0)
        theta += h
    return r


def find_roots(
    mode: ZernikeCoeffs,
    chi_threshold: float | None = None,
    diagnostics: list | None = None,
) -> np.ndarray:
    """All n roots of Phi_{N,n} in (0, 1), ascending.

    The largest root is found by a sign scan below the turning point of
    the phase coefficient (or by local quadratic steps when chi falls
    below ``chi_threshold``, default 1/sqrt(c)); the remaining roots are
    reached by marching the phase equation one pi at a time with
    second-order Runge-Kutta and polishing each landing with Newton.

    ``diagnostics``, when given a list, receives one dict per root with
    the pre-polish marching error and Newton iteration count.

    Raises
    ------
    NumericalError
        If the number of polished roots differs from n.
    """
    n = mode.n
    if n == 0:
        return np.empty(0)
    ch = mode.channel
    thr = 1.0 / math.sqrt(ch.c) if chi_threshold is None else chi_threshold
    x0 = _turning_point(mode)
    if mode.chi > thr:
        r_top, its = _largest_root_scan(mode, x0)
    else:
        r_top, its = _largest_root_taylor(mode, x0)
    if diagnostics is not None:
        diagnostics.append({"root": r_top, "march_err": 0.0, "newton_iters": its})
    roots = [r_top]
    for _ in range(n - 1):
        r_est = _march_interval(mode, roots[-1], x0)
        width = roots[-1] - r_est
        lo = max(r_est - 0.6 * abs(width), 1e-12)
        hi = min(r_est + 0.6 * abs(width), roots[-1] * (1.0 - 1e-12))
        r_k, its = _newton(mode, r_est, lo, hi)
        if diagnostics is not None:
            diagnostics.append(
                {"root": r_k, "march_err": abs(r_k - r_est), "newton_iters": its}
            )
        roots.append(r_k)
    roots = np.array(roots[::-1])
    if len(roots) != n or np.any(np.diff(roots) <= 0.0) or roots[0] <= 0.0 or roots[-1] >= 1.0:
        raise NumericalError(
            f"expected {n} ascending roots in (0,1) for {mode.mode_id}, got {roots}"
        )
    return roots
