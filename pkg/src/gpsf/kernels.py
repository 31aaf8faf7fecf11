"""Hot numeric kernels: radial basis recurrences and compensated sums.

Both a numba loop version and a vectorized numpy version are provided for
each kernel; :mod:`gpsf._accel` decides which one backs the public name.
The numpy fallbacks are exported with a ``_numpy`` suffix so benchmarks
can time the two paths against each other.
"""

import numpy as np

from ._accel import USE_NUMBA, jit

__all__ = [
    "rbar_basis",
    "rbar_basis_numpy",
    "rbar_basis_with_deriv",
    "rbar_basis_with_deriv_numpy",
    "phase_sum",
    "phase_sum_numpy",
    "USE_NUMBA",
]


def _recurrence_tables(alpha, K):
    # per-degree constants: P_{k+1} = (a0[k] + a1[k]*y) P_k - b[k] P_{k-1},
    # with the derivative recurrence adding cd[k] * P_k; scale[k] is the
    # signed orthonormalization of degree k.
    k = np.arange(1, max(K - 1, 1), dtype=np.float64)
    t = 2.0 * k + alpha
    den = 2.0 * (k + 1.0) * (k + alpha + 1.0) * t
    a0 = (t + 1.0) * alpha * alpha / den
    a1 = t * (t + 1.0) * (t + 2.0) / den
    b = 2.0 * (k + alpha) * k * (t + 2.0) / den
    cd = a1
    kk = np.arange(K, dtype=np.float64)
    scale = np.sqrt(2.0 * (2.0 * kk + alpha + 1.0))
    scale[1::2] *= -1.0
    return a0, a1, b, cd, scale


def _rbar_basis_loops(alpha, N, K, r, a0, a1, b, scale):
    # B[k, i] = scale[k] * P_k^{(alpha,0)}(1-2r^2) * r^N
    m = r.shape[0]
    B = np.empty((K, m))
    for i in range(m):
        ri = r[i]
        y = 1.0 - 2.0 * ri * ri
        rn = ri**N
        pkm1 = 1.0
        B[0, i] = scale[0] * rn
        if K > 1:
            pk = (alpha + (alpha + 2.0) * y) / 2.0
            B[1, i] = scale[1] * pk * rn
            for k in range(1, K - 1):
                pk1 = (a0[k - 1] + a1[k - 1] * y) * pk - b[k - 1] * pkm1
                pkm1 = pk
                pk = pk1
                B[k + 1, i] = scale[k + 1] * pk * rn
    return B


def _rbar_basis_with_deriv_loops(alpha, N, K, r, a0, a1, b, cd, scale):
    # Returns (B, D) with D[k, i] = d/dr of B[k, i].
    m = r.shape[0]
    B = np.empty((K, m))
    D = np.empty((K, m))
    for i in range(m):
        ri = r[i]
        y = 1.0 - 2.0 * ri * ri
        rn = ri**N
        if N == 0:
            drn = 0.0
        elif N == 1:
            drn = 1.0
        else:
            drn = N * ri ** (N - 1)
        m4r = -4.0 * ri
        pkm1 = 1.0
        dkm1 = 0.0
        B[0, i] = scale[0] * rn
        D[0, i] = scale[0] * drn
        if K > 1:
            pk = (alpha + (alpha + 2.0) * y) / 2.0
            dk = (alpha + 2.0) / 2.0
            B[1, i] = scale[1] * pk * rn
            # d/dr [P(y(r)) r^N] = P'(y) * (-4r) * r^N + P(y) * N r^(N-1)
            D[1, i] = scale[1] * (dk * m4r * rn + pk * drn)
            for k in range(1, K - 1):
                ay = a0[k - 1] + a1[k - 1] * y
                pk1 = ay * pk - b[k - 1] * pkm1
                dk1 = ay * dk - b[k - 1] * dkm1 + cd[k - 1] * pk
                pkm1 = pk
                pk = pk1
                dkm1 = dk
                dk = dk1
                B[k + 1, i] = scale[k + 1] * pk * rn
                D[k + 1, i] = scale[k + 1] * (dk * m4r * rn + pk * drn)
    return B, D


def _phase_sum_loops(weights, phases):
    # Kahan-compensated sum of w * exp(1j * phase), fixed order.
    sr = 0.0
    cr = 0.0
    si = 0.0
    ci = 0.0
    for j in range(weights.shape[0]):
        w = weights[j]
        ph = phases[j]
        vr = w * np.cos(ph) - cr
        tr = sr + vr
        cr = (tr - sr) - vr
        sr = tr
        vi = w * np.sin(ph) - ci
        ti = si + vi
        ci = (ti - si) - vi
        si = ti
    return sr, si


def _rbar_basis_vec(alpha, N, K, r, a0, a1, b, scale):
    y = 1.0 - 2.0 * r * r
    rn = r**N
    B = np.empty((K, r.shape[0]))
    B[0] = scale[0] * rn
    if K > 1:
        pkm1 = np.ones_like(r)
        pk = (alpha + (alpha + 2.0) * y) / 2.0
        B[1] = scale[1] * pk * rn
        for k in range(1, K - 1):
            pkm1, pk = pk, (a0[k - 1] + a1[k - 1] * y) * pk - b[k - 1] * pkm1
            B[k + 1] = scale[k + 1] * pk * rn
    return B


def _rbar_basis_with_deriv_vec(alpha, N, K, r, a0, a1, b, cd, scale):
    y = 1.0 - 2.0 * r * r
    rn = r**N
    if N == 0:
        drn = np.zeros_like(r)
    elif N == 1:
        drn = np.ones_like(r)
    else:
        drn = N * r ** (N - 1)
    m4r = -4.0 * r
    B = np.empty((K, r.shape[0]))
    D = np.empty((K, r.shape[0]))
    B[0] = scale[0] * rn
    D[0] = scale[0] * drn
    if K > 1:
        pkm1 = np.ones_like(r)
        dkm1 = np.zeros_like(r)
        pk = (alpha + (alpha + 2.0) * y) / 2.0
        dk = np.full_like(r, (alpha + 2.0) / 2.0)
        B[1] = scale[1] * pk * rn
        D[1] = scale[1] * (dk * m4r * rn + pk * drn)
        for k in range(1, K - 1):
            ay = a0[k - 1] + a1[k - 1] * y
            pkm1, pk, dkm1, dk = pk, ay * pk - b[k - 1] * pkm1, dk, ay * dk - b[k - 1] * dkm1 + cd[k - 1] * pk
            B[k + 1] = scale[k + 1] * pk * rn
            D[k + 1] = scale[k + 1] * (dk * m4r * rn + pk * drn)
    return B, D


if USE_NUMBA:
    _basis_impl = jit(_rbar_basis_loops)
    _basis_deriv_impl = jit(_rbar_basis_with_deriv_loops)
    _phase_sum_impl = jit(_phase_sum_loops)
else:
    _basis_impl = _rbar_basis_vec
    _basis_deriv_impl = _rbar_basis_with_deriv_vec
    _phase_sum_impl = _phase_sum_loops


def rbar_basis(alpha, N, K, r):
    """Basis matrix B[k, i] of the normalized radial polynomials at r[i]."""
    r = np.ascontiguousarray(r, dtype=np.float64)
    a0, a1, b, _, scale = _recurrence_tables(alpha, K)
    return _basis_impl(alpha, N, K, r, a0, a1, b, scale)


def rbar_basis_numpy(alpha, N, K, r):
    """Pure-numpy twin of :func:`rbar_basis`."""
    r = np.ascontiguousarray(r, dtype=np.float64)
    a0, a1, b, _, scale = _recurrence_tables(alpha, K)
    return _rbar_basis_vec(alpha, N, K, r, a0, a1, b, scale)


def rbar_basis_with_deriv(alpha, N, K, r):
    """(B, dB/dr) pair for the normalized radial polynomials at r[i]."""
    r = np.ascontiguousarray(r, dtype=np.float64)
    a0, a1, b, cd, scale = _recurrence_tables(alpha, K)
    return _basis_deriv_impl(alpha, N, K, r, a0, a1, b, cd, scale)


def rbar_basis_with_deriv_numpy(alpha, N, K, r):
    """Pure-numpy twin of :func:`rbar_basis_with_deriv`."""
    r = np.ascontiguousarray(r, dtype=np.float64)
    a0, a1, b, cd, scale = _recurrence_tables(alpha, K)
    return _rbar_basis_with_deriv_vec(alpha, N, K, r, a0, a1, b, cd, scale)


def phase_sum(weights, phases):
    """Compensated (sum of w cos(ph), sum of w sin(ph)), fixed order."""
    return _phase_sum_impl(
        np.ascontiguousarray(weights, dtype=np.float64),
        np.ascontiguousarray(phases, dtype=np.float64),
    )


def phase_sum_numpy(weights, phases):
    """Pure-python/numpy twin of :func:`phase_sum`."""
    return _phase_sum_loops(
        np.ascontiguousarray(weights, dtype=np.float64),
        np.ascontiguousarray(phases, dtype=np.float64),
    )
