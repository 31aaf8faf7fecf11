"""Radial eigenproblem for generalized prolate spheroidal functions.

For a channel (p, c, N) the radial functions Phi_{N,n} diagonalize both a
compact integral operator with Bessel kernel and a second-order
differential operator.  In the basis of weighted Zernike polynomials the
differential operator is an infinite symmetric tridiagonal matrix whose
expansion coefficients decay exponentially once the Zernike degree passes
e*c, so a finite section captures every mode to machine precision.  This
module builds that matrix, truncates it using the decay bound, solves the
eigenproblem and evaluates Phi_{N,n} and its derivatives anywhere on
[0, 1].
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import eigh_tridiagonal

from . import kernels
from .special import RadialModeId, chi_zero

__all__ = [
    "ProlateChannel",
    "TridiagSym",
    "ZernikeCoeffs",
    "NumericalError",
    "tridiag_entries",
    "tridiag_matrix",
    "choose_truncation",
    "solve_channel",
    "eval_phi",
    "eval_phi_deriv",
    "eval_phi_second_deriv",
    "mode_to_json",
    "mode_from_json",
]

_SAFETY_MARGIN = 10  # extra basis functions beyond the decay bound


class NumericalError(RuntimeError):
    """An iterative numerical procedure failed to converge."""


@dataclass(frozen=True)
class ProlateChannel:
    """Radial channel: dimension parameter p, band limit c, angular order N."""

    p: int
    c: float
    N: int

    def __post_init__(self):
        if self.p < -1:
            raise ValueError(f"p must be >= -1, got {self.p}")
        if not self.c > 0.0:
            raise ValueError(f"band limit must be positive, got {self.c}")
        if self.N < 0:
            raise ValueError(f"angular order must be nonnegative, got {self.N}")
        if self.p == -1 and self.N not in (0, 1):
            raise ValueError(f"for p=-1 the angular order must be 0 or 1, got N={self.N}")

    @property
    def alpha(self) -> float:
        return self.N + self.p / 2.0

    def mode_id(self, n: int) -> RadialModeId:
        return RadialModeId(self.p, self.N, n)


@dataclass(frozen=True)
class TridiagSym:
    """Symmetric tridiagonal matrix (main diagonal plus one off-diagonal)."""

    diag: np.ndarray
    offdiag: np.ndarray

    def __post_init__(self):
        if len(self.diag) < 1 or len(self.offdiag) != len(self.diag) - 1:
            raise ValueError("offdiag must be one entry shorter than diag")
        if not (np.all(np.isfinite(self.diag)) and np.all(np.isfinite(self.offdiag))):
            raise ValueError("matrix entries must be finite")

    @property
    def size(self) -> int:
        return len(self.diag)


@dataclass(frozen=True)
class ZernikeCoeffs:
    """One solved radial mode: eigenvalue chi and Zernike coefficients.

    ``coeffs[k]`` multiplies the orthonormal radial polynomial of degree
    N + 2k; the vector has unit Euclidean norm and its sign is fixed so
    that Phi_{N,n}(1) > 0.
    """

    channel: ProlateChannel
    n: int
    chi: float
    coeffs: np.ndarray = field(repr=False)

    @property
    def mode_id(self) -> RadialModeId:
        return self.channel.mode_id(self.n)

    def phi(self, r):
        return eval_phi(self, r)

    def phi_deriv(self, r):
        return eval_phi_deriv(self, r)

    def phi_at_one(self) -> float:
        k = np.arange(len(self.coeffs))
        return float(self.coeffs @ np.sqrt(2.0 * (2.0 * k + self.channel.alpha + 1.0)))


def tridiag_entries(channel: ProlateChannel, row: int) -> tuple[float, float, float]:
    """Entries (a_row, b_row, c_row) of the tridiagonal operator matrix.

    ``b_row`` is the diagonal, ``c_row`` the superdiagonal and ``a_row``
    the subdiagonal (zero and unused for row 0; equals ``c_{row-1}``
    otherwise).  In the zero-bandwidth limit the diagonal reduces to the
    classical eigenvalues and the off-diagonals vanish.

    Note: the diagonal is chi_{N,row}(0) plus c^2 times the (positive
    definite) diagonal part of multiplication by r^2, and the
    off-diagonals are positive; with this orientation the matrix
    eigenvalues are the chi_{N,n}(c), ascending, and the eigenvectors are
    the Zernike coefficient vectors of Phi_{N,n}.
    """
    if row < 0:
        raise ValueError("row must be nonnegative")
    al = channel.alpha
    c2 = channel.c * channel.c
    t = 2.0 * row + al
    if al == 0.0:
        diag_shift = 0.0
    else:
        diag_shift = c2 * al * al / (2.0 * t * (t + 2.0))
    b = diag_shift + 0.5 * c2 + chi_zero(channel.mode_id(row))
    cx = c2 * (row + 1.0 + al) * (row + 1.0) / (
        (t + 2.0) * math.sqrt(t + 3.0) * math.sqrt(t + 1.0)
    )
    if row == 0:
        a = 0.0
    else:
        tm = t - 2.0
        a = c2 * (row + al) * row / ((tm + 2.0) * math.sqrt(tm + 3.0) * math.sqrt(tm + 1.0))
    return a, b, cx


def tridiag_matrix(channel: ProlateChannel, K: int) -> TridiagSym:
    """Upper-left K-by-K section of the operator matrix."""
    diag = np.empty(K)
    off = np.empty(max(K - 1, 0))
    for i in range(K):
        _, diag[i], cx = tridiag_entries(channel, i)
        if i < K - 1:
            off[i] = cx
    return TridiagSym(diag, off)


def choose_truncation(channel: ProlateChannel, nmax: int, eps: float) -> int:
    """Number of Zernike coefficients to retain for modes up to ``nmax``.

    Picks the smallest K for which the coefficient-decay bound applies
    (N + 2K >= e*c) and the halving envelope (1/2)^(N+p/2+2K+1) falls
    below ``eps``, then adds a fixed safety margin and makes room for the
    requested modes.
    """
    if not 0.0 < eps < 1.0:
        raise ValueError(f"eps must lie in (0, 1), got {eps}")
    if nmax < 0:
        raise ValueError("nmax must be nonnegative")
    k_regime = max(0, math.ceil((math.e * channel.c - channel.N) / 2.0))
    # (1/2)^(N+p/2+2k+1) < eps  <=>  (N+p/2+2k+1) ln 2 > -ln eps
    k_halving = max(0, math.ceil(((-math.log(eps) / math.log(2.0)) - channel.alpha - 1.0) / 2.0))
    K = max(k_regime, k_halving) + _SAFETY_MARGIN
    return max(K, nmax + _SAFETY_MARGIN)


def _phi_one_weights(channel: ProlateChannel, K: int) -> np.ndarray:
    k = np.arange(K)
    return np.sqrt(2.0 * (2.0 * k + channel.alpha + 1.0))


def solve_channel(
    channel: ProlateChannel,
    nmax: int,
    eps: float = 1e-16,
    K: int | None = None,
) -> list[ZernikeCoeffs]:
    """Solve the truncated eigenproblem for modes 0..nmax of a channel.

    Returns the modes sorted by ascending eigenvalue chi (strict increase
    is asserted; the spectrum is simple).  Each coefficient vector is
    normalized and sign-fixed so Phi_{N,n}(1) > 0.  The realized
    coefficient tail is checked against ``eps`` and the truncation is
    enlarged once if needed.

    Raises
    ------
    NumericalError
        If the tridiagonal eigensolver fails to converge.
    """
    if K is None:
        K = choose_truncation(channel, nmax, eps)
    for attempt in range(2):
        mat = tridiag_matrix(channel, K)
        try:
            chis, vecs = eigh_tridiagonal(
                mat.diag, mat.offdiag, select="i", select_range=(0, nmax)
            )
        except np.linalg.LinAlgError as exc:  # pragma: no cover - LAPACK failure
            raise NumericalError(
                f"tridiagonal eigensolver failed for channel {channel} (K={K}): {exc}"
            ) from exc
        tail = np.max(np.abs(vecs[-1, :]))
        if tail < 10.0 * eps or attempt == 1:
            break
        K += 2 * _SAFETY_MARGIN
    if np.any(np.diff(chis) <= 0.0):
        raise NumericalError(f"eigenvalues not strictly increasing for channel {channel}")
    w1 = _phi_one_weights(channel, K)
    modes = []
    for n in range(nmax + 1):
        v = vecs[:, n].copy()
        v /= np.linalg.norm(v)
        if v @ w1 < 0.0:
            v = -v
        modes.append(ZernikeCoeffs(channel, n, float(chis[n]), v))
    return modes


def _as_points(r) -> tuple[np.ndarray, bool]:
    arr = np.atleast_1d(np.ascontiguousarray(r, dtype=float))
    return arr, np.ndim(r) == 0


def eval_phi(mode: ZernikeCoeffs, r):
    """Evaluate Phi_{N,n} at radii in [0, 1] from its Zernike expansion."""
    pts, scalar = _as_points(r)
    B = kernels.rbar_basis(mode.channel.alpha, mode.channel.N, len(mode.coeffs), pts)
    out = mode.coeffs @ B
    return float(out[0]) if scalar else out


def eval_phi_deriv(mode: ZernikeCoeffs, r):
    """Evaluate dPhi_{N,n}/dr, term-wise on the Zernike expansion."""
    pts, scalar = _as_points(r)
    _, D = kernels.rbar_basis_with_deriv(
        mode.channel.alpha, mode.channel.N, len(mode.coeffs), pts
    )
    out = mode.coeffs @ D
    return float(out[0]) if scalar else out


def eval_phi_second_deriv(mode: ZernikeCoeffs, r):
    """Second derivative of Phi_{N,n} on (0, 1), from its differential equation.

    Solving the equation for Phi'' avoids a second differentiated
    recurrence:
    x^2(1-x^2) Phi'' = -((p+1)x - (p+3)x^3) Phi'
                       - (chi x^2 - (p+1)(p+3)x^2/4 - N(N+p) - c^2 x^4) Phi.
    """
    pts, scalar = _as_points(r)
    if np.any((pts <= 0.0) | (pts >= 1.0)):
        raise ValueError("second derivative is evaluated on the open interval (0, 1)")
    p, c, N = mode.channel.p, mode.channel.c, mode.channel.N
    x = pts
    phi = eval_phi(mode, x)
    dphi = eval_phi_deriv(mode, x)
    x2 = x * x
    num = -(((p + 1.0) * x - (p + 3.0) * x2 * x) * dphi) - (
        mode.chi * x2 - 0.25 * (p + 1.0) * (p + 3.0) * x2 - N * (N + p) - c * c * x2 * x2
    ) * phi
    out = num / (x2 * (1.0 - x2))
    return float(out[0]) if scalar else out


def mode_to_json(mode: ZernikeCoeffs) -> str:
    """Serialize a solved mode; floats round-trip exactly."""
    return json.dumps(
        {
            "p": mode.channel.p,
            "c": mode.channel.c,
            "N": mode.channel.N,
            "n": mode.n,
            "chi": mode.chi,
            "coeffs": mode.coeffs.tolist(),
        }
    )


def mode_from_json(text: str) -> ZernikeCoeffs:
    """Inverse of :func:`mode_to_json`."""
    d = json.loads(text)
    return ZernikeCoeffs(
        ProlateChannel(d["p"], d["c"], d["N"]),
        d["n"],
        d["chi"],
        np.asarray(d["coeffs"], dtype=float),
    )
