"""Eigenvalues of the radial integral operator and the full spectrum.

beta_{N,n} is the eigenvalue of the Bessel-kernel integral operator on
the radial channel; lambda = i^N (2 pi)^(p/2+1) beta is the eigenvalue of
the exponential-kernel operator on the ball, and mu = (c/2pi)^(p+2)
|lambda|^2 in [0, 1) is the eigenvalue of its normal square.  The top
eigenvalue of a channel comes from a direct series; the rest follow from
a ratio chain built out of expansion integrals that reduce to coefficient
dot products.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .prolate import NumericalError, ProlateChannel, ZernikeCoeffs, solve_channel
from .special import RadialModeId

__all__ = [
    "EigenTriple",
    "beta_direct",
    "convert_rtprime",
    "rphi_prime_coeffs",
    "pair_inner",
    "beta_chain",
    "mu_from_beta",
    "lambda_from_beta",
    "mu_sum_check",
    "beta_dc",
    "harmonic_count",
]

_EPS = np.finfo(float).eps
_DEN_UNDERFLOW = 1e-280
_CHAIN_UNDERFLOW = 1e-250


@dataclass(frozen=True)
class EigenTriple:
    """Eigenvalue of one mode in its three equivalent normalizations."""

    beta: float
    lam: complex
    mu: float
    mode: RadialModeId


def lambda_from_beta(p: int, N: int, beta: float) -> complex:
    """lambda = i^N (2 pi)^(p/2+1) beta; real for even N, imaginary for odd."""
    return (1j**N) * (2.0 * math.pi) ** (p / 2.0 + 1.0) * beta


_MU_CEIL = math.nextafter(1.0, 0.0)


def mu_from_beta(p: int, c: float, beta: float) -> float:
    """mu = (c/2pi)^(p+2) |lambda|^2, which collapses to c^(p+2) beta^2.

    mu < 1 holds analytically; deep in the flat region the float product
    can overshoot 1 by a few ulp, so the bound is enforced here.
    """
    return min(c ** (p + 2) * beta * beta, _MU_CEIL)


def _series_weights_log(alpha: float, K: int) -> np.ndarray:
    # log of sqrt(2(2i+alpha+1)) * binom(i+alpha, i)
    i = np.arange(K)
    lg = np.vectorize(math.lgamma)
    return (
        0.5 * np.log(2.0 * (2.0 * i + alpha + 1.0))
        + lg(i + alpha + 1.0)
        - lg(i + 1.0)
        - math.lgamma(alpha + 1.0)
    )


def beta_direct(mode: ZernikeCoeffs) -> float:
    """Top-quality eigenvalue of one mode from its coefficient series.

    The numerator is ``a_0 c^N / (2^(N+p/2) Gamma(N+p/2+1) sqrt(2N+p+2))``
    and the denominator is the alternating series
    ``sum_i a_i sqrt(2(2i+N+p/2+1)) (-1)^i binom(i+N+p/2, i)``,
    truncated as soon as the partial sum is a factor of machine precision
    larger than the next term.

    Raises
    ------
    NumericalError
        If the denominator series produces a non-finite partial sum, or
        underflows below 1e-280.
    """
    ch = mode.channel
    al = ch.alpha
    log_num = (
        ch.N * math.log(ch.c)
        - al * math.log(2.0)
        - math.lgamma(al + 1.0)
        - 0.5 * math.log(2.0 * ch.N + ch.p + 2.0)
    )
    terms = mode.coeffs * np.exp(_series_weights_log(al, len(mode.coeffs)))
    terms[1::2] *= -1.0
    s = 0.0
    for j, t in enumerate(terms):
        s += t
        if not math.isfinite(s):
            raise NumericalError(
                f"denominator series diverged at term {j} for mode {mode.mode_id}"
            )
        if j + 1 < len(terms) and abs(s) > abs(terms[j + 1]) / _EPS:
            break
    if abs(s) < _DEN_UNDERFLOW:
        raise NumericalError(
            f"denominator series underflow ({s:.3e}) for mode {mode.mode_id}"
        )
    return math.exp(log_num) * mode.coeffs[0] / s


def convert_rtprime(coeffs: np.ndarray, N: int, p: int) -> np.ndarray:
    """Re-expand ``sum_i x_i r tbar'_{N,i}(r)`` in the tbar basis.

    Uses the two-term identity (nu = N + (p+1)/2, T the unnormalized
    weighted radial polynomial)

        r T'_{N,i}(r) = r T'_{N,i-1}(r) + (nu+2i-1) T_{N,i-1}(r)
                        + (nu+2i) T_{N,i}(r),      r T'_{N,0} = nu T_{N,0},

    whose repeated application turns the input into suffix sums: with
    ``sigma_i = sum_{j>=i} x_j`` (in the unnormalized scaling) the output
    T-coefficient at i is ``sigma_i (nu+2i) + sigma_{i+1} (nu+2i+1)``.
    The orthonormal rescaling is applied on the way in and out.
    """
    x = np.asarray(coeffs, dtype=float)
    if x.ndim != 1 or len(x) == 0:
        raise ValueError("coefficient vector must be one-dimensional and nonempty")
    al = N + p / 2.0
    nu = al + 0.5
    k = np.arange(len(x))
    scale = np.sqrt(2.0 * (2.0 * k + al + 1.0))
    if not np.all(scale > 0.0):
        raise NumericalError("degenerate leading coupling coefficient")
    xh = x * scale
    sigma = np.cumsum(xh[::-1])[::-1]
    sigma_next = np.zeros_like(sigma)
    sigma_next[:-1] = sigma[1:]
    y = sigma * (nu + 2.0 * k) + sigma_next * (nu + 2.0 * k + 1.0)
    return y / scale


def rphi_prime_coeffs(mode: ZernikeCoeffs) -> np.ndarray:
    """Expansion of ``r Phi'_{N,n}(r)`` in the orthonormal Zernike basis.

    With phi = r^((p+1)/2) Phi the product rule gives
    r Phi' = r^(-(p+1)/2) (r phi' - (p+1)/2 phi), so the Zernike
    coefficients are the converted derivative expansion minus
    (p+1)/2 times the mode's own coefficients.
    """
    ch = mode.channel
    return convert_rtprime(mode.coeffs, ch.N, ch.p) - (ch.p + 1) / 2.0 * mode.coeffs


def pair_inner(coeffs_a: np.ndarray, coeffs_b: np.ndarray) -> float:
    """Weighted radial inner product of two same-channel expansions.

    Orthonormality collapses the integral to the coefficient dot product;
    a shorter vector is padded with zeros.
    """
    a = np.asarray(coeffs_a, dtype=float)
    b = np.asarray(coeffs_b, dtype=float)
    m = min(len(a), len(b))
    return float(a[:m] @ b[:m])


def beta_chain(
    channel: ProlateChannel,
    kmax: int,
    eps: float = 1e-16,
    modes: list[ZernikeCoeffs] | None = None,
    mu_stop: float = 0.0,
) -> list[EigenTriple]:
    """Eigenvalues beta_{N,0..kmax} by the ratio chain.

    The leading eigenvalue comes from :func:`beta_direct`; successive
    ones follow from the exact ratio

        beta_{n+1} / beta_n = I(n, n+1) / I(n+1, n),
        I(n, m) = integral of r Phi'_{N,n} Phi_{N,m} r^(p+1) dr,

    with both integrals evaluated as coefficient dot products.  The chain
    stops early (with a warning) if a denominator integral falls below
    1e-250, or once mu drops below ``mu_stop``.
    """
    if kmax < 0:
        raise ValueError("kmax must be nonnegative")
    if modes is None:
        modes = solve_channel(channel, kmax, eps)
    beta = beta_direct(modes[0])
    out = [
        EigenTriple(
            beta,
            lambda_from_beta(channel.p, channel.N, beta),
            mu_from_beta(channel.p, channel.c, beta),
            channel.mode_id(0),
        )
    ]
    x_cur = rphi_prime_coeffs(modes[0])
    for n in range(kmax):
        x_next = rphi_prime_coeffs(modes[n + 1])
        num = pair_inner(x_cur, modes[n + 1].coeffs)
        den = pair_inner(x_next, modes[n].coeffs)
        if abs(den) < _CHAIN_UNDERFLOW:
            warnings.warn(
                f"ratio chain truncated at n={n + 1} for channel {channel}: "
                f"denominator integral {den:.3e}",
                RuntimeWarning,
                stacklevel=2,
            )
            break
        beta = beta * num / den
        mu = mu_from_beta(channel.p, channel.c, beta)
        out.append(
            EigenTriple(
                beta,
                lambda_from_beta(channel.p, channel.N, beta),
                mu,
                channel.mode_id(n + 1),
            )
        )
        x_cur = x_next
        if mu < mu_stop:
            break
    return out


def harmonic_count(p: int, N: int) -> int:
    """Number of linearly independent surface harmonics of degree N."""
    if p == -1:
        return 1 if N <= 1 else 0
    if N == 0:
        return 1
    if p == 0:
        return 2
    return round((2 * N + p) * math.exp(math.lgamma(N + p) - math.lgamma(p + 1) - math.lgamma(N + 1)))


def mu_sum_check(p: int, c: float, Nmax: int, nmax: int) -> tuple[float, float]:
    """Partial spectral sum of mu with multiplicities vs its closed form.

    Returns ``(partial_sum, closed_form)`` where the closed form is
    ``c^(p+2) / (2^(p+2) Gamma(p/2+2)^2)``.  Channels are cut off once mu
    falls below 1e-26 since the omitted tail decays super-exponentially.
    """
    total = 0.0
    for N in range(Nmax + 1):
        h = harmonic_count(p, N)
        if h == 0:
            continue
        triples = beta_chain(ProlateChannel(p, c, N), nmax, mu_stop=1e-26)
        total += h * sum(t.mu for t in triples)
    closed = c ** (p + 2) / (2.0 ** (p + 2) * math.gamma(p / 2.0 + 2.0) ** 2)
    return total, closed


def beta_dc(mode: ZernikeCoeffs, triple: EigenTriple) -> tuple[float, float]:
    """Derivatives of beta and mu with respect to the band limit.

    ``dbeta/dc = beta (Phi(1)^2 - (p+2)) / (2c)``; differentiating
    mu = c^(p+2) beta^2 then gives ``dmu/dc = (mu/c) Phi(1)^2``, which is
    nonnegative (mu is increasing in the band limit; finite differences
    confirm).
    """
    ch = mode.channel
    phi1sq = mode.phi_at_one() ** 2
    dbeta = triple.beta * (phi1sq - (ch.p + 2.0)) / (2.0 * ch.c)
    dmu = triple.mu / ch.c * phi1sq
    return dbeta, dmu
