"""Tensor-product quadrature over the unit ball in R^(p+2), p in {-1,0,1}.

The angular factor integrates surface harmonics exactly up to a requested
degree (equispaced angles on the circle, Gauss-Legendre-by-equispaced
products on the sphere, the two endpoints on the 0-sphere); combined with
a radial rule over weight r^(p+1) it integrates band-limited functions
with super-exponential accuracy in the angular degree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .quadrature import QuadratureRule1D
from .spectrum import harmonic_count

__all__ = [
    "AngularRule",
    "BallRule",
    "angular_rule",
    "angular_rule_from_count",
    "tensor_rule",
    "integrate_exponential",
    "truncation_bound",
    "surface_area",
    "ball_volume",
    "surface_harmonic",
]


def surface_area(p: int) -> float:
    """Area of the unit sphere S^(p+1) in R^(p+2)."""
    return 2.0 * math.pi ** (p / 2.0 + 1.0) / math.gamma(p / 2.0 + 1.0)


def ball_volume(p: int) -> float:
    """Volume of the unit ball in R^(p+2)."""
    return math.pi ** (p / 2.0 + 1.0) / math.gamma(p / 2.0 + 2.0)


@dataclass(frozen=True)
class AngularRule:
    """Nodes on S^(p+1) integrating surface harmonics up to ``degree``."""

    p: int
    points: np.ndarray = field(repr=False)
    weights: np.ndarray = field(repr=False)
    degree: int
    azimuths: np.ndarray | None = field(default=None, repr=False)
    polar_nodes: np.ndarray | None = field(default=None, repr=False)
    polar_weights: np.ndarray | None = field(default=None, repr=False)

    @property
    def count(self) -> int:
        return len(self.weights)


@dataclass(frozen=True)
class BallRule:
    """Tensor product of a radial rule and an angular rule."""

    radial: QuadratureRule1D
    angular: AngularRule

    def __post_init__(self):
        if self.radial.channel.p != self.angular.p:
            raise ValueError("radial and angular rules disagree on the dimension parameter")

    @property
    def bandlimit(self) -> float:
        return self.radial.channel.c

    @property
    def count(self) -> int:
        return len(self.radial.nodes) * self.angular.count

    def nodes(self) -> np.ndarray:
        """All nodes r_j * x_i, radial-major, shape (count, p+2)."""
        return (self.radial.nodes[:, None, None] * self.angular.points[None, :, :]).reshape(
            self.count, -1
        )

    def weights(self) -> np.ndarray:
        """Matching products w_j * v_i, radial-major."""
        return (self.radial.weights[:, None] * self.angular.weights[None, :]).reshape(-1)


def angular_rule(p: int, K2: int) -> AngularRule:
    """Angular rule on S^(p+1) exact for surface harmonics of degree <= K2.

    p = 0: K2+1 equispaced angles with equal weights 2 pi / (K2+1).
    p = 1: Gauss-Legendre in the polar cosine crossed with K2+1
           equispaced azimuths.
    p = -1: the two endpoints -1, +1 with unit weights.
    """
    if K2 < 0:
        raise ValueError("angular degree must be nonnegative")
    if p == 0:
        return _circle_rule(K2 + 1, K2)
    if p == 1:
        return _sphere_rule(K2 + 1, K2)
    if p == -1:
        pts = np.array([[-1.0], [1.0]])
        return AngularRule(-1, pts, np.array([1.0, 1.0]), K2)
    raise ValueError(f"angular rules exist for p in (-1, 0, 1), got {p}")


def angular_rule_from_count(p: int, m: int) -> AngularRule:
    """Angular rule with a prescribed equispaced-angle count.

    For p = 0 this is the m-point equal-weight circle rule; for p = 1, m
    azimuths crossed with ceil(m/2) polar nodes.  p = -1 ignores m.
    """
    if p == 0:
        if m < 1:
            raise ValueError("angular count must be positive")
        return _circle_rule(m, m - 1)
    if p == 1:
        if m < 1:
            raise ValueError("angular count must be positive")
        return _sphere_rule(m, m - 1)
    if p == -1:
        return angular_rule(-1, 1)
    raise ValueError(f"angular rules exist for p in (-1, 0, 1), got {p}")


def _circle_rule(m: int, degree: int) -> AngularRule:
    th = 2.0 * math.pi * np.arange(m) / m
    pts = np.column_stack([np.cos(th), np.sin(th)])
    w = np.full(m, 2.0 * math.pi / m)
    return AngularRule(0, pts, w, degree, azimuths=th)


def _sphere_rule(m_azimuth: int, degree: int) -> AngularRule:
    q = (degree + 2) // 2  # Gauss-Legendre exact through polynomial degree 2q-1 >= degree
    u, gw = np.polynomial.legendre.leggauss(q)
    th = 2.0 * math.pi * np.arange(m_azimuth) / m_azimuth
    s = np.sqrt(1.0 - u * u)
    pts = np.empty((q * m_azimuth, 3))
    w = np.empty(q * m_azimuth)
    for i in range(q):
        sl = slice(i * m_azimuth, (i + 1) * m_azimuth)
        pts[sl, 0] = s[i] * np.cos(th)
        pts[sl, 1] = s[i] * np.sin(th)
        pts[sl, 2] = u[i]
        w[sl] = gw[i] * 2.0 * math.pi / m_azimuth
    return AngularRule(
        1, pts, w, degree, azimuths=th, polar_nodes=u, polar_weights=gw
    )


def tensor_rule(radial: QuadratureRule1D, angular: AngularRule) -> BallRule:
    """Combine a radial and an angular rule into a ball rule."""
    return BallRule(radial, angular)


def integrate_exponential(rule: BallRule, x, c: float) -> complex:
    """Quadrature value of the integral of e^(i c <x, t>) over the ball.

    Real and imaginary parts are accumulated in separate compensated sums
    over the nodes in a fixed radial-major order, so results are bitwise
    reproducible.
    """
    x = np.asarray(x, dtype=float)
    if x.shape != (rule.radial.channel.p + 2,):
        raise ValueError(f"point must have {rule.radial.channel.p + 2} coordinates")
    phases = c * (rule.nodes() @ x)
    re, im = kernels.phase_sum(
        np.ascontiguousarray(rule.weights()), np.ascontiguousarray(phases)
    )
    return complex(re, im)


def truncation_bound(p: int, c: float, K: int) -> float:
    """Certified angular-truncation error envelope for the exponential.

    Sums the tail over harmonic degrees N > K of
    (2 pi)^(p/2+1) * (c/2)^(2N) 2^(-p) / Gamma(N+p/2+1)^2 * V_(p+2)(1)
    * (sum over the h(N) harmonics of their maximum modulus, bounded by
    h(N)/sqrt(area)).  Decreases super-exponentially once 2N exceeds e*c.
    """
    if K < 0:
        raise ValueError("K must be nonnegative")
    pref = math.log(2.0 * math.pi) * (p / 2.0 + 1.0) + math.log(ball_volume(p))
    sqrt_area = 0.5 * math.log(surface_area(p))
    total = 0.0
    for N in range(K + 1, K + 600):
        h = harmonic_count(p, N)
        if h == 0:
            break
        lt = (
            pref
            + 2.0 * N * math.log(c / 2.0)
            - p * math.log(2.0)
            - 2.0 * math.lgamma(N + p / 2.0 + 1.0)
            + math.log(h)
            - sqrt_area
        )
        term = math.exp(lt) if lt > -745.0 else 0.0
        total += term
        if term < 1e-30 * max(total, 1e-300):
            break
    return total


def surface_harmonic(p: int, N: int, ell: int, points: np.ndarray) -> np.ndarray:
    """Orthonormal real surface harmonic S_N^ell at unit vectors ``points``.

    Conventions: for p = 0, ell = 1 is cos(N theta)/sqrt(pi) and ell = 2
    is sin(N theta)/sqrt(pi) (N = 0 has the single constant harmonic).
    For p = 1 the real spherical harmonics are indexed ell = 1..2N+1 in
    the order m = 0, (cos, sin) pairs for m = 1..N.  For p = -1 the two
    harmonics are the constant and the sign function, scaled to unit
    norm.
    """
    h = harmonic_count(p, N)
    if not 1 <= ell <= h:
        raise ValueError(f"ell must lie in 1..{h} for p={p}, N={N}")
    if p == 0:
        th = np.arctan2(points[:, 1], points[:, 0])
        if N == 0:
            return np.full(len(points), 1.0 / math.sqrt(2.0 * math.pi))
        if ell == 1:
            return np.cos(N * th) / math.sqrt(math.pi)
        return np.sin(N * th) / math.sqrt(math.pi)
    if p == -1:
        if N == 0:
            return np.full(len(points), 1.0 / math.sqrt(2.0))
        return np.sign(points[:, 0]) / math.sqrt(2.0)
    if p == 1:
        from scipy.special import sph_harm_y

        theta = np.arccos(np.clip(points[:, 2], -1.0, 1.0))
        phi = np.arctan2(points[:, 1], points[:, 0])
        if ell == 1:
            return np.real(sph_harm_y(N, 0, theta, phi))
        m = (ell) // 2
        y = sph_harm_y(N, m, theta, phi)
        if ell % 2 == 0:
            return math.sqrt(2.0) * (-1.0) ** m * np.real(y)
        return math.sqrt(2.0) * (-1.0) ** m * np.imag(y)
    raise ValueError(f"surface harmonics implemented for p in (-1, 0, 1), got {p}")
