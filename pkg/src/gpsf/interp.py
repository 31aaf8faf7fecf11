"""Expansion of band-limited functions in the ball eigenbasis.

A function with band limit c is expanded over the products
Phi_{N,n}(|x|) S_N^ell(x/|x|).  Because the product of the function with
one basis element is band-limited at 2c, sampling on a tensor rule built
for band limit 2c recovers every coefficient whose eigenvalue is above
the noise floor.  On the disk the angular sums collapse to an FFT over
the equispaced angles.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

from .ballquad import BallRule, angular_rule_from_count, surface_harmonic, tensor_rule, truncation_bound
from .prolate import ProlateChannel, ZernikeCoeffs, solve_channel, eval_phi
from .quadrature import gaussian_rule
from .spectrum import EigenTriple, beta_chain

__all__ = [
    "GpsfExpansion",
    "ChannelCache",
    "sampling_rule",
    "recover_coeffs",
    "synthesize",
    "coeff_bound",
    "expansion_to_json",
]

_RELIABLE_FLOOR = 1e-3 * np.finfo(float).eps


class ChannelCache:
    """Solved radial channels and their eigenvalue chains, by angular order."""

    def __init__(self, p: int, c: float, nmax: int):
        self.p = p
        self.c = c
        self.nmax = nmax
        self._modes: dict[int, list[ZernikeCoeffs]] = {}
        self._triples: dict[int, list[EigenTriple]] = {}

    def modes(self, N: int) -> list[ZernikeCoeffs]:
        if N not in self._modes:
            self._modes[N] = solve_channel(ProlateChannel(self.p, self.c, N), self.nmax)
        return self._modes[N]

    def triples(self, N: int) -> list[EigenTriple]:
        if N not in self._triples:
            self._triples[N] = beta_chain(
                ProlateChannel(self.p, self.c, N), self.nmax, modes=self.modes(N)
            )
        return self._triples[N]


@dataclass(frozen=True)
class GpsfExpansion:
    """Coefficients of a function over the ball eigenbasis.

    ``terms`` maps (N, ell, n) to the complex coefficient on the
    orthonormal basis element; ``unreliable`` lists modes whose
    eigenvalue sits below the recovery noise floor.
    """

    p: int
    c: float
    terms: dict[tuple[int, int, int], complex] = field(repr=False)
    unreliable: frozenset[tuple[int, int, int]] = frozenset()


def sampling_rule(
    p: int,
    c: float,
    radial_count: int | None = None,
    angular_count: int | None = None,
    target: float = 1e-15,
) -> BallRule:
    """Tensor rule at band limit 2c suitable for coefficient recovery.

    The radial factor is a Gauss-type rule sized from the eigenvalue
    spectrum of the doubled channel (half the count of significant modes,
    plus ten); the angular count is the first for which the product
    truncation envelope falls below ``target``.
    """
    c2 = 2.0 * c
    if radial_count is None:
        # significant radial modes end a little past the transition index
        triples = beta_chain(ProlateChannel(p, c2, 0), int(c2 / 2) + 40, mu_stop=1e-18)
        radial_count = math.ceil(len(triples) / 2.0) + 10
    if angular_count is None:
        m = 4
        while truncation_bound(p, c2, max(m // 2, 1)) > target and m < 10000:
            m += 2
        angular_count = m
    radial = gaussian_rule(ProlateChannel(p, c2, 0), radial_count)
    return tensor_rule(radial, angular_rule_from_count(p, angular_count))


def _fft_circle_projections(rule: BallRule, samples: np.ndarray) -> np.ndarray:
    """Angular transform on the disk: bins G[i, N] = integral f e^(-i N th)."""
    m = rule.angular.count
    F = samples.reshape(len(rule.radial.nodes), m)
    return np.fft.fft(F, axis=1) * (2.0 * math.pi / m)


def recover_coeffs(
    rule: BallRule,
    samples: np.ndarray,
    c: float,
    modes: list[tuple[int, int, int]],
    cache: ChannelCache | None = None,
    use_fft: bool = True,
) -> GpsfExpansion:
    """Project sampled values of a band-limited function onto the basis.

    Parameters
    ----------
    rule : BallRule
        Sampling rule; must have been built for band limit 2c.
    samples : ndarray
        f at ``rule.nodes()`` in radial-major order (complex allowed).
    c : float
        Band limit of f.
    modes : list of (N, ell, n)
        Requested basis indices.
    cache : ChannelCache, optional
        Reused radial solves; created on demand.
    use_fft : bool
        On the disk, evaluate the angular sums by FFT (the default);
        otherwise use the generic per-node sum.

    Raises
    ------
    ValueError
        If the rule band limit differs from 2c.
    """
    p = rule.radial.channel.p
    if not math.isclose(rule.bandlimit, 2.0 * c, rel_tol=1e-12):
        raise ValueError(
            f"rule band limit {rule.bandlimit} does not equal twice the function band limit {c}"
        )
    samples = np.asarray(samples, dtype=complex)
    if samples.shape != (rule.count,):
        raise ValueError(f"expected {rule.count} samples, got {samples.shape}")
    top_order = max(N for N, _, _ in modes)
    if p == 0 and 2 * top_order >= rule.angular.count:
        raise ValueError(
            f"angular rule with {rule.angular.count} nodes cannot separate order "
            f"{top_order} harmonics"
        )
    nmax = max(n for _, _, n in modes)
    if cache is None:
        cache = ChannelCache(p, c, nmax)
    terms: dict[tuple[int, int, int], complex] = {}
    unreliable = set()
    rnodes = rule.radial.nodes
    rweights = rule.radial.weights
    G = _fft_circle_projections(rule, samples) if (p == 0 and use_fft) else None
    for N in sorted({N for N, _, _ in modes}):
        chmodes = cache.modes(N)
        triples = cache.triples(N)
        wanted = [(ell, n) for (NN, ell, n) in modes if NN == N]
        for ell, n in wanted:
            phi_r = eval_phi(chmodes[n], rnodes)
            if G is not None:
                if N == 0:
                    ang = G[:, 0] / math.sqrt(2.0 * math.pi)
                else:
                    gc = 0.5 * (G[:, N] + G[:, -N % G.shape[1]])
                    gs = 0.5j * (G[:, N] - G[:, -N % G.shape[1]])
                    ang = (gc if ell == 1 else gs) / math.sqrt(math.pi)
                a = complex(np.sum(rweights * phi_r * ang))
            else:
                S = surface_harmonic(p, N, ell, rule.angular.points)
                F = samples.reshape(len(rnodes), rule.angular.count)
                ang = F @ (rule.angular.weights * S)
                a = complex(np.sum(rweights * phi_r * ang))
            key = (N, ell, n)
            terms[key] = a
            if n < len(triples) and abs(triples[n].lam) < _RELIABLE_FLOOR:
                unreliable.add(key)
            elif n >= len(triples):
                unreliable.add(key)
    return GpsfExpansion(p, c, terms, frozenset(unreliable))


def synthesize(
    expansion: GpsfExpansion,
    x,
    cache: ChannelCache | None = None,
) -> complex:
    """Evaluate the expansion at a point of the closed unit ball."""
    x = np.asarray(x, dtype=float)
    r = float(np.linalg.norm(x))
    if r > 1.0 + 1e-12:
        raise ValueError("evaluation point must lie in the closed unit ball")
    if cache is None:
        nmax = max(n for _, _, n in expansion.terms)
        cache = ChannelCache(expansion.p, expansion.c, nmax)
    if r == 0.0:
        xhat = np.zeros(expansion.p + 2)
        xhat[0] = 1.0
    else:
        xhat = x / r
    total = 0.0 + 0.0j
    for (N, ell, n), coeff in sorted(expansion.terms.items()):
        if coeff == 0.0:
            continue
        phi = eval_phi(cache.modes(N)[n], r)
        S = float(surface_harmonic(expansion.p, N, ell, xhat[None, :])[0])
        total += coeff * phi * S
    return total


def coeff_bound(sigma_l2: float, triple: EigenTriple) -> float:
    """Coefficient magnitude bound |lambda| * ||sigma||: modes below the
    working precision times this bound are unrecoverable."""
    if sigma_l2 < 0.0:
        raise ValueError("sigma_l2 must be nonnegative")
    return abs(triple.lam) * sigma_l2


def expansion_to_json(expansion: GpsfExpansion) -> str:
    """JSON export {p, c, modes: [{N, l, n, re, im}]}."""
    return json.dumps(
        {
            "p": expansion.p,
            "c": expansion.c,
            "modes": [
                {"N": N, "l": ell, "n": n, "re": coeff.real, "im": coeff.imag}
                for (N, ell, n), coeff in sorted(expansion.terms.items())
            ],
        }
    )
