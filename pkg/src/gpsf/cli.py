"""Command-line interface.

Every capability is exposed as a subcommand producing deterministic CSV
(17 significant digits) or JSON on stdout or at ``--out``.  Exit code 2
marks a validation problem, 3 a numerical failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np
import scipy.special as sps

from .ballquad import angular_rule_from_count, integrate_exponential, tensor_rule
from .interp import ChannelCache, recover_coeffs, sampling_rule
from .prolate import NumericalError, ProlateChannel, eval_phi, eval_phi_deriv, solve_channel
from .quadrature import chebyshev_rule, gaussian_rule, rule_to_csv, rule_to_json
from .roots import find_roots
from .spectrum import beta_chain, mu_sum_check

_FMT = "%.17g"


class ValidationError(ValueError):
    pass


def _emit(args, text: str) -> None:
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv(rows, header) -> str:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(_FMT % v if isinstance(v, float) else str(v) for v in row))
    return "\n".join(lines) + "\n"


def _floats(text: str) -> list[float]:
    try:
        return [float(t) for t in text.split(",") if t]
    except ValueError as exc:
        raise ValidationError(f"expected a comma-separated list of numbers, got {text!r}") from exc


def _radial_spec(text: str):
    try:
        kind, count = text.split(":")
        count = int(count)
    except ValueError as exc:
        raise ValidationError(f"--radial expects kind:count, got {text!r}") from exc
    if kind not in ("cheb", "gauss"):
        raise ValidationError(f"radial kind must be cheb or gauss, got {kind!r}")
    if count < 1:
        raise ValidationError("radial count must be positive")
    return kind, count


def _closed_form_exponential(p: int, c: float, x: np.ndarray) -> complex:
    # exact ball integral of e^(ic<x,t>): (2 pi / c)^(p/2+1) J_(p/2+1)(c|x|) / |x|^(p/2+1)
    nx = float(np.linalg.norm(x))
    if nx == 0.0:
        return complex(math.pi ** (p / 2.0 + 1.0) / math.gamma(p / 2.0 + 2.0))
    return complex((2.0 * math.pi / c) ** (p / 2.0 + 1.0) * sps.jv(p / 2.0 + 1.0, c * nx) / nx ** (p / 2.0 + 1.0))


def _cmd_eval(args) -> None:
    ch = ProlateChannel(args.p, args.c, args.N)
    modes = solve_channel(ch, args.n, eps=args.eps)
    rr = np.asarray(_floats(args.r))
    if np.any((rr < 0.0) | (rr > 1.0)):
        raise ValidationError("radii must lie in [0, 1]")
    mode = modes[args.n]
    phi = np.atleast_1d(eval_phi(mode, rr))
    dphi = np.atleast_1d(eval_phi_deriv(mode, rr))
    if args.format == "json":
        _emit(args, json.dumps({"r": rr.tolist(), "phi": phi.tolist(), "dphi": dphi.tolist()}) + "\n")
    else:
        _emit(args, _csv(zip(rr, phi, dphi), ["r", "phi", "dphi"]))


def _cmd_eigs(args) -> None:
    ch = ProlateChannel(args.p, args.c, args.N)
    triples = beta_chain(ch, args.nmax, eps=args.eps)
    modes = solve_channel(ch, args.nmax, eps=args.eps)
    rows = [
        (t.mode.n, modes[t.mode.n].chi, t.beta, t.lam.real, t.lam.imag, abs(t.lam), t.mu)
        for t in triples
    ]
    if args.format == "json":
        _emit(
            args,
            json.dumps(
                [
                    {"p": args.p, "c": args.c, "N": args.N, "n": r[0], "chi": r[1],
                     "beta": r[2], "lambda_re": r[3], "lambda_im": r[4],
                     "abs_lambda": r[5], "mu": r[6]}
                    for r in rows
                ]
            ) + "\n",
        )
    else:
        _emit(args, _csv(rows, ["n", "chi", "beta", "lambda_re", "lambda_im", "abs_lambda", "mu"]))


def _cmd_roots(args) -> None:
    ch = ProlateChannel(args.p, args.c, args.N)
    modes = solve_channel(ch, args.n, eps=args.eps)
    rr = find_roots(modes[args.n])
    if args.format == "json":
        _emit(args, json.dumps({"p": args.p, "c": args.c, "N": args.N, "n": args.n,
                                "roots": rr.tolist()}) + "\n")
    else:
        _emit(args, _csv(((float(v),) for v in rr), ["root"]))


def _cmd_quad(args, kind: str) -> None:
    ch = ProlateChannel(args.p, args.c, 0)
    rule = chebyshev_rule(ch, args.n) if kind == "cheb" else gaussian_rule(ch, args.n)
    _emit(args, rule_to_json(rule) + "\n" if args.format == "json" else rule_to_csv(rule))


def _cmd_ball_integrate(args) -> None:
    x = np.asarray(_floats(args.x))
    if len(x) != args.p + 2:
        raise ValidationError(f"--x needs {args.p + 2} coordinates for p={args.p}")
    kind, count = _radial_spec(args.radial)
    ch = ProlateChannel(args.p, args.c, 0)
    radial = chebyshev_rule(ch, count) if kind == "cheb" else gaussian_rule(ch, count)
    rule = tensor_rule(radial, angular_rule_from_count(args.p, args.angular))
    val = integrate_exponential(rule, x, args.c)
    ref = _closed_form_exponential(args.p, args.c, x)
    rel = abs(val - ref) / abs(ref) if ref != 0 else float("nan")
    if args.format == "json":
        _emit(args, json.dumps({"value_re": val.real, "value_im": val.imag,
                                "rel_err_vs_reference": rel}) + "\n")
    else:
        _emit(args, _csv([(val.real, val.imag, rel)],
                         ["value_re", "value_im", "rel_err_vs_reference"]))


def _cmd_interp(args) -> None:
    x = np.asarray(_floats(args.x))
    if len(x) != args.p + 2:
        raise ValidationError(f"--x needs {args.p + 2} coordinates for p={args.p}")
    rule = sampling_rule(args.p, args.c, radial_count=args.radial_count,
                         angular_count=args.angular_count)
    if args.samples:
        data = np.loadtxt(args.samples, delimiter=",", skiprows=1)
        if data.shape[0] != rule.count:
            raise ValidationError(
                f"sample file has {data.shape[0]} rows, rule has {rule.count} nodes"
            )
        samples = data[:, -2] + 1j * data[:, -1]
    else:
        samples = np.exp(1j * args.c * (rule.nodes() @ x))
    from gpsf.spectrum import harmonic_count

    modes = []
    for N in range(args.Nmax + 1):
        for ell in range(1, harmonic_count(args.p, N) + 1):
            for n in range(args.nmax + 1):
                modes.append((N, ell, n))
    cache = ChannelCache(args.p, args.c, args.nmax)
    exp = recover_coeffs(rule, samples, args.c, modes, cache=cache)
    rows = [
        (N, ell, n, coeff.real, coeff.imag, abs(coeff))
        for (N, ell, n), coeff in sorted(exp.terms.items())
    ]
    if args.format == "json":
        _emit(
            args,
            json.dumps(
                {"p": args.p, "c": args.c,
                 "modes": [{"N": r[0], "l": r[1], "n": r[2], "re": r[3], "im": r[4]} for r in rows]}
            ) + "\n",
        )
    else:
        _emit(args, _csv(rows, ["N", "l", "n", "re", "im", "abs"]))


def _cmd_spectrum_check(args) -> None:
    nmax = args.nmax if args.nmax is not None else int(args.c) + 40
    Nmax = args.Nmax if args.Nmax is not None else int(args.c) + 40
    if args.threads > 1:
        from gpsf.spectrum import harmonic_count

        def one(N):
            if harmonic_count(args.p, N) == 0:
                return 0.0
            chain = beta_chain(ProlateChannel(args.p, args.c, N), nmax, mu_stop=1e-26)
            return harmonic_count(args.p, N) * sum(t.mu for t in chain)

        with ThreadPoolExecutor(max_workers=args.threads) as pool:
            partial = sum(pool.map(one, range(Nmax + 1)))
        closed = args.c ** (args.p + 2) / (
            2.0 ** (args.p + 2) * math.gamma(args.p / 2.0 + 2.0) ** 2
        )
    else:
        partial, closed = mu_sum_check(args.p, args.c, Nmax, nmax)
    if args.format == "json":
        _emit(args, json.dumps({"partial_sum": partial, "closed_form": closed,
                                "ratio": partial / closed}) + "\n")
    else:
        _emit(args, _csv([(partial, closed, partial / closed)],
                         ["partial_sum", "closed_form", "ratio"]))


def _cmd_figure_data(args) -> None:
    Ns = [int(v) for v in args.N.split(",") if v]

    def one(N):
        return beta_chain(ProlateChannel(args.p, args.c, N), args.nmax, eps=args.eps)

    if args.threads > 1:
        with ThreadPoolExecutor(max_workers=args.threads) as pool:
            chains = list(pool.map(one, Ns))
    else:
        chains = [one(N) for N in Ns]
    rows = []
    for N, chain in zip(Ns, chains):
        for t in chain:
            rows.append((N, t.mode.n + 1, abs(t.lam)))
    if args.format == "json":
        _emit(args, json.dumps([{"N": r[0], "i": r[1], "abs_lambda": r[2]} for r in rows]) + "\n")
    else:
        _emit(args, _csv(rows, ["N", "i", "abs_lambda"]))


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="gpsf", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    def common(sp, *, N=False, n=False, nmax=False):
        sp.add_argument("--p", type=int, required=True, choices=(-1, 0, 1, 2, 3))
        sp.add_argument("--c", type=float, required=True)
        if N:
            sp.add_argument("--N", type=int, default=0)
        if n:
            sp.add_argument("--n", type=int, required=True)
        if nmax:
            sp.add_argument("--nmax", type=int, required=True)
        sp.add_argument("--out", default=None)
        sp.add_argument("--format", choices=("csv", "json"), default="csv")
        sp.add_argument("--eps", type=float, default=1e-16)
        sp.add_argument("--threads", type=int, default=1)

    sp = sub.add_parser("eval", help="evaluate Phi_{N,n} and its derivative at radii")
    common(sp, N=True, n=True)
    sp.add_argument("--r", required=True, help="comma-separated radii in [0,1]")
    sp.set_defaults(func=_cmd_eval)

    sp = sub.add_parser("eigs", help="eigenvalue table of one radial channel")
    common(sp, N=True, nmax=True)
    sp.set_defaults(func=_cmd_eigs)

    sp = sub.add_parser("roots", help="roots of Phi_{N,n}")
    common(sp, N=True, n=True)
    sp.set_defaults(func=_cmd_roots)

    sp = sub.add_parser("quad-cheb", help="interpolatory radial rule")
    common(sp, n=True)
    sp.set_defaults(func=lambda a: _cmd_quad(a, "cheb"))

    sp = sub.add_parser("quad-gauss", help="Gauss-type radial rule")
    common(sp, n=True)
    sp.set_defaults(func=lambda a: _cmd_quad(a, "gauss"))

    sp = sub.add_parser("ball-integrate", help="integrate e^(ic<x,t>) over the unit ball")
    common(sp)
    sp.add_argument("--x", required=True, help="comma-separated point coordinates")
    sp.add_argument("--radial", required=True, help="radial rule as kind:count (cheb or gauss)")
    sp.add_argument("--angular", type=int, required=True, help="angular node count")
    sp.set_defaults(func=_cmd_ball_integrate)

    sp = sub.add_parser("interp", help="recover expansion coefficients of e^(ic<x,t>)")
    common(sp)
    sp.add_argument("--x", required=True)
    sp.add_argument("--Nmax", type=int, required=True)
    sp.add_argument("--nmax", type=int, required=True)
    sp.add_argument("--radial-count", type=int, default=None)
    sp.add_argument("--angular-count", type=int, default=None)
    sp.add_argument("--samples", default=None,
                    help="CSV of samples (…, f_re, f_im) on the rule nodes instead of --x")
    sp.set_defaults(func=_cmd_interp)

    sp = sub.add_parser("spectrum-check", help="spectral sum against its closed form")
    common(sp)
    sp.add_argument("--Nmax", type=int, default=None)
    sp.add_argument("--nmax", type=int, default=None)
    sp.set_defaults(func=_cmd_spectrum_check)

    sp = sub.add_parser("figure-data", help="|lambda| sequences for a list of channels")
    common(sp, nmax=True)
    sp.add_argument("--N", required=True, help="comma-separated angular orders")
    sp.set_defaults(func=_cmd_figure_data)

    return ap


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        args.func(args)
    except (ValidationError, ValueError) as exc:
        print(f"gpsf: invalid request: {exc}", file=sys.stderr)
        return 2
    except NumericalError as exc:
        print(f"gpsf: numerical failure: {exc}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
