"""Command-line interface: ``kneadprime <subcommand> [options]``.

Scalar answers are printed bare; tabular output is CSV preceded by ``#``
lines that record every option of the run.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import dynamics, encoding, gapstats, solver
from .errors import KneadPrimeError
from .symbolic import SymbolicWord, compare, is_admissible


def _header(args: argparse.Namespace) -> str:
    lines = []
    for k, v in sorted(vars(args).items()):
        if k in ("func", "out"):
            continue
        v = " ".join(map(str, v)) if isinstance(v, list) else v
        lines.append(f"# {k}={v}\n")
    return "".join(lines)


def _emit(args, text: str) -> None:
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _word(text: str) -> SymbolicWord:
    return SymbolicWord.parse(text)


def cmd_sieve(args):
    table = encoding.sieve_primes(args.limit)
    _emit(args, _header(args) + "index,prime\n"
          + "".join(f"{k},{p}\n" for k, p in enumerate(table)))


def cmd_encode(args):
    w = encoding.D(args.i) if args.i else encoding.prime_word(args.prime)
    _emit(args, f"{w}\n")


def cmd_compose(args):
    w = args.words[0]
    for other in args.words[1:]:
        w = encoding.compose(w, other)
    _emit(args, f"{w}\n")


def cmd_admissible(args):
    _emit(args, f"{str(is_admissible(args.word, args.horizon)).lower()}\n")


def cmd_compare(args):
    _emit(args, compare(args.a, args.b).name.capitalize() + "\n")


def cmd_solve(args):
    if args.word.is_finite and args.word.preperiod.endswith("C"):
        res = solver.solve_superstable(args.word)
    else:
        res = solver.solve_parameter(args.word, args.truncation, args.tol)
    _emit(args, _header(args) + solver.CSV_HEADER + "\n" + res.csv_row() + "\n")


def cmd_chain(args):
    rows = solver.parameter_chain(args.i_max, args.truncation, args.tol)
    _emit(args, _header(args) + solver.CSV_HEADER + "\n"
          + "".join(r.csv_row() + "\n" for r in rows))


def cmd_orbit(args):
    o = dynamics.orbit(args.u, args.x0, args.n, args.transient)
    _emit(args, _header(args) + o.to_csv())


def cmd_itinerary(args):
    _emit(args, f"{dynamics.itinerary(args.u, args.x0, args.n, args.c_epsilon)}\n")


def cmd_lyapunov(args):
    _emit(args, f"{dynamics.lyapunov(args.u, args.x0, args.n, args.transient):.17g}\n")


def cmd_entropy(args):
    _emit(args, f"{dynamics.topological_entropy(args.u, args.n_max):.17g}\n")


def cmd_bifurcation(args):
    rows = dynamics.bifurcation_scan(args.u_min, args.u_max, args.u_steps,
                                     args.points, args.transient, args.x0)
    _emit(args, _header(args) + dynamics.scan_to_csv(rows))


def cmd_gaps(args):
    _emit(args, _header(args) + encoding.prime_gaps(args.limit).to_csv())


def cmd_chaos_gaps(args):
    seq = dynamics.constructed_prime_gaps(args.u, args.x0, args.n, args.transient)
    _emit(args, _header(args) + seq.to_csv())


def cmd_histogram(args):
    if args.source == "primes":
        seq = encoding.prime_gaps(args.limit)
    else:
        seq = dynamics.constructed_prime_gaps(args.u, args.x0, args.n, args.transient)
    _emit(args, _header(args) + gapstats.histogram(seq).to_csv())


def cmd_compare_hist(args):
    a = gapstats.read_histogram_csv(Path(args.a).read_text(encoding="utf-8"))
    b = gapstats.read_histogram_csv(Path(args.b).read_text(encoding="utf-8"))
    _emit(args, gapstats.compare_histograms(a, b).to_text())


def cmd_theorem4(args):
    res = encoding.check_theorem4(args.i_max)
    lines = [f"{str(res.ok).lower()} ({res.detail})", "i,index,left,right,r_count"]
    lines += [f"{s['i']},{s['index']},{s['left']},{s['right']},{s['r_count']}"
              for s in res.data["steps"]]
    _emit(args, "\n".join(lines) + "\n")


def cmd_theme3(args):
    res = encoding.check_theme3(args.i)
    _emit(args, f"{str(res.ok).lower()} ({res.detail})\n")


def _orbit_opts(p, n=dynamics.DEFAULT_N):
    p.add_argument("--u", type=float, default=dynamics.DEFAULT_U)
    p.add_argument("--x0", type=float, default=dynamics.DEFAULT_X0)
    p.add_argument("--n", type=int, default=n)
    p.add_argument("--transient", type=int, default=dynamics.DEFAULT_TRANSIENT)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kneadprime", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_, description=help_)
        p.add_argument("--out", help="write to this file instead of stdout")
        p.set_defaults(func=func)
        return p

    p = add("sieve", cmd_sieve, "List primes up to LIMIT by the sieve of Eratosthenes.")
    p.add_argument("--limit", type=int, required=True)

    p = add("encode", cmd_encode,
            "Sieve word of one prime, (R L^(p-1))*, or of the first I primes composed.")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--prime", type=int)
    g.add_argument("--i", type=int)

    p = add("compose", cmd_compose,
            "Compose periodic sieve words: a position is L only if L in every word.")
    p.add_argument("words", nargs="+", type=_word)

    p = add("admissible", cmd_admissible,
            "Kneading admissibility: no left shift exceeds the word.")
    p.add_argument("word", type=_word)
    p.add_argument("--horizon", type=int)

    p = add("compare", cmd_compare, "Kneading order of two words (R-parity rule).")
    p.add_argument("a", type=_word)
    p.add_argument("b", type=_word)

    p = add("solve", cmd_solve,
            "Parameter u of 1-u*x^2 whose kneading word is WORD; words ending in C "
            "are solved as superstable orbits.")
    p.add_argument("--word", type=_word, required=True)
    p.add_argument("--truncation", type=int)
    p.add_argument("--tol", type=float, default=1e-6)

    p = add("chain", cmd_chain, "Parameters of the composed sieve words D(1)..D(I_MAX).")
    p.add_argument("--i-max", type=int, required=True)
    p.add_argument("--truncation", type=int)
    p.add_argument("--tol", type=float, default=1e-6)

    p = add("orbit", cmd_orbit, "Orbit of x -> 1-u*x^2 as k,x rows.")
    _orbit_opts(p, n=100)

    p = add("itinerary", cmd_itinerary, "L/C/R coding of an orbit about the critical point 0.")
    p.add_argument("--u", type=float, required=True)
    p.add_argument("--x0", type=float, default=1.0)
    p.add_argument("--n", type=int, default=40)
    p.add_argument("--c-epsilon", type=float, default=0.0)

    p = add("lyapunov", cmd_lyapunov, "Lyapunov exponent, mean of ln|2ux| along the orbit.")
    _orbit_opts(p)

    p = add("entropy", cmd_entropy, "Topological entropy from lap-number growth.")
    p.add_argument("--u", type=float, default=dynamics.DEFAULT_U)
    p.add_argument("--n-max", type=int, default=24)

    p = add("bifurcation", cmd_bifurcation, "Bifurcation diagram data as u,x rows.")
    p.add_argument("--u-min", type=float, default=0.5)
    p.add_argument("--u-max", type=float, default=2.0)
    p.add_argument("--u-steps", type=int, default=600)
    p.add_argument("--points", type=int, default=200)
    p.add_argument("--transient", type=int, default=dynamics.DEFAULT_TRANSIENT)
    p.add_argument("--x0", type=float, default=dynamics.DEFAULT_X0)

    p = add("gaps", cmd_gaps, "Gaps between consecutive primes up to LIMIT.")
    p.add_argument("--limit", type=int, required=True)

    p = add("chaos-gaps", cmd_chaos_gaps,
            "Gaps between orbit indices with x < 0, the primes built from the chaotic orbit.")
    _orbit_opts(p)

    p = add("histogram", cmd_histogram, "Gap-size histogram as gap,count,frequency rows.")
    p.add_argument("--source", choices=["primes", "chaos"], required=True)
    p.add_argument("--limit", type=int, default=10**6)
    _orbit_opts(p)

    p = add("compare-hist", cmd_compare_hist,
            "Tail slopes and total-variation distance of two histogram CSVs.")
    p.add_argument("a")
    p.add_argument("b")

    p = add("theorem4", cmd_theorem4, "Check the ordering chain D(1) < D(2) < ... < D(I_MAX).")
    p.add_argument("--i-max", type=int, required=True)

    p = add("theme3", cmd_theme3,
            "Check that the first p_i^2+1 symbols of D(i) form an admissible word.")
    p.add_argument("--i", type=int, required=True)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except (KneadPrimeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run())
