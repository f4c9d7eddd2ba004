"""Recover the parameter u of f(x) = 1 - u x**2 from a kneading word.

The kneading word of u is the itinerary of the critical value f(0) = 1 and it
increases monotonically with u in the kneading order, so a target word can be
located by bisection on [1, 2].
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dynamics import itinerary
from .encoding import D, first_primes, sieve_prefix
from .errors import ContainsC, NoBracket, NoConvergence, NotAdmissible, WordSyntaxError
from .symbolic import (Ordering, SymbolicWord, admissibility_witness, as_word,
                       compare, expand)

U_LO, U_HI = 1.0, 2.0
MIN_TRUNCATION = 60
MAX_TRUNCATION = 200


@dataclass(frozen=True)
class SolveResult:
    word: str
    u: float
    bracket: tuple[float, float]
    truncation: int
    iterations: int
    matched: int = 0
    note: str = ""

    def csv_row(self) -> str:
        lo, hi = self.bracket
        return f"{self.word},{self.u:.17g},{lo:.17g},{hi:.17g},{self.truncation}"


CSV_HEADER = "word,u,bracket_lo,bracket_hi,truncation"


def kneading_of(u: float, length: int) -> SymbolicWord:
    """Itinerary of the critical value 1.0 for ``length`` symbols."""
    return itinerary(u, 1.0, length, 0.0)


def default_truncation(word: SymbolicWord) -> int:
    n = len(word.preperiod) + len(word.period)
    if word.is_finite:
        return n
    return max(n, min(max(3 * n, MIN_TRUNCATION), MAX_TRUNCATION))


def _agreement(a: str, b: str) -> int:
    n = min(len(a), len(b))
    for j in range(n):
        if a[j] != b[j]:
            return j
    return n


def solve_parameter(target: SymbolicWord | str, truncation: int | None = None,
                    tol: float = 1e-6, bracket: tuple[float, float] = (U_LO, U_HI),
                    strict: bool = True) -> SolveResult:
    """Bisect for the parameter whose kneading word matches ``target``.

    At each midpoint the first ``truncation`` kneading symbols are compared
    with the target prefix; the lower end moves up while the kneading word is
    not greater.  A periodic target is realized on a whole parameter interval
    and the search converges to its upper end.  Finite targets are matched on
    their own length.

    With ``strict`` the result must reproduce at least one preperiod plus
    period of the target, otherwise NoConvergence is raised.  Without it the
    boundary of the set of parameters whose kneading word is not greater than
    the target is returned and ``matched`` records how many symbols agree.
    """
    w = as_word(target)
    if "C" in w.preperiod:
        raise ContainsC(f"{w} ends in C; use solve_superstable")
    if admissibility_witness(w) is not None:
        raise NotAdmissible(f"{w} is not shift-maximal")
    need = len(w.preperiod) + len(w.period)
    T = default_truncation(w) if truncation is None else truncation
    if T < need or (w.is_finite and T > need):
        raise ValueError(f"truncation {T} incompatible with {w} (needs {need})")
    goal = SymbolicWord.finite(expand(w, T))
    lo, hi = bracket
    iterations = 0
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if compare(kneading_of(mid, T), goal) is Ordering.GREATER:
            hi = mid
        else:
            lo = mid
        iterations += 1
    matched = _agreement(kneading_of(lo, T).preperiod, goal.preperiod)
    if strict and matched < need:
        raise NoConvergence(f"kneading at u={lo:.12g} matches only {matched} of {need} "
                            f"symbols of {w}; raise truncation or tolerance")
    return SolveResult(str(w), 0.5 * (lo + hi), (lo, hi), T, iterations, matched)


def _critical_orbits(us: np.ndarray, m: int) -> np.ndarray:
    """Rows x_1..x_m of the critical orbit (x_1 = 1) for every u."""
    xs = np.empty((m, len(us)))
    x = np.ones_like(us)
    for k in range(m):
        xs[k] = x
        x = 1.0 - us * x * x
    return xs


def _prefix_ok(xs: np.ndarray, prefix: str) -> np.ndarray:
    want = np.array([1.0 if s == "R" else -1.0 for s in prefix])[:, None]
    return np.all(np.sign(xs) == want, axis=0)


def solve_superstable(target: SymbolicWord | str, grid: float = 1e-3,
                      tol: float = 1e-15) -> SolveResult:
    """Parameter whose critical orbit returns to 0 with the itinerary ``target``.

    ``target`` is a finite admissible word ending in C.  The last orbit point
    is tracked on a grid over [1, 2]; the first cell whose two ends carry the
    C-free prefix and straddle zero is refined by bisection.
    """
    w = as_word(target)
    word = w.preperiod
    if not w.is_finite or not word.endswith("C"):
        raise WordSyntaxError(f"{w} is not a finite word ending in C")
    if admissibility_witness(w) is not None:
        raise NotAdmissible(f"{w} is not shift-maximal")
    m, prefix = len(word), word[:-1]
    us = np.linspace(U_LO, U_HI, int(round((U_HI - U_LO) / grid)) + 1)
    xs = _critical_orbits(us, m)
    ok = _prefix_ok(xs[:-1], prefix)
    g = xs[-1]

    def last(u):
        return _critical_orbits(np.array([u]), m)[-1, 0]

    for j in range(len(us)):
        if ok[j] and g[j] == 0.0:
            return SolveResult(str(w), float(us[j]), (float(us[j]),) * 2, m, 0, m)
        if j + 1 < len(us) and ok[j] and ok[j + 1] and g[j] * g[j + 1] < 0:
            lo, hi, glo = float(us[j]), float(us[j + 1]), g[j]
            it = 0
            while hi - lo > tol and it < 200:
                mid = 0.5 * (lo + hi)
                gm = last(mid)
                if gm == 0.0:
                    lo = hi = mid
                    break
                if (gm < 0) == (glo < 0):
                    lo, glo = mid, gm
                else:
                    hi = mid
                it += 1
            return SolveResult(str(w), 0.5 * (lo + hi), (lo, hi), m, it, m)
    raise NoBracket(f"no sign change of the critical orbit with itinerary {w} on [1, 2]")


def theme3_word(i: int) -> SymbolicWord:
    """First ``p_i**2 + 1`` symbols of ``D(i)`` as a finite word."""
    p = first_primes(i)[-1]
    return SymbolicWord.finite(sieve_prefix(i, p * p + 1))


def parameter_chain(i_max: int, truncation: int | None = None,
                    tol: float = 1e-6) -> list[SolveResult]:
    """Solve u(D_1), ..., u(D_i_max).

    Where the full periodic word ``D(i)`` is not admissible (``i >= 3``) the
    target is its admissible prefix of ``p_i**2 + 1`` symbols.  Such a prefix
    need not be a kneading word of any parameter, so it is solved non-strictly
    and the note records how many symbols the returned parameter reproduces.
    Only the full words honour an explicit ``truncation``.
    """
    out = []
    for i in range(1, i_max + 1):
        if i < 3:
            word = D(i)
            res = solve_parameter(word, truncation, tol)
            note = f"D({i})"
            if i == 1:
                note += "; kneading word constant on a parameter interval, upper end reported"
        else:
            word = theme3_word(i)
            res = solve_parameter(word, None, tol, strict=False)
            note = (f"D({i}) prefix of {len(word.preperiod)} symbols, "
                    f"{res.matched} reproduced")
        out.append(SolveResult(res.word, res.u, res.bracket, res.truncation,
                               res.iterations, res.matched, note))
    return out
