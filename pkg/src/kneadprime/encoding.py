"""Sieve of Eratosthenes as symbolic words.

Position ``j`` of a word stands for the integer ``j``; ``R`` marks an erased
(composite or zero) position and ``L`` a surviving one.  The word of a prime
``p`` is ``(R L^(p-1))*`` and sieving by several primes is the pointwise
composition of their words, where a position stays ``L`` only if every input
has ``L`` there.
"""
from __future__ import annotations

import enum
import math
import os
from dataclasses import dataclass, field
from functools import reduce

import numpy as np

from .errors import (BudgetExceeded, ContainsC, LimitTooSmall, NotPeriodic,
                     NotPrime)
from .symbolic import (Ordering, SymbolicWord, admissibility_witness, as_word,
                       compare, first_difference)

DEFAULT_BUDGET = 10**9
_R, _L = ord("R"), ord("L")


def budget() -> int:
    """Largest period (in symbols) that :func:`D` will materialize."""
    return int(os.environ.get("KNEADPRIME_BUDGET", DEFAULT_BUDGET))


class GapSource(str, enum.Enum):
    REAL_PRIMES = "RealPrimes"
    CHAOS_ORBIT = "ChaosOrbit"


@dataclass(frozen=True, eq=False)
class PrimeTable:
    limit: int
    primes: np.ndarray

    def __len__(self):
        return len(self.primes)

    def __iter__(self):
        return iter(self.primes.tolist())


@dataclass(frozen=True, eq=False)
class GapSequence:
    source: GapSource
    gaps: np.ndarray
    limit: int
    metadata: dict = field(default_factory=dict)

    def to_csv(self) -> str:
        lines = [f"# {k}={v}" for k, v in {"source": self.source.value,
                                           "limit": self.limit, **self.metadata}.items()]
        lines.append("index,gap")
        lines.extend(f"{k},{g}" for k, g in enumerate(self.gaps.tolist()))
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class CheckResult:
    """Outcome of a finite verification; truthy when it holds.

    ``witness`` names the failing index (an ``i`` for the ordering chain, a
    shift for admissibility) and ``detail`` is a one-line explanation.
    """

    ok: bool
    witness: int | None = None
    detail: str = ""
    data: dict = field(default_factory=dict, compare=False)

    def __bool__(self):
        return self.ok


def _sieve_mask(limit: int) -> np.ndarray:
    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if is_prime[p]:
            is_prime[p * p::p] = False
    return is_prime


def sieve_primes(limit: int) -> PrimeTable:
    if limit < 2:
        raise LimitTooSmall(f"limit must be >= 2, got {limit}")
    return PrimeTable(limit, np.flatnonzero(_sieve_mask(limit)).astype(np.int64))


def first_primes(i: int) -> list[int]:
    """The first ``i`` primes."""
    if i < 1:
        return []
    # p_i < i (ln i + ln ln i) for i >= 6
    bound = 15 if i < 6 else int(i * (math.log(i) + math.log(math.log(i)))) + 1
    return sieve_primes(bound).primes[:i].tolist()


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, math.isqrt(n) + 1))


def prime_word(p: int) -> SymbolicWord:
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    return SymbolicWord.periodic("R" + "L" * (p - 1))


def _marks(word: SymbolicWord) -> np.ndarray:
    return np.frombuffer(word.period.encode("ascii"), dtype=np.uint8) == _R


def _from_marks(marks: np.ndarray) -> SymbolicWord:
    return SymbolicWord.periodic(np.where(marks, _R, _L).astype(np.uint8).tobytes().decode("ascii"))


def _check_composable(w: SymbolicWord) -> None:
    if "C" in w.preperiod:
        raise ContainsC(f"{w} contains C")
    if not w.is_purely_periodic:
        raise NotPeriodic(f"{w} is not purely periodic")


def compose(a: SymbolicWord | str, b: SymbolicWord | str, limit: int | None = None) -> SymbolicWord:
    """Pointwise sieve composition of two periodic words.

    Both words are repeated to the lcm of their periods; a position is L only
    if it is L in both.
    """
    a, b = as_word(a), as_word(b)
    _check_composable(a)
    _check_composable(b)
    n, m = len(a.period), len(b.period)
    size = math.lcm(n, m)
    if size > (budget() if limit is None else limit):
        raise BudgetExceeded(f"composed period {size} exceeds budget")
    marks = np.tile(_marks(a), size // n) | np.tile(_marks(b), size // m)
    return _from_marks(marks)


def primorial(i: int) -> int:
    return math.prod(first_primes(i))


def D(i: int, limit: int | None = None) -> SymbolicWord:
    """Sieve word for the first ``i`` primes, ``M_2 • M_3 • ... • M_{p_i}``."""
    if i < 1:
        raise ValueError("i must be >= 1")
    cap = budget() if limit is None else limit
    if primorial(i) > cap:
        raise BudgetExceeded(f"D({i}) has period {primorial(i)} > budget {cap}")
    return reduce(lambda w, p: compose(w, prime_word(p), cap),
                  first_primes(i)[1:], prime_word(2))


def sieve_prefix(i: int, n: int) -> str:
    """First ``n`` symbols of ``D(i)`` generated straight from the marking rule."""
    j = np.arange(n)
    marks = np.zeros(n, dtype=bool)
    for p in first_primes(i):
        marks |= j % p == 0
    return np.where(marks, _R, _L).astype(np.uint8).tobytes().decode("ascii")


def primitive_period(word: SymbolicWord | str) -> int:
    w = as_word(word)
    if not w.is_purely_periodic:
        raise NotPeriodic(f"{w} is not purely periodic")
    return len(w.period)


def prime_gaps(limit: int) -> GapSequence:
    """Differences between consecutive primes up to ``limit``."""
    if limit < 3:
        raise LimitTooSmall(f"limit must be >= 3, got {limit}")
    return GapSequence(GapSource.REAL_PRIMES, np.diff(sieve_primes(limit).primes), limit)


def check_theorem4(i_max: int, limit: int | None = None) -> CheckResult:
    """Verify ``D(i) < D(i+1)`` for every ``i < i_max``.

    ``data["steps"]`` records, per ``i``, the first differing index, the two
    symbols there and the number of R before it.
    """
    steps = []
    if i_max < 2:
        return CheckResult(True, detail="vacuous", data={"steps": steps})
    prev = D(1, limit)
    for i in range(1, i_max):
        nxt = D(i + 1, limit)
        diff = first_difference(prev, nxt)
        if diff is None:
            return CheckResult(False, i, f"D({i}) equals D({i + 1})", {"steps": steps})
        j, r = diff
        steps.append({"i": i, "index": j, "left": prev.segment(j, j + 1),
                      "right": nxt.segment(j, j + 1), "r_count": r})
        if compare(prev, nxt) is not Ordering.LESS:
            return CheckResult(False, i, f"D({i}) is not below D({i + 1}) at index {j}",
                               {"steps": steps})
        prev = nxt
    return CheckResult(True, detail=f"D(1) < ... < D({i_max})", data={"steps": steps})


def check_theme3(i: int) -> CheckResult:
    """Admissibility of the first ``p_i**2 + 1`` symbols of ``D(i)``.

    The prefix comes from the marking rule, so the full primorial period is
    never built.  ``data`` also carries the direct gap check: the largest gap
    between consecutive primes below ``p_i**2`` against ``p_i``.
    """
    if i < 1:
        raise ValueError("i must be >= 1")
    p = first_primes(i)[-1]
    n = p * p + 1
    if n > budget():
        raise BudgetExceeded(f"prefix of {n} symbols exceeds budget")
    word = SymbolicWord.finite(sieve_prefix(i, n))
    witness = admissibility_witness(word, p * p)
    max_gap = int(prime_gaps(max(p * p, 3)).gaps.max())
    data = {"p": p, "bound": p * p, "max_gap": max_gap, "gap_ok": max_gap <= p,
            "prefix": str(word)}
    if witness is None:
        detail = f"max gap {max_gap} {'≤' if max_gap <= p else '>'} {p} below {p * p}"
        return CheckResult(True, None, detail, data)
    return CheckResult(False, witness, f"shift {witness} exceeds the prefix; max gap {max_gap}", data)
