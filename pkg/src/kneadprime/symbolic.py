"""Symbolic words over {L, C, R}, the left shift, kneading order and admissibility.

Words are stored as plain strings.  A :class:`SymbolicWord` is an eventually
periodic sequence ``preperiod + period + period + ...``; an empty period means
the word is finite.  Text form: ``"RL(R)*"`` is R, L followed by R forever,
``"(RLL)*"`` is purely periodic and ``"RLC"`` is finite.
"""
from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass

import numpy as np

from .errors import TooShort, WordSyntaxError


class Symbol(str, enum.Enum):
    L = "L"
    C = "C"
    R = "R"

    @property
    def rank(self) -> int:
        """Position order L < C < R."""
        return _RANK[self.value]


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


_RANK = {"L": 0, "C": 1, "R": 2}
_GRAMMAR = re.compile(r"^([LCR]*)(?:\(([LCR]+)\)\*)?$")


def primitive_root(s: str) -> str:
    """Shortest string whose repetition gives ``s``."""
    if not s:
        return s
    k = (s + s).find(s, 1)
    return s[:k]


@dataclass(frozen=True)
class SymbolicWord:
    """An eventually periodic (or finite) symbol sequence in canonical form.

    Construction normalizes the word: the period is reduced to its primitive
    root and the preperiod is absorbed into the period where possible, so two
    words denoting the same infinite sequence compare equal with ``==``.
    """

    preperiod: str = ""
    period: str = ""

    def __post_init__(self):
        pre, per = self.preperiod, self.period
        bad = set(pre + per) - set(_RANK)
        if bad:
            raise WordSyntaxError(f"unknown symbols {sorted(bad)}")
        if not pre and not per:
            raise WordSyntaxError("empty word")
        if "C" in per:
            raise WordSyntaxError("C cannot occur inside a period")
        if "C" in pre[:-1] or (per and "C" in pre):
            raise WordSyntaxError("C may only terminate a finite word")
        per = primitive_root(per)
        while pre and per and pre[-1] == per[-1]:
            pre, per = pre[:-1], per[-1] + per[:-1]
        object.__setattr__(self, "preperiod", pre)
        object.__setattr__(self, "period", per)

    @classmethod
    def parse(cls, text: str) -> "SymbolicWord":
        m = _GRAMMAR.match(text.strip())
        if m is None or not text.strip():
            raise WordSyntaxError(f"cannot parse word {text!r}")
        return cls(m.group(1), m.group(2) or "")

    @classmethod
    def periodic(cls, body: str) -> "SymbolicWord":
        return cls("", body)

    @classmethod
    def finite(cls, symbols: str) -> "SymbolicWord":
        return cls(symbols, "")

    @property
    def is_finite(self) -> bool:
        return not self.period

    @property
    def is_purely_periodic(self) -> bool:
        return bool(self.period) and not self.preperiod

    @property
    def length(self) -> float:
        """Number of symbols; ``math.inf`` for infinite words."""
        return len(self.preperiod) if self.is_finite else math.inf

    def segment(self, start: int, stop: int) -> str:
        """Symbols ``start`` (inclusive) to ``stop`` (exclusive)."""
        pre, per = self.preperiod, self.period
        if stop <= start:
            return ""
        if stop <= len(pre):
            return pre[start:stop]
        if not per:
            raise TooShort(f"finite word of length {len(pre)} has no symbol {stop - 1}")
        head = pre[start:]
        begin = max(start, len(pre))
        n = stop - begin
        off = (begin - len(pre)) % len(per)
        reps = (off + n) // len(per) + 1
        return head + (per * reps)[off:off + n]

    def __str__(self) -> str:
        return self.preperiod + (f"({self.period})*" if self.period else "")


def as_word(w: "SymbolicWord | str") -> SymbolicWord:
    return w if isinstance(w, SymbolicWord) else SymbolicWord.parse(w)


def expand(word: SymbolicWord | str, n: int) -> str:
    """First ``n`` symbols of ``word``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return as_word(word).segment(0, n)


def shift(word: SymbolicWord | str, k: int = 1) -> SymbolicWord:
    """Drop the first ``k`` symbols."""
    w = as_word(word)
    if k < 0:
        raise ValueError("k must be non-negative")
    pre, per = w.preperiod, w.period
    if not per:
        if k >= len(pre):
            raise TooShort(f"cannot shift a word of length {len(pre)} by {k}")
        return SymbolicWord(pre[k:])
    if k <= len(pre):
        return SymbolicWord(pre[k:], per)
    off = (k - len(pre)) % len(per)
    return SymbolicWord("", per[off:] + per[:off])


def _first_mismatch(a: str, b: str) -> int | None:
    n = min(len(a), len(b))
    if a[:n] == b[:n]:
        return None
    if n <= 64:
        for j in range(n):
            if a[j] != b[j]:
                return j
    x = np.frombuffer(a[:n].encode("ascii"), dtype=np.uint8)
    y = np.frombuffer(b[:n].encode("ascii"), dtype=np.uint8)
    return int(np.argmax(x != y))


def _order_at(sa: str, sb: str, r_count: int) -> Ordering:
    less = _RANK[sa] < _RANK[sb]
    if r_count % 2:
        less = not less
    return Ordering.LESS if less else Ordering.GREATER


def first_difference(a: SymbolicWord | str, b: SymbolicWord | str) -> tuple[int, int] | None:
    """Index of the first differing symbol and the count of R before it.

    Returns ``None`` when the words agree over the comparison horizon: for two
    infinite words ``lcm(periods) + max(preperiods)`` symbols, otherwise the
    length of the shorter finite word.
    """
    a, b = as_word(a), as_word(b)
    if a == b:
        return None
    if a.period and b.period:
        horizon = (math.lcm(len(a.period), len(b.period))
                   + max(len(a.preperiod), len(b.preperiod)))
    else:
        horizon = int(min(a.length, b.length))
    start, size, r_before = 0, 256, 0
    while start < horizon:
        stop = min(horizon, start + size)
        sa, sb = a.segment(start, stop), b.segment(start, stop)
        j = _first_mismatch(sa, sb)
        if j is not None:
            return start + j, r_before + sa.count("R", 0, j)
        r_before += sa.count("R")
        start = stop
        size = min(size * 2, 1 << 22)
    return None


def compare(a: SymbolicWord | str, b: SymbolicWord | str) -> Ordering:
    """Kneading order of two words.

    At the first differing index the symbols are ordered L < C < R when an
    even number of R precede it, and R < C < L when that number is odd.
    Finite words that agree on their common length compare EQUAL.
    """
    a, b = as_word(a), as_word(b)
    diff = first_difference(a, b)
    if diff is None:
        return Ordering.EQUAL
    j, r = diff
    return _order_at(a.segment(j, j + 1), b.segment(j, j + 1), r)


def _admissible_horizon(w: SymbolicWord, horizon: int | None) -> int:
    if horizon is not None and horizon < 1:
        raise ValueError("horizon must be >= 1")
    if w.period:
        distinct = len(w.preperiod) + len(w.period)
        return distinct if horizon is None else min(horizon, distinct)
    longest = len(w.preperiod) - 1
    if horizon is None:
        return longest
    if horizon > longest:
        raise TooShort(f"horizon {horizon} needs a word longer than {len(w.preperiod)}")
    return horizon


def admissibility_witness(word: SymbolicWord | str, horizon: int | None = None) -> int | None:
    """Smallest shift ``k`` with ``shift(word, k)`` greater than ``word``, or None."""
    w = as_word(word)
    for k in range(1, _admissible_horizon(w, horizon) + 1):
        if compare(shift(w, k), w) is Ordering.GREATER:
            return k
    return None


def is_admissible(word: SymbolicWord | str, horizon: int | None = None) -> bool:
    """True when no shift of ``word`` (up to ``horizon``) exceeds it.

    Without a horizon every distinct shift is tried; for a finite word that is
    every proper suffix.
    """
    return admissibility_witness(word, horizon) is None
