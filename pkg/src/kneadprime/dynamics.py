"""The quadratic family f(x) = 1 - u x**2 on [-1, 1].

The critical point is 0 and f maps [-1, 1] into itself for 0 < u <= 2.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .encoding import GapSequence, GapSource
from .errors import BudgetExceeded, NoPrimePoints, OutOfDomain
from .symbolic import SymbolicWord

DEFAULT_U = 1.5437
DEFAULT_X0 = 0.3
DEFAULT_N = 10**6
DEFAULT_TRANSIENT = 10**3
LAP_CAP = 1 << 24


def _check(u: float, x: float | None = None) -> None:
    if not 0.0 < u <= 2.0:
        raise OutOfDomain(f"u={u} outside (0, 2]")
    if x is not None and not -1.0 <= x <= 1.0:
        raise OutOfDomain(f"x={x} outside [-1, 1]")


def step(u: float, x: float) -> float:
    _check(u, x)
    return 1.0 - u * x * x


@dataclass(frozen=True, eq=False)
class Orbit:
    u: float
    seed: float
    transient: int
    points: np.ndarray = field(repr=False)

    def to_csv(self) -> str:
        head = f"# u={self.u!r}\n# x0={self.seed!r}\n# transient={self.transient}\nk,x\n"
        return head + "".join(f"{k},{x:.17g}\n" for k, x in enumerate(self.points.tolist()))


def _iterate(u: float, x: float, n: int, transient: int) -> list[float]:
    for _ in range(transient):
        x = 1.0 - u * x * x
    out = [0.0] * n
    for k in range(n):
        out[k] = x
        x = 1.0 - u * x * x
    return out


def orbit(u: float, x0: float, n: int, transient: int = 0) -> Orbit:
    """Record ``n`` points after discarding ``transient`` iterations of ``x0``."""
    _check(u, x0)
    if n < 1:
        raise ValueError("n must be >= 1")
    return Orbit(u, x0, transient, np.array(_iterate(u, x0, n, transient)))


def itinerary(u: float, x0: float, n: int, c_epsilon: float = 0.0) -> SymbolicWord:
    """Symbols of the first ``n`` orbit points of ``x0``.

    A point within ``c_epsilon`` of 0 is coded C and ends the word, so the
    result can be shorter than ``n``.
    """
    _check(u, x0)
    if n < 1 or c_epsilon < 0:
        raise ValueError("need n >= 1 and c_epsilon >= 0")
    out = []
    x = x0
    for _ in range(n):
        if x > c_epsilon:
            out.append("R")
        elif x < -c_epsilon:
            out.append("L")
        else:
            out.append("C")
            break
        x = 1.0 - u * x * x
    return SymbolicWord.finite("".join(out))


def lyapunov(u: float, x0: float = DEFAULT_X0, n: int = DEFAULT_N,
             transient: int = DEFAULT_TRANSIENT) -> float:
    """Mean of ln|f'(x)| = ln|2 u x| over the post-transient orbit.

    Returns ``-inf`` when the orbit lands on the critical point (|x| < 1e-300).
    """
    pts = orbit(u, x0, n, transient).points
    a = np.abs(pts)
    if a.min() < 1e-300:
        return -math.inf
    return float(np.mean(np.log(2.0 * u * a)))


def lap_increments(u: float, n_max: int, cap: int = LAP_CAP) -> np.ndarray:
    """Number of turning points of ``f**(k+1)`` that are not turning points of ``f**k``.

    Entry ``k`` counts the depth-``k`` preimages of 0 inside (-1, 1); the lap
    number of ``f**n`` is ``1 + sum(increments[:n])``.
    """
    _check(u)
    level = np.array([0.0])
    counts = np.zeros(n_max, dtype=np.int64)
    for k in range(n_max):
        counts[k] = len(level)
        if k == n_max - 1:
            break
        y = level[level >= 1.0 - u]
        r = np.sqrt((1.0 - y) / u)
        r = r[r < 1.0]
        nxt = 2 * len(r) - np.count_nonzero(r == 0.0)
        if nxt > cap:
            raise BudgetExceeded(f"{nxt} turning points at depth {k + 1} exceed cap {cap}")
        level = np.concatenate([r, -r[r > 0.0]])
    return counts


def lap_numbers(u: float, n_max: int, cap: int = LAP_CAP) -> np.ndarray:
    """Lap numbers of ``f, f**2, ..., f**n_max``."""
    return 1 + np.cumsum(lap_increments(u, n_max, cap))


def topological_entropy(u: float, n_max: int = 24, cap: int = LAP_CAP) -> float:
    """Growth rate of the lap number of the iterates of f.

    Least-squares slope of ln(new turning points per iterate) against n over
    the last half of 1..n_max.  The increments grow at the same exponential
    rate as the lap numbers but without the polynomial prefactor that biases
    the slope when the entropy is zero.
    """
    if n_max < 10:
        raise ValueError("n_max must be >= 10")
    inc = lap_increments(u, n_max, cap)
    tail = inc[n_max // 2 - 1:]
    if tail.min() == 0:
        return 0.0
    n = np.arange(n_max // 2, n_max + 1)
    return max(0.0, float(np.polyfit(n, np.log(tail), 1)[0]))


def bifurcation_scan(u_min: float, u_max: float, u_steps: int, points_per_u: int,
                     transient: int = DEFAULT_TRANSIENT, x0: float = DEFAULT_X0) -> np.ndarray:
    """Post-transient samples on an even u grid, as an array of (u, x) rows.

    All parameters iterate together; rows are grouped by u in grid order.
    """
    if not 0.0 < u_min < u_max <= 2.0:
        raise OutOfDomain("need 0 < u_min < u_max <= 2")
    _check(u_max, x0)
    us = np.linspace(u_min, u_max, u_steps)
    x = np.full(u_steps, x0)
    for _ in range(transient):
        x = 1.0 - us * x * x
    samples = np.empty((u_steps, points_per_u))
    for k in range(points_per_u):
        samples[:, k] = x
        x = 1.0 - us * x * x
    return np.column_stack([np.repeat(us, points_per_u), samples.ravel()])


def scan_to_csv(rows: np.ndarray, meta: dict | None = None) -> str:
    head = "".join(f"# {k}={v}\n" for k, v in (meta or {}).items())
    return head + "u,x\n" + "".join(f"{u:.17g},{x:.17g}\n" for u, x in rows.tolist())


def constructed_prime_gaps(u: float = DEFAULT_U, x0: float = DEFAULT_X0, n: int = DEFAULT_N,
                           transient: int = DEFAULT_TRANSIENT) -> GapSequence:
    """Gaps between orbit indices with x < 0 (the "prime" points)."""
    pts = orbit(u, x0, n, transient).points
    idx = np.flatnonzero(pts < 0.0)
    if len(idx) == 0:
        raise NoPrimePoints(f"no negative points in {n} iterates at u={u}")
    meta = {"u": u, "x0": x0, "n": n, "transient": transient,
            "prime_fraction": len(idx) / n}
    return GapSequence(GapSource.CHAOS_ORBIT, np.diff(idx), n, meta)
