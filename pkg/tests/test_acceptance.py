"""Exit criteria for the package; each test prints one PASS/FAIL line."""
import math
import random
import time
from contextlib import contextmanager
from fractions import Fraction

import numpy as np
import pytest

from conftest import ACCEPTANCE_LINES, itinerary_value
from kneadprime.dynamics import constructed_prime_gaps, lyapunov, orbit, topological_entropy
from kneadprime.encoding import (D, check_theme3, check_theorem4, compose, first_primes,
                                 prime_gaps, primitive_period, primorial)
from kneadprime.gapstats import compare_histograms, histogram, read_histogram_csv
from kneadprime.solver import kneading_of, solve_parameter, solve_superstable
from kneadprime.symbolic import Ordering, SymbolicWord, compare, expand, is_admissible


@contextmanager
def criterion(number, text):
    start = time.perf_counter()
    try:
        yield
    except BaseException as exc:
        ACCEPTANCE_LINES.append(f"FAIL {number}: {text} ({exc.__class__.__name__}: "
                                f"{str(exc).splitlines()[0] if str(exc) else ''})")
        raise
    ACCEPTANCE_LINES.append(f"PASS {number}: {text} [{time.perf_counter() - start:.2f}s]")


def test_1_reference_parameters():
    with criterion(1, "reference words RC..RL(L)* solve to printed u within 1e-3, < 5 s"):
        t0 = time.perf_counter()
        got = {
            "RC": solve_superstable("RC").u,
            "RLRC": solve_superstable("RLRC").u,
            "RLRRRLRC": solve_superstable("RLRRRLRC").u,
            "RL(R)*": solve_parameter("RL(R)*", 60, 1e-6).u,
            "RLC": solve_superstable("RLC").u,
            "RL(L)*": solve_parameter("RL(L)*", 60, 1e-6).u,
        }
        elapsed = time.perf_counter() - t0
        printed = {"RC": 1.0, "RLRC": 1.3107, "RLRRRLRC": 1.3815, "RL(R)*": 1.5437,
                   "RLC": 1.754, "RL(L)*": 2.0}
        for word, u in printed.items():
            assert abs(got[word] - u) <= 1e-3, (word, got[word])
        assert elapsed < 5


def test_2_u_of_D2():
    with criterion(2, "u(D_2) = u((RLRRRL)*) within 5e-3 of 1.476, < 1 s"):
        t0 = time.perf_counter()
        u = solve_parameter("(RLRRRL)*", 120, 1e-4).u
        assert time.perf_counter() - t0 < 1
        assert abs(u - 1.476) <= 5e-3, u


def test_3_lyapunov_band_merging():
    with criterion(3, "Lyapunov at u=1.5437 in [0.32, 0.36], n=1e6, 5 seeds, < 10 s"):
        t0 = time.perf_counter()
        values = [lyapunov(1.5437, x0, 10**6, 10**3) for x0 in (0.3, -0.6, 0.1, 0.75, -0.2)]
        assert time.perf_counter() - t0 < 10
        assert all(0.32 <= v <= 0.36 for v in values), values


def test_4_topological_entropy():
    with criterion(4, "entropy at u=1.5437 within 0.02 of ln2/2 and at u=2 within 0.02 of ln2, < 30 s"):
        t0 = time.perf_counter()
        h_merge = topological_entropy(1.5437, 24)
        h_full = topological_entropy(2.0, 20)
        assert time.perf_counter() - t0 < 30
        assert abs(h_merge - math.log(2) / 2) <= 0.02, h_merge
        assert abs(h_full - math.log(2)) <= 0.02, h_full


def test_5_composition_golden():
    with criterion(5, "RL . RLL = RLRRRL; D_3 equals sieve marking; period(D_i) = primorial, i <= 6"):
        assert compose("(RL)*", "(RLL)*") == SymbolicWord.parse("(RLRRRL)*")
        marking = "".join("R" if j % 2 == 0 or j % 3 == 0 or j % 5 == 0 else "L"
                          for j in range(30))
        assert expand(D(3), 30) == marking
        for i in range(1, 7):
            assert primitive_period(D(i)) == primorial(i)


def test_6_theorem4_chain():
    with criterion(6, "D(i) < D(i+1) for i = 1..7, < 60 s"):
        t0 = time.perf_counter()
        res = check_theorem4(8)
        assert time.perf_counter() - t0 < 60
        assert res.ok, res.detail
        assert [s["i"] for s in res.data["steps"]] == list(range(1, 8))
        for i in range(1, 8):
            assert compare(D(i), D(i + 1)) is Ordering.LESS


def test_7_theme3():
    with criterion(7, "D(i) prefix of p_i^2+1 symbols admissible for i = 1..10 and max gap below p_i^2 <= p_i, < 60 s"):
        t0 = time.perf_counter()
        failures = []
        for i in range(1, 11):
            p = first_primes(i)[-1]
            res = check_theme3(i)
            max_gap = int(prime_gaps(max(p * p, 3)).gaps.max())
            if not res.ok:
                failures.append(f"i={i}: prefix not admissible (shift {res.witness})")
            if max_gap > p:
                failures.append(f"i={i}: max gap {max_gap} below {p * p} exceeds {p}")
        assert time.perf_counter() - t0 < 60
        assert not failures, "; ".join(failures)


def _random_word(rng, max_pre=6, max_per=6):
    pre = "".join(rng.choice("RL") for _ in range(rng.randint(0, max_pre)))
    per = "".join(rng.choice("RL") for _ in range(rng.randint(1, max_per)))
    return SymbolicWord(pre, per)


def test_8_property_suites():
    with criterion(8, "order laws (1e4 pairs), composition laws (1e3), confinement (1e3), round trips"):
        rng = random.Random(20261016)
        words = [_random_word(rng) for _ in range(10**4 + 1)]
        for a, b in zip(words, words[1:]):
            ab = compare(a, b)
            assert ab == -compare(b, a)
            assert (ab is Ordering.EQUAL) == (a == b)
            va, vb = itinerary_value(a), itinerary_value(b)
            if va != vb:
                assert (ab is Ordering.LESS) == (va < vb)
        for a, b, c in zip(words[:2000], words[1:2001], words[2:2002]):
            if compare(a, b) <= 0 and compare(b, c) <= 0:
                assert compare(a, c) <= 0

        periodic = [SymbolicWord.periodic(
            "".join(rng.choice("RL") for _ in range(rng.randint(1, 6)))) for _ in range(1002)]
        for a, b, c in zip(periodic, periodic[1:], periodic[2:]):
            assert compose(a, b) == compose(b, a)
            assert compose(compose(a, b), c) == compose(a, compose(b, c))
            assert compose(a, a) == a
            assert compose(a, "(L)*") == a

        nrng = np.random.default_rng(7)
        for u, x0 in zip(nrng.uniform(1e-9, 2.0, 1000), nrng.uniform(-1.0, 1.0, 1000)):
            assert np.all(np.abs(orbit(float(u), float(x0), 200).points) <= 1.0)

        for word in ["RL(R)*", "RLRR(RL)*", "RL(L)*"]:
            res = solve_parameter(word, 60, 1e-9)
            goal = SymbolicWord.finite(expand(word, res.truncation))
            lo, hi = res.bracket
            assert compare(kneading_of(lo, res.truncation), goal) is not Ordering.GREATER
            assert compare(kneading_of(hi, res.truncation), goal) is not Ordering.LESS
            w = SymbolicWord.parse(word)
            need = len(w.preperiod) + len(w.period)
            assert expand(kneading_of(res.u, need), need) == expand(word, need)
        for word in ["RC", "RLRC", "RLRRRLRC", "RLC"]:
            u = solve_superstable(word).u
            assert str(kneading_of(u, len(word) - 1)) == word[:-1]
            x = 1.0
            for _ in range(len(word) - 1):
                x = 1.0 - u * x * x
            assert abs(x) < 1e-9


def test_9_fig2_reproduction(tmp_path):
    with criterion(9, "gap histograms (primes to 1e6, chaos n=1e6 at u=1.5437): negative tails, PCP count > 0, < 30 s"):
        t0 = time.perf_counter()
        real = histogram(prime_gaps(10**6))
        chaos = histogram(constructed_prime_gaps(1.5437, 0.3, 10**6, 10**3))
        (tmp_path / "real.csv").write_text(real.to_csv(), encoding="utf-8")
        (tmp_path / "chaos.csv").write_text(chaos.to_csv(), encoding="utf-8")
        summary = compare_histograms(read_histogram_csv((tmp_path / "real.csv").read_text()),
                                     read_histogram_csv((tmp_path / "chaos.csv").read_text()))
        assert time.perf_counter() - t0 < 30
        assert summary.tail_slope_a < 0 and summary.tail_slope_b < 0
        assert chaos.bins.get(2, 0) > 0
