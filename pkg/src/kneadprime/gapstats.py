"""Gap-size histograms and summary comparisons between two gap sources."""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .encoding import GapSequence, GapSource
from .errors import EmptyInput

TAIL_MIN_COUNT = 5


@dataclass(frozen=True)
class GapHistogram:
    source: GapSource
    bins: dict[int, int]
    total: int
    metadata: dict = field(default_factory=dict)

    def frequencies(self) -> dict[int, float]:
        return {g: c / self.total for g, c in self.bins.items()}

    def to_csv(self) -> str:
        head = "".join(f"# {k}={v}\n" for k, v in
                       {"source": self.source.value, "total": self.total, **self.metadata}.items())
        rows = "".join(f"{g},{c},{c / self.total:.17g}\n" for g, c in sorted(self.bins.items()))
        return head + "gap,count,frequency\n" + rows


def histogram(gaps: GapSequence) -> GapHistogram:
    if len(gaps.gaps) == 0:
        raise EmptyInput("no gaps to count")
    values, counts = np.unique(np.asarray(gaps.gaps), return_counts=True)
    meta = {"limit": gaps.limit, **gaps.metadata}
    return GapHistogram(gaps.source, dict(zip(values.tolist(), counts.tolist())),
                        int(counts.sum()), meta)


def tail_slope(h: GapHistogram, min_count: int = TAIL_MIN_COUNT) -> float:
    """Least-squares slope of ln(frequency) against gap size.

    Only bins with at least ``min_count`` entries take part; NaN when fewer
    than two bins qualify.
    """
    pts = [(g, c / h.total) for g, c in sorted(h.bins.items()) if c >= min_count]
    if len(pts) < 2:
        return math.nan
    g, f = np.array(pts).T
    return float(np.polyfit(g, np.log(f), 1)[0])


def total_variation(a: GapHistogram, b: GapHistogram) -> float:
    fa, fb = a.frequencies(), b.frequencies()
    return 0.5 * sum(abs(fa.get(g, 0.0) - fb.get(g, 0.0)) for g in set(fa) | set(fb))


@dataclass(frozen=True)
class HistogramComparison:
    frequencies_a: dict[int, float]
    frequencies_b: dict[int, float]
    tail_slope_a: float
    tail_slope_b: float
    total_variation: float

    def to_text(self) -> str:
        return (f"tail_slope_a={self.tail_slope_a:.17g}\n"
                f"tail_slope_b={self.tail_slope_b:.17g}\n"
                f"total_variation={self.total_variation:.17g}\n")


def compare_histograms(a: GapHistogram, b: GapHistogram) -> HistogramComparison:
    """Normalized tables, exponential tail slopes and total-variation distance.

    Descriptive only; nothing here decides whether the two are "similar".
    """
    if a.total == 0 or b.total == 0:
        raise EmptyInput("cannot compare an empty histogram")
    return HistogramComparison(a.frequencies(), b.frequencies(), tail_slope(a),
                               tail_slope(b), total_variation(a, b))


def read_histogram_csv(text: str) -> GapHistogram:
    """Inverse of :meth:`GapHistogram.to_csv`."""
    meta, bins = {}, {}
    for line in text.splitlines():
        if line.startswith("#"):
            k, _, v = line[1:].strip().partition("=")
            meta[k] = v
        elif line and not line.startswith("gap,"):
            g, c, _ = line.split(",")
            bins[int(g)] = int(c)
    if not bins:
        raise EmptyInput("histogram CSV has no rows")
    source = GapSource(meta.pop("source", GapSource.REAL_PRIMES.value))
    meta.pop("total", None)
    return GapHistogram(source, bins, sum(bins.values()), meta)
