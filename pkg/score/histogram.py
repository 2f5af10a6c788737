"""Distribution of gender scores as CSV-ready bins."""

import csv
from typing import IO, List, NamedTuple, Sequence

import numpy as np

from config.settings import HISTOGRAM_CONFIG


class HistogramBin(NamedTuple):
    low: float
    high: float
    count: int


def score_histogram(values: Sequence[float], width: float = HISTOGRAM_CONFIG["bin_width"],
                    low: float = HISTOGRAM_CONFIG["low"], high: float = HISTOGRAM_CONFIG["high"]) -> List[HistogramBin]:
    """Count scores per bin of ``width`` over [low, high]; the last bin is closed."""
    if width <= 0 or high <= low:
        raise ValueError(f"Bad histogram range [{low}, {high}] with width {width}")
    n_bins = int(round((high - low) / width))
    counts, edges = np.histogram(np.asarray(values, dtype=float), bins=n_bins, range=(low, high))
    return [HistogramBin(round(float(edges[i]), 10), round(float(edges[i + 1]), 10), int(c))
            for i, c in enumerate(counts)]


def write_histogram_csv(bins: Sequence[HistogramBin], writer: IO[str]) -> None:
    out = csv.writer(writer, lineterminator="\n")
    out.writerow(HistogramBin._fields)
    out.writerows(bins)
