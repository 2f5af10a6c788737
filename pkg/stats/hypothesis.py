"""Paired-samples t-test for comparing two scorings of the same users."""

import math
from dataclasses import asdict, dataclass
from typing import Sequence

import numpy as np
from scipy import stats as sps


@dataclass(frozen=True)
class TTestResult:
    t: float
    df: int
    p: float
    mean_difference: float
    degenerate: bool = False   # zero spread in the differences

    def to_dict(self) -> dict:
        return asdict(self)


def paired_ttest(a: Sequence[float], b: Sequence[float]) -> TTestResult:
    """Two-sided paired t-test on d = a - b.

    All-zero differences give t = 0, p = 1. Constant non-zero differences
    have no spread: t is reported as ±inf and p as 0 with ``degenerate`` set.

    Raises:
        ValueError: On unequal lengths or fewer than 2 pairs
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != b.shape:
        raise ValueError(f"Paired samples differ in length: {a.shape[0]} vs {b.shape[0]}")
    n = a.shape[0]
    if n < 2:
        raise ValueError("Need at least 2 pairs")

    d = a - b
    df = n - 1
    mean = float(d.mean())
    if np.all(d == 0):
        return TTestResult(t=0.0, df=df, p=1.0, mean_difference=0.0, degenerate=True)
    if np.all(d == d[0]):
        return TTestResult(t=math.copysign(math.inf, mean), df=df, p=0.0, mean_difference=mean, degenerate=True)

    result = sps.ttest_rel(a, b)
    return TTestResult(t=float(result.statistic), df=df, p=float(result.pvalue), mean_difference=mean)
