"""Design data shared by the model fitters."""

from dataclasses import dataclass, field
from typing import List, Sequence

import numpy as np


@dataclass
class Sample:
    """Observations with binary labels (1 = female, 0 = male)."""
    X: np.ndarray
    y: np.ndarray
    feature_names: List[str] = field(default_factory=list)

    def __post_init__(self):
        self.X = np.asarray(self.X, dtype=float)
        if self.X.ndim == 1:
            self.X = self.X.reshape(-1, 1)
        self.y = np.asarray(self.y, dtype=float).ravel()
        if self.X.shape[0] != self.y.shape[0]:
            raise ValueError(f"X has {self.X.shape[0]} rows but y has {self.y.shape[0]} labels")
        if not np.all(np.isfinite(self.X)):
            raise ValueError("Features must be finite")
        if not np.all((self.y == 0) | (self.y == 1)):
            raise ValueError("Labels must be 0 or 1")
        if not self.feature_names:
            self.feature_names = [f"x{j}" for j in range(self.X.shape[1])]
        elif len(self.feature_names) != self.X.shape[1]:
            raise ValueError(f"{len(self.feature_names)} feature names for {self.X.shape[1]} columns")

    def __len__(self) -> int:
        return self.y.shape[0]

    @property
    def has_both_classes(self) -> bool:
        return bool(np.any(self.y == 1) and np.any(self.y == 0))

    def subset(self, rows: Sequence[int]) -> "Sample":
        rows = np.asarray(rows, dtype=int)
        return Sample(self.X[rows], self.y[rows], list(self.feature_names))


def with_intercept(X: np.ndarray) -> np.ndarray:
    return np.column_stack([np.ones(X.shape[0]), X])
