"""Run configuration shared by the command-line front end."""

from dataclasses import dataclass, field
from typing import List, Optional

from config.settings import NAMCHAR_CONFIG, PIPELINE_CONFIG

ENGINES = ("logistic", "svm_rbf")
SCORINGS = ("census", "namchar")


class ConfigError(ValueError):
    """A command-line setting is out of range or missing."""


@dataclass
class RunConfig:
    """Everything a CLI command needs besides its positional arguments."""
    db_paths: List[str] = field(default_factory=list)
    db_format: Optional[str] = None
    encoding: Optional[str] = None
    model_path: Optional[str] = None
    namchar_model_path: Optional[str] = None
    k: int = PIPELINE_CONFIG["k"]
    tau: float = PIPELINE_CONFIG["tau"]
    seed: Optional[int] = None
    engine: str = NAMCHAR_CONFIG["engine"]
    scoring: str = PIPELINE_CONFIG["scoring"]
    strict: bool = True
    out_path: Optional[str] = None
    report_path: Optional[str] = None

    def validate(self, training: bool = False) -> "RunConfig":
        """Check the invariants; returns self so calls can be chained.

        Raises:
            ConfigError: If tau, k, engine or scoring are out of range, or a
                training command has no seed.
        """
        if not 0.0 <= self.tau <= 1.0:
            raise ConfigError(f"tau must lie in [0, 1], got {self.tau}")
        if self.k < 1:
            raise ConfigError(f"k must be at least 1, got {self.k}")
        if self.engine not in ENGINES:
            raise ConfigError(f"Unknown engine: {self.engine}. Available: {list(ENGINES)}")
        if self.scoring not in SCORINGS:
            raise ConfigError(f"Unknown scoring: {self.scoring}. Available: {list(SCORINGS)}")
        if training and self.seed is None:
            raise ConfigError("--seed is required for training commands")
        return self
