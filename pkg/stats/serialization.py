"""Versioned JSON form of the fitted models.

    {"schema": "namechar.model", "version": 1, "kind": "logistic" | "svm_rbf",
     "feature_names": [...], ...kind-specific fields}

Feature ordering is part of the contract: rows passed to a loaded model must
follow ``feature_names``.
"""

from typing import Union

import numpy as np

from stats.logistic import LogisticModel
from stats.svm import SvmModel

SCHEMA = "namechar.model"
VERSION = 1


def model_to_dict(model: Union[LogisticModel, SvmModel]) -> dict:
    header = {"schema": SCHEMA, "version": VERSION, "feature_names": list(model.feature_names)}
    if isinstance(model, LogisticModel):
        return {
            **header,
            "kind": "logistic",
            "beta": model.beta.tolist(),
            "converged": model.converged,
            "n_iter": model.n_iter,
            "log_likelihood": model.log_likelihood,
            "separated": model.separated,
        }
    if isinstance(model, SvmModel):
        return {
            **header,
            "kind": "svm_rbf",
            "support_vectors": model.support_vectors.tolist(),
            "dual_coef": model.dual_coef.tolist(),
            "bias": model.bias,
            "gamma": model.gamma,
            "cost": model.cost,
            "platt": None if model.platt_a is None else {"A": model.platt_a, "B": model.platt_b},
            "n_iter": model.n_iter,
            "kkt_gap": model.kkt_gap,
        }
    raise TypeError(f"Cannot serialize {type(model).__name__}")


def model_from_dict(data: dict) -> Union[LogisticModel, SvmModel]:
    """Rebuild a model written by ``model_to_dict``.

    Raises:
        ValueError: On a foreign schema, a newer version or an unknown kind
    """
    if data.get("schema") != SCHEMA:
        raise ValueError(f"Not a model file: schema {data.get('schema')!r}")
    if data.get("version", 0) > VERSION:
        raise ValueError(f"Model version {data['version']} is newer than supported {VERSION}")

    kind = data.get("kind")
    names = list(data["feature_names"])
    if kind == "logistic":
        return LogisticModel(
            beta=np.asarray(data["beta"], dtype=float),
            converged=bool(data["converged"]),
            n_iter=int(data["n_iter"]),
            feature_names=names,
            log_likelihood=float(data["log_likelihood"]),
            separated=bool(data.get("separated", False)),
        )
    if kind == "svm_rbf":
        platt = data.get("platt") or {}
        vectors = np.asarray(data["support_vectors"], dtype=float).reshape(-1, len(names))
        return SvmModel(
            support_vectors=vectors,
            dual_coef=np.asarray(data["dual_coef"], dtype=float),
            bias=float(data["bias"]),
            gamma=float(data["gamma"]),
            cost=float(data["cost"]),
            platt_a=platt.get("A"),
            platt_b=platt.get("B"),
            feature_names=names,
            n_iter=int(data.get("n_iter", 0)),
            kkt_gap=float(data.get("kkt_gap", 0.0)),
        )
    raise ValueError(f"Unknown model kind: {kind!r}")
