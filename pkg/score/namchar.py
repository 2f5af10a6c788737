"""NamChar: gender from the written form of a name, for names no dictionary knows."""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Sequence, Tuple, Union

import numpy as np

from config.settings import NAMCHAR_CONFIG
from corpus.entries import Gender, Source
from corpus.name_db import NameDb
from evalm.metrics import kappa, metrics
from namefeat.features import (
    FINAL_PREDICTORS, FULL_PREDICTORS, TABLE_PREDICTORS, extract, feature_matrix, summarize,
)
from nameproc.matching import first_match
from nameproc.normalize import normalize, normalize_token
from score.dictionary import UNSCORED, GenderScore, Provenance, dictionary_score
from stats.logistic import (
    LogisticModel, SingularMatrixError, classification_table, diagnostics, fit_logistic, variance_inflation,
)
from stats.sample import Sample
from stats.selection import SvmSpec, grid_search, make_grid
from stats.serialization import model_from_dict, model_to_dict
from stats.svm import SvmModel, fit_svm_rbf

logger = logging.getLogger(__name__)

SCHEMA = "namechar.namchar"
VERSION = 1
TRAINING_SOURCES = (Source.NAMDICT, Source.CUSTOM)


@dataclass
class NamCharModel:
    engine: str
    feature_names: Tuple[str, ...]
    model: Union[LogisticModel, SvmModel]
    metadata: Dict[str, Any] = field(default_factory=dict)

    def predict_proba(self, X: np.ndarray) -> np.ndarray:
        """Probability of female for each row."""
        return self.model.predict_proba(X)

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA,
            "version": VERSION,
            "kind": "namchar",
            "engine": self.engine,
            "feature_names": list(self.feature_names),
            "model": model_to_dict(self.model),
            "metadata": self.metadata,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "NamCharModel":
        if data.get("schema") != SCHEMA:
            raise ValueError(f"Not a NamChar model: schema {data.get('schema')!r}")
        if data.get("version", 0) > VERSION:
            raise ValueError(f"NamChar model version {data['version']} is newer than supported {VERSION}")
        return cls(
            engine=data["engine"],
            feature_names=tuple(data["feature_names"]),
            model=model_from_dict(data["model"]),
            metadata=dict(data.get("metadata", {})),
        )


def training_names(db: NameDb, sources: Sequence[Source] = TRAINING_SOURCES) -> Tuple[list, np.ndarray]:
    """One token per non-unisex record, label 1 for female.

    Compound keys lose their spaces so the whole written form is counted.
    """
    tokens, labels = [], []
    for key, entry in db.primary_entries(sources):
        gender = entry.category.binary_gender
        if gender is None:
            continue
        token = key.replace(" ", "")
        if not token:
            continue
        tokens.append(token)
        labels.append(1 if gender is Gender.FEMALE else 0)
    return tokens, np.array(labels, dtype=float)


def _subsample(tokens: list, y: np.ndarray, max_names: Optional[int], seed: int) -> Tuple[list, np.ndarray]:
    if not max_names or len(tokens) <= max_names:
        return tokens, y
    rng = np.random.default_rng(seed)
    rows = np.sort(rng.choice(len(tokens), size=max_names, replace=False))
    logger.info("Subsampled %d of %d training names (seed %d)", max_names, len(tokens), seed)
    return [tokens[i] for i in rows], y[rows]


def _fit_logistic(sample: Sample) -> Tuple[LogisticModel, Dict[str, Any]]:
    model = fit_logistic(sample)
    meta: Dict[str, Any] = {"converged": model.converged, "separated": model.separated}
    if model.converged and not model.separated:
        try:
            meta["diagnostics"] = diagnostics(model, sample).to_dict()
        except SingularMatrixError as e:
            logger.warning("No diagnostics: %s", e)
    meta["training_accuracy"] = float(np.mean(model.predict(sample.X) == sample.y))
    meta["classification"] = _classification(model, sample)
    return model, meta


def _classification(model: LogisticModel, sample: Sample) -> Dict[str, Any]:
    ct = classification_table(model, sample)
    return {**metrics(ct).to_dict(), "confusion": ct.to_dict(), "kappa": kappa(ct)}


def _predictor_fit(tokens: list, y: np.ndarray, names: Sequence[str]) -> Dict[str, Any]:
    X = feature_matrix(tokens, names)
    vif, capped = variance_inflation(X)
    out: Dict[str, Any] = {
        "predictors": list(names),
        "vif": dict(zip(names, vif)),
        "vif_capped": [name for name, c in zip(names, capped) if c],
    }
    try:
        _, meta = _fit_logistic(Sample(X, y, list(names)))
    except SingularMatrixError as e:
        logger.warning("Predictor set %s: %s", list(names), e)
        out["collinear"] = e.columns
        return out
    out.update(meta)
    return out


def _fit_svm(sample: Sample, seed: int, grid: Optional[Sequence[Tuple[float, float]]],
             folds: int, repeats: int) -> Tuple[SvmModel, Dict[str, Any]]:
    meta: Dict[str, Any] = {}
    if grid is None:
        grid = make_grid(NAMCHAR_CONFIG["gamma_grid"], NAMCHAR_CONFIG["cost_grid"])
    if len(grid) > 1:
        search = grid_search(SvmSpec(gamma=grid[0][0], cost=grid[0][1], seed=seed), sample, grid,
                             folds=folds, repeats=repeats, seed=seed)
        gamma, cost = search.gamma, search.cost
        meta["grid_search"] = search.to_dict()
    else:
        gamma, cost = grid[0]
    model = fit_svm_rbf(sample, gamma, cost, probability=True, seed=seed)
    meta.update({"gamma": gamma, "cost": cost, "support_vectors": len(model.support_indices)})
    return model, meta


def train_namchar(db: NameDb, engine: str = NAMCHAR_CONFIG["engine"], seed: int = 0,
                  grid: Optional[Sequence[Tuple[float, float]]] = None,
                  folds: int = NAMCHAR_CONFIG["folds"], repeats: int = NAMCHAR_CONFIG["repeats"],
                  max_names: Optional[int] = NAMCHAR_CONFIG["max_names"],
                  sources: Sequence[Source] = TRAINING_SOURCES) -> NamCharModel:
    """Fit the name-character classifier on the dictionary's gendered names.

    Unisex names are left out. The SVM engine picks (gamma, cost) by grid
    search unless ``grid`` holds a single point, and trains on at most
    ``max_names`` names drawn with ``seed``.

    Raises:
        ValueError: On an unknown engine or when both genders are not present
    """
    if engine not in ("logistic", "svm_rbf"):
        raise ValueError(f"Unknown engine: {engine}")

    tokens, y = training_names(db, sources)
    if len(set(y.tolist())) < 2:
        raise ValueError("NamChar training needs both male and female names")

    metadata: Dict[str, Any] = {
        "names": len(tokens),
        "female": int(y.sum()),
        "male": int(len(y) - y.sum()),
        "seed": seed,
    }
    if engine == "svm_rbf":
        tokens, y = _subsample(tokens, y, max_names, seed)
        metadata["trained_on"] = len(tokens)

    sample = Sample(feature_matrix(tokens, FINAL_PREDICTORS), y, list(FINAL_PREDICTORS))
    logger.info("Training NamChar (%s) on %d names", engine, len(sample))

    if engine == "logistic":
        model, extra = _fit_logistic(sample)
    else:
        model, extra = _fit_svm(sample, seed, grid, folds, repeats)
    metadata.update(extra)

    return NamCharModel(engine=engine, feature_names=FINAL_PREDICTORS, model=model, metadata=metadata)


def namchar_predict(m: NamCharModel, token: str) -> Tuple[Gender, float]:
    """Label and female probability for a single name token.

    Raises:
        ValueError: If the token holds no letters after normalization
    """
    cleaned = normalize_token(token).replace(" ", "")
    if not cleaned:
        raise ValueError(f"No letters left in {token!r} after normalization")
    row = np.array([extract(cleaned).as_vector(m.feature_names)])
    p_female = float(m.predict_proba(row)[0])
    label = Gender.FEMALE if p_female >= 0.5 else Gender.MALE
    return label, p_female


def namchar_score(db: NameDb, m: Optional[NamCharModel], raw_name: str) -> GenderScore:
    """Dictionary score of the first known token, else NamChar on the first token."""
    name = normalize(raw_name)
    match = first_match(db, name)
    if match is not None:
        return dictionary_score(match.records, match.is_first_token, match.token)
    if not name.tokens or m is None:
        return UNSCORED
    _, p_female = namchar_predict(m, name.first_token)
    value = min(max(1.0 - 2.0 * p_female, -1.0), 1.0)
    return GenderScore(value, Provenance.NAMCHAR, name.first_token)


PREDICTOR_SETS = {"full": FULL_PREDICTORS, "table": TABLE_PREDICTORS, "final": FINAL_PREDICTORS}


def inspect_namchar(db: NameDb, sources: Sequence[Source] = TRAINING_SOURCES) -> Dict[str, Any]:
    """Variable summary and one logistic fit per predictor set over the gendered names.

    Each fit reports VIFs, and unless its design is singular, the diagnostics
    and the observed vs. predicted classification on the training names.

    Raises:
        ValueError: When both genders are not present
    """
    tokens, y = training_names(db, sources)
    if len(set(y.tolist())) < 2:
        raise ValueError("NamChar inspection needs both male and female names")
    logger.info("Inspecting name characteristics of %d names", len(tokens))
    return {
        "names": len(tokens),
        "female": int(y.sum()),
        "male": int(len(y) - y.sum()),
        "variables": summarize(tokens, FULL_PREDICTORS),
        "fits": {label: _predictor_fit(tokens, y, names) for label, names in PREDICTOR_SETS.items()},
    }
