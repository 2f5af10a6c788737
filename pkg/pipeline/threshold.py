"""Two-step Threshold Classifier.

Step 1 labels a user straight from the name when |gender score| > tau.
Step 2 hands everyone else to an RBF-SVM over term frequencies, profile
statistics and the gender score.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from config.settings import PIPELINE_CONFIG
from corpus.entries import Gender
from corpus.name_db import NameDb
from evalm.report import report
from pipeline.terms import TERM_KINDS, TermCounts, TermKind, TermList, select_top_terms, user_terms
from pipeline.users import PROFILE_FEATURES, UserRecord, profile_stats
from score.dictionary import GenderScore, gender_score
from score.namchar import NamCharModel, namchar_score
from stats.sample import Sample
from stats.selection import SvmSpec, cross_validate, grid_search, make_grid
from stats.serialization import model_from_dict, model_to_dict
from stats.svm import SvmModel, fit_svm_rbf

logger = logging.getLogger(__name__)

SCHEMA = "namechar.pipeline"
VERSION = 1
SCORINGS = ("census", "namchar")


class FeatureVector(NamedTuple):
    """Term frequencies (kind order, male terms then female terms), profile block, gender score."""
    terms: Tuple[float, ...]
    profile: Tuple[float, ...]
    gender_score: float

    def as_array(self) -> np.ndarray:
        return np.array(self.terms + self.profile + (self.gender_score,), dtype=float)


class Classification(NamedTuple):
    label: Gender
    stage: int
    score: GenderScore


@dataclass
class PipelineModel:
    term_lists: Dict[TermKind, TermList]
    svm: Optional[SvmModel]
    tau: float
    k: int
    scoring: str
    feature_min: List[float] = field(default_factory=list)
    feature_max: List[float] = field(default_factory=list)
    metadata: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if not 0.0 <= self.tau <= 1.0:
            raise ValueError(f"tau must lie in [0, 1], got {self.tau}")
        if self.k < 1:
            raise ValueError(f"k must be at least 1, got {self.k}")
        if self.scoring not in SCORINGS:
            raise ValueError(f"Unknown scoring: {self.scoring}")

    def feature_names(self) -> List[str]:
        names = []
        for kind in TERM_KINDS:
            terms = self.term_lists[kind]
            names += [f"{kind.value}:male:{t}" for t in terms.male_terms]
            names += [f"{kind.value}:female:{t}" for t in terms.female_terms]
        return names + list(PROFILE_FEATURES) + ["gender_score"]

    def scale(self, X: np.ndarray) -> np.ndarray:
        low = np.asarray(self.feature_min)
        span = np.asarray(self.feature_max) - low
        safe = np.where(span > 0, span, 1.0)
        return np.where(span > 0, (X - low) / safe, 0.0)

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA,
            "version": VERSION,
            "kind": "threshold_classifier",
            "tau": self.tau,
            "k": self.k,
            "scoring": self.scoring,
            "term_lists": [self.term_lists[kind].to_dict() for kind in TERM_KINDS],
            "feature_min": self.feature_min,
            "feature_max": self.feature_max,
            "svm": model_to_dict(self.svm),
            "metadata": self.metadata,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "PipelineModel":
        if data.get("schema") != SCHEMA:
            raise ValueError(f"Not a pipeline model: schema {data.get('schema')!r}")
        if data.get("version", 0) > VERSION:
            raise ValueError(f"Pipeline model version {data['version']} is newer than supported {VERSION}")
        lists = [TermList.from_dict(d) for d in data["term_lists"]]
        return cls(
            term_lists={t.kind: t for t in lists},
            svm=model_from_dict(data["svm"]),
            tau=float(data["tau"]),
            k=int(data["k"]),
            scoring=data["scoring"],
            feature_min=list(data["feature_min"]),
            feature_max=list(data["feature_max"]),
            metadata=dict(data.get("metadata", {})),
        )


def user_score(u: UserRecord, scoring: str, db: NameDb, namchar: Optional[NamCharModel]) -> GenderScore:
    """Plain dictionary score on the raw name, or the NamChar score on the cleaned name.

    Raises:
        ValueError: If scoring is 'namchar' and no NamChar model is given
    """
    if scoring == "namchar":
        if namchar is None:
            raise ValueError("scoring='namchar' needs a NamChar model")
        return namchar_score(db, namchar, u.name)
    return gender_score(db, u.name, preprocess=False)


def _term_frequencies(counts: TermCounts, term_lists: Dict[TermKind, TermList]) -> Tuple[float, ...]:
    values: List[float] = []
    for kind in TERM_KINDS:
        counter = counts[kind]
        total = sum(counter.values())
        for term in term_lists[kind].terms:
            values.append(counter[term] / total if total else 0.0)
    return tuple(values)


def _features(u: UserRecord, counts: TermCounts, term_lists: Dict[TermKind, TermList],
              score: GenderScore) -> FeatureVector:
    return FeatureVector(_term_frequencies(counts, term_lists), tuple(profile_stats(u)), score.value)


def user_features(u: UserRecord, model: PipelineModel, db: NameDb,
                  namchar: Optional[NamCharModel] = None) -> FeatureVector:
    """s(u) = uses of the term by u / all terms of that kind used by u, per listed term."""
    score = user_score(u, model.scoring, db, namchar)
    return _features(u, user_terms(u.tweets), model.term_lists, score)


def _stage_one(score: GenderScore, tau: float) -> Optional[Gender]:
    if abs(score.value) > tau:
        return Gender.MALE if score.value > 0 else Gender.FEMALE
    return None


def classify(model: PipelineModel, u: UserRecord, db: NameDb,
             namchar: Optional[NamCharModel] = None) -> Classification:
    if model.svm is None:
        raise ValueError("Pipeline model has no trained step-2 SVM")
    score = user_score(u, model.scoring, db, namchar)
    label = _stage_one(score, model.tau)
    if label is not None:
        return Classification(label, 1, score)
    vector = _features(u, user_terms(u.tweets), model.term_lists, score).as_array()
    predicted = int(model.svm.predict(model.scale(vector.reshape(1, -1)))[0])
    return Classification(Gender.FEMALE if predicted == 1 else Gender.MALE, 2, score)


def _term_list(corpus, kind: TermKind, k: int) -> TermList:
    try:
        return select_top_terms(corpus, kind, k)
    except ValueError:
        logger.warning("No %s terms in the training users; the list stays empty", kind.value)
        return TermList(kind, (), (), short=True)


def _labeled(users: Sequence[UserRecord]) -> List[UserRecord]:
    labeled = [u for u in users if u.gender is not None]
    genders = {u.gender for u in labeled}
    if genders != {Gender.MALE, Gender.FEMALE}:
        raise ValueError("Training needs labeled users of both genders")
    return labeled


def split_halves(n: int, seed: int) -> Tuple[np.ndarray, np.ndarray]:
    """Seeded random split of row indices into a search half and a held-out half."""
    order = np.random.default_rng(seed).permutation(n)
    return np.sort(order[: n // 2]), np.sort(order[n // 2:])


def train(users: Sequence[UserRecord], db: NameDb, namchar: Optional[NamCharModel] = None,
          k: int = PIPELINE_CONFIG["k"], tau: float = PIPELINE_CONFIG["tau"],
          scoring: str = PIPELINE_CONFIG["scoring"], seed: int = 0,
          grid: Optional[Sequence[Tuple[float, float]]] = None,
          folds: int = PIPELINE_CONFIG["folds"], repeats: int = PIPELINE_CONFIG["repeats"]) -> PipelineModel:
    """Build term lists, pick SVM parameters on a seeded half, fit on all users.

    Only labeled users are used. Term lists come from these users alone. The
    user ids of both halves are kept in the metadata so the held-out half can
    be evaluated later with ``evaluate_holdout``.

    Raises:
        ValueError: If fewer than two genders are labeled, or scoring is
            'namchar' without a NamChar model
    """
    if scoring == "namchar" and namchar is None:
        raise ValueError("scoring='namchar' needs a NamChar model")
    labeled = _labeled(users)
    counts = [user_terms(u.tweets) for u in labeled]
    corpus = [(u.gender, c) for u, c in zip(labeled, counts)]
    term_lists = {kind: _term_list(corpus, kind, k) for kind in TERM_KINDS}

    X = np.array([
        _features(u, c, term_lists, user_score(u, scoring, db, namchar)).as_array()
        for u, c in zip(labeled, counts)
    ])
    y = np.array([1.0 if u.gender is Gender.FEMALE else 0.0 for u in labeled])
    feature_min = X.min(axis=0).tolist()
    feature_max = X.max(axis=0).tolist()

    model = PipelineModel(term_lists=term_lists, svm=None, tau=tau, k=k, scoring=scoring,
                          feature_min=feature_min, feature_max=feature_max)
    sample = Sample(model.scale(X), y, model.feature_names())
    search_half, held_out = split_halves(len(sample), seed)

    if grid is None:
        grid = make_grid(PIPELINE_CONFIG["gamma_grid"], PIPELINE_CONFIG["cost_grid"])
    metadata: Dict[str, Any] = {
        "users": len(labeled),
        "seed": seed,
        "short_term_lists": [kind.value for kind in TERM_KINDS if term_lists[kind].short],
        "search_users": [labeled[i].user_id for i in search_half],
        "holdout_users": [labeled[i].user_id for i in held_out],
    }
    if len(grid) > 1:
        gamma, cost, search = _search(sample.subset(search_half), grid, folds, repeats, seed)
        metadata["grid_search"] = search
    else:
        gamma, cost = grid[0]

    model.svm = fit_svm_rbf(sample, gamma, cost, probability=False, seed=seed)
    metadata.update({"gamma": gamma, "cost": cost})
    model.metadata = metadata
    logger.info("Trained threshold classifier on %d users (gamma=%g, cost=%g)", len(labeled), gamma, cost)
    return model


def _usable_folds(sample: Sample, folds: int) -> int:
    smallest_class = int(min(sample.y.sum(), len(sample) - sample.y.sum()))
    return min(folds, smallest_class)


def _search(part: Sample, grid: Sequence[Tuple[float, float]], folds: int, repeats: int,
            seed: int) -> Tuple[float, float, Optional[dict]]:
    folds = _usable_folds(part, folds)
    if folds < 2:
        logger.warning("Search half too small for cross-validation; using the first grid point")
        return grid[0][0], grid[0][1], None
    search = grid_search(SvmSpec(gamma=grid[0][0], cost=grid[0][1], seed=seed), part, grid,
                         folds=folds, repeats=repeats, seed=seed)
    return search.gamma, search.cost, search.to_dict()


def evaluate(model: PipelineModel, users: Sequence[UserRecord], db: NameDb,
             namchar: Optional[NamCharModel] = None) -> Dict[str, Any]:
    """Classify the labeled users and report per-stage and overall metrics.

    AUC is computed on the gender score (higher = more male).
    """
    labeled = [u for u in users if u.gender is not None]
    results = [classify(model, u, db, namchar) for u in labeled]
    out = report(
        truth=[u.gender for u in labeled],
        pred=[r.label for r in results],
        stages=[r.stage for r in results],
        scores=[r.score.value for r in results],
    )
    logger.info("Evaluated %d users: %d in step 1", len(labeled), sum(1 for r in results if r.stage == 1))
    return out


def evaluate_holdout(model: PipelineModel, users: Sequence[UserRecord], db: NameDb,
                     namchar: Optional[NamCharModel] = None, folds: int = PIPELINE_CONFIG["eval_folds"],
                     repeats: int = PIPELINE_CONFIG["eval_repeats"]) -> Dict[str, Any]:
    """Evaluate both steps separately on the half that parameter search never saw.

    Step 1 is scored directly: the threshold decides, no SVM is involved.
    Step 2 is scored by repeated stratified cross-validation of an SVM with
    the model's gamma and cost over the held-out users that reach step 2.

    Raises:
        ValueError: If the model records no held-out half or none of its
            users are in ``users``
    """
    if model.svm is None:
        raise ValueError("Pipeline model has no trained step-2 SVM")
    holdout_ids = set(model.metadata.get("holdout_users", ()))
    if not holdout_ids:
        raise ValueError("Pipeline model records no held-out users; retrain it")
    held_out = [u for u in users if u.user_id in holdout_ids and u.gender is not None]
    if not held_out:
        raise ValueError("None of the held-out users are in the corpus")

    scores = [user_score(u, model.scoring, db, namchar) for u in held_out]
    first = [(u, s, _stage_one(s, model.tau)) for u, s in zip(held_out, scores)]
    step1 = [(u, s, label) for u, s, label in first if label is not None]
    step2 = [(u, s) for u, s, label in first if label is None]

    out: Dict[str, Any] = {"n": len(held_out), "stage1": None, "stage2": None}
    if step1:
        stage1 = report(truth=[u.gender for u, _, _ in step1], pred=[label for _, _, label in step1],
                        stages=[1] * len(step1), scores=[s.value for _, s, _ in step1])
        out["stage1"] = {"n": stage1["n"], **stage1["stage1"], "auc": stage1["auc"]}

    stage2: Dict[str, Any] = {"n": len(step2), "gamma": model.svm.gamma, "cost": model.svm.cost, "cv": None}
    if step2:
        X = np.array([_features(u, user_terms(u.tweets), model.term_lists, s).as_array() for u, s in step2])
        y = np.array([1.0 if u.gender is Gender.FEMALE else 0.0 for u, _ in step2])
        sample = Sample(model.scale(X), y, model.feature_names())
        usable = _usable_folds(sample, folds)
        if usable >= 2:
            spec = SvmSpec(gamma=model.svm.gamma, cost=model.svm.cost, seed=model.metadata.get("seed", 0))
            stage2["cv"] = cross_validate(spec, sample, folds=usable, repeats=repeats,
                                          seed=model.metadata.get("seed", 0)).to_dict()
        else:
            logger.warning("Too few step-2 users of one gender for cross-validation")
    out["stage2"] = stage2

    logger.info("Held-out evaluation: %d users, %d in step 1, %d in step 2", len(held_out), len(step1), len(step2))
    return out
