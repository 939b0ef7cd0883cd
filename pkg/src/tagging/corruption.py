"""
Controlled PoS-tag corruption to a target tagging accuracy

The per-tag error rates of an ErrorModel are rescaled by a weight
gamma = E_A / E so that the expected number of errors reaches
E_A = round((1 - A) * N). Tags whose scaled errors exceed their count are
capped and gamma is recomputed over the remaining tags until no tag
overflows. When E_A <= E only the tagger's real error positions can be
corrupted; when E_A > E all of them are corrupted and the surplus is spread
over correctly tagged tokens.
"""

import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, FrozenSet, NamedTuple, Optional

import numpy as np
from tenacity import RetryError, Retrying, before_sleep_log, retry_if_exception_type, stop_after_attempt

from ..errors import AlignmentError, DataError, NoErrorEvidenceError, ToleranceError
from ..treebank import Treebank
from .error_model import ErrorModel

logger = logging.getLogger(__name__)

DEFAULT_TOLERANCE = 0.05
DEFAULT_MAX_ATTEMPTS = 20
DEFAULT_GRID = (0.75, 0.80, 0.85, 0.90, 0.95, 0.975, 1.0)

# slack for float comparisons of expected counts
_EPS = 1e-9


class PlanMode(str, Enum):
    SHRINK = "shrink"
    GROW = "grow"


@dataclass(frozen=True)
class CorruptionPlan:
    """
    Per-tag corruption probabilities for one target accuracy

    error_probability is the overall rate gamma*E_t/C_t (after capping) used
    on splits without recorded real errors. real_error_probability and
    extra_probability apply on the calibration split to real-error tokens
    and to correctly tagged tokens respectively.
    """

    target_accuracy: float
    target_errors: int
    gamma: float
    mode: PlanMode
    capped_tags: FrozenSet[str] = field(default_factory=frozenset)
    error_probability: Dict[str, float] = field(default_factory=dict)
    real_error_probability: Dict[str, float] = field(default_factory=dict)
    extra_probability: Dict[str, float] = field(default_factory=dict)
    expected_errors: Dict[str, float] = field(default_factory=dict)

    @property
    def expected_total(self) -> float:
        return sum(self.expected_errors.values())

    def to_dict(self) -> dict:
        return {
            "target_accuracy": self.target_accuracy,
            "target_errors": self.target_errors,
            "gamma": self.gamma,
            "mode": self.mode.value,
            "capped_tags": sorted(self.capped_tags),
            "error_probability": dict(sorted(self.error_probability.items())),
            "real_error_probability": dict(sorted(self.real_error_probability.items())),
            "extra_probability": dict(sorted(self.extra_probability.items())),
        }


def target_error_count(accuracy: float, n_tokens: int) -> int:
    """E_A, rounded half up"""
    return int(math.floor((1.0 - accuracy) * n_tokens + 0.5 + _EPS))


def build_plan(model: ErrorModel, accuracy: float) -> CorruptionPlan:
    """
    Derive per-tag corruption probabilities for a target accuracy

    Args:
        model: Error model fitted on the calibration split
        accuracy: Target tagging accuracy A in [0, 1]

    Returns:
        CorruptionPlan whose expected error count is E_A

    Raises:
        DataError: A outside [0, 1]
        NoErrorEvidenceError: The model's confusions cannot supply E_A errors
    """
    if not 0.0 <= accuracy <= 1.0:
        raise DataError(f"target accuracy must be in [0, 1], got {accuracy}")
    n, e = model.total_tokens, model.total_errors
    target = target_error_count(accuracy, n)
    if target > n:
        raise DataError(f"target error count {target} exceeds token count {n}")

    if target == 0:
        zeros = {t: 0.0 for t in model.tags}
        return CorruptionPlan(
            target_accuracy=accuracy, target_errors=0, gamma=0.0, mode=PlanMode.SHRINK,
            error_probability=zeros, real_error_probability=dict(zeros),
            extra_probability=dict(zeros), expected_errors=dict(zeros)
        )
    if e == 0:
        raise NoErrorEvidenceError("no error evidence: the model holds no tagging errors")

    evidence = [t for t in model.tags if model.errors[t] > 0]
    capped = set()
    gamma = target / e
    # gamma only grows when a tag is capped, so every overflowing tag stays capped
    for _ in range(len(evidence) + 1):
        overflowing = [
            t for t in evidence
            if t not in capped and gamma * model.errors[t] > model.counts[t] + _EPS
        ]
        if not overflowing:
            break
        capped.update(overflowing)
        remaining_errors = e - sum(model.errors[t] for t in capped)
        remaining_target = target - sum(model.counts[t] for t in capped)
        if remaining_errors == 0:
            if remaining_target > 0:
                raise NoErrorEvidenceError(
                    f"no error evidence: tags with observed errors cover at most "
                    f"{target - remaining_target} errors, {target} requested"
                )
            break
        gamma = remaining_target / remaining_errors
        logger.debug(f"Capped {sorted(overflowing)}; gamma recomputed to {gamma:.4f}")

    mode = PlanMode.GROW if target > e else PlanMode.SHRINK
    error_probability, real_p, extra_p, expected = {}, {}, {}, {}
    for tag in model.tags:
        count, errors = model.counts[tag], model.errors[tag]
        tag_target = float(count) if tag in capped else gamma * errors
        expected[tag] = tag_target
        error_probability[tag] = min(1.0, tag_target / count) if count else 0.0
        if mode == PlanMode.SHRINK:
            real_p[tag] = min(1.0, tag_target / errors) if errors else 0.0
            extra_p[tag] = 0.0
        else:
            real_p[tag] = 1.0 if errors else 0.0
            correct = count - errors
            extra_p[tag] = min(1.0, max(0.0, (tag_target - errors) / correct)) if correct else 0.0

    plan = CorruptionPlan(
        target_accuracy=accuracy, target_errors=target, gamma=gamma, mode=mode,
        capped_tags=frozenset(capped), error_probability=error_probability,
        real_error_probability=real_p, extra_probability=extra_p, expected_errors=expected
    )
    logger.info(
        f"Plan for A={accuracy}: E_A={target}, E={e}, gamma={gamma:.4f}, mode={mode.value}, "
        f"capped={sorted(capped)}"
    )
    return plan


# ==========================================
# SAMPLING
# ==========================================

class CorruptionResult(NamedTuple):
    treebank: Treebank
    achieved_accuracy: float
    corrupted_tokens: int
    target_errors: int
    attempts: int
    seed: int


class _ToleranceMiss(Exception):
    pass


def tagging_accuracy(gold: Treebank, other: Treebank) -> float:
    """
    Share of syntactic words whose UPOS matches

    Args:
        gold: Reference treebank
        other: Treebank aligned with gold

    Returns:
        Accuracy in [0, 1] (1.0 for empty treebanks)
    """
    if len(gold) != len(other):
        raise AlignmentError(f"{len(other)} sentences vs {len(gold)} gold sentences")
    total = correct = 0
    for s, (g, o) in enumerate(zip(gold, other)):
        if len(g) != len(o):
            raise AlignmentError(f"sentence {s}: {len(o)} tokens vs {len(g)} gold tokens")
        total += len(g)
        correct += sum(1 for a, b in zip(g.tags, o.tags) if a == b)
    return correct / total if total else 1.0


class TagCorrupter:
    """Applies a CorruptionPlan to a treebank with seeded, retried sampling"""

    def __init__(
        self,
        model: ErrorModel,
        tolerance: float = DEFAULT_TOLERANCE,
        max_attempts: int = DEFAULT_MAX_ATTEMPTS
    ):
        """
        Args:
            model: Error model (confusions and real-error positions)
            tolerance: Accepted relative deviation from E_A
            max_attempts: Reseeded sampling attempts before giving up
        """
        self.model = model
        self.tolerance = tolerance
        self.max_attempts = max_attempts
        self.logger = logging.getLogger(self.__class__.__name__)

    def _token_probabilities(self, tb: Treebank, plan: CorruptionPlan, calibration: bool) -> np.ndarray:
        gold_tags = [tag for sentence in tb for tag in sentence.tags]
        probabilities = np.zeros(len(gold_tags))
        if calibration:
            for s, i in self.model.real_error_positions:
                if s >= len(tb) or i > len(tb[s]):
                    raise AlignmentError(f"real-error position ({s}, {i}) is outside {tb.name}")
        flat = 0
        for s, sentence in enumerate(tb):
            for token in sentence.tokens:
                tag = token.upos
                if self.model.errors.get(tag, 0) > 0:
                    if not calibration:
                        probabilities[flat] = plan.error_probability.get(tag, 0.0)
                    elif (s, token.index) in self.model.real_error_positions:
                        probabilities[flat] = plan.real_error_probability.get(tag, 0.0)
                    else:
                        probabilities[flat] = plan.extra_probability.get(tag, 0.0)
                flat += 1
        return probabilities

    def _sample(self, tb: Treebank, gold_tags: np.ndarray, probabilities: np.ndarray, seed: int, attempt: int):
        rng = np.random.default_rng([seed, attempt])
        flips = rng.random(len(gold_tags)) < probabilities
        new_tags = gold_tags.copy()
        for tag in sorted(set(gold_tags[flips])):
            positions = np.flatnonzero(flips & (gold_tags == tag))
            distribution = self.model.error_distribution(tag)
            options = list(distribution)
            new_tags[positions] = rng.choice(options, size=len(positions), p=list(distribution.values()))

        tags, flat = [], 0
        for sentence in tb:
            tags.append([str(t) for t in new_tags[flat:flat + len(sentence)]])
            flat += len(sentence)
        return tb.with_tags(tags), int(flips.sum())

    def corrupt(self, tb: Treebank, plan: CorruptionPlan, seed: int = 0, calibration: bool = True) -> CorruptionResult:
        """
        Corrupt UPOS tags following a plan

        Args:
            tb: Gold-tagged treebank
            plan: Plan from build_plan on this corrupter's model
            seed: Base seed; attempt k samples from SeedSequence([seed, k])
            calibration: tb is the split the model was fitted on (use its
                real-error positions); False applies the overall per-tag rate

        Returns:
            CorruptionResult

        Raises:
            ToleranceError: No attempt landed within tolerance of E_A
        """
        n_tokens = tb.n_tokens
        target = plan.target_errors if calibration else target_error_count(plan.target_accuracy, n_tokens)
        if target == 0:
            return CorruptionResult(tb, 1.0, 0, 0, 1, seed)

        gold_tags = np.array([tag for sentence in tb for tag in sentence.tags], dtype=object)
        probabilities = self._token_probabilities(tb, plan, calibration)
        slack = self.tolerance * target
        best: Dict[str, Optional[CorruptionResult]] = {"result": None}

        def accuracy_of(corrupted: int) -> float:
            return 1.0 - corrupted / n_tokens

        try:
            for attempt in Retrying(
                stop=stop_after_attempt(self.max_attempts),
                retry=retry_if_exception_type(_ToleranceMiss),
                before_sleep=before_sleep_log(self.logger, logging.DEBUG),
            ):
                with attempt:
                    number = attempt.retry_state.attempt_number
                    corrupted_tb, corrupted = self._sample(tb, gold_tags, probabilities, seed, number - 1)
                    result = CorruptionResult(corrupted_tb, accuracy_of(corrupted), corrupted, target, number, seed)
                    previous = best["result"]
                    if previous is None or abs(corrupted - target) < abs(previous.corrupted_tokens - target):
                        best["result"] = result
                    if abs(corrupted - target) > slack + _EPS:
                        raise _ToleranceMiss()
        except RetryError:
            best_accuracy = best["result"].achieved_accuracy if best["result"] else 1.0
            raise ToleranceError(plan.target_accuracy, best_accuracy, self.max_attempts) from None

        self.logger.info(
            f"Corrupted {tb.name} to accuracy {result.achieved_accuracy:.4f} "
            f"(target {plan.target_accuracy}, {corrupted}/{target} errors, attempt {result.attempts})"
        )
        return result


def corrupt(
    tb: Treebank,
    model: ErrorModel,
    plan: CorruptionPlan,
    seed: int = 0,
    calibration: bool = True,
    tolerance: float = DEFAULT_TOLERANCE,
    max_attempts: int = DEFAULT_MAX_ATTEMPTS
) -> CorruptionResult:
    """Functional wrapper around TagCorrupter.corrupt"""
    return TagCorrupter(model, tolerance=tolerance, max_attempts=max_attempts).corrupt(
        tb, plan, seed=seed, calibration=calibration
    )


def expected_error_counts(model: ErrorModel, plan: CorruptionPlan) -> Dict[str, float]:
    """
    Expected corrupted tokens per tag on the calibration split

    Sums probability x eligible tokens, real errors and correct tokens apart.
    """
    expected = {}
    for tag in model.tags:
        errors = model.errors[tag]
        correct = model.counts[tag] - errors
        expected[tag] = (
            plan.real_error_probability.get(tag, 0.0) * errors
            + plan.extra_probability.get(tag, 0.0) * correct
        )
    return expected
