"""ROUGE-L: F-measure over the longest common subsequence.

Multi-reference scoring evaluates the candidate against each reference
independently and keeps the best-F reference.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..tokenizer import TokenStream


@dataclass(frozen=True)
class RougeConfig:
    beta: float = 1.0  # balance between recall and precision
    # "best": keep the single maximum-F reference.
    # "union_max": max precision and max recall over references, taken
    # separately before the F-measure; with beta = 1.2 this reproduces the
    # widely used captioning-toolkit aggregation.
    aggregate: str = "best"

    def __post_init__(self) -> None:
        if self.beta <= 0:
            raise ValueError("beta must be positive")
        if self.aggregate not in ("best", "union_max"):
            raise ValueError("aggregate must be 'best' or 'union_max'")


@dataclass(frozen=True)
class RougeScore:
    recall: float
    precision: float
    f_score: float
    lcs_length: int
    matched_reference_index: int
    empty_inputs: bool = False


def lcs_length(a: Sequence[str], b: Sequence[str]) -> int:
    """Bottom-up LCS table, two-row rolling storage."""
    if not a or not b:
        return 0
    prev = [0] * (len(b) + 1)
    for i in range(1, len(a) + 1):
        cur = [0] * (len(b) + 1)
        ai = a[i - 1]
        for j in range(1, len(b) + 1):
            if ai == b[j - 1]:
                cur[j] = prev[j - 1] + 1
            else:
                cur[j] = cur[j - 1] if cur[j - 1] >= prev[j] else prev[j]
        prev = cur
    return prev[len(b)]


def _f_measure(recall: float, precision: float, beta: float) -> float:
    denom = recall + beta * beta * precision
    if denom == 0:
        return 0.0
    return (1 + beta * beta) * recall * precision / denom


def rouge_l(candidate: TokenStream, references: list[TokenStream], config: RougeConfig = RougeConfig()) -> RougeScore:
    """Multi-reference LCS F-measure (best single reference by default)."""
    if not references:
        raise ValueError("ROUGE-L requires at least one reference")
    cand = candidate.surfaces
    scores: list[RougeScore] = []
    for index, reference in enumerate(references):
        ref = reference.surfaces
        if not cand and not ref:
            scores.append(RougeScore(0.0, 0.0, 0.0, 0, index, empty_inputs=True))
            continue
        lcs = lcs_length(ref, cand)
        recall = lcs / len(ref) if ref else 0.0
        precision = lcs / len(cand) if cand else 0.0
        scores.append(RougeScore(recall, precision, _f_measure(recall, precision, config.beta), lcs, index))
    if config.aggregate == "union_max":
        best_r = max(scores, key=lambda s: s.recall)
        best_p = max(scores, key=lambda s: s.precision)
        f = _f_measure(best_r.recall, best_p.precision, config.beta)
        return RougeScore(
            best_r.recall,
            best_p.precision,
            f,
            best_r.lcs_length,
            best_r.matched_reference_index,
            empty_inputs=all(s.empty_inputs for s in scores),
        )
    return max(scores, key=lambda s: s.f_score)
