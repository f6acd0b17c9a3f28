"""Sentence-level BLEU with clipped n-gram precision and brevity penalty.

Scores one candidate against all of its references jointly: each candidate
n-gram is credited at most the maximum number of times it occurs in any
single reference. Zero precisions are floored at a tiny epsilon instead of
being smoothed, which keeps the cumulative scores strictly positive while
still rounding to 0.0000/0.0001 at display precision when higher orders
have no overlap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ..tokenizer import TokenStream, ngrams


@dataclass(frozen=True)
class BleuConfig:
    max_order: int = 4
    weights: tuple[float, ...] | None = None  # defaults to uniform 1/max_order
    precision_floor: float = 1e-16

    def __post_init__(self) -> None:
        if self.max_order < 1:
            raise ValueError("max_order must be >= 1")
        if self.precision_floor <= 0:
            raise ValueError("precision_floor must be positive")
        if self.weights is not None:
            if len(self.weights) != self.max_order:
                raise ValueError("weights must have one entry per order")
            if any(w <= 0 for w in self.weights):
                raise ValueError("weights must all be positive")
            if abs(sum(self.weights) - 1.0) > 1e-9:
                raise ValueError("weights must sum to 1")

    def order_weights(self) -> tuple[float, ...]:
        if self.weights is not None:
            return self.weights
        return tuple(1.0 / self.max_order for _ in range(self.max_order))


@dataclass(frozen=True)
class BleuScore:
    precisions: tuple[float, ...]
    brevity_penalty: float
    candidate_length: int
    reference_length: int
    cumulative: tuple[float, ...]  # cumulative[k-1] = score over orders 1..k
    empty_candidate: bool = False

    @property
    def value(self) -> float:
        return self.cumulative[-1]

    def score_at(self, k: int) -> float:
        return self.cumulative[k - 1]


def _effective_reference_length(candidate_len: int, reference_lengths: list[int]) -> int:
    # closest reference length; ties broken toward the shorter reference
    return min(reference_lengths, key=lambda r: (abs(r - candidate_len), r))


def bleu(candidate: TokenStream, references: list[TokenStream], config: BleuConfig = BleuConfig()) -> BleuScore:
    """Clipped-precision BLEU of one candidate against its reference set."""
    if not references:
        raise ValueError("BLEU requires at least one reference")
    n_max = config.max_order
    eps = config.precision_floor
    c = len(candidate)
    r = _effective_reference_length(c, [len(ref) for ref in references])

    if c == 0:
        # brevity penalty is undefined at length zero; report the floored
        # minimum for every cumulative order and flag the degenerate input
        floor = tuple(eps for _ in range(n_max))
        return BleuScore(floor, 1.0, 0, r, floor, empty_candidate=True)

    precisions: list[float] = []
    for n in range(1, n_max + 1):
        counts = ngrams(candidate, n)
        total = sum(counts.values())
        if total == 0:
            precisions.append(eps)
            continue
        max_ref_counts: dict = {}
        for ref in references:
            for gram, count in ngrams(ref, n).items():
                if count > max_ref_counts.get(gram, 0):
                    max_ref_counts[gram] = count
        clipped = sum(min(count, max_ref_counts.get(gram, 0)) for gram, count in counts.items())
        precisions.append(max(clipped / total, eps))

    bp = 1.0 if c > r else math.exp(1.0 - r / c)
    weights = config.order_weights()
    cumulative = []
    for k in range(1, n_max + 1):
        prefix = sum(weights[:k])
        log_sum = sum((weights[n] / prefix) * math.log(precisions[n]) for n in range(k))
        cumulative.append(bp * math.exp(log_sum))
    return BleuScore(tuple(precisions), bp, c, r, tuple(cumulative))
