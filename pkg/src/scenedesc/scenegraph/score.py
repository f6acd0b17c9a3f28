"""Scene-graph tuple matching: the semantic F1 metric.

The reference graph is the union of tuples over all references; matching is
a set intersection after mapping every tuple element through the synonym
lexicon, so (car,) and (vehicle,) are one tuple for both deduplication and
scoring.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from ..tokenizer import TokenStream
from .lexicon import DomainLexicon
from .parser import default_lexicon_cached, parse_scene_graph, tuples


@dataclass(frozen=True)
class SpiceScore:
    precision: float
    recall: float
    f1: float
    matched: int
    candidate_tuples: int
    reference_tuples: int
    empty_reference: bool = False


def _canonical_tuples(tuple_set: Iterable[tuple[str, ...]], lexicon: DomainLexicon) -> frozenset:
    return frozenset(tuple(lexicon.canonical(el) for el in t) for t in tuple_set)


def tuple_match_f1(
    candidate_tuples: Iterable[tuple[str, ...]],
    reference_tuples: Iterable[tuple[str, ...]],
    lexicon: DomainLexicon | None = None,
) -> SpiceScore:
    """Precision/recall/F1 between two tuple sets under synonym canonicalization."""
    lexicon = lexicon if lexicon is not None else default_lexicon_cached()
    cand = _canonical_tuples(candidate_tuples, lexicon)
    ref = _canonical_tuples(reference_tuples, lexicon)
    if not ref:
        return SpiceScore(0.0, 0.0, 0.0, 0, len(cand), 0, empty_reference=True)
    matched = len(cand & ref)
    precision = matched / len(cand) if cand else 0.0
    recall = matched / len(ref)
    f1 = 2 * precision * recall / (precision + recall) if matched else 0.0
    return SpiceScore(precision, recall, f1, matched, len(cand), len(ref))


def spice(
    candidate: TokenStream,
    references: list[TokenStream],
    lexicon: DomainLexicon | None = None,
) -> SpiceScore:
    """Parse candidate and references, then F1 over their logical tuples."""
    if not references:
        raise ValueError("the semantic metric requires at least one reference")
    lexicon = lexicon if lexicon is not None else default_lexicon_cached()
    candidate_tuples = tuples(parse_scene_graph(candidate, lexicon))
    reference_tuples: set[tuple[str, ...]] = set()
    for reference in references:
        reference_tuples |= tuples(parse_scene_graph(reference, lexicon))
    return tuple_match_f1(candidate_tuples, reference_tuples, lexicon)
