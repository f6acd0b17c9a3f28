"""METEOR: staged unigram alignment with a fragmentation penalty.

Matching runs in three stages (exact surface, stem, synonym), each token
used at most once. The matched pairs are then grouped into chunks: maximal
runs that are adjacent and identically ordered in both sentences. Fewer
chunks means less fragmentation and a smaller penalty.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..lexicon import SynonymLexicon, default_synonyms, stem
from ..tokenizer import TokenStream

STAGES = ("exact", "stem", "synonym")


@dataclass(frozen=True)
class MeteorConfig:
    alpha: float = 0.9
    beta: float = 3.0
    gamma: float = 0.5
    stages: tuple[str, ...] = STAGES
    synonyms: SynonymLexicon | None = None  # defaults to the packaged lexicon

    def __post_init__(self) -> None:
        if not 0 <= self.gamma <= 1:
            raise ValueError("gamma must lie in [0, 1]")
        if self.beta <= 0:
            raise ValueError("beta must be positive")
        unknown = set(self.stages) - set(STAGES)
        if unknown:
            raise ValueError(f"unknown matcher stages: {sorted(unknown)}")

    def lexicon(self) -> SynonymLexicon:
        return self.synonyms if self.synonyms is not None else default_synonyms()


@dataclass(frozen=True)
class MeteorScore:
    precision: float
    recall: float
    f_mean: float
    matches: int
    chunks: int
    penalty: float
    score: float
    matched_reference_index: int


def _stage_key(stage: str, word: str, lexicon: SynonymLexicon) -> str:
    if stage == "exact":
        return word
    if stage == "stem":
        return stem(word)
    return lexicon.canonical(word)


def align_unigrams(
    candidate: TokenStream, reference: TokenStream, config: MeteorConfig = MeteorConfig()
) -> tuple[int, int]:
    """Return (matches, chunks) for one candidate/reference pair.

    Greedy left-to-right matching per stage; each candidate position prefers
    the reference position that continues the previous match contiguously,
    which keeps identical sentences in a single chunk.
    """
    lexicon = config.lexicon()
    cand = candidate.surfaces
    ref = reference.surfaces
    cand_match: list[int | None] = [None] * len(cand)
    ref_taken = [False] * len(ref)

    for stage in config.stages:
        ref_keys = [_stage_key(stage, w, lexicon) for w in ref]
        last_ref = -2
        for i, word in enumerate(cand):
            if cand_match[i] is not None:
                last_ref = cand_match[i]  # type: ignore[assignment]
                continue
            key = _stage_key(stage, word, lexicon)
            available = [j for j, rk in enumerate(ref_keys) if rk == key and not ref_taken[j]]
            if not available:
                continue
            # prefer extending the run started by the previous candidate token
            choice = last_ref + 1 if last_ref + 1 in available else available[0]
            cand_match[i] = choice
            ref_taken[choice] = True
            last_ref = choice

    pairs = [(i, j) for i, j in enumerate(cand_match) if j is not None]
    matches = len(pairs)
    if matches == 0:
        return 0, 0
    chunks = 1
    for (ci, ri), (cj, rj) in zip(pairs, pairs[1:]):
        if cj != ci + 1 or rj != ri + 1:
            chunks += 1
    return matches, chunks


def _score_single(candidate: TokenStream, reference: TokenStream, config: MeteorConfig, index: int) -> MeteorScore:
    matches, chunks = align_unigrams(candidate, reference, config)
    if matches == 0 or not candidate or not reference:
        return MeteorScore(0.0, 0.0, 0.0, matches, chunks, 0.0, 0.0, index)
    precision = matches / len(candidate)
    recall = matches / len(reference)
    f_mean = precision * recall / (config.alpha * precision + (1 - config.alpha) * recall)
    if candidate.surfaces == reference.surfaces:
        # token-identical pair: no fragmentation at all, score is exactly F_mean
        penalty = 0.0
    else:
        penalty = config.gamma * (chunks / matches) ** config.beta
    return MeteorScore(precision, recall, f_mean, matches, chunks, penalty, (1 - penalty) * f_mean, index)


def meteor(candidate: TokenStream, references: list[TokenStream], config: MeteorConfig = MeteorConfig()) -> MeteorScore:
    """Best single-reference METEOR score."""
    if not references:
        raise ValueError("METEOR requires at least one reference")
    best: MeteorScore | None = None
    for index, reference in enumerate(references):
        score = _score_single(candidate, reference, config, index)
        if best is None or score.score > best.score:
            best = score
    assert best is not None
    return best
