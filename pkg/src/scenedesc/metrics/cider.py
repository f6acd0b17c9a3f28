"""CIDEr: consensus scoring via TF-IDF weighted n-gram cosine similarity.

Document frequencies are counted over images, not sentences: an n-gram is
"in" an image if any of that image's references contains it. Scoring a
candidate multiplies average per-order cosine similarity against each
reference by a fixed scale, giving the familiar [0, 10] range.

A corpus built from a single image gives every present n-gram an IDF of
log(1/1) = 0, which zeroes every vector and therefore every score. That
degenerate case is detected and flagged rather than silently returned.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path

from ..tokenizer import TokenStream, ngrams

CORPUS_CACHE_VERSION = 1


@dataclass(frozen=True)
class CiderConfig:
    max_order: int = 4
    weights: tuple[float, ...] | None = None  # defaults to uniform 1/max_order
    scale: float = 10.0

    def __post_init__(self) -> None:
        if self.max_order < 1:
            raise ValueError("max_order must be >= 1")
        if self.scale <= 0:
            raise ValueError("scale must be positive")
        if self.weights is not None and len(self.weights) != self.max_order:
            raise ValueError("weights must have one entry per order")

    def order_weights(self) -> tuple[float, ...]:
        if self.weights is not None:
            return self.weights
        return tuple(1.0 / self.max_order for _ in range(self.max_order))


class TfIdfCorpus:
    """Immutable per-order document frequencies over a reference corpus."""

    def __init__(self, image_count: int, doc_freq: dict[int, dict[tuple[str, ...], int]], max_order: int):
        if image_count < 1:
            raise ValueError("corpus requires at least one image")
        self._image_count = image_count
        self._max_order = max_order
        self._doc_freq = {n: dict(table) for n, table in doc_freq.items()}

    @property
    def image_count(self) -> int:
        return self._image_count

    @property
    def max_order(self) -> int:
        return self._max_order

    def document_frequency(self, gram: tuple[str, ...]) -> int:
        # unseen n-grams are floored at df = 1 so their IDF is log(|I|)
        return self._doc_freq.get(len(gram), {}).get(gram, 1)

    def contains(self, gram: tuple[str, ...]) -> bool:
        return gram in self._doc_freq.get(len(gram), {})

    def idf(self, gram: tuple[str, ...]) -> float:
        return math.log(self._image_count / self.document_frequency(gram))

    def save(self, path: str | Path) -> None:
        """Line-delimited cache; loads back to an identical corpus."""
        with open(path, "w", encoding="utf-8") as handle:
            header = {
                "cider_corpus_version": CORPUS_CACHE_VERSION,
                "image_count": self._image_count,
                "max_order": self._max_order,
            }
            handle.write(json.dumps(header, sort_keys=True) + "\n")
            for n in sorted(self._doc_freq):
                for gram in sorted(self._doc_freq[n]):
                    record = {"n": n, "gram": list(gram), "df": self._doc_freq[n][gram]}
                    handle.write(json.dumps(record, sort_keys=True) + "\n")

    @classmethod
    def load(cls, path: str | Path) -> "TfIdfCorpus":
        with open(path, encoding="utf-8") as handle:
            header = json.loads(handle.readline())
            if header.get("cider_corpus_version") != CORPUS_CACHE_VERSION:
                raise ValueError("unsupported corpus cache version")
            doc_freq: dict[int, dict[tuple[str, ...], int]] = {}
            for line in handle:
                if not line.strip():
                    continue
                record = json.loads(line)
                doc_freq.setdefault(record["n"], {})[tuple(record["gram"])] = record["df"]
        return cls(header["image_count"], doc_freq, header["max_order"])


def build_corpus(reference_sets: list[tuple[str, list[TokenStream]]], max_order: int = 4) -> TfIdfCorpus:
    """Count document frequencies: one count per image per distinct n-gram."""
    if not reference_sets:
        raise ValueError("corpus requires at least one image")
    seen_ids = set()
    doc_freq: dict[int, dict[tuple[str, ...], int]] = {n: {} for n in range(1, max_order + 1)}
    for image_id, references in reference_sets:
        if image_id in seen_ids:
            raise ValueError(f"duplicate image id in corpus: {image_id!r}")
        seen_ids.add(image_id)
        for n in range(1, max_order + 1):
            grams: set[tuple[str, ...]] = set()
            for reference in references:
                grams.update(ngrams(reference, n))
            table = doc_freq[n]
            for gram in grams:
                table[gram] = table.get(gram, 0) + 1
    return TfIdfCorpus(len(reference_sets), doc_freq, max_order)


def tfidf_vector(stream: TokenStream, corpus: TfIdfCorpus, order: int) -> dict[tuple[str, ...], float]:
    """Sparse TF-IDF vector over the stream's n-grams of one order."""
    counts = ngrams(stream, order)
    total = sum(counts.values())
    if total == 0:
        return {}
    vector = {}
    for gram, count in counts.items():
        weight = (count / total) * corpus.idf(gram)
        if weight != 0.0:
            vector[gram] = weight
    return vector


def _cosine(a: dict[tuple[str, ...], float], b: dict[tuple[str, ...], float]) -> float:
    if not a or not b:
        return 0.0
    dot = sum(weight * b[gram] for gram, weight in a.items() if gram in b)
    norm_a = math.sqrt(sum(w * w for w in a.values()))
    norm_b = math.sqrt(sum(w * w for w in b.values()))
    if norm_a == 0.0 or norm_b == 0.0:
        return 0.0
    return dot / (norm_a * norm_b)


@dataclass(frozen=True)
class CiderScore:
    value: float
    per_order: tuple[float, ...]  # average cosine against references, per order
    degenerate: bool


def cider(
    candidate: TokenStream,
    references: list[TokenStream],
    corpus: TfIdfCorpus,
    config: CiderConfig = CiderConfig(),
) -> CiderScore:
    """Scaled consensus similarity of a candidate to its reference set."""
    if not references:
        raise ValueError("CIDEr requires at least one reference")
    for reference in references:
        for n in range(1, min(config.max_order, corpus.max_order) + 1):
            for gram in ngrams(reference, n):
                if not corpus.contains(gram):
                    raise ValueError(
                        "reference n-gram missing from corpus; build the corpus from the manifest "
                        f"containing these references (offending {n}-gram: {gram!r})"
                    )

    weights = config.order_weights()
    m = len(references)
    candidate_vectors = [tfidf_vector(candidate, corpus, n) for n in range(1, config.max_order + 1)]
    degenerate = all(not vector for vector in candidate_vectors)
    per_order: list[float] = []
    value = 0.0
    for n in range(1, config.max_order + 1):
        cand_vec = candidate_vectors[n - 1]
        order_sum = 0.0
        for reference in references:
            order_sum += _cosine(cand_vec, tfidf_vector(reference, corpus, n))
        per_order.append(order_sum / m)
        value += weights[n - 1] * order_sum
    value = config.scale * value / m
    return CiderScore(value, tuple(per_order), degenerate)
