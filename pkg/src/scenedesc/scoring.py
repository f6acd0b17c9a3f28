"""Score candidate descriptions against a manifest's reference sets.

Builds the consensus-metric corpus once per manifest, scores each candidate
with the selected metrics, and attaches warnings: reference echoes (a
candidate token-identical to one of its references trivially maxes the
overlap metrics), degenerate consensus scores, and empty candidates.
Scoring is pure and order-preserving, so any worker count produces the
same report as a sequential run.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from .dataset import DatasetManifest
from .metrics import (
    BleuConfig,
    CiderConfig,
    MeteorConfig,
    RougeConfig,
    TfIdfCorpus,
    bleu,
    build_corpus,
    cider,
    meteor,
    rouge_l,
)
from .scenegraph import spice
from .scenegraph.lexicon import DomainLexicon
from .scenegraph.parser import default_grammar_cached, default_lexicon_cached
from .tokenizer import TokenStream, tokenize

METRICS = ("bleu", "rouge", "meteor", "cider", "spice")

WARN_ECHO = "reference-echo"
WARN_DEGENERATE = "cider-degenerate"
WARN_EMPTY = "empty-candidate"


class ScoringError(ValueError):
    """Raised for invalid scoring inputs (unknown image ids, bad files)."""


@dataclass(frozen=True)
class Candidate:
    id: str
    image_id: str
    text: str


@dataclass(frozen=True)
class ScoreRow:
    candidate_id: str
    image_id: str
    scores: dict[str, float]
    warnings: tuple[str, ...]
    echo_reference_index: int | None = None


@dataclass(frozen=True)
class ScoreReport:
    rows: tuple[ScoreRow, ...]
    metrics: tuple[str, ...]

    @property
    def columns(self) -> list[str]:
        columns: list[str] = []
        for metric in self.metrics:
            if metric == "bleu":
                columns.extend(["bleu_1", "bleu_2", "bleu_3", "bleu_4"])
            elif metric == "rouge":
                columns.append("rouge_l")
            else:
                columns.append(metric)
        return columns


def load_candidates(path: str | Path) -> list[Candidate]:
    """Candidates file: JSONL records {image_id, text} with an optional id."""
    candidates = []
    path = Path(path)
    with open(path, encoding="utf-8") as handle:
        for lineno, line in enumerate(handle, 1):
            if not line.strip():
                continue
            try:
                data = json.loads(line)
            except json.JSONDecodeError as err:
                raise ScoringError(f"{path.name}:{lineno}: invalid JSON: {err}") from err
            if not isinstance(data, dict) or "image_id" not in data or "text" not in data:
                raise ScoringError(f"{path.name}:{lineno}: expected fields image_id and text")
            candidates.append(
                Candidate(str(data.get("id", lineno - 1)), str(data["image_id"]), str(data["text"]))
            )
    return candidates


def build_reference_corpus(manifest: DatasetManifest, max_order: int = 4) -> TfIdfCorpus:
    reference_sets = [
        (record.id, [tokenize(text) for text in record.descriptions])
        for record in manifest.seen_records
    ]
    if not reference_sets:
        raise ScoringError("manifest has no seen records to score against")
    return build_corpus(reference_sets, max_order)


def _echo_index(candidate: TokenStream, references: list[TokenStream]) -> int | None:
    for index, reference in enumerate(references):
        if candidate.surfaces == reference.surfaces:
            return index
    return None


def _score_one(
    candidate: Candidate,
    references: list[TokenStream],
    corpus: TfIdfCorpus | None,
    metrics: tuple[str, ...],
    lexicon: DomainLexicon,
) -> ScoreRow:
    stream = tokenize(candidate.text)
    scores: dict[str, float] = {}
    warnings: list[str] = []

    if len(stream) == 0:
        warnings.append(WARN_EMPTY)

    if "bleu" in metrics:
        result = bleu(stream, references, BleuConfig())
        for k in range(1, 5):
            scores[f"bleu_{k}"] = result.score_at(k)
    if "rouge" in metrics:
        scores["rouge_l"] = rouge_l(stream, references, RougeConfig()).f_score
    if "meteor" in metrics:
        scores["meteor"] = meteor(stream, references, MeteorConfig()).score
    if "cider" in metrics:
        assert corpus is not None
        result = cider(stream, references, corpus, CiderConfig())
        scores["cider"] = result.value
        if result.degenerate:
            warnings.append(WARN_DEGENERATE)
    if "spice" in metrics:
        scores["spice"] = spice(stream, references, lexicon).f1

    echo = _echo_index(stream, references)
    if echo is not None:
        warnings.append(WARN_ECHO)
    return ScoreRow(candidate.id, candidate.image_id, scores, tuple(warnings), echo)


def score_candidates(
    candidates: list[Candidate],
    manifest: DatasetManifest,
    metrics: tuple[str, ...] = METRICS,
    workers: int = 1,
) -> ScoreReport:
    unknown = [m for m in metrics if m not in METRICS]
    if unknown:
        raise ScoringError(f"unknown metrics: {unknown}; choose from {list(METRICS)}")
    seen_ids = {record.id for record in manifest.seen_records}
    missing = sorted({c.image_id for c in candidates} - seen_ids)
    if missing:
        raise ScoringError(f"candidate image ids not found as seen records: {missing}")

    reference_cache = {
        record.id: [tokenize(text) for text in record.descriptions] for record in manifest.seen_records
    }
    corpus = build_reference_corpus(manifest) if "cider" in metrics and candidates else None
    lexicon = default_lexicon_cached()
    default_grammar_cached()  # warm the grammar before threads fan out

    def work(candidate: Candidate) -> ScoreRow:
        return _score_one(candidate, reference_cache[candidate.image_id], corpus, tuple(metrics), lexicon)

    if workers <= 1 or len(candidates) <= 1:
        rows = [work(c) for c in candidates]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(work, candidates))
    return ScoreReport(tuple(rows), tuple(metrics))


# ------------------------------------------------------------------ output

def _format_value(value: float, precision: int = 4) -> str:
    return f"{value:.{precision}f}"


def render_csv(report: ScoreReport) -> str:
    columns = report.columns
    lines = [",".join(["candidate_id", "image_id", *columns, "warnings"])]
    for row in report.rows:
        cells = [row.candidate_id, row.image_id]
        cells.extend(_format_value(row.scores[c]) for c in columns)
        cells.append(";".join(row.warnings))
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def render_markdown(report: ScoreReport) -> str:
    columns = report.columns
    header = ["candidate", "image", *columns, "warnings"]
    lines = ["| " + " | ".join(header) + " |", "|" + "|".join(["---"] * len(header)) + "|"]
    for row in report.rows:
        cells = [row.candidate_id, row.image_id]
        cells.extend(_format_value(row.scores[c]) for c in columns)
        cells.append(", ".join(row.warnings))
        lines.append("| " + " | ".join(cells) + " |")
    return "\n".join(lines) + "\n"


def render_jsonl(report: ScoreReport) -> str:
    lines = []
    for row in report.rows:
        record = {
            "candidate_id": row.candidate_id,
            "image_id": row.image_id,
            "scores": {c: row.scores[c] for c in report.columns},
            "warnings": list(row.warnings),
            "echo_reference_index": row.echo_reference_index,
        }
        lines.append(json.dumps(record, sort_keys=True, ensure_ascii=False))
    return "\n".join(lines) + ("\n" if lines else "")


RENDERERS = {"csv": render_csv, "md": render_markdown, "jsonl": render_jsonl}
