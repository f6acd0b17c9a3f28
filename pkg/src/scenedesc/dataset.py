"""Line-delimited dataset manifests: loading, validation, export, statistics.

A manifest is UTF-8 JSONL. An optional first line carries manifest-level
metadata (recognized by its ``manifest_version`` key); every other line is
one image record with the fields ``id``, ``image``, ``descriptions``,
``meta``, ``category`` and ``version``. Seen records carry exactly ten
descriptions; unseen and out-of-domain records carry none.
"""

from __future__ import annotations

import json
import os
import tempfile
from collections import Counter
from dataclasses import dataclass, replace
from pathlib import Path

from .lint import LintConfig, LintReport, lint_set
from .scenegraph.lexicon import LEXICON_VERSION
from .tokenizer import tokenize

MANIFEST_VERSION = "1"
CATEGORIES = ("seen", "unseen", "out_of_domain")
WEATHER_VALUES = ("clear", "rainy", "snowy", "foggy")
LIGHTING_VALUES = ("daytime", "nighttime")
SPECIAL_TOKENS = ("<start>", "<end>", "<pad>", "<unk>")


class ManifestError(ValueError):
    """Raised when a manifest file fails schema or guideline validation."""


@dataclass(frozen=True)
class RecordMeta:
    weather: str | None = None
    lighting: str | None = None
    scene_tags: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        return {"weather": self.weather, "lighting": self.lighting, "scene_tags": list(self.scene_tags)}


@dataclass(frozen=True)
class ImageRecord:
    id: str
    image: str
    descriptions: tuple[str, ...]
    meta: RecordMeta = RecordMeta()
    category: str = "seen"
    version: int = 0

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "image": self.image,
            "descriptions": list(self.descriptions),
            "meta": self.meta.to_dict(),
            "category": self.category,
            "version": self.version,
        }


@dataclass(frozen=True)
class DatasetManifest:
    records: tuple[ImageRecord, ...]
    version: str = MANIFEST_VERSION
    lexicon_version: str = LEXICON_VERSION

    def record(self, record_id: str) -> ImageRecord:
        for record in self.records:
            if record.id == record_id:
                return record
        raise KeyError(record_id)

    @property
    def ids(self) -> list[str]:
        return [record.id for record in self.records]

    def by_category(self, category: str) -> list[ImageRecord]:
        return [record for record in self.records if record.category == category]

    @property
    def seen_records(self) -> list[ImageRecord]:
        return self.by_category("seen")


def _parse_meta(data: dict, where: str) -> RecordMeta:
    if not isinstance(data, dict):
        raise ManifestError(f"{where}: meta must be an object")
    unknown = set(data) - {"weather", "lighting", "scene_tags"}
    if unknown:
        raise ManifestError(f"{where}: unknown meta fields {sorted(unknown)}")
    weather = data.get("weather")
    if weather is not None and weather not in WEATHER_VALUES:
        raise ManifestError(f"{where}: invalid weather {weather!r}")
    lighting = data.get("lighting")
    if lighting is not None and lighting not in LIGHTING_VALUES:
        raise ManifestError(f"{where}: invalid lighting {lighting!r}")
    tags = data.get("scene_tags", [])
    if not isinstance(tags, list) or not all(isinstance(t, str) for t in tags):
        raise ManifestError(f"{where}: scene_tags must be a list of strings")
    return RecordMeta(weather, lighting, tuple(tags))


def parse_record(data: dict, where: str = "record") -> ImageRecord:
    if not isinstance(data, dict):
        raise ManifestError(f"{where}: record must be an object")
    missing = {"id", "image", "descriptions", "meta", "category", "version"} - set(data)
    if missing:
        raise ManifestError(f"{where}: missing fields {sorted(missing)}")
    unknown = set(data) - {"id", "image", "descriptions", "meta", "category", "version"}
    if unknown:
        raise ManifestError(f"{where}: unknown fields {sorted(unknown)}")
    if not isinstance(data["id"], str) or not data["id"]:
        raise ManifestError(f"{where}: id must be a non-empty string")
    if not isinstance(data["image"], str):
        raise ManifestError(f"{where}: image must be a string path")
    if data["category"] not in CATEGORIES:
        raise ManifestError(f"{where}: category must be one of {CATEGORIES}")
    descriptions = data["descriptions"]
    if not isinstance(descriptions, list) or not all(isinstance(d, str) for d in descriptions):
        raise ManifestError(f"{where}: descriptions must be a list of strings")
    if not isinstance(data["version"], int) or data["version"] < 0:
        raise ManifestError(f"{where}: version must be a non-negative integer")
    return ImageRecord(
        id=data["id"],
        image=data["image"],
        descriptions=tuple(descriptions),
        meta=_parse_meta(data["meta"], where),
        category=data["category"],
        version=data["version"],
    )


def validate_record(record: ImageRecord, where: str = "", lint_config: LintConfig | None = None) -> LintReport:
    """Description-count and guideline validation of one record."""
    where = where or f"record {record.id!r}"
    if record.category == "seen":
        if len(record.descriptions) != 10:
            raise ManifestError(
                f"{where}: seen records carry exactly 10 descriptions (G007/G018), found {len(record.descriptions)}"
            )
    elif record.descriptions:
        raise ManifestError(f"{where}: {record.category} records carry no descriptions")
    report = lint_set(record, lint_config or LintConfig())
    if record.category == "seen" and not report.passed:
        failures = "; ".join(
            f"{d.rule} (sentence {d.sentence})" if d.sentence is not None else d.rule
            for d in report.diagnostics
            if d.severity == "error"
        )
        raise ManifestError(f"{where}: guideline errors: {failures}")
    return report


def load_manifest(
    path: str | Path,
    strict: bool = True,
    require_images: bool = False,
    lint_config: LintConfig | None = None,
) -> DatasetManifest:
    """Parse and validate a JSONL manifest.

    ``strict`` additionally requires every seen record to pass the
    error-severity guideline rules; the annotation service loads with
    ``strict=False`` because fixing guideline violations is its purpose.
    """
    path = Path(path)
    records: list[ImageRecord] = []
    seen_ids: set[str] = set()
    version = MANIFEST_VERSION
    lexicon_version = LEXICON_VERSION
    with open(path, encoding="utf-8") as handle:
        for lineno, line in enumerate(handle, 1):
            if not line.strip():
                continue
            where = f"{path.name}:{lineno}"
            try:
                data = json.loads(line)
            except json.JSONDecodeError as err:
                raise ManifestError(f"{where}: invalid JSON: {err}") from err
            if isinstance(data, dict) and "manifest_version" in data:
                if lineno != 1:
                    raise ManifestError(f"{where}: manifest header must be the first line")
                version = str(data.get("version", MANIFEST_VERSION))
                lexicon_version = str(data.get("lexicon_version", LEXICON_VERSION))
                continue
            record = parse_record(data, where)
            if record.id in seen_ids:
                raise ManifestError(f"{where}: duplicate record id {record.id!r}")
            seen_ids.add(record.id)
            if strict:
                validate_record(record, where, lint_config)
            if require_images and not (path.parent / record.image).exists():
                raise ManifestError(f"{where}: image file not found: {record.image}")
            records.append(record)
    return DatasetManifest(tuple(records), version, lexicon_version)


def dumps_record(record: ImageRecord) -> str:
    return json.dumps(record.to_dict(), sort_keys=True, ensure_ascii=False, separators=(",", ":"))


def export_manifest(manifest: DatasetManifest, path: str | Path) -> None:
    """Byte-stable atomic export: write to a temp file, then rename over."""
    path = Path(path)
    header = {
        "manifest_version": MANIFEST_VERSION,
        "version": manifest.version,
        "lexicon_version": manifest.lexicon_version,
    }
    lines = [json.dumps(header, sort_keys=True, ensure_ascii=False, separators=(",", ":"))]
    lines.extend(dumps_record(record) for record in manifest.records)
    payload = "\n".join(lines) + "\n"
    fd, tmp_name = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            handle.write(payload)
            handle.flush()
            os.fsync(handle.fileno())
        os.replace(tmp_name, path)
    except BaseException:
        if os.path.exists(tmp_name):
            os.unlink(tmp_name)
        raise


@dataclass(frozen=True)
class VocabularyStats:
    frequencies: dict[str, int]
    min_frequency: int
    special_tokens: tuple[str, ...] = SPECIAL_TOKENS

    @property
    def retained(self) -> set[str]:
        return {token for token, count in self.frequencies.items() if count >= self.min_frequency}

    @property
    def retained_size(self) -> int:
        return len(self.retained)

    @property
    def total_tokens(self) -> int:
        return sum(self.frequencies.values())

    def top(self, k: int) -> list[tuple[str, int]]:
        return sorted(self.frequencies.items(), key=lambda item: (-item[1], item[0]))[:k]


def vocabulary(manifest: DatasetManifest, min_frequency: int = 5) -> VocabularyStats:
    """Token frequencies over the seen records' descriptions.

    The retained vocabulary drops every token below the frequency threshold;
    the four special tokens are reserved regardless.
    """
    if min_frequency < 1:
        raise ValueError("min_frequency must be >= 1")
    counts: Counter = Counter()
    for record in manifest.seen_records:
        for text in record.descriptions:
            counts.update(tokenize(text).surfaces)
    return VocabularyStats(dict(counts), min_frequency)
