"""Versioned, file-backed record store behind the annotation service.

Single-process document store: reads are lock-free snapshots, writes are
serialized, validated against the error-severity guideline rules, guarded
by per-record version counters, and persisted with an atomic temp-file
rename before they are acknowledged.
"""

from __future__ import annotations

import threading
from dataclasses import replace
from pathlib import Path

from ..dataset import (
    DatasetManifest,
    ImageRecord,
    RecordMeta,
    export_manifest,
    load_manifest,
)
from ..lint import LintConfig, LintReport, lint_set


class StaleVersion(Exception):
    def __init__(self, record_id: str, expected: int, current: int):
        super().__init__(f"record {record_id!r}: version {expected} is stale (current {current})")
        self.current = current


class LintRejection(Exception):
    def __init__(self, report: LintReport):
        super().__init__("description set fails error-severity guideline rules")
        self.report = report


class ManifestStore:
    def __init__(self, path: str | Path, lint_config: LintConfig | None = None):
        self._path = Path(path)
        self._lint_config = lint_config or LintConfig()
        # lenient load: records mid-annotation are exactly what this store manages
        manifest = load_manifest(self._path, strict=False)
        self._meta = (manifest.version, manifest.lexicon_version)
        self._records: dict[str, ImageRecord] = {r.id: r for r in manifest.records}
        self._lock = threading.Lock()

    @property
    def path(self) -> Path:
        return self._path

    def manifest(self) -> DatasetManifest:
        return DatasetManifest(tuple(self._records.values()), *self._meta)

    def ids(self) -> list[str]:
        return list(self._records)

    def get(self, record_id: str) -> ImageRecord | None:
        return self._records.get(record_id)

    def next_unannotated(self) -> ImageRecord | None:
        """First record still waiting for its description set, manifest order."""
        for record in self._records.values():
            if record.category == "unseen":
                return record
        return None

    def lint(self, descriptions: list[str], record_id: str = "", meta=None) -> LintReport:
        report = lint_set(descriptions, self._lint_config)
        if record_id or meta is not None:
            record = self._records.get(record_id)
            reference_meta = meta if meta is not None else (record.meta if record else None)
            if reference_meta is not None:
                holder = ImageRecord(record_id or "draft", "", tuple(descriptions), reference_meta)
                report = lint_set(holder, self._lint_config)
        return report

    def update(
        self,
        record_id: str,
        descriptions: list[str],
        expected_version: int,
        meta: RecordMeta | None = None,
    ) -> ImageRecord:
        """Replace a record's descriptions; annotating an unseen record promotes it to seen."""
        with self._lock:
            record = self._records.get(record_id)
            if record is None:
                raise KeyError(record_id)
            if record.version != expected_version:
                raise StaleVersion(record_id, expected_version, record.version)
            candidate = replace(
                record,
                descriptions=tuple(descriptions),
                meta=meta if meta is not None else record.meta,
                category="seen" if descriptions else record.category,
            )
            report = lint_set(candidate, self._lint_config)
            if not report.passed:
                raise LintRejection(report)
            updated = replace(candidate, version=record.version + 1)
            previous = self._records[record_id]
            self._records[record_id] = updated
            try:
                self._persist()
            except BaseException:
                self._records[record_id] = previous
                raise
            return updated

    def export(self, path: str | Path | None = None) -> Path:
        with self._lock:
            target = Path(path) if path else self._path
            export_manifest(self.manifest(), target)
            return target

    def _persist(self) -> None:
        export_manifest(self.manifest(), self._path)
