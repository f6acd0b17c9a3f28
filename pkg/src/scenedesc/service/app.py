"""HTTP API for the annotation workbench.

All lint logic lives here on the server; clients render diagnostics only.
Writes are guarded by per-record version counters (stale writes get 409)
and re-validated against the error-severity guideline rules (422 with the
full lint report on rejection).
"""

from __future__ import annotations

from pathlib import Path

from fastapi import FastAPI, HTTPException
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from ..dataset import ImageRecord
from ..lint import LintReport, rule_catalog
from .models import (
    ExportRequest,
    ExportResponse,
    LintRequest,
    LintResponse,
    MetaModel,
    RecordListResponse,
    RecordModel,
    RecordSummary,
    RuleModel,
    SaveRequest,
    SaveResponse,
)
from .store import LintRejection, ManifestStore, StaleVersion


def _record_model(record: ImageRecord) -> RecordModel:
    return RecordModel(
        id=record.id,
        image=record.image,
        descriptions=list(record.descriptions),
        meta=MetaModel.from_record_meta(record.meta),
        category=record.category,
        version=record.version,
    )


def _lint_response(report: LintReport) -> LintResponse:
    return LintResponse(
        record=report.record_id,
        passed=report.passed,
        diagnostics=[d.to_dict() for d in report.diagnostics],
    )


def create_app(store: ManifestStore, static_dir: str | None = None) -> FastAPI:
    app = FastAPI(title="scenedesc annotation service", version="0.1.0")

    @app.get("/api/records", response_model=RecordListResponse)
    def list_records() -> RecordListResponse:
        summaries = [
            RecordSummary(
                id=record.id,
                category=record.category,
                version=record.version,
                annotated=bool(record.descriptions),
            )
            for record in store.manifest().records
        ]
        return RecordListResponse(records=summaries)

    @app.get("/api/records/next-unannotated", response_model=RecordModel)
    def next_unannotated() -> RecordModel:
        record = store.next_unannotated()
        if record is None:
            raise HTTPException(status_code=404, detail="no unannotated records remain")
        return _record_model(record)

    @app.get("/api/records/{record_id}", response_model=RecordModel)
    def get_record(record_id: str) -> RecordModel:
        record = store.get(record_id)
        if record is None:
            raise HTTPException(status_code=404, detail=f"unknown record {record_id!r}")
        return _record_model(record)

    @app.put("/api/records/{record_id}", response_model=SaveResponse)
    def put_record(record_id: str, request: SaveRequest) -> SaveResponse:
        meta = request.meta.to_record_meta() if request.meta is not None else None
        try:
            updated = store.update(record_id, request.descriptions, request.version, meta)
        except KeyError:
            raise HTTPException(status_code=404, detail=f"unknown record {record_id!r}")
        except StaleVersion as err:
            raise HTTPException(status_code=409, detail={"error": str(err), "current_version": err.current})
        except LintRejection as err:
            return JSONResponse(
                status_code=422,
                content={
                    "error": "description set fails error-severity guideline rules",
                    "lint": _lint_response(err.report).model_dump(by_alias=True),
                },
            )
        return SaveResponse(id=updated.id, version=updated.version)

    @app.post("/api/lint", response_model=LintResponse, response_model_by_alias=True)
    def lint(request: LintRequest) -> LintResponse:
        meta = request.meta.to_record_meta() if request.meta is not None else None
        report = store.lint(request.descriptions, request.record_id, meta)
        return _lint_response(report)

    @app.post("/api/export", response_model=ExportResponse)
    def export(request: ExportRequest) -> ExportResponse:
        target = store.export(request.path)
        return ExportResponse(path=str(target), records=len(store.ids()))

    @app.get("/api/rules", response_model=list[RuleModel])
    def rules() -> list[RuleModel]:
        return [
            RuleModel(
                id=rule.id,
                checkability=rule.checkability,
                severity=rule.severity,
                scope=rule.scope,
                summary=rule.summary,
            )
            for rule in rule_catalog()
        ]

    if static_dir is not None:
        app.mount("/", StaticFiles(directory=Path(static_dir), html=True), name="workbench")

    return app
