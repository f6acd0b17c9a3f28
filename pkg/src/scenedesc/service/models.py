"""Request/response models for the annotation service API."""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field

from ..dataset import RecordMeta


class MetaModel(BaseModel):
    weather: str | None = None
    lighting: str | None = None
    scene_tags: list[str] = Field(default_factory=list)

    def to_record_meta(self) -> RecordMeta:
        return RecordMeta(self.weather, self.lighting, tuple(self.scene_tags))

    @classmethod
    def from_record_meta(cls, meta: RecordMeta) -> "MetaModel":
        return cls(weather=meta.weather, lighting=meta.lighting, scene_tags=list(meta.scene_tags))


class RecordModel(BaseModel):
    id: str
    image: str
    descriptions: list[str]
    meta: MetaModel
    category: str
    version: int


class RecordSummary(BaseModel):
    id: str
    category: str
    version: int
    annotated: bool


class RecordListResponse(BaseModel):
    records: list[RecordSummary]


class DiagnosticModel(BaseModel):
    rule: str
    severity: str
    message: str
    sentence: int | None = None
    span: list[int] | None = None


class LintRequest(BaseModel):
    descriptions: list[str]
    record_id: str = ""
    meta: MetaModel | None = None


class LintResponse(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    record: str = ""
    passed: bool = Field(alias="pass")
    diagnostics: list[DiagnosticModel]


class SaveRequest(BaseModel):
    descriptions: list[str]
    version: int
    meta: MetaModel | None = None


class SaveResponse(BaseModel):
    id: str
    version: int


class ExportRequest(BaseModel):
    path: str | None = None


class ExportResponse(BaseModel):
    path: str
    records: int


class RuleModel(BaseModel):
    id: str
    checkability: str
    severity: str
    scope: str
    summary: str
