"""Diagnostics engine for the machine-checkable annotation guidelines.

Sentence-scope rules run over the raw description text so spans point at
the offending characters; set-scope rules look at the whole ten-sentence
record. Linting never raises on content: malformed text produces
diagnostics, not exceptions.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Iterable

from ..tokenizer import tokenize
from . import rules as rulebook

WEATHER_TERMS = {
    "clear": ("clear",),
    "rainy": ("rainy", "rain", "rains", "raining"),
    "snowy": ("snowy", "snow", "snows", "snowing"),
    "foggy": ("foggy", "fog"),
}
LIGHTING_TERMS = {
    "daytime": ("daytime",),
    "nighttime": ("nighttime",),
}

_CONTRACTION = re.compile(r"\b\w+'(?:t|s|re|ve|ll|d|m)\b", re.IGNORECASE)
_NUMBER_WORD = re.compile(
    r"\b(two|three|four|five|six|seven|eight|nine|ten|eleven|twelve)\b", re.IGNORECASE
)
_SIGN_WORD = re.compile(r"\bsigns?\b", re.IGNORECASE)
_AND_LIST = re.compile(r"\band\b", re.IGNORECASE)
_THERE_IS = re.compile(r"\bthere\s+(?:is|are)\b", re.IGNORECASE)
_GENDERED = re.compile(
    r"\b(man|men|woman|women|boy|boys|girl|girls|he|she|his|her|him|hers|lady|gentleman)\b",
    re.IGNORECASE,
)
_VERB_MARKER = re.compile(r"\b(is|are|was|were|has|have)\b", re.IGNORECASE)

BRITISH_TERMS = {
    "railway crossing": "railroad crossing",
    "zebra crossing": "crosswalk",
    "tail lights": "taillights",
    "tail light": "taillight",
    "lorries": "trucks",
    "lorry": "truck",
    "pavements": "sidewalks",
    "pavement": "sidewalk",
    "motorway": "highway",
    "windscreen": "windshield",
}

VEHICLE_TYPE_WORDS = {
    "car": ("car", "cars"),
    "truck": ("truck", "trucks"),
    "bus": ("bus", "buses"),
    "suv": ("suv", "suvs"),
    "van": ("van", "vans"),
    "taxi": ("taxi", "taxis"),
    "motorcycle": ("motorcycle", "motorcycles"),
    "bicycle": ("bicycle", "bicycles"),
}

COLOR_WORDS = ("white", "black", "red", "green", "blue", "yellow", "silver", "gray", "grey", "orange", "brown")
POSITION_WORDS = (
    "left", "right", "leftmost", "rightmost", "ahead", "behind", "front",
    "rear", "near", "nearby", "far", "close", "opposite",
)


@dataclass(frozen=True)
class Diagnostic:
    rule: str
    severity: str
    message: str
    sentence: int | None = None  # 0-based index; None for set-scope
    span: tuple[int, int] | None = None  # character range inside the sentence

    def to_dict(self) -> dict:
        return {
            "rule": self.rule,
            "severity": self.severity,
            "message": self.message,
            "sentence": self.sentence,
            "span": list(self.span) if self.span else None,
        }


@dataclass(frozen=True)
class LintReport:
    record_id: str
    diagnostics: tuple[Diagnostic, ...]

    @property
    def passed(self) -> bool:
        return not any(d.severity == rulebook.ERROR for d in self.diagnostics)

    def to_dict(self) -> dict:
        return {
            "record": self.record_id,
            "pass": self.passed,
            "diagnostics": [d.to_dict() for d in self.diagnostics],
        }


@dataclass(frozen=True)
class LintConfig:
    there_is_max: int = 3
    long_sentence_min_tokens: int = 30
    short_sentence_max_tokens: int = 15
    expected_description_count: int = 10
    severity_overrides: dict = field(default_factory=dict)
    include_advisory: bool = True

    @classmethod
    def from_file(cls, path: str | Path) -> "LintConfig":
        data = json.loads(Path(path).read_text(encoding="utf-8"))
        known = {f for f in cls.__dataclass_fields__}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown lint config keys: {sorted(unknown)}")
        return cls(**data)


def _severity(rule_id: str, config: LintConfig) -> str:
    rule = rulebook.rule(rule_id)
    if rule.checkability == rulebook.ADVISORY:
        return rulebook.WARNING
    return config.severity_overrides.get(rule_id, rule.severity)


def _word_present(text: str, words: Iterable[str]) -> bool:
    lowered = text.lower()
    return any(re.search(rf"\b{re.escape(word)}\b", lowered) for word in words)


def _check_quotes(text: str) -> list[tuple[int, int]]:
    spans = []
    for i, ch in enumerate(text):
        if ch in "\"“”‘’`":
            spans.append((i, i + 1))
        elif ch == "'":
            internal = 0 < i < len(text) - 1 and text[i - 1].isalnum() and text[i + 1].isalnum()
            if not internal:
                spans.append((i, i + 1))
    return spans


def _check_serial_comma(text: str) -> list[tuple[int, int]]:
    spans = []
    for match in _AND_LIST.finditer(text):
        comma = text.rfind(",", 0, match.start())
        if comma == -1:
            continue
        gap = text[comma + 1 : match.start()]
        if gap.strip() and not _VERB_MARKER.search(gap):
            spans.append((match.start(), match.end()))
    return spans


def lint_sentence(text: str, config: LintConfig = LintConfig()) -> list[Diagnostic]:
    """Sentence-scope diagnostics for a single raw description."""
    diagnostics: list[Diagnostic] = []

    def add(rule_id: str, message: str, span: tuple[int, int] | None) -> None:
        diagnostics.append(Diagnostic(rule_id, _severity(rule_id, config), message, span=span))

    for span in _check_quotes(text):
        add("G013", "quotation marks are not allowed", span)

    for match in _CONTRACTION.finditer(text):
        add("G014", f"contraction {match.group(0)!r}; write the words out in full", match.span())

    stripped = text.rstrip()
    if not stripped:
        add("G016", "empty sentence", (0, 0))
    elif not stripped.endswith("."):
        add("G016", "sentence must end with a period", (len(stripped) - 1, len(stripped)))

    for span in _check_serial_comma(text):
        add("G017", "possible 3+ item list without a comma before 'and'", span)

    for match in _SIGN_WORD.finditer(text):
        preceding = text[: match.start()].rstrip()
        if not preceding.endswith("]"):
            add("G019", "sign mentioned without a [bracketed] sign name", match.span())

    for match in _NUMBER_WORD.finditer(text):
        before = text[match.start() - 1] if match.start() > 0 else ""
        after = text[match.end()] if match.end() < len(text) else ""
        if before != "-" and after != "-":
            add("G020", f"write {match.group(0)!r} as a digit", match.span())

    lowered = text.lower()
    for term, replacement in BRITISH_TERMS.items():
        for match in re.finditer(rf"\b{re.escape(term)}\b", lowered):
            add("G022", f"use American term {replacement!r} instead of {term!r}", match.span())
            break  # one diagnostic per term is enough

    if config.include_advisory:
        for match in _GENDERED.finditer(text):
            add("G006", f"use neutral person terms instead of {match.group(0)!r}", match.span())
        token_count = len(tokenize(text))
        if 0 < token_count < config.short_sentence_max_tokens and text.count(",") >= 2:
            add("G010", "short sentence appears to pack several aspects (heuristic)", None)

    return diagnostics


def lint_set(record, config: LintConfig = LintConfig()) -> LintReport:
    """Set-scope lint of one record (an ImageRecord or a plain description list)."""
    if hasattr(record, "descriptions"):
        descriptions = list(record.descriptions)
        record_id = getattr(record, "id", "")
        meta = getattr(record, "meta", None)
    else:
        descriptions = list(record)
        record_id = ""
        meta = None

    diagnostics: list[Diagnostic] = []

    def add(rule_id: str, message: str) -> None:
        diagnostics.append(Diagnostic(rule_id, _severity(rule_id, config), message))

    count = len(descriptions)
    if count != config.expected_description_count:
        for rule_id in ("G007", "G018"):
            add(rule_id, f"expected {config.expected_description_count} descriptions, found {count}")

    weather_and_lighting = any(
        _word_present(text, [t for terms in WEATHER_TERMS.values() for t in terms])
        and _word_present(text, [t for terms in LIGHTING_TERMS.values() for t in terms])
        for text in descriptions
    )
    if not weather_and_lighting:
        add("G008", "no sentence states both weather and lighting conditions")

    if meta is not None:
        weather = getattr(meta, "weather", None) or (meta.get("weather") if isinstance(meta, dict) else None)
        lighting = getattr(meta, "lighting", None) or (meta.get("lighting") if isinstance(meta, dict) else None)
        if weather in WEATHER_TERMS and not any(_word_present(t, WEATHER_TERMS[weather]) for t in descriptions):
            diagnostics.append(
                Diagnostic("G008", rulebook.WARNING, f"metadata weather {weather!r} never stated in the text")
            )
        if lighting in LIGHTING_TERMS and not any(_word_present(t, LIGHTING_TERMS[lighting]) for t in descriptions):
            diagnostics.append(
                Diagnostic("G008", rulebook.WARNING, f"metadata lighting {lighting!r} never stated in the text")
            )

    if descriptions and not any(len(tokenize(t)) >= config.long_sentence_min_tokens for t in descriptions):
        add("G009", f"no all-encompassing sentence of at least {config.long_sentence_min_tokens} tokens")

    there_count = sum(1 for t in descriptions if _THERE_IS.search(t))
    if there_count > config.there_is_max:
        add("G002", f"'there is/are' used in {there_count} sentences (at most {config.there_is_max} expected)")

    if config.include_advisory and descriptions:
        if not any(_word_present(t, POSITION_WORDS) for t in descriptions):
            add("G011", "no sentence specifies relative positions or distances")
        has_color = any(_word_present(t, COLOR_WORDS) for t in descriptions)
        has_digit = any(re.search(r"\d", t) for t in descriptions)
        if not has_color and not has_digit:
            add("G012", "no colors or counts anywhere in the description set")
        types_used = {
            lemma
            for lemma, forms in VEHICLE_TYPE_WORDS.items()
            if any(_word_present(t, forms) for t in descriptions)
        }
        if len(types_used) >= 3 and not any(_word_present(t, ("vehicle", "vehicles")) for t in descriptions):
            add("G033", "several vehicle types mentioned but the collective term 'vehicle' never used")

    for index, text in enumerate(descriptions):
        for diagnostic in lint_sentence(text, config):
            diagnostics.append(replace(diagnostic, sentence=index))

    return LintReport(record_id, tuple(diagnostics))
