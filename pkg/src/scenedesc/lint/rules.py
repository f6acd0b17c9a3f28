"""Catalog of the 34 annotation guidelines.

Each rule is classified by how far it can be mechanized:

* ``automatic``  -- fully checkable from the text; these rules produce
  diagnostics at their configured severity.
* ``advisory``   -- checkable only heuristically (lexicon or shape hints);
  diagnostics are always warnings and never fail a record.
* ``manual``     -- requires looking at the image or judging semantics;
  documented here for the annotation UI but never produces diagnostics.
"""

from __future__ import annotations

from dataclasses import dataclass

AUTOMATIC = "automatic"
ADVISORY = "advisory"
MANUAL = "manual"

ERROR = "error"
WARNING = "warning"

SENTENCE = "sentence"
SET = "set"


@dataclass(frozen=True)
class GuidelineRule:
    id: str
    checkability: str
    severity: str
    scope: str
    summary: str


_RULES: tuple[GuidelineRule, ...] = (
    GuidelineRule("G001", MANUAL, ERROR, SET, "Describe all safety-critical elements of the scene."),
    GuidelineRule("G002", AUTOMATIC, WARNING, SET, "Use 'there is/are' sparingly."),
    GuidelineRule("G003", MANUAL, WARNING, SENTENCE, "Do not describe irrelevant or minor visual details."),
    GuidelineRule("G004", MANUAL, ERROR, SENTENCE, "Describe only what is visible; no speculation."),
    GuidelineRule("G005", MANUAL, ERROR, SENTENCE, "No imagined speech or conversations."),
    GuidelineRule("G006", ADVISORY, WARNING, SENTENCE, "No proper names or assumed genders; use neutral person terms."),
    GuidelineRule("G007", AUTOMATIC, ERROR, SET, "Write 10 descriptive sentences per image."),
    GuidelineRule("G008", AUTOMATIC, ERROR, SET, "At least one sentence states weather and lighting conditions."),
    GuidelineRule("G009", AUTOMATIC, WARNING, SET, "At least one all-encompassing, lengthy sentence."),
    GuidelineRule("G010", ADVISORY, WARNING, SENTENCE, "Short sentences focus on one or two critical aspects."),
    GuidelineRule("G011", ADVISORY, WARNING, SET, "Specify relative positions and distances to the ego vehicle."),
    GuidelineRule("G012", ADVISORY, WARNING, SET, "Mention colors and numbers when they distinguish entities."),
    GuidelineRule("G013", AUTOMATIC, ERROR, SENTENCE, "No single or double quotation marks."),
    GuidelineRule("G014", AUTOMATIC, ERROR, SENTENCE, "No contractions; write words out in full."),
    GuidelineRule("G015", MANUAL, WARNING, SENTENCE, "Use the domain vocabulary from the provided examples."),
    GuidelineRule("G016", AUTOMATIC, ERROR, SENTENCE, "End every sentence with a period."),
    GuidelineRule("G017", AUTOMATIC, WARNING, SENTENCE, "Comma-separate lists of three or more, with ', and' last."),
    GuidelineRule("G018", AUTOMATIC, ERROR, SET, "Exactly 10 descriptive sentences, short and detailed mixed."),
    GuidelineRule("G019", AUTOMATIC, WARNING, SENTENCE, "Name traffic signs inside square brackets."),
    GuidelineRule("G020", AUTOMATIC, WARNING, SENTENCE, "Write numbers as digits (one/a/an/1 allowed)."),
    GuidelineRule("G021", MANUAL, ERROR, SET, "Sentences must be fully human-written; no generated text."),
    GuidelineRule("G022", AUTOMATIC, ERROR, SENTENCE, "Use American English traffic terminology."),
    GuidelineRule("G023", MANUAL, WARNING, SET, "Reuse identical sentences across unchanged sequence frames."),
    GuidelineRule("G024", MANUAL, WARNING, SENTENCE, "Indicate lane configurations and lane-specific details."),
    GuidelineRule("G025", MANUAL, WARNING, SENTENCE, "Describe road markings, especially faint ones."),
    GuidelineRule("G026", MANUAL, WARNING, SENTENCE, "Describe behaviors of road users that affect safety."),
    GuidelineRule("G027", MANUAL, WARNING, SENTENCE, "Mention road surface conditions relevant to safety."),
    GuidelineRule("G028", MANUAL, WARNING, SENTENCE, "Describe obstructions and visibility limits."),
    GuidelineRule("G029", MANUAL, WARNING, SENTENCE, "Mention emergency vehicles and special situations."),
    GuidelineRule("G030", MANUAL, WARNING, SENTENCE, "Describe visible turn signals, brake and reverse lights."),
    GuidelineRule("G031", MANUAL, WARNING, SENTENCE, "Highlight risky pedestrian or cyclist behavior."),
    GuidelineRule("G032", MANUAL, WARNING, SET, "Keep terminology and units consistent across descriptions."),
    GuidelineRule("G033", ADVISORY, WARNING, SET, "Use 'vehicle' interchangeably with specific vehicle types."),
    GuidelineRule("G034", MANUAL, ERROR, SET, "Describe from the ego driver's perspective only."),
)

_BY_ID = {rule.id: rule for rule in _RULES}


def rule_catalog() -> list[GuidelineRule]:
    """All 34 guideline rules in id order."""
    return list(_RULES)


def rule(rule_id: str) -> GuidelineRule:
    return _BY_ID[rule_id]


def automatic_rule_ids() -> set[str]:
    return {r.id for r in _RULES if r.checkability == AUTOMATIC}


def advisory_rule_ids() -> set[str]:
    return {r.id for r in _RULES if r.checkability == ADVISORY}


def manual_rule_ids() -> set[str]:
    return {r.id for r in _RULES if r.checkability == MANUAL}
