"""Domain lexicon for scene-graph extraction.

Loads the directive file that declares object nouns (with lemmas), multiword
compounds, attributes, count words, verbs (normalized to one participle),
copulas, prepositions, adverbs and function words. The synonym lexicon is
shared with the METEOR matcher so tuple matching and unigram matching agree
on what counts as the same word.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from ..lexicon import SynonymLexicon, default_synonyms

LEXICON_VERSION = "1"

_KINDS = (
    "object",
    "compound",
    "attr",
    "count",
    "verb",
    "be",
    "locprep",
    "prep",
    "adv",
    "det",
    "coord",
    "splitter",
)


def _plurals(word: str) -> list[str]:
    if word.endswith(("s", "sh", "ch", "x", "z")):
        return [word + "es"]
    if word.endswith("y") and len(word) > 2 and word[-2] not in "aeiou":
        return [word[:-1] + "ies"]
    return [word + "s"]


@dataclass
class DomainLexicon:
    version: str = LEXICON_VERSION
    objects: dict[str, str] = field(default_factory=dict)  # surface -> lemma
    compounds: dict[tuple[str, ...], str] = field(default_factory=dict)  # surfaces -> lemma
    attributes: set[str] = field(default_factory=set)
    counts: dict[str, str] = field(default_factory=dict)  # surface -> canonical value
    verbs: dict[str, str] = field(default_factory=dict)  # surface -> canonical participle
    copulas: set[str] = field(default_factory=set)
    locative_prepositions: dict[str, str] = field(default_factory=dict)
    prepositions: dict[str, str] = field(default_factory=dict)
    adverbs: dict[str, str] = field(default_factory=dict)
    adverb_compounds: dict[tuple[str, ...], str] = field(default_factory=dict)
    determiners: set[str] = field(default_factory=set)
    coordinators: set[str] = field(default_factory=set)
    splitters: set[str] = field(default_factory=set)
    synonyms: SynonymLexicon = field(default_factory=SynonymLexicon)

    @property
    def object_classes(self) -> set[str]:
        return set(self.objects.values()) | set(self.compounds.values())

    @property
    def relation_vocabulary(self) -> set[str]:
        """Single-token relation names; verb+preposition joins extend these."""
        return set(self.locative_prepositions.values()) | set(self.verbs.values()) | {"with"}

    @property
    def attribute_vocabulary(self) -> set[str]:
        return set(self.attributes) | set(self.counts.values())

    def canonical(self, element: str) -> str:
        """Synonym-set head of a tuple element (identity outside every set)."""
        return self.synonyms.canonical(element)

    @classmethod
    def from_text(cls, text: str, synonyms: SynonymLexicon | None = None) -> "DomainLexicon":
        lexicon = cls(synonyms=synonyms or SynonymLexicon())
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            head, _, rest = line.partition("|")
            parts = head.split()
            kind = parts[0]
            if kind == "version":
                lexicon.version = parts[1]
                continue
            if kind not in _KINDS:
                raise ValueError(f"scene lexicon line {lineno}: unknown directive {kind!r}")
            canonical = " ".join(parts[1:]).lower()
            if not canonical:
                raise ValueError(f"scene lexicon line {lineno}: missing canonical form")
            forms = [f.strip().lower() for f in rest.split(",") if f.strip()] if rest else []
            lexicon._add(kind, canonical, forms)
        return lexicon

    @classmethod
    def from_files(
        cls, lexicon_path: str | Path, synonyms_path: str | Path | None = None
    ) -> "DomainLexicon":
        synonyms = SynonymLexicon.from_file(synonyms_path) if synonyms_path else None
        return cls.from_text(Path(lexicon_path).read_text(encoding="utf-8"), synonyms)

    def _add(self, kind: str, canonical: str, forms: list[str]) -> None:
        if kind == "object":
            for form in {canonical, *forms, *_plurals(canonical)}:
                self.objects[form] = canonical
        elif kind == "compound":
            words = tuple(canonical.split())
            all_forms = {canonical, *forms}
            if len(words) > 1:
                all_forms.update(" ".join(words[:-1] + (p,)) for p in _plurals(words[-1]))
            for form in all_forms:
                parts = tuple(form.split())
                if len(parts) > 1:
                    self.compounds[parts] = canonical
                    self.compounds[tuple(parts[:-1]) + tuple(_plurals(parts[-1]))] = canonical
                else:
                    self.objects[form] = canonical
        elif kind == "attr":
            self.attributes.add(canonical)
            self.attributes.update(forms)
        elif kind == "count":
            for form in {canonical, *forms}:
                self.counts[form] = canonical
        elif kind == "verb":
            for form in {canonical, *forms}:
                self.verbs[form] = canonical
        elif kind == "be":
            self.copulas.update({canonical, *forms})
        elif kind == "locprep":
            for form in {canonical, *forms}:
                self.locative_prepositions[form] = canonical
        elif kind == "prep":
            for form in {canonical, *forms}:
                self.prepositions[form] = canonical
        elif kind == "adv":
            for form in {canonical, *forms}:
                words = tuple(form.split())
                if len(words) > 1:
                    self.adverb_compounds[words] = canonical
                else:
                    self.adverbs[form] = canonical
        elif kind == "det":
            self.determiners.update({canonical, *forms})
        elif kind == "coord":
            self.coordinators.update({canonical, *forms})
        elif kind == "splitter":
            self.splitters.update({canonical, *forms})


def default_lexicon() -> DomainLexicon:
    text = resources.files("scenedesc.data").joinpath("scene_lexicon.txt").read_text(encoding="utf-8")
    return DomainLexicon.from_text(text, default_synonyms())
