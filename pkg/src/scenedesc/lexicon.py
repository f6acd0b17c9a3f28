"""Shared synonym lexicon and suffix stemmer.

The synonym file format is one entry per line, ``head: syn1, syn2, ...``,
UTF-8, with ``#`` comments. The same file feeds the METEOR synonym stage
and the scene-graph tuple matcher, so "a vehicle is parked" and
"a car is parked" agree under both metrics.
"""

from __future__ import annotations

from importlib import resources
from pathlib import Path

_SUFFIXES = ("ing", "ed", "es", "s")
_MIN_STEM = 3


def stem(word: str) -> str:
    """Strip one common inflectional suffix, then a trailing 'e'.

    A deliberately small suffix table: enough to let "parked", "parks" and
    "parking" (and "brakes"/"braking") meet at one stem without dragging in
    a full stemming dependency.
    """
    for suffix in _SUFFIXES:
        if word.endswith(suffix) and len(word) - len(suffix) >= _MIN_STEM:
            word = word[: -len(suffix)]
            break
    if word.endswith("e") and len(word) - 1 >= _MIN_STEM:
        word = word[:-1]
    return word


class SynonymLexicon:
    """Disjoint synonym sets, each with one canonical head."""

    def __init__(self, sets: dict[str, list[str]] | None = None):
        self._head_of: dict[str, str] = {}
        self._members: dict[str, list[str]] = {}
        for head, members in (sets or {}).items():
            self.add_set(head, members)

    def add_set(self, head: str, members: list[str]) -> None:
        words = [head] + [m for m in members if m != head]
        for word in words:
            if word in self._head_of and self._head_of[word] != head:
                raise ValueError(f"synonym sets must be disjoint; {word!r} already belongs to {self._head_of[word]!r}")
            self._head_of[word] = head
        self._members[head] = words

    def canonical(self, word: str) -> str:
        """Map a word to its set head; words outside every set map to themselves."""
        return self._head_of.get(word, word)

    def same(self, a: str, b: str) -> bool:
        return self.canonical(a) == self.canonical(b)

    @property
    def heads(self) -> list[str]:
        return list(self._members)

    def members(self, head: str) -> list[str]:
        return list(self._members.get(head, [head]))

    @classmethod
    def from_text(cls, text: str) -> "SynonymLexicon":
        lexicon = cls()
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if ":" not in line:
                raise ValueError(f"synonym lexicon line {lineno}: expected 'head: syn1, syn2, ...'")
            head, rest = line.split(":", 1)
            head = head.strip().lower()
            members = [w.strip().lower() for w in rest.split(",") if w.strip()]
            if not head:
                raise ValueError(f"synonym lexicon line {lineno}: empty head")
            lexicon.add_set(head, members)
        return lexicon

    @classmethod
    def from_file(cls, path: str | Path) -> "SynonymLexicon":
        return cls.from_text(Path(path).read_text(encoding="utf-8"))


def default_synonyms() -> SynonymLexicon:
    """The synonym sets shipped with the package."""
    text = resources.files("scenedesc.data").joinpath("synonyms.txt").read_text(encoding="utf-8")
    return SynonymLexicon.from_text(text)
