"""Canonical tokenization shared by every metric and lint rule.

All scoring and linting operates on the same lowercase token stream, so
candidate sentences pasted from model output ("it is a two - way street")
and raw annotator text ("It is a two-way street.") normalize identically.
"""

from __future__ import annotations

import unicodedata
from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Sequence

WORD = "word"
NUMERAL = "numeral"
PUNCTUATION = "punctuation"
BRACKET = "bracket"


@dataclass(frozen=True)
class Token:
    surface: str
    kind: str

    def __post_init__(self) -> None:
        if not self.surface or any(ch.isspace() for ch in self.surface):
            raise ValueError(f"token surface must be non-empty and whitespace-free: {self.surface!r}")


@dataclass(frozen=True)
class TokenStream:
    """Immutable ordered token sequence."""

    tokens: tuple[Token, ...]

    def __len__(self) -> int:
        return len(self.tokens)

    def __iter__(self) -> Iterator[Token]:
        return iter(self.tokens)

    def __getitem__(self, index):
        return self.tokens[index]

    @property
    def surfaces(self) -> tuple[str, ...]:
        return tuple(t.surface for t in self.tokens)

    def detokenize(self) -> str:
        """Join surfaces with single spaces; tokenize() of the result reproduces the stream."""
        return " ".join(self.surfaces)


def _classify(surface: str) -> str:
    if surface in ("[", "]"):
        return BRACKET
    if surface[0].isdigit():
        return NUMERAL
    if surface[0].isalpha():
        return WORD
    return PUNCTUATION


def tokenize(text: str) -> TokenStream:
    """Split raw text into the canonical lowercase stream.

    Letters and digits form maximal runs; every other non-space character
    (hyphens, commas, periods, quotes, brackets) becomes its own token, so
    hyphenated compounds like "two-way" split into "two", "-", "way".
    """
    normalized = unicodedata.normalize("NFC", text).lower()
    tokens: list[Token] = []
    i = 0
    n = len(normalized)
    while i < n:
        ch = normalized[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isalpha():
            j = i + 1
            while j < n and normalized[j].isalpha():
                j += 1
            tokens.append(Token(normalized[i:j], WORD))
            i = j
        elif ch.isdigit():
            j = i + 1
            while j < n and normalized[j].isdigit():
                j += 1
            tokens.append(Token(normalized[i:j], NUMERAL))
            i = j
        else:
            tokens.append(Token(ch, _classify(ch)))
            i += 1
    return TokenStream(tuple(tokens))


def ngrams(stream: TokenStream | Sequence[str], order: int) -> Counter:
    """All contiguous windows of `order` surfaces, with multiplicity.

    Window count is max(len - order + 1, 0).
    """
    if order < 1:
        raise ValueError(f"n-gram order must be >= 1, got {order}")
    surfaces = stream.surfaces if isinstance(stream, TokenStream) else tuple(stream)
    counts: Counter = Counter()
    for i in range(len(surfaces) - order + 1):
        counts[surfaces[i : i + order]] += 1
    return counts
