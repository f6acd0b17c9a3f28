"""Toolkit for constructing and evaluating traffic-scene description datasets.

Provides the shared tokenizer, the reference-based caption metrics
(BLEU, ROUGE-L, METEOR, CIDEr, SPICE-lite), an annotation-guideline
linter, a JSONL dataset store, a scoring/linting CLI, and an HTTP
service backing the annotation workbench.
"""

__version__ = "0.1.0"

from .tokenizer import Token, TokenStream, ngrams, tokenize

__all__ = ["Token", "TokenStream", "tokenize", "ngrams", "__version__"]
