from .engine import Diagnostic, LintConfig, LintReport, lint_sentence, lint_set
from .rules import GuidelineRule, rule_catalog

__all__ = [
    "Diagnostic",
    "LintConfig",
    "LintReport",
    "lint_sentence",
    "lint_set",
    "GuidelineRule",
    "rule_catalog",
]
