from .app import create_app
from .store import LintRejection, ManifestStore, StaleVersion

__all__ = ["create_app", "ManifestStore", "StaleVersion", "LintRejection"]
