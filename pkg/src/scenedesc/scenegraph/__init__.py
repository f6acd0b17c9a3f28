from .lexicon import DomainLexicon, default_lexicon
from .parser import SceneGraph, parse_scene_graph, tuples
from .score import SpiceScore, spice, tuple_match_f1

__all__ = [
    "DomainLexicon",
    "default_lexicon",
    "SceneGraph",
    "parse_scene_graph",
    "tuples",
    "SpiceScore",
    "spice",
    "tuple_match_f1",
]
