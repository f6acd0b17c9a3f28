from .bleu import BleuConfig, BleuScore, bleu
from .cider import CiderConfig, CiderScore, TfIdfCorpus, build_corpus, cider, tfidf_vector
from .meteor import MeteorConfig, MeteorScore, align_unigrams, meteor
from .rouge import RougeConfig, RougeScore, rouge_l

__all__ = [
    "BleuConfig",
    "BleuScore",
    "bleu",
    "RougeConfig",
    "RougeScore",
    "rouge_l",
    "MeteorConfig",
    "MeteorScore",
    "align_unigrams",
    "meteor",
    "CiderConfig",
    "CiderScore",
    "TfIdfCorpus",
    "build_corpus",
    "cider",
    "tfidf_vector",
]
