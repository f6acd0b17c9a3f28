import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from scenedesc.metrics import build_corpus, cider, tfidf_vector
from scenedesc.tokenizer import tokenize


def corpus_of(*image_refs):
    return build_corpus([(f"img_{i:03d}", [tokenize(t) for t in refs]) for i, refs in enumerate(image_refs)])


def test_ubiquitous_ngram_has_zero_idf():
    corpus = corpus_of(["a car ."], ["a car drives ."])
    assert corpus.document_frequency(("car",)) == 2
    assert corpus.idf(("car",)) == pytest.approx(math.log(2 / 2))


def test_rare_ngram_idf_is_log_two():
    corpus = corpus_of(["a car ."], ["a bus ."])
    assert corpus.idf(("bus",)) == pytest.approx(math.log(2), abs=1e-12)


def test_single_image_corpus_all_idf_zero():
    corpus = corpus_of(["a car .", "a bus ."])
    assert corpus.idf(("car",)) == 0.0
    assert corpus.idf(("bus",)) == 0.0


def test_duplicate_image_ids_rejected():
    refs = [tokenize("a car .")]
    with pytest.raises(ValueError):
        build_corpus([("img", refs), ("img", refs)])


def test_document_frequency_counts_image_once():
    # the n-gram appears in two references of the same image: df must be 1
    corpus = corpus_of(["a car .", "a car here ."], ["a bus ."])
    assert corpus.document_frequency(("car",)) == 1


def test_empty_stream_zero_vector():
    corpus = corpus_of(["a car ."], ["a bus ."])
    assert tfidf_vector(tokenize(""), corpus, 1) == {}


def test_single_unigram_vector_weight():
    corpus = corpus_of(["bus"], ["car"])
    vector = tfidf_vector(tokenize("bus"), corpus, 1)
    assert vector == {("bus",): pytest.approx(math.log(2))}


def test_vector_components_non_negative():
    corpus = corpus_of(["a car ."], ["a bus ."])
    for order in (1, 2):
        vector = tfidf_vector(tokenize("an unseen bus drives ."), corpus, order)
        assert all(weight >= 0 for weight in vector.values())


def test_degenerate_single_image_scores_zero():
    references = [tokenize("a red car is parked ."), tokenize("a bus is driving .")]
    corpus = build_corpus([("only", references)])
    score = cider(tokenize("a red car is parked ."), references, corpus)
    assert score.value == 0.0
    assert score.degenerate


def test_empty_candidate_scores_zero():
    references = [tokenize("a car .")]
    corpus = corpus_of(["a car ."], ["a bus ."])
    score = cider(tokenize(""), references, corpus)
    assert score.value == 0.0


def test_echo_floor_in_two_image_corpus():
    references = [tokenize("a red car is parked nearby .")]
    corpus = build_corpus([("one", references), ("two", [tokenize("a bus stops here often .")])])
    score = cider(tokenize("a red car is parked nearby ."), references, corpus)
    nonzero_orders = sum(1 for sim in score.per_order if sim > 0)
    assert nonzero_orders == 4
    assert score.value >= 10 * (1 / 4) * (1 / 1) * nonzero_orders - 1e-9
    assert score.value == pytest.approx(10.0)


def test_mismatched_corpus_rejected():
    corpus = corpus_of(["a car ."], ["a bus ."])
    with pytest.raises(ValueError):
        cider(tokenize("a car ."), [tokenize("a truck sits .")], corpus)


def test_cache_round_trip(tmp_path):
    corpus = corpus_of(["a car is parked ."], ["a bus is driving ."])
    path = tmp_path / "corpus.jsonl"
    corpus.save(path)
    loaded = corpus.load(path)
    assert loaded.image_count == corpus.image_count
    candidate = tokenize("a car is driving .")
    references = [tokenize("a car is parked .")]
    assert cider(candidate, references, loaded) == cider(candidate, references, corpus)


token = st.sampled_from(["car", "bus", "lane", "street", "red", "is", "."])
sentence = st.lists(token, min_size=1, max_size=8).map(lambda ws: tokenize(" ".join(ws)))


@settings(max_examples=200, deadline=None)
@given(st.lists(st.lists(sentence, min_size=1, max_size=3), min_size=1, max_size=4), sentence, st.randoms())
def test_score_bounds_and_reference_permutation(image_sets, candidate, rng):
    reference_sets = [(f"img_{i}", refs) for i, refs in enumerate(image_sets)]
    corpus = build_corpus(reference_sets)
    references = image_sets[0]
    score = cider(candidate, references, corpus)
    assert 0.0 <= score.value <= 10.0 + 1e-9
    shuffled = list(references)
    rng.shuffle(shuffled)
    assert cider(candidate, shuffled, corpus).value == pytest.approx(score.value, abs=1e-12)
