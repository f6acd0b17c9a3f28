import pytest
from hypothesis import given
from hypothesis import strategies as st

from scenedesc.tokenizer import ngrams, tokenize


def surfaces(text):
    return list(tokenize(text).surfaces)


def test_hyphenated_compound_splits():
    assert surfaces("It is a two-way street.") == ["it", "is", "a", "two", "-", "way", "street", "."]


def test_empty_input_yields_empty_stream():
    assert surfaces("") == []
    assert len(tokenize("   \t\n")) == 0


def test_bracketed_sign_name():
    assert surfaces("A [SCHOOL ZONE] sign is on the right side of the street ahead.") == [
        "a", "[", "school", "zone", "]", "sign",
        "is", "on", "the", "right", "side", "of", "the", "street", "ahead", ".",
    ]


def test_digit_strings_stay_single_tokens():
    assert surfaces("2 cars, 10 lanes") == ["2", "cars", ",", "10", "lanes"]


def test_token_kinds():
    stream = tokenize("2 cars [A] x.")
    kinds = [(t.surface, t.kind) for t in stream]
    assert kinds == [
        ("2", "numeral"),
        ("cars", "word"),
        ("[", "bracket"),
        ("a", "word"),
        ("]", "bracket"),
        ("x", "word"),
        (".", "punctuation"),
    ]


def test_contraction_splits_on_apostrophe():
    assert surfaces("it's raining") == ["it", "'", "s", "raining"]


def test_unigram_counts():
    counts = ngrams(tokenize("it is clear daytime ."), 1)
    assert len(counts) == 5
    assert all(v == 1 for v in counts.values())


def test_four_gram_windows():
    counts = ngrams(tokenize("it is clear daytime ."), 4)
    assert counts == {
        ("it", "is", "clear", "daytime"): 1,
        ("is", "clear", "daytime", "."): 1,
    }


def test_repeated_bigram_multiplicity():
    assert ngrams(["a", "a", "a"], 2) == {("a", "a"): 2}


def test_order_zero_rejected():
    with pytest.raises(ValueError):
        ngrams(tokenize("a b"), 0)


words = st.text(alphabet="abcdefghijklmnopqrstuvwxyz0123456789,.'\"[]- ", min_size=0, max_size=60)


@given(words)
def test_tokenize_idempotent_under_rejoin(text):
    stream = tokenize(text)
    assert tokenize(stream.detokenize()) == stream


@given(st.text(max_size=60))
def test_tokenize_never_uppercase_and_no_whitespace(text):
    for token in tokenize(text):
        assert token.surface == token.surface.lower()
        assert not any(ch.isspace() for ch in token.surface)


@given(words, st.integers(min_value=1, max_value=5))
def test_ngram_total_multiplicity(text, order):
    stream = tokenize(text)
    total = sum(ngrams(stream, order).values())
    assert total == max(len(stream) - order + 1, 0)
