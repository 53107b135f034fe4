import random
import string

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lexnorm.norvig import (ALPHABET, NeighbourIndex, TrainingError, candidates, correct, edits1,
                            edits2, known, load_model, train)
from lexnorm.lexicon import LoadError
from oracles import levenshtein_matrix


def literal_candidates(word, model):
    if word in model.counts:
        return {word}
    return known(edits1(word), model) or known(edits2(word), model)


def test_train_counts():
    m = train("The the THE he")
    assert m.counts == {"the": 3, "he": 1}
    assert m.total == 4
    assert train("a-b a").counts == {"a": 2, "b": 1}


def test_train_rejects_empty_corpus():
    with pytest.raises(TrainingError):
        train("12345")


def test_load_model_errors(tmp_path):
    with pytest.raises(LoadError, match="missing.txt"):
        load_model(tmp_path / "missing.txt")
    empty = tmp_path / "empty.txt"
    empty.write_text("1 2 3 !!", encoding="utf-8")
    with pytest.raises(LoadError):
        load_model(empty)


def test_edits1_membership():
    generated = edits1("ab")
    assert {"ba", "a", "b"} <= set(generated)


@pytest.mark.parametrize("n", range(1, 11))
def test_edits1_count_formula(n):
    a = len(ALPHABET)
    word = "".join(random.Random(n).choice(ALPHABET) for _ in range(n))
    assert len(edits1(word)) == 2 * n + 2 * a * n + a - 1


def test_edits1_count_examples():
    assert len(edits1("abc")) == 187
    assert len(edits1("a")) == 79


def transposes(w):
    return {w[:i] + w[i + 1] + w[i] + w[i + 2:] for i in range(len(w) - 1)}


def test_edit_distance_bounds():
    # A transposition is one edit here but two under Levenshtein.
    rng = random.Random(1)
    for _ in range(5):
        w = "".join(rng.choice(ALPHABET) for _ in range(rng.randint(1, 5)))
        e1 = set(edits1(w))
        assert all(levenshtein_matrix(w, e) <= 1 for e in e1 - transposes(w))
        assert all(levenshtein_matrix(w, e) <= 2 for e in e1)
        assert all(levenshtein_matrix(w, e) <= 4 for e in set(edits2(w)))


def test_transposition_is_levenshtein_two():
    assert "ba" in edits1("ab")
    assert levenshtein_matrix("ab", "ba") == 2


@pytest.mark.parametrize("word,expected", [("the", "the"), ("th", "the"), ("zzzz", None)])
def test_correct_examples(word, expected):
    assert correct(word, train("the the the he")) == expected


def test_known_word_beats_frequent_neighbour():
    m = train("cat " * 10 + "cats")
    assert correct("cats", m) == "cats"


def test_tie_broken_alphabetically():
    m = train("bat cat")
    assert correct("aat", m) == "bat"


def test_falls_through_to_second_tier():
    m = train("hello world")
    assert correct("hxllx", m) == "hello"


vocab = st.lists(st.text(alphabet="abcé", min_size=1, max_size=5), min_size=1, max_size=25)


@settings(max_examples=150, deadline=None)
@given(vocab, st.text(alphabet="abcdé", min_size=1, max_size=5))
def test_indexed_tiers_equal_literal_enumeration(words, query):
    model = train(" ".join(words))
    got = NeighbourIndex(model.counts, model.alphabet)
    assert got.known_edits1(query) == known(edits1(query), model)
    assert candidates(query, model) == literal_candidates(query, model)


def test_correct_never_invents_words():
    rng = random.Random(5)
    m = train(" ".join("".join(rng.choice("abcde") for _ in range(rng.randint(1, 6))) for _ in range(300)))
    for _ in range(200):
        q = "".join(rng.choice(string.ascii_lowercase[:8]) for _ in range(rng.randint(1, 7)))
        r = correct(q, m)
        assert r is None or r in m.counts
        cands = literal_candidates(q, m)
        assert r == (min(cands, key=lambda w: (-m.counts[w], w)) if cands else None)
