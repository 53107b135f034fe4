import pytest
from hypothesis import given
from hypothesis import strategies as st

from lexnorm.lexicon import Lexicon, LoadError, contains, load_lexicon


def write(tmp_path, text, name="words.txt"):
    p = tmp_path / name
    p.write_bytes(text.encode("utf-8"))
    return p


def test_case_fold_and_dedupe(tmp_path):
    lex = load_lexicon(write(tmp_path, "the\nCat\ncat\n"))
    assert lex.size == 2
    assert lex.words == {"the", "cat"}


def test_single_word(tmp_path):
    assert load_lexicon(write(tmp_path, "a\n")).size == 1


def test_blank_file_is_an_error(tmp_path):
    with pytest.raises(LoadError):
        load_lexicon(write(tmp_path, "\n  \n\n"))


def test_missing_file_names_path(tmp_path):
    missing = tmp_path / "nope.txt"
    with pytest.raises(LoadError, match="nope.txt"):
        load_lexicon(missing)


def test_crlf_and_trimming(tmp_path):
    lex = load_lexicon(write(tmp_path, "  the \r\ncat\r\n"))
    assert lex.words == {"the", "cat"}


def test_interior_whitespace_skipped(tmp_path, caplog):
    lex = load_lexicon(write(tmp_path, "new york\ncat\n"))
    assert lex.words == {"cat"}
    assert "interior whitespace" in caplog.text


@pytest.mark.parametrize("token,expected", [("cat", True), ("Cat", True), ("kat", False)])
def test_contains(token, expected):
    lex = Lexicon.from_words(["the", "cat"])
    assert contains(lex, token) is expected


@given(st.lists(st.text(alphabet="abcXYZé'", min_size=1, max_size=8), min_size=1, max_size=30))
def test_every_source_word_is_contained(tmp_path_factory, words):
    path = tmp_path_factory.mktemp("lex") / "w.txt"
    path.write_text("\n".join(words) + "\n", encoding="utf-8")
    first, second = load_lexicon(path), load_lexicon(path)
    assert first.words == second.words
    assert all(contains(first, w) for w in words)
    assert first.size == len({w.lower() for w in words})
