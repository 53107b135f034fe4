import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from lexnorm import FiveGram, FiveGramIndex, Lexicon, available_backends, build_index, train  # noqa: E402
from lexnorm.pipeline import Resources  # noqa: E402

FIXTURES = os.path.join(os.path.dirname(__file__), "fixtures")

# 5-gram fixtures from the context-matching examples
STORE_GRAMS = [
    FiveGram(("i", "went", "to", "the", "store"), 3),
    FiveGram(("going", "to", "the", "store", "today"), 5),
    FiveGram(("to", "three", "store", "aisles", "now"), 2),
]
TONIGHT_GRAMS = [
    FiveGram(("i", "will", "see", "you", "there"), 4),
    FiveGram(("see", "you", "there", "tonight", "ok"), 6),
    FiveGram(("you", "three", "tonight", "again", "yes"), 1),
]


@pytest.fixture(params=available_backends())
def backend(request):
    return request.param


def make_resources(iv, dictionary, corpus, grams=TONIGHT_GRAMS, backend=None):
    return Resources(
        Lexicon.from_words(iv),
        build_index(Lexicon.from_words(dictionary), backend),
        train(corpus),
        FiveGramIndex.from_entries(grams),
    )


@pytest.fixture
def fixture_paths():
    names = ("words.txt", "words.utf-8.txt", "big.txt", "w5_.txt", "messages.txt")
    return {n: os.path.join(FIXTURES, n) for n in names}


ACCEPTANCE: list[tuple[str, bool, str]] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in sorted(ACCEPTANCE):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")
