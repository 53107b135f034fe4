"""Frequency-based spelling correction in the style of Peter Norvig."""
from __future__ import annotations

import os
import re
import string
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property

from .lexicon import LoadError

ALPHABET = string.ascii_lowercase
_WORD = re.compile(r"[^\W\d_]+")


class TrainingError(ValueError):
    pass


@dataclass(frozen=True)
class FrequencyModel:
    counts: dict[str, int]
    alphabet: str = ALPHABET
    total: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "total", sum(self.counts.values()))

    def __contains__(self, word: str) -> bool:
        return word in self.counts

    def count(self, word: str) -> int:
        return self.counts.get(word, 0)

    @cached_property
    def neighbours(self) -> "NeighbourIndex":
        return NeighbourIndex(self.counts, self.alphabet)


_GAP = "\0"


class NeighbourIndex:
    """Answers ``known(edits1(e))`` without generating ``edits1(e)``.

    ``by_deletion`` maps each one-letter deletion of a known word to the
    ``(word, position)`` pairs producing it, which covers inserts into ``e``.
    ``by_gap`` maps each word with one letter blanked out to the words
    sharing that shape, which covers replacements. Deletes and transposes of
    ``e`` are looked up directly.
    """

    def __init__(self, counts, alphabet: str = ALPHABET):
        self.counts = counts
        self.alphabet = frozenset(alphabet)
        by_deletion: dict[str, list[tuple[str, int]]] = {}
        by_gap: dict[str, list[tuple[str, int]]] = {}
        for w in counts:
            for i in range(len(w)):
                by_deletion.setdefault(w[:i] + w[i + 1:], []).append((w, i))
                by_gap.setdefault(w[:i] + _GAP + w[i + 1:], []).append((w, i))
        self.by_deletion = by_deletion
        self.by_gap = by_gap

    def known_edits1(self, e: str, out: set[str] | None = None) -> set[str]:
        found = set() if out is None else out
        counts, alphabet = self.counts, self.alphabet
        for i in range(len(e)):
            d = e[:i] + e[i + 1:]
            if d in counts:
                found.add(d)
            for w, j in self.by_gap.get(e[:i] + _GAP + e[i + 1:], ()):
                if w[j] in alphabet:
                    found.add(w)
            if i + 1 < len(e):
                t = e[:i] + e[i + 1] + e[i] + e[i + 2:]
                if t in counts:
                    found.add(t)
        for w, j in self.by_deletion.get(e, ()):
            if w[j] in alphabet:
                found.add(w)
        return found


def train(corpus_text: str) -> FrequencyModel:
    """Count maximal runs of letters in ``corpus_text``, case-folded."""
    counts = Counter(_WORD.findall(corpus_text.lower()))
    if not counts:
        raise TrainingError("corpus contains no alphabetic words")
    return FrequencyModel(dict(counts))


def load_model(path: str | os.PathLike) -> FrequencyModel:
    path = os.fspath(path)
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise LoadError(f"cannot read corpus {path!r}: {exc}") from exc
    try:
        return train(text)
    except TrainingError as exc:
        raise LoadError(f"corpus {path!r}: {exc}") from exc


def edits1(word: str, alphabet: str = ALPHABET) -> list[str]:
    """Every string one delete, transpose, replace or insert away.

    Duplicates are kept, so the length is exactly ``2n + 2an + a - 1``.
    """
    splits = [(word[:i], word[i:]) for i in range(len(word) + 1)]
    deletes = [L + R[1:] for L, R in splits if R]
    transposes = [L + R[1] + R[0] + R[2:] for L, R in splits if len(R) > 1]
    replaces = [L + c + R[1:] for L, R in splits if R for c in alphabet]
    inserts = [L + c + R for L, R in splits for c in alphabet]
    return deletes + transposes + replaces + inserts


def edits2(word: str, alphabet: str = ALPHABET):
    return (e2 for e1 in set(edits1(word, alphabet)) for e2 in edits1(e1, alphabet))


def known(words, model: FrequencyModel) -> set[str]:
    counts = model.counts
    return {w for w in words if w in counts}


def candidates(word: str, model: FrequencyModel) -> set[str]:
    """The first non-empty tier: the word, its known edits1, then its known edits2.

    Same sets as ``known(edits1(word))`` and ``known(edits2(word))``.
    """
    if word in model.counts:
        return {word}
    index = model.neighbours
    found = index.known_edits1(word)
    if found:
        return found
    for e1 in set(edits1(word, model.alphabet)):
        index.known_edits1(e1, found)
    return found


def correct(word: str, model: FrequencyModel) -> str | None:
    found = candidates(word, model)
    if not found:
        return None
    return min(found, key=lambda w: (-model.counts[w], w))
