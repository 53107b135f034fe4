"""Word-list corpora: the in-vocabulary lexicon and the match dictionary.

Both files share one format (UTF-8, one word per line) and one loader; they
differ only in how the pipeline uses them.
"""
from __future__ import annotations

import logging
import os
from dataclasses import dataclass, field

log = logging.getLogger(__name__)


class LoadError(Exception):
    """A corpus file could not be read or yielded nothing usable."""


@dataclass(frozen=True)
class Lexicon:
    words: frozenset[str]
    source_path: str | None = None
    size: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "size", len(self.words))

    @classmethod
    def from_words(cls, words, source_path=None) -> "Lexicon":
        folded = frozenset(w.strip().lower() for w in words if w.strip())
        return cls(folded, source_path)

    def __contains__(self, token: str) -> bool:
        return token.lower() in self.words

    def __len__(self) -> int:
        return self.size

    def __iter__(self):
        return iter(self.words)


def load_lexicon(path: str | os.PathLike) -> Lexicon:
    path = os.fspath(path)
    try:
        with open(path, encoding="utf-8", newline=None) as fh:
            lines = fh.read().splitlines()
    except (OSError, UnicodeDecodeError) as exc:
        raise LoadError(f"cannot read lexicon {path!r}: {exc}") from exc

    words = set()
    skipped = 0
    for line in lines:
        word = line.strip()
        if not word:
            continue
        if any(ch.isspace() for ch in word):
            skipped += 1
            continue
        words.add(word.lower())
    if skipped:
        log.warning("%s: skipped %d lines containing interior whitespace", path, skipped)
    if not words:
        raise LoadError(f"lexicon {path!r} has no usable lines")
    return Lexicon(frozenset(words), path)


def contains(lex: Lexicon, token: str) -> bool:
    return token in lex
