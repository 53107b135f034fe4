"""5-gram context scoring and context-based candidate selection.

Every contiguous 2- and 3-token window of every 5-gram is counted once per
position, weighted by the 5-gram's frequency. Windows are stored as sorted
arrays of packed integer keys with their summed frequencies, so a lookup is
one binary search.
"""
from __future__ import annotations

import logging
import os
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass

import numpy as np

from .lexicon import LoadError
from .tokens import Tag, TaggedToken

log = logging.getLogger(__name__)

N = 5


@dataclass(frozen=True)
class FiveGram:
    tokens: tuple[str, ...]
    freq: int = 1

    def __post_init__(self):
        if len(self.tokens) != N or not all(self.tokens):
            raise ValueError(f"a 5-gram needs five non-empty tokens, got {self.tokens!r}")
        if self.freq < 1:
            raise ValueError(f"5-gram frequency must be positive, got {self.freq}")


@dataclass(frozen=True)
class ContextPattern:
    prev: str | None = None
    next: str | None = None

    def window(self, candidate: str) -> tuple[str, ...]:
        parts = (self.prev, candidate, self.next)
        return tuple(p for p in parts if p is not None)


class FiveGramIndex:
    def __init__(self, vocab: dict[str, int], ids: np.ndarray, freq: np.ndarray, malformed: int = 0):
        self.vocab = vocab
        self.ids = ids
        self.freq = freq
        self.malformed = malformed
        self._words = None
        v = np.int64(len(vocab) + 1)
        self._v = v

        pair_keys = np.concatenate([ids[:, i] * v + ids[:, i + 1] for i in range(N - 1)])
        self.pair_keys, inverse = np.unique(pair_keys, return_inverse=True)
        self.pair_sums = _sum_by(inverse, np.tile(freq, N - 1), len(self.pair_keys))

        # A triple is keyed by the rank of its leading pair and its last token.
        ranks = np.searchsorted(self.pair_keys, pair_keys).reshape(N - 1, -1)
        triple_keys = np.concatenate([ranks[i] * v + ids[:, i + 2] for i in range(N - 2)])
        self.triple_keys, inverse = np.unique(triple_keys, return_inverse=True)
        self.triple_sums = _sum_by(inverse, np.tile(freq, N - 2), len(self.triple_keys))

    @classmethod
    def from_entries(cls, entries: Iterable[FiveGram], malformed: int = 0) -> "FiveGramIndex":
        return cls.from_rows(((g.tokens, g.freq) for g in entries), malformed)

    @classmethod
    def from_rows(cls, rows: Iterable[tuple[Sequence[str], int]], malformed: int = 0) -> "FiveGramIndex":
        vocab: dict[str, int] = {}
        flat: list[int] = []
        freqs: list[int] = []
        for tokens, freq in rows:
            flat.extend([vocab.setdefault(t, len(vocab) + 1) for t in tokens])
            freqs.append(freq)
        ids = np.array(flat, dtype=np.int64).reshape(-1, N)
        return cls(vocab, ids, np.array(freqs, dtype=np.int64), malformed)

    def __len__(self) -> int:
        return len(self.freq)

    def entries(self):
        if self._words is None:
            words = [""] * (len(self.vocab) + 1)
            for w, i in self.vocab.items():
                words[i] = w
            self._words = words
        words = self._words
        for row, f in zip(self.ids.tolist(), self.freq.tolist()):
            yield FiveGram(tuple(words[i] for i in row), f)

    def _pair_rank(self, a: int, b: int) -> int | None:
        key = a * self._v + b
        pos = int(np.searchsorted(self.pair_keys, key))
        if pos < len(self.pair_keys) and self.pair_keys[pos] == key:
            return pos
        return None

    def window_count(self, window: Sequence[str]) -> int:
        """Frequency-weighted occurrences of a 2- or 3-token window."""
        ids = [self.vocab.get(t.lower()) for t in window]
        if None in ids:
            return 0
        if len(ids) == 2:
            rank = self._pair_rank(*ids)
            return 0 if rank is None else int(self.pair_sums[rank])
        if len(ids) == 3:
            rank = self._pair_rank(ids[0], ids[1])
            if rank is None:
                return 0
            key = rank * self._v + ids[2]
            pos = int(np.searchsorted(self.triple_keys, key))
            if pos < len(self.triple_keys) and self.triple_keys[pos] == key:
                return int(self.triple_sums[pos])
            return 0
        raise ValueError(f"windows must have 2 or 3 tokens, got {len(ids)}")


def _sum_by(groups: np.ndarray, weights: np.ndarray, size: int) -> np.ndarray:
    # float64 sums are exact below 2**53
    return np.bincount(groups.ravel(), weights=weights, minlength=size).astype(np.int64)


def parse_line(line: str) -> tuple[tuple[str, ...], int] | None:
    """``(tokens, freq)`` from ``"freq w1 .. w5"`` or ``"w1 .. w5"``; None if malformed."""
    fields = line.lower().split()
    if len(fields) == N + 1:
        try:
            freq = int(fields[0])
        except ValueError:
            return None
        if freq < 1:
            return None
        return tuple(fields[1:]), freq
    if len(fields) == N:
        return tuple(fields), 1
    return None


def load_fivegrams(path: str | os.PathLike) -> FiveGramIndex:
    path = os.fspath(path)
    rows = []
    malformed = 0
    try:
        with open(path, encoding="utf-8") as fh:
            for line in fh:
                if not line.strip():
                    continue
                row = parse_line(line)
                if row is None:
                    malformed += 1
                else:
                    rows.append(row)
    except (OSError, UnicodeDecodeError) as exc:
        raise LoadError(f"cannot read 5-gram file {path!r}: {exc}") from exc
    if malformed:
        log.warning("%s: skipped %d malformed lines", path, malformed)
    if not rows:
        raise LoadError(f"5-gram file {path!r} has no usable lines")
    return FiveGramIndex.from_rows(rows, malformed)


def context_score(index: FiveGramIndex, candidate: str, pattern: ContextPattern) -> int:
    if pattern.prev is None and pattern.next is None:
        raise ValueError("context pattern needs a previous or next word")
    return index.window_count(pattern.window(candidate))


def build_pattern(prev: TaggedToken | None, next: TaggedToken | None) -> ContextPattern:
    """Keep each neighbour only if it is in vocabulary."""
    return ContextPattern(
        prev.text.lower() if prev is not None and prev.tag is Tag.IV else None,
        next.text.lower() if next is not None and next.tag is Tag.IV else None,
    )


def select_by_context(
    index: FiveGramIndex,
    candidates: Sequence[str],
    prev: TaggedToken | None,
    next: TaggedToken | None,
    tie_data: Mapping[str, tuple[int, int]],
) -> str:
    """Pick the candidate whose context window is most frequent.

    Ties, all-zero scores and the no-IV-neighbour case fall back to smallest
    edit distance, then largest unigram count, then alphabetical order.
    ``tie_data`` maps each candidate to ``(edit distance, unigram count)``.
    """
    if not candidates:
        raise ValueError("no candidates to select from")
    pattern = build_pattern(prev, next)
    scored = pattern.prev is not None or pattern.next is not None

    def rank(word):
        score = context_score(index, word, pattern) if scored else 0
        dist, count = tie_data.get(word, (0, 0))
        return (-score, dist, -count, word)

    return min(candidates, key=rank)
