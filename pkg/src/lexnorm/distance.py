"""Levenshtein distance and distance-bounded dictionary search.

The inner loop runs in a compiled kernel when ``lexnorm._distance_ext`` was
built, otherwise in the pure-Python kernel. Set ``LEXNORM_BACKEND`` to
``python`` or ``cython`` to force one; ``auto`` (the default) prefers the
compiled kernel.
"""
from __future__ import annotations

import importlib
import os
from dataclasses import dataclass
from types import ModuleType
from typing import NamedTuple

import numpy as np

from . import _distance_py
from .lexicon import Lexicon


def _load_ext() -> ModuleType | None:
    try:
        return importlib.import_module("lexnorm._distance_ext")
    except ImportError:
        return None


_EXT = _load_ext()


def available_backends() -> list[str]:
    names = ["python"]
    if _EXT is not None:
        names.insert(0, "cython")
    return names


def get_backend(name: str | None = None) -> ModuleType:
    name = (name or os.environ.get("LEXNORM_BACKEND") or "auto").lower()
    if name == "auto":
        return _EXT if _EXT is not None else _distance_py
    if name == "python":
        return _distance_py
    if name == "cython":
        if _EXT is None:
            raise ImportError("compiled kernel lexnorm._distance_ext is not built")
        return _EXT
    raise ValueError(f"unknown backend {name!r}")


backend = get_backend()


def levenshtein(a: str, b: str) -> int:
    return backend.levenshtein(a, b)


def bounded_levenshtein(a: str, b: str, k: int) -> int:
    """Exact distance when ``<= k``; otherwise some value ``> k``."""
    return backend.bounded_levenshtein(a, b, k)


class DistanceCandidate(NamedTuple):
    word: str
    distance: int


@dataclass(frozen=True)
class _Bucket:
    words: list[str]
    codes: np.ndarray  # (len(words), length) uint32 code points


def _pack(words: list[str], length: int) -> np.ndarray:
    if length == 0 or not words:
        return np.zeros((len(words), length), dtype=np.uint32)
    raw = "".join(words).encode("utf-32-le")
    return np.frombuffer(raw, dtype=np.uint32).reshape(len(words), length).copy()


class DistanceIndex:
    """Match dictionary grouped into buckets by word length (in code points)."""

    def __init__(self, source: Lexicon, backend_name: str | None = None):
        if not source.size:
            raise ValueError("cannot index an empty lexicon")
        self.source = source
        self.kernel = get_backend(backend_name)
        grouped: dict[int, list[str]] = {}
        for word in source.words:
            grouped.setdefault(len(word), []).append(word)
        self._buckets = {}
        for length, words in grouped.items():
            words.sort()
            self._buckets[length] = _Bucket(words, _pack(words, length))

    @property
    def buckets(self) -> dict[int, list[str]]:
        return {length: b.words for length, b in sorted(self._buckets.items())}

    def __contains__(self, word: str) -> bool:
        return word in self.source

    def candidates_within(self, query: str, max_dist: int = 2) -> list[DistanceCandidate]:
        n = len(query)
        found = []
        for length in range(max(0, n - max_dist), n + max_dist + 1):
            bucket = self._buckets.get(length)
            if bucket is None:
                continue
            for pos, d in self.kernel.scan_bucket(query, bucket.words, bucket.codes, max_dist):
                found.append(DistanceCandidate(bucket.words[pos], d))
        found.sort(key=lambda c: (c.distance, c.word))
        return found


def build_index(lex: Lexicon, backend_name: str | None = None) -> DistanceIndex:
    return DistanceIndex(lex, backend_name)


def candidates_within(index: DistanceIndex, query: str, max_dist: int = 2) -> list[DistanceCandidate]:
    return index.candidates_within(query, max_dist)
