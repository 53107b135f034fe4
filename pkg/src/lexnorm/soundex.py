"""Refined Soundex: variable-length phonetic codes and candidate filtering."""
from __future__ import annotations

from collections.abc import Iterable

from .distance import DistanceCandidate

GROUPS = {
    "0": "aeiouhwy",
    "1": "bp",
    "2": "fv",
    "3": "cks",
    "4": "gj",
    "5": "qxz",
    "6": "dt",
    "7": "l",
    "8": "mn",
    "9": "r",
}
DIGIT = {letter: digit for digit, letters in GROUPS.items() for letter in letters}


class EncodingError(ValueError):
    pass


def encode(word: str) -> str:
    """Initial letter, then one digit per letter with equal neighbours merged.

    The initial letter is itself encoded, zeros are kept and the code is never
    truncated, so ``encode("hello") == "H070"``.
    """
    letters = word.replace("'", "").lower()
    if not letters:
        raise EncodingError(f"nothing to encode in {word!r}")
    code = [letters[0].upper()]
    last = None
    for ch in letters:
        digit = DIGIT.get(ch)
        if digit is None:
            raise EncodingError(f"cannot encode {ch!r} in {word!r}")
        if digit != last:
            code.append(digit)
            last = digit
    return "".join(code)


def try_encode(word: str) -> str | None:
    try:
        return encode(word)
    except EncodingError:
        return None


def phonetic_filter(query: str, candidates: Iterable[DistanceCandidate | str]) -> list[str]:
    target = encode(query)
    out = []
    for cand in candidates:
        word = cand if isinstance(cand, str) else cand.word
        if try_encode(word) == target:
            out.append(word)
    return out
