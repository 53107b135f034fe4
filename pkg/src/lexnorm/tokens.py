"""Tokenisation and IV / OOV / NO tagging of raw messages."""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass

from .lexicon import Lexicon


class Tag(str, enum.Enum):
    IV = "IV"
    OOV = "OOV"
    NO = "NO"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Token:
    text: str
    index: int


@dataclass(frozen=True)
class TaggedToken:
    token: Token
    tag: Tag

    @property
    def text(self) -> str:
        return self.token.text


_URL_PREFIXES = ("http://", "https://", "www.")
_DIGIT = re.compile(r"\d")


def tokenize(line: str) -> list[Token]:
    return [Token(text, i) for i, text in enumerate(line.split())]


def is_non_candidate(text: str) -> bool:
    """True for mentions, hashtags, URLs, and anything not built from letters."""
    if text[0] in "@#":
        return True
    if text.lower().startswith(_URL_PREFIXES):
        return True
    if _DIGIT.search(text):
        return True
    has_letter = False
    for ch in text:
        if ch.isalpha():
            has_letter = True
        elif ch != "'":
            return True
    # only apostrophes
    return not has_letter


def classify(token: Token, lex: Lexicon) -> TaggedToken:
    if is_non_candidate(token.text):
        return TaggedToken(token, Tag.NO)
    if token.text in lex:
        return TaggedToken(token, Tag.IV)
    return TaggedToken(token, Tag.OOV)


def classify_line(line: str, lex: Lexicon) -> list[TaggedToken]:
    return [classify(tok, lex) for tok in tokenize(line)]
