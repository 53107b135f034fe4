"""Per-token normalisation cascade and the per-message driver."""
from __future__ import annotations

import enum
from dataclasses import dataclass

from . import soundex
from .distance import DistanceIndex, build_index, levenshtein
from .lexicon import Lexicon, load_lexicon
from .ngram import FiveGramIndex, load_fivegrams, select_by_context
from .norvig import FrequencyModel, correct, load_model
from .tokens import Tag, TaggedToken, classify_line


class Method(str, enum.Enum):
    IDENTITY = "Identity"
    NORVIG_ONLY = "NorvigOnly"
    PHONETIC_AGREEMENT = "PhoneticAgreement"
    CONTEXT_SELECTION = "ContextSelection"
    FALLBACK = "Fallback"
    UNCHANGED = "Unchanged"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Resources:
    iv_lexicon: Lexicon
    match_index: DistanceIndex
    freq_model: FrequencyModel
    fivegram_index: FiveGramIndex
    max_dist: int = 2

    @classmethod
    def load(cls, lexicon_path, dict_path, corpus_path, fivegram_path,
             max_dist: int = 2, backend: str | None = None) -> "Resources":
        return cls(
            load_lexicon(lexicon_path),
            build_index(load_lexicon(dict_path), backend),
            load_model(corpus_path),
            load_fivegrams(fivegram_path),
            max_dist,
        )


@dataclass(frozen=True)
class NormalisationResult:
    original: str
    tag: Tag
    normalised: str
    method: Method


@dataclass(frozen=True)
class Trace:
    """Intermediate sets of one OOV normalisation, kept for inspection."""

    distance_matches: list
    phonetic_matches: list[str]
    norvig: str | None


def _trace(query: str, res: Resources) -> Trace:
    matches = res.match_index.candidates_within(query, res.max_dist)
    letters = query.replace("'", "")
    code = soundex.try_encode(letters)
    phonetic = soundex.phonetic_filter(letters, matches) if code else []
    return Trace(matches, phonetic, correct(letters, res.freq_model))


def normalise_token(query: TaggedToken, prev: TaggedToken | None, next: TaggedToken | None,
                    res: Resources) -> NormalisationResult:
    original = query.text
    if query.tag is not Tag.OOV:
        return NormalisationResult(original, query.tag, original, Method.IDENTITY)

    q = original.lower()
    trace = _trace(q, res)
    phonetic, v = trace.phonetic_matches, trace.norvig

    if not phonetic:
        if v is None:
            return NormalisationResult(original, query.tag, original, Method.UNCHANGED)
        return NormalisationResult(original, query.tag, v, Method.NORVIG_ONLY)
    if len(phonetic) == 1 and v == phonetic[0]:
        return NormalisationResult(original, query.tag, v, Method.PHONETIC_AGREEMENT)

    pool = list(phonetic)
    method = Method.CONTEXT_SELECTION
    if len(phonetic) == 1:
        method = Method.FALLBACK
        # Norvig's word joins only if the match dictionary knows it.
        if v is not None and v in res.match_index and v not in pool:
            pool.append(v)
    tie_data = {w: (levenshtein(q, w), res.freq_model.count(w)) for w in pool}
    best = select_by_context(res.fivegram_index, pool, prev, next, tie_data)
    return NormalisationResult(original, query.tag, best, method)


def normalise_message(line: str, res: Resources) -> list[NormalisationResult]:
    tagged = classify_line(line, res.iv_lexicon)
    out = []
    for i, tok in enumerate(tagged):
        prev = tagged[i - 1] if i > 0 else None
        nxt = tagged[i + 1] if i + 1 < len(tagged) else None
        out.append(normalise_token(tok, prev, nxt, res))
    return out


def explain(word: str, res: Resources) -> Trace:
    """Step-by-step candidate sets for a single lowercase word."""
    return _trace(word.lower(), res)
