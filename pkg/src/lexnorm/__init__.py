"""Lexical normalisation of noisy short text messages."""
from .distance import (DistanceCandidate, DistanceIndex, available_backends, build_index,
                       candidates_within, levenshtein)
from .lexicon import Lexicon, LoadError, contains, load_lexicon
from .ngram import ContextPattern, FiveGram, FiveGramIndex, context_score, load_fivegrams, select_by_context
from .norvig import FrequencyModel, correct, edits1, train
from .pipeline import Method, NormalisationResult, Resources, normalise_message, normalise_token
from .soundex import encode, phonetic_filter
from .tokens import Tag, TaggedToken, Token, classify, tokenize

__version__ = "0.1.0"
__all__ = [
    "ContextPattern", "DistanceCandidate", "DistanceIndex", "FiveGram", "FiveGramIndex",
    "FrequencyModel", "Lexicon", "LoadError", "Method", "NormalisationResult", "Resources",
    "Tag", "TaggedToken", "Token", "available_backends", "build_index", "candidates_within",
    "classify", "contains", "context_score", "correct", "edits1", "encode", "levenshtein",
    "load_fivegrams", "load_lexicon", "normalise_message", "normalise_token",
    "phonetic_filter", "select_by_context", "tokenize", "train",
]
