"""Seeded synthetic stand-ins for the four corpora, at full or reduced scale.

Words are random letter strings drawn with English letter frequencies, so
the length profile and bucket sizes resemble a real dictionary. Noisy
messages mix IV words, mentions, hashtags and OOV tokens made by applying
one or two random edits to dictionary words.

Usage::

    python -m lexnorm.synthetic OUTDIR [--scale 0.1] [--seed 0]
"""
from __future__ import annotations

import argparse
import os
from dataclasses import dataclass

import numpy as np

DICT_SIZE = 645_288
LEXICON_SIZE = 115_326
CORPUS_WORDS = 1_000_000
FIVEGRAM_LINES = 1_044_268

_LETTERS = np.array(list("abcdefghijklmnopqrstuvwxyz"))
_FREQ = np.array([8.2, 1.5, 2.8, 4.3, 12.7, 2.2, 2.0, 6.1, 7.0, 0.15, 0.77, 4.0, 2.4,
                  6.7, 7.5, 1.9, 0.095, 6.0, 6.3, 9.1, 2.8, 0.98, 2.4, 0.15, 2.0, 0.074])
_FREQ = _FREQ / _FREQ.sum()


@dataclass(frozen=True)
class CorpusPaths:
    lexicon: str
    dictionary: str
    corpus: str
    fivegrams: str
    messages: str


def random_words(rng: np.random.Generator, count: int) -> list[str]:
    """``count`` distinct lowercase words, lengths roughly 2..20 around 9."""
    words: set[str] = set()
    out: list[str] = []
    while len(out) < count:
        need = int((count - len(out)) * 1.2) + 16
        lengths = np.clip(np.rint(rng.normal(9, 3, need)), 2, 20).astype(int)
        letters = rng.choice(_LETTERS, size=(need, 20), p=_FREQ)
        for row, n in zip(letters, lengths):
            w = "".join(row[:n])
            if w not in words:
                words.add(w)
                out.append(w)
                if len(out) == count:
                    break
    return out


def zipf_sample(rng: np.random.Generator, vocab: list[str], size: int, a: float = 1.1) -> np.ndarray:
    ranks = np.arange(1, len(vocab) + 1, dtype=float)
    p = ranks ** -a
    p /= p.sum()
    return rng.choice(len(vocab), size=size, p=p)


def perturb(rng: np.random.Generator, word: str, edits: int) -> str:
    for _ in range(edits):
        op = rng.integers(3)
        i = int(rng.integers(len(word)))
        c = str(rng.choice(_LETTERS, p=_FREQ))
        if op == 0 and len(word) > 2:
            word = word[:i] + word[i + 1:]
        elif op == 1:
            word = word[:i] + c + word[i + 1:]
        else:
            word = word[:i] + c + word[i:]
    return word


def make_messages(rng: np.random.Generator, iv: list[str], dictionary: list[str], count: int,
                  iv_set: set[str]) -> list[str]:
    messages = []
    common = iv[:5000]
    for _ in range(count):
        toks = [common[int(i)] for i in zipf_sample(rng, common, int(rng.integers(5, 12)))]
        for _ in range(int(rng.integers(1, 4))):
            while True:
                oov = perturb(rng, dictionary[int(rng.integers(len(dictionary)))], int(rng.integers(1, 3)))
                if oov not in iv_set:
                    break
            toks.insert(int(rng.integers(len(toks) + 1)), oov)
        if rng.random() < 0.3:
            toks.insert(0, "@user" + str(int(rng.integers(1000))))
        if rng.random() < 0.3:
            toks.append("#tag" + str(int(rng.integers(1000))))
        messages.append(" ".join(toks))
    return messages


def write_corpora(outdir: str | os.PathLike, scale: float = 1.0, seed: int = 0,
                  n_messages: int = 200) -> CorpusPaths:
    rng = np.random.default_rng(seed)
    outdir = os.fspath(outdir)
    os.makedirs(outdir, exist_ok=True)
    dictionary = random_words(rng, max(50, int(DICT_SIZE * scale)))
    iv = dictionary[: max(20, int(LEXICON_SIZE * scale))]
    iv_set = set(iv)
    freq_vocab = iv[: max(20, len(iv) // 4)]

    paths = CorpusPaths(*(os.path.join(outdir, name) for name in
                          ("words.txt", "words.utf-8.txt", "big.txt", "w5_.txt", "messages.txt")))
    with open(paths.lexicon, "w", encoding="utf-8") as fh:
        fh.write("\n".join(iv) + "\n")
    with open(paths.dictionary, "w", encoding="utf-8") as fh:
        fh.write("\n".join(dictionary) + "\n")

    corpus = zipf_sample(rng, freq_vocab, max(100, int(CORPUS_WORDS * scale)))
    with open(paths.corpus, "w", encoding="utf-8") as fh:
        for start in range(0, len(corpus), 12):
            fh.write(" ".join(freq_vocab[i] for i in corpus[start:start + 12]) + ".\n")

    n5 = max(20, int(FIVEGRAM_LINES * scale))
    grams = zipf_sample(rng, freq_vocab, n5 * 5).reshape(n5, 5)
    freqs = rng.integers(1, 200, n5)
    with open(paths.fivegrams, "w", encoding="utf-8") as fh:
        fh.writelines(f"{f} {' '.join(freq_vocab[i] for i in row)}\n" for f, row in zip(freqs, grams))

    with open(paths.messages, "w", encoding="utf-8") as fh:
        fh.write("\n".join(make_messages(rng, iv, dictionary, n_messages, iv_set)) + "\n")
    return paths


def main(argv=None):
    p = argparse.ArgumentParser(prog="python -m lexnorm.synthetic", description=__doc__.splitlines()[0])
    p.add_argument("outdir")
    p.add_argument("--scale", type=float, default=1.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--messages", type=int, default=200)
    args = p.parse_args(argv)
    paths = write_corpora(args.outdir, args.scale, args.seed, args.messages)
    for name, path in vars(paths).items():
        print(f"{name}\t{path}")


if __name__ == "__main__":
    main()
