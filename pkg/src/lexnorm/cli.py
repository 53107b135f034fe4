"""Batch normalisation: one message per input line, one record per token.

Example::

    lexnorm --lexicon words.txt --dict words.utf-8.txt --corpus big.txt \\
        --fivegrams w5_.txt --input tweets.txt --output out.tsv
"""
from __future__ import annotations

import argparse
import contextlib
import json
import logging
import os
import sys
import time
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import islice

from .lexicon import LoadError
from .pipeline import Method, Resources, normalise_message
from .tokens import Tag

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_LOAD = 3

STDIO = "-"
CHUNK = 256


@dataclass(frozen=True)
class Config:
    iv_lexicon_path: str
    match_dict_path: str
    freq_corpus_path: str
    fivegram_path: str
    input_path: str = STDIO
    output_path: str = STDIO
    format: str = "tsv"
    max_dist: int = 2
    jobs: int = 1
    backend: str | None = None

    def validate(self):
        paths = [self.iv_lexicon_path, self.match_dict_path, self.freq_corpus_path, self.fivegram_path]
        if len({os.path.abspath(p) for p in paths}) != len(paths):
            raise ValueError("the four corpus paths must be distinct")
        if self.max_dist < 1:
            raise ValueError("--max-dist must be at least 1")
        if self.jobs < 1:
            raise ValueError("--jobs must be at least 1")
        if self.format not in ("tsv", "jsonl"):
            raise ValueError(f"unknown format {self.format!r}")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lexnorm", description="Lexically normalise noisy short messages.")
    p.add_argument("--lexicon", required=True, help="in-vocabulary word list (words.txt)")
    p.add_argument("--dict", required=True, help="match dictionary (words.utf-8.txt)")
    p.add_argument("--corpus", required=True, help="frequency corpus text (big.txt)")
    p.add_argument("--fivegrams", required=True, help="5-gram file (w5_.txt)")
    p.add_argument("--input", default=STDIO, help="messages, one per line (default: stdin)")
    p.add_argument("--output", default=STDIO, help="output file (default: stdout)")
    p.add_argument("--format", choices=("tsv", "jsonl"), default="tsv")
    p.add_argument("--max-dist", type=int, default=2, help="edit-distance bound (default: 2)")
    p.add_argument("--jobs", type=int, default=1, help="worker threads (output order is unaffected)")
    p.add_argument("--backend", choices=("auto", "cython", "python"), default=None,
                   help="distance kernel (default: $LEXNORM_BACKEND or auto)")
    p.add_argument("-v", "--verbose", action="store_true")
    return p


def config_from_args(args: argparse.Namespace) -> Config:
    return Config(args.lexicon, args.dict, args.corpus, args.fivegrams, args.input, args.output,
                  args.format, args.max_dist, args.jobs, args.backend)


def format_message(msg_index: int, results, fmt: str) -> str:
    if fmt == "jsonl":
        return "".join(
            json.dumps({"message": msg_index, "token": i, "original": r.original, "tag": str(r.tag),
                        "normalised": r.normalised, "method": str(r.method)}, ensure_ascii=False) + "\n"
            for i, r in enumerate(results))
    lines = [f"{r.original}\t{r.tag}\t{r.normalised}\t{r.method}\n" for r in results]
    return "".join(lines) + "\n"


def _open_in(path):
    if path == STDIO:
        return contextlib.nullcontext(sys.stdin)
    return open(path, encoding="utf-8")


def _open_out(path):
    if path == STDIO:
        return contextlib.nullcontext(sys.stdout)
    return open(path, "w", encoding="utf-8", newline="\n")


def run(config: Config, stats_stream=None) -> int:
    stats_stream = stats_stream if stats_stream is not None else sys.stderr
    try:
        config.validate()
    except ValueError as exc:
        print(f"lexnorm: error: {exc}", file=sys.stderr)
        return EXIT_CONFIG

    t0 = time.perf_counter()
    try:
        res = Resources.load(config.iv_lexicon_path, config.match_dict_path, config.freq_corpus_path,
                             config.fivegram_path, config.max_dist, config.backend)
    except LoadError as exc:
        print(f"lexnorm: {exc}", file=sys.stderr)
        return EXIT_LOAD
    load_time = time.perf_counter() - t0

    tags: Counter = Counter()
    methods: Counter = Counter()
    t1 = time.perf_counter()
    try:
        source = _open_in(config.input_path)
    except OSError as exc:
        print(f"lexnorm: cannot read input {config.input_path!r}: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    with source as fin, _open_out(config.output_path) as fout, ThreadPoolExecutor(config.jobs) as pool:
        msg_index = 0
        lines = (line.rstrip("\r\n") for line in fin)
        while chunk := list(islice(lines, CHUNK)):
            for results in pool.map(lambda line: normalise_message(line, res), chunk):
                for r in results:
                    tags[r.tag] += 1
                    methods[r.method] += 1
                fout.write(format_message(msg_index, results, config.format))
                msg_index += 1
    elapsed = time.perf_counter() - t1

    summary = summarise(tags, methods, msg_index, load_time, elapsed)
    print(json.dumps(summary, indent=2), file=stats_stream)
    return EXIT_OK


def summarise(tags: Counter, methods: Counter, messages: int, load_time: float, elapsed: float) -> dict:
    oov = tags[Tag.OOV]
    return {
        "messages": messages,
        "tokens": sum(tags.values()),
        "tags": {t.value: tags[t] for t in Tag},
        "methods": {m.value: methods[m] for m in Method},
        "load_seconds": round(load_time, 3),
        "elapsed_seconds": round(elapsed, 3),
        "oov_per_second": round(oov / elapsed, 1) if elapsed > 0 and oov else 0.0,
    }


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s")
    try:
        config_from_args(args).validate()
    except ValueError as exc:
        parser.print_usage(sys.stderr)
        print(f"lexnorm: error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    return run(config_from_args(args))


if __name__ == "__main__":
    sys.exit(main())
