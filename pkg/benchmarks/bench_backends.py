"""Compare the compiled and pure-Python distance kernels.

    python benchmarks/bench_backends.py [--scale 1.0] [--queries 20]

Times dictionary search (the Step-1 scan over the length buckets) and raw
pairwise bounded distance, per backend, on a seeded synthetic dictionary.
"""
import argparse
import random
import time

import numpy as np

from lexnorm.distance import DistanceIndex, available_backends, get_backend
from lexnorm.lexicon import Lexicon
from lexnorm.synthetic import DICT_SIZE, perturb, random_words


def timed(fn, *args):
    start = time.perf_counter()
    out = fn(*args)
    return time.perf_counter() - start, out


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--scale", type=float, default=1.0, help="fraction of the 645,288-word dictionary")
    p.add_argument("--queries", type=int, default=20)
    p.add_argument("--pairs", type=int, default=200_000)
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args()

    rng = np.random.default_rng(args.seed)
    words = random_words(rng, int(DICT_SIZE * args.scale))
    lex = Lexicon.from_words(words)
    queries = [perturb(rng, w, 2) for w in random.Random(args.seed).sample(words, args.queries)]
    pair_rng = random.Random(args.seed + 1)
    pairs = [(pair_rng.choice(words), pair_rng.choice(words)) for _ in range(args.pairs)]
    print(f"dictionary: {lex.size} words; {len(queries)} queries; {len(pairs)} pairs")

    results = {}
    for name in available_backends():
        kernel = get_backend(name)
        build, index = timed(DistanceIndex, lex, name)
        search, found = timed(lambda: [index.candidates_within(q, 2) for q in queries])
        n_pairs = len(pairs) if name != "python" else len(pairs) // 10
        pairwise, _ = timed(lambda: [kernel.bounded_levenshtein(a, b, 2) for a, b in pairs[:n_pairs]])
        results[name] = found
        print(f"{name:>8}: build {build:6.2f}s  search {1000 * search / len(queries):9.2f} ms/query  "
              f"bounded pair {1e9 * pairwise / n_pairs:8.0f} ns/pair")
    if len(results) > 1:
        first, *rest = results.values()
        print("results identical:", all(r == first for r in rest))


if __name__ == "__main__":
    main()
