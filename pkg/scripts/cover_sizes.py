"""Minimum cycle covers of random multigraphs without s disjoint cycles.

For each s, draws seeded multigraphs, keeps the ones where pack_or_cover
returns a cover, and tabulates the cover sizes against the configured phi(s).
"""

import argparse
import collections
import random

from anticycle.bounds import phi
from anticycle.graph import Multigraph
from anticycle.hitting import pack_or_cover


def random_multigraph(rng, n, m):
    return Multigraph(n, [(rng.randrange(n), rng.randrange(n)) for _ in range(m)])


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--samples", type=int, default=2000)
    ap.add_argument("--max-n", type=int, default=10)
    ap.add_argument("--max-m", type=int, default=20)
    ap.add_argument("--s", type=int, nargs="+", default=[1, 2, 3])
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    for s in args.s:
        sizes = collections.Counter()
        packings = 0
        for _ in range(args.samples):
            n = rng.randint(1, args.max_n)
            res = pack_or_cover(random_multigraph(rng, n, rng.randint(0, args.max_m)), s)
            if res.is_packing:
                packings += 1
            else:
                sizes[len(res.cover)] += 1
        hist = "  ".join(f"{k}:{v}" for k, v in sorted(sizes.items()))
        print(f"s={s}  phi={phi(s)}  packings={packings}  cover sizes {hist}")


if __name__ == "__main__":
    main()
