"""Brute-force point counts over F_q and the implied dimension estimate.

For a variety of dimension d the count grows like c * q^d, so log_q(count)
should sit within about one of mnk - codim.  Both counters are run where the
ring-level enumeration is affordable.

python3 scripts/lang_weil.py --q 2 3 5
"""
from __future__ import annotations

import argparse
import math
import time
from dataclasses import dataclass, field

from truncdet.census import census_general, classical_codim
from truncdet.ideal_gen import MatrixShape
from truncdet.points import DEFAULT_CAP, CapExceeded, count_points, count_points_ringlevel

DEFAULT_SHAPES = [(2, 2, 2, 1), (2, 2, 2, 2), (2, 3, 2, 2), (1, 3, 1, 2), (3, 3, 2, 1), (3, 3, 3, 1)]


@dataclass
class LWConfig:
    q: list[int] = field(default_factory=lambda: [2, 3, 5])
    shapes: list[tuple[int, int, int, int]] = field(default_factory=lambda: list(DEFAULT_SHAPES))
    cap: int = DEFAULT_CAP
    ring_cap: int = 10**5
    workers: int = 1


def codim(shape: MatrixShape) -> int:
    m, n, r, k = shape.as_tuple()
    if r == 1:
        return shape.nvars
    if k == 1:
        return classical_codim(m, n, r)
    return census_general(m, n, r, k).variety_codim


def run(cfg: LWConfig):
    print(f"{'shape':<14}{'q':>3}{'count':>12}{'log_q':>9}{'dim':>5}  ring-level")
    for s in cfg.shapes:
        sh = MatrixShape(*s)
        dim = sh.nvars - codim(sh)
        for q in cfg.q:
            t0 = time.perf_counter()
            try:
                res = count_points(sh, q, cfg.cap, cfg.workers)
            except CapExceeded:
                print(f"{str(s):<14}{q:>3}{'(cap)':>12}")
                continue
            try:
                ring = count_points_ringlevel(sh, q, cfg.ring_cap).count
                agree = "agrees" if ring == res.count else f"DISAGREES ({ring})"
            except CapExceeded:
                agree = "skipped"
            est = math.log(res.count, q)
            print(f"{str(s):<14}{q:>3}{res.count:>12}{est:>9.3f}{dim:>5}  {agree}"
                  f"  [{time.perf_counter() - t0:.2f}s]")


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--q", type=int, nargs="+", default=[2, 3, 5])
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.add_argument("--workers", type=int, default=1)
    args = p.parse_args()
    run(LWConfig(q=args.q, cap=args.cap, workers=args.workers))


if __name__ == "__main__":
    main()
