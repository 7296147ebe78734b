"""Print codimension tables for the component census.

For r = 2 the closed form and the recursion are printed side by side; for
r >= 3 the recursion is the only source and the count is a lower bound.

python3 scripts/census_table.py --r 2 --max-m 5 --max-k 6
"""
from __future__ import annotations

import argparse
from dataclasses import dataclass

from truncdet.census import census_2xk, census_general, monotone_in_k_violations


@dataclass
class TableConfig:
    r: int = 2
    max_m: int = 5
    extra_cols: int = 1
    max_k: int = 6


def table(cfg: TableConfig):
    header = "m  n  " + " ".join(f"k={k:<3d}" for k in range(1, cfg.max_k + 1))
    print(f"variety codimension, r = {cfg.r}")
    print(header)
    for m in range(max(cfg.r, 2), cfg.max_m + 1):
        for n in range(m, m + cfg.extra_cols + 1):
            cells = []
            for k in range(1, cfg.max_k + 1):
                rep = census_general(m, n, cfg.r, k)
                mark = "" if rep.count_exactness == "Exact" else "*"
                if cfg.r == 2 and m >= 3 and k >= 2:
                    assert rep.codims == census_2xk(m, n, k).codims
                cells.append(f"{rep.variety_codim}{mark}".ljust(5))
            print(f"{m:<2d} {n:<2d} " + " ".join(cells))
            bad = monotone_in_k_violations(m, n, cfg.r, cfg.max_k)
            if bad:
                print(f"      codim drops at k = {bad}")
    print("* component count only bounded below")


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--max-m", type=int, default=5)
    p.add_argument("--extra-cols", type=int, default=1)
    p.add_argument("--max-k", type=int, default=6)
    table(TableConfig(**vars(p.parse_args())))


if __name__ == "__main__":
    main()
