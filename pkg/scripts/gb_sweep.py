"""Run the Groebner-basis check over a grid of (m, k) and time each case.

python3 scripts/gb_sweep.py --max-m 4 --max-k 3 --out gb_sweep.json
"""
from __future__ import annotations

import argparse
import json
import time
from dataclasses import asdict, dataclass

from truncdet.groebner import DEFAULT_MAX_STEPS, gb_check


@dataclass
class SweepConfig:
    max_m: int = 3
    max_k: int = 3
    max_steps: int = DEFAULT_MAX_STEPS
    out: str | None = None


def sweep(cfg: SweepConfig) -> list[dict]:
    rows = []
    for m in range(1, cfg.max_m + 1):
        for k in range(1, cfg.max_k + 1):
            t0 = time.perf_counter()
            rep = gb_check(m, k, max_steps=cfg.max_steps)
            row = rep.to_dict()
            row["seconds"] = round(time.perf_counter() - t0, 4)
            rows.append(row)
            status = "inconclusive" if rep.inconclusive_reason else ("ok" if rep.ok else "FAIL")
            print(f"m={m} k={k}: {status} ({row['seconds']}s)")
    return rows


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-m", type=int, default=3)
    p.add_argument("--max-k", type=int, default=3)
    p.add_argument("--max-steps", type=int, default=DEFAULT_MAX_STEPS)
    p.add_argument("--out")
    cfg = SweepConfig(**vars(p.parse_args()))
    rows = sweep(cfg)
    if cfg.out:
        with open(cfg.out, "w") as fh:
            json.dump({"config": asdict(cfg), "results": rows}, fh, indent=2)


if __name__ == "__main__":
    main()
