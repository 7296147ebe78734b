"""Command-line front end.

Exit status: 0 success, 1 verification failure, 2 usage error, 3 resource cap
hit before a verdict (Inconclusive).
"""
from __future__ import annotations

import argparse
import json
import logging
import random
import sys
from dataclasses import dataclass
from typing import Sequence

from .algebra import QQ, FieldMismatch, PrimeField
from .census import census_general
from .groebner import DEFAULT_MAX_STEPS, DEFAULT_MAX_TERMS, Inconclusive, gb_check
from .ideal_gen import MatrixShape, generate_ideal
from .points import (
    DEFAULT_CAP,
    CapExceeded,
    count_points,
    count_points_ringlevel,
    evaluate_membership,
    intersection_witness,
    random_lifted_point,
    verify_intersection_witness,
    verify_separation_witness,
    witness_separation,
)
from .stanley import degree, fvector_full, hilbert_function
from .symb import format_polynomial

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INCONCLUSIVE = 0, 1, 2, 3

log = logging.getLogger("truncdet")


class UsageError(ValueError):
    pass


@dataclass
class CommandConfig:
    command: str
    m: int | None = None
    n: int | None = None
    r: int | None = None
    k: int | None = None
    q: int | None = None          # None means Q
    fmt: str = "json"
    output: str | None = None
    max_steps: int = DEFAULT_MAX_STEPS
    max_terms: int = DEFAULT_MAX_TERMS
    cap: int = DEFAULT_CAP
    workers: int = 1
    ring_level: bool = False
    max_degree: int = 8
    kind: str | None = None
    s: int = 0
    alpha: int = 1
    seed: int = 0

    def field_(self):
        return QQ if self.q is None else PrimeField(self.q)

    def shape(self) -> MatrixShape:
        return MatrixShape(self.m, self.n, self.r, self.k)


def _need(cfg: CommandConfig, *names: str):
    for name in names:
        if getattr(cfg, name) is None:
            raise UsageError(f"--{name} is required for '{cfg.command}'")


def validate(cfg: CommandConfig):
    """Range checks; messages name the violated precondition."""
    for name in ("m", "n", "r", "k"):
        v = getattr(cfg, name)
        if v is not None and v < 1:
            raise UsageError(f"{name} >= 1 required")
    if cfg.m is not None and cfg.n is not None and cfg.m > cfg.n:
        raise UsageError("m <= n required")
    if cfg.r is not None and cfg.m is not None and cfg.r > cfg.m:
        raise UsageError("r <= m required")
    if cfg.q is not None:
        try:
            PrimeField(cfg.q)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    if cfg.workers < 1:
        raise UsageError("workers >= 1 required")


# -- subcommands --------------------------------------------------------------

def _ideal(cfg: CommandConfig) -> tuple[int, str]:
    _need(cfg, "m", "n", "r", "k")
    gs = generate_ideal(cfg.shape())
    if cfg.fmt == "text":
        lines = []
        for g in gs:
            rows = ",".join(map(str, g.rows))
            cols = ",".join(map(str, g.cols))
            lines.append(f"# rows={rows} cols={cols} w={g.w}")
            lines.append(format_polynomial(g.poly))
        return EXIT_OK, "\n".join(lines) + "\n"
    doc = {
        "shape": {"m": cfg.m, "n": cfg.n, "r": cfg.r, "k": cfg.k},
        "generators": [
            {"rows": list(g.rows), "cols": list(g.cols), "w": g.w, "poly": format_polynomial(g.poly)}
            for g in gs
        ],
    }
    return EXIT_OK, _dump(doc)


def _gb_check(cfg: CommandConfig) -> tuple[int, str]:
    _need(cfg, "m", "k")
    report = gb_check(cfg.m, cfg.k, cfg.max_steps, cfg.max_terms)
    if report.inconclusive_reason:
        status = EXIT_INCONCLUSIVE
    else:
        status = EXIT_OK if report.ok else EXIT_FAIL
    return status, _dump(report.to_dict())


def _hilbert(cfg: CommandConfig) -> tuple[int, str]:
    _need(cfg, "m", "k")
    f = fvector_full(cfg.m, cfg.k)
    doc = {
        "m": cfg.m,
        "k": cfg.k,
        "fvector": list(f.counts),
        "dimension": len(f.counts),
        "degree": degree(cfg.m, cfg.k),
        "H": {str(d): hilbert_function(cfg.m, cfg.k, d) for d in range(cfg.max_degree + 1)},
    }
    if doc["degree"] != f.top:
        return EXIT_FAIL, _dump(doc)
    return EXIT_OK, _dump(doc)


def _census(cfg: CommandConfig) -> tuple[int, str]:
    _need(cfg, "m", "n", "r", "k")
    if cfg.r < 2:
        raise UsageError("r >= 2 required")
    return EXIT_OK, _dump(census_general(cfg.m, cfg.n, cfg.r, cfg.k).to_dict())


def _count(cfg: CommandConfig) -> tuple[int, str]:
    _need(cfg, "m", "n", "r", "k", "q")
    if cfg.ring_level:
        res = count_points_ringlevel(cfg.shape(), cfg.q, cfg.cap)
    else:
        res = count_points(cfg.shape(), cfg.q, cfg.cap, cfg.workers)
    return EXIT_OK, _dump(res.to_dict())


def _witness(cfg: CommandConfig) -> tuple[int, str]:
    _need(cfg, "m", "n", "k")
    F = cfg.field_()
    doc: dict = {"kind": cfg.kind, "field": F.tag}
    if cfg.kind == "separation":
        pt = witness_separation(cfg.m, cfg.n, cfg.k, cfg.s, cfg.alpha, F)
        checks = verify_separation_witness(pt, cfg.s, cfg.alpha)
        doc["params"] = {"s": cfg.s, "alpha": cfg.alpha}
    elif cfg.kind == "intersection":
        w = intersection_witness(cfg.m, cfg.n, cfg.k, field=F)
        pt = w.point
        checks = verify_intersection_witness(w)
        doc["params"] = {
            "curve_locus": f"{w.curve_locus[0]}_{w.curve_locus[1]}",
            "other_locus": f"{w.other_locus[0]}_{w.other_locus[1]}",
            "curve_degree": w.curve_degree,
        }
    elif cfg.kind == "lift":
        _need(cfg, "r", "q")
        pt = random_lifted_point(cfg.shape(), F, random.Random(cfg.seed))
        checks = {"membership": evaluate_membership(pt)}
        doc["params"] = {"seed": cfg.seed}
    else:
        raise UsageError("--kind must be separation, intersection or lift")
    s = pt.shape
    doc["shape"] = {"m": s.m, "n": s.n, "r": s.r, "k": s.k}
    doc["point"] = pt.to_json()
    doc["checks"] = checks
    doc["ok"] = all(checks.values())
    return (EXIT_OK if doc["ok"] else EXIT_FAIL), _dump(doc)


COMMANDS = {
    "ideal": _ideal,
    "gb-check": _gb_check,
    "hilbert": _hilbert,
    "census": _census,
    "count": _count,
    "witness": _witness,
}


def _dump(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def run(cfg: CommandConfig, out=None) -> int:
    out = sys.stdout if out is None else out
    try:
        validate(cfg)
        status, text = COMMANDS[cfg.command](cfg)
    except (UsageError, ValueError, FieldMismatch) as exc:
        if isinstance(exc, CapExceeded):
            print(f"inconclusive: {exc}", file=sys.stderr)
            return EXIT_INCONCLUSIVE
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Inconclusive as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE
    if cfg.output:
        with open(cfg.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        out.write(text)
    return status


# -- argument parsing ---------------------------------------------------------

def _shape_args(p: argparse.ArgumentParser, *names: str):
    for name in names:
        p.add_argument(f"--{name}", type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="truncdet", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ideal", help="export the generators of I^{m,n}_{r,k}")
    _shape_args(p, "m", "n", "r", "k")
    p.add_argument("--format", dest="fmt", choices=["text", "json"], default="text")
    p.add_argument("--output")

    p = sub.add_parser("gb-check", help="verify the Groebner basis of the square determinant")
    _shape_args(p, "m", "k")
    p.add_argument("--max-steps", type=int, default=DEFAULT_MAX_STEPS)
    p.add_argument("--max-terms", type=int, default=DEFAULT_MAX_TERMS)
    p.add_argument("--output")

    p = sub.add_parser("hilbert", help="f-vector, degree and Hilbert function (r = m = n)")
    _shape_args(p, "m", "k")
    p.add_argument("--degree", dest="max_degree", type=int, default=8)
    p.add_argument("--output")

    p = sub.add_parser("census", help="component census and codimensions")
    _shape_args(p, "m", "n", "r", "k")
    p.add_argument("--output")

    p = sub.add_parser("count", help="brute-force F_q point count")
    _shape_args(p, "m", "n", "r", "k", "q")
    p.add_argument("--ring-level", action="store_true")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--output")

    p = sub.add_parser("witness", help="separation, intersection or lifted witness points")
    p.add_argument("--kind", choices=["separation", "intersection", "lift"], required=True)
    _shape_args(p, "m", "n", "r", "k", "q", "s", "alpha", "seed")
    p.add_argument("--output")
    return parser


def config_from_args(ns: argparse.Namespace) -> CommandConfig:
    cfg = CommandConfig(command=ns.command)
    for key, value in vars(ns).items():
        if key in ("command", "verbose") or value is None:
            continue
        setattr(cfg, key, value)
    if cfg.command == "gb-check":
        cfg.n = cfg.r = cfg.m
    if cfg.command == "witness" and cfg.r is None:
        cfg.r = 2
    return cfg


def main(argv: Sequence[str] | None = None) -> int:
    ns = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if ns.verbose else logging.WARNING)
    return run(config_from_args(ns))


if __name__ == "__main__":
    sys.exit(main())
