#!/usr/bin/env python3
"""Run every check on every corpus group; print a per-check tally and any counterexamples."""

import argparse
import json
import time
from collections import Counter, defaultdict
from dataclasses import dataclass

from classprod.checks import CHECKS
from classprod.corpus import CORPORA


@dataclass(frozen=True)
class Config:
    corpus: str = "extended"
    checks: tuple[str, ...] = tuple(CHECKS)
    max_order: int = 200


def main(cfg: Config) -> int:
    status = defaultdict(Counter)
    seconds = Counter()
    failures = []
    for spec in CORPORA[cfg.corpus]():
        G = spec.build()
        if G.order > cfg.max_order:
            continue
        for name in cfg.checks:
            t0 = time.perf_counter()
            r = CHECKS[name](G)
            seconds[name] += time.perf_counter() - t0
            status[name][r.status] += 1
            if r.status == "fail":
                failures.append(r.to_json())
    for name in cfg.checks:
        tally = ", ".join(f"{k}={v}" for k, v in sorted(status[name].items()))
        print(f"{name:<12} {tally:<32} {seconds[name]:7.2f}s")
    for f in failures:
        print(json.dumps(f))
    return 1 if failures else 0


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--corpus", choices=sorted(CORPORA), default=Config.corpus)
    ap.add_argument("--checks", default=",".join(CHECKS))
    ap.add_argument("--max-order", type=int, default=Config.max_order)
    a = ap.parse_args()
    raise SystemExit(main(Config(a.corpus, tuple(a.checks.split(",")), a.max_order)))
