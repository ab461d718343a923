#!/usr/bin/env python3
"""Recompute eta(a^H (a^-1)^H) and eta(a^G (a^-1)^G) for the two worked examples."""

import argparse
import json
import time
from dataclasses import asdict, dataclass

from classprod.checks import EXPECTED_EXAMPLES, example_values


@dataclass(frozen=True)
class Config:
    primes: tuple[int, ...] = (2, 3, 5)
    as_json: bool = False


def main(cfg: Config) -> int:
    expected = {(w, p): (eh, eg) for w, p, eh, eg in EXPECTED_EXAMPLES}
    rows = []
    for which in ("wreath", "extraspecial"):
        for p in cfg.primes:
            if which == "extraspecial" and p == 2:
                continue
            if which == "wreath" and p > 3:
                continue          # |G| = p^p p (p-1) grows too fast past p = 3
            t0 = time.perf_counter()
            got = example_values(p, which)
            got.update(example=which, p=p, seconds=round(time.perf_counter() - t0, 4),
                       expected=expected.get((which, p)))
            rows.append(got)
    if cfg.as_json:
        print(json.dumps({"config": asdict(cfg), "rows": rows}, indent=2))
    else:
        for r in rows:
            exp = "" if r["expected"] is None else f"  expected (eta_H, eta_G) = {tuple(r['expected'])}"
            print(f"example {r['example']} p={r['p']}: |G|={r['order_G']} |H|={r['order_H']} "
                  f"eta_H={r['eta_H']} eta_G={r['eta_G']} ({r['seconds']}s){exp}")
    bad = [r for r in rows if r["expected"] and (r["eta_H"], r["eta_G"]) != tuple(r["expected"])]
    return 1 if bad else 0


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--primes", type=int, nargs="+", default=list(Config.primes))
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    raise SystemExit(main(Config(tuple(args.primes), args.json)))
