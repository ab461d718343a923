#!/usr/bin/env python3
"""Scan a corpus for (eta(AA^-1), dl(G/C_G(A))) pairs and write CSV plus a summary."""

import argparse
import json
import time
from dataclasses import asdict, dataclass
from pathlib import Path

from classprod.corpus import CORPORA
from classprod.scan import ScanOptions, conjecture_scan, scan_csv_bytes


@dataclass(frozen=True)
class Config:
    corpus: str = "extended"
    threads: int = 4
    out_dir: str = "results"


def main(cfg: Config) -> None:
    out = Path(cfg.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    t0 = time.perf_counter()
    result = conjecture_scan(CORPORA[cfg.corpus](), ScanOptions(threads=cfg.threads))
    elapsed = time.perf_counter() - t0
    (out / f"scan_{cfg.corpus}.csv").write_bytes(scan_csv_bytes(result.rows))
    summary = {"config": asdict(cfg), "elapsed_s": round(elapsed, 2),
               "skipped": result.skipped, **result.summary.to_json()}
    (out / f"scan_{cfg.corpus}_summary.json").write_text(json.dumps(summary, indent=2) + "\n")
    print(result.summary.to_text())
    print(f"wrote {out}/scan_{cfg.corpus}.csv and summary in {elapsed:.1f}s")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--corpus", choices=sorted(CORPORA), default=Config.corpus)
    ap.add_argument("--threads", type=int, default=Config.threads)
    ap.add_argument("--out-dir", default=Config.out_dir)
    a = ap.parse_args()
    main(Config(a.corpus, a.threads, a.out_dir))
