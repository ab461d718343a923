"""Evidence gathering for linear bounds dl(G/C_G(A)) <= q*eta(AA^-1) + r.

One row per (group, conjugacy class).  Rows of supersolvable groups must
satisfy the proven bound with q=2, r=-1; a violation halts the scan.
"""

from __future__ import annotations

import csv
import io
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import IO, Iterable

from . import structure as st
from .checks import _class_centralizer, _dl_mod, _theorem_b_oracle
from .classes import all_classes, eta_aa_table
from .constructions import GroupSpec, build_from_spec
from .errors import GroupError, TheoremBViolation
from .group import DEFAULT_MAX_ORDER

CSV_HEADER = ("group", "order", "solvable", "supersolvable", "class_rep",
              "class_size", "eta_aa", "dl_mod_centralizer")
OFFSETS = (-1, 0, 1)


@dataclass(frozen=True)
class ScanRow:
    group_label: str
    order: int
    solvable: bool
    supersolvable: bool
    class_rep: int
    class_size: int
    eta_aa: int
    dl_mod_centralizer: int | None    # None when G/C_G(A) is not solvable


@dataclass(frozen=True)
class ScanOptions:
    threads: int = 1
    max_order: int = DEFAULT_MAX_ORDER


@dataclass
class ScanSummary:
    max_dl_by_eta: dict[int, int] = field(default_factory=dict)
    least_q: dict[int, int] = field(default_factory=dict)
    rows: int = 0
    groups: int = 0

    def to_json(self) -> dict:
        return {
            "groups": self.groups,
            "rows": self.rows,
            "max_dl_by_eta": {str(k): v for k, v in sorted(self.max_dl_by_eta.items())},
            "least_q": {str(r): q for r, q in sorted(self.least_q.items())},
        }

    def to_text(self) -> str:
        lines = [f"groups scanned: {self.groups}, class rows: {self.rows}",
                 "eta  max dl (solvable rows)"]
        lines += [f"{e:>3}  {d}" for e, d in sorted(self.max_dl_by_eta.items())]
        lines.append("least q with dl <= q*eta + r over all solvable rows")
        lines += [f"r={r:+d}  q={q}" for r, q in sorted(self.least_q.items())]
        return "\n".join(lines)


@dataclass
class ScanResult:
    rows: list[ScanRow]
    summary: ScanSummary
    skipped: list[dict]


def scan_group(G) -> list[ScanRow]:
    solvable = st.is_solvable(G)
    supersolvable = solvable and st.is_supersolvable(G)
    etas = eta_aa_table(G)
    rows = []
    for i, c in enumerate(all_classes(G)):
        dl = _dl_mod(G, _class_centralizer(G, i))
        row = ScanRow(G.label, G.order, solvable, supersolvable, c.representative,
                      c.size, int(etas[i]), dl)
        if supersolvable and dl > 2 * row.eta_aa - 1:
            e2, dl2 = _theorem_b_oracle(G, c.representative)
            if dl2 <= 2 * e2 - 1:
                raise RuntimeError(f"optimized and naive paths disagree on {G.label}")
            raise TheoremBViolation(f"{G.label}: class of {c.representative} has "
                                    f"dl={dl} > 2*{row.eta_aa}-1")
        rows.append(row)
    return rows


def _scan_spec(spec: GroupSpec, max_order: int) -> tuple[list[ScanRow], dict | None]:
    try:
        G = build_from_spec(spec, max_order=max_order)
    except GroupError as exc:
        return [], {"group": spec.label, "reason": f"{type(exc).__name__}: {exc}"}
    return scan_group(G), None


def least_q(pairs: Iterable[tuple[int, int]], r: int) -> int:
    """Least nonnegative integer q with dl <= q*eta + r for every (eta, dl)."""
    q = 0
    for e, dl in pairs:
        q = max(q, math.ceil((dl - r) / e))
    return q


def summarize(rows: list[ScanRow], groups: int) -> ScanSummary:
    solv = [(r.eta_aa, r.dl_mod_centralizer) for r in rows if r.solvable]
    summary = ScanSummary(rows=len(rows), groups=groups)
    for e, dl in solv:
        summary.max_dl_by_eta[e] = max(summary.max_dl_by_eta.get(e, 0), dl)
    summary.least_q = {r: least_q(solv, r) for r in OFFSETS}
    return summary


def conjecture_scan(specs: list[GroupSpec], options: ScanOptions = ScanOptions()) -> ScanResult:
    """Scan every group of the corpus; row order is (group label, representative)."""
    if options.threads < 1:
        raise ValueError("threads must be at least 1")
    with ThreadPoolExecutor(max_workers=options.threads) as pool:
        results = list(pool.map(lambda s: _scan_spec(s, options.max_order), specs))
    rows = [row for rs, _ in results for row in rs]
    rows.sort(key=lambda r: (r.group_label, r.class_rep))
    skipped = [skip for _, skip in results if skip is not None]
    built = sum(1 for _, skip in results if skip is None)
    return ScanResult(rows, summarize(rows, built), skipped)


def _csv_field(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def emit_scan_csv(rows: Iterable[ScanRow], sink: IO[bytes]) -> None:
    """Write rows as UTF-8 CSV with LF line endings."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in rows:
        writer.writerow(_csv_field(v) for v in asdict(r).values())
    sink.write(buf.getvalue().encode("utf-8"))


def scan_csv_bytes(rows: Iterable[ScanRow]) -> bytes:
    out = io.BytesIO()
    emit_scan_csv(rows, out)
    return out.getvalue()
