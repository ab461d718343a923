"""Command-line interface: ``classprod {inspect,classes,eta,verify,scan}``.

Exit codes: 0 when every check passes or is skipped, 1 when some check
fails, 2 on usage, parse or build errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

from . import structure as st
from .checks import CHECKS, VerificationReport, _class_centralizer, _dl_mod, verify_examples
from .classes import all_classes, central_mask, class_ids, eta_aa_table
from .constructions import NAMED_FAMILIES, GroupSpec, build_from_spec, named, parse_corpus
from .corpus import CORPORA
from .errors import GroupError, TheoremBViolation
from .group import DEFAULT_MAX_ORDER, Group
from .scan import ScanOptions, conjecture_scan, scan_csv_bytes

COMMANDS = ("inspect", "classes", "eta", "verify", "scan")
SUITE_NAMES = (*CHECKS, "examples")
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class CliConfig:
    command: str
    specs: list[GroupSpec]
    suite: list[str] = field(default_factory=list)
    output_format: str = "text"
    output_path: str | None = None
    max_order: int = DEFAULT_MAX_ORDER
    threads: int = 1
    class_rep: str = "auto-noncentral"
    summary: bool = False


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def _suite(text: str) -> list[str]:
    if text == "all":
        return list(CHECKS)
    names = [n.strip() for n in text.split(",") if n.strip()]
    unknown = [n for n in names if n not in SUITE_NAMES]
    if unknown or not names:
        raise argparse.ArgumentTypeError(
            f"unknown check(s) {', '.join(unknown) or '(none given)'}; choose from {', '.join(SUITE_NAMES)} or all")
    return names


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="classprod", description="Conjugacy-class products of finite groups.")
    sub = parser.add_subparsers(dest="command", required=True)
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_argument_group("group input")
    src.add_argument("--spec", help="group-spec JSON file or JSON-lines corpus")
    src.add_argument("--named", choices=sorted(NAMED_FAMILIES), help="named family")
    src.add_argument("--n", type=int, help="family parameter n")
    src.add_argument("--p", type=int, help="family parameter p (a prime)")
    src.add_argument("--corpus", choices=sorted(CORPORA), help="built-in corpus")
    common.add_argument("--format", dest="output_format", choices=("json", "csv", "text"))
    common.add_argument("--out", dest="output_path", help="write the report here instead of stdout")
    common.add_argument("--max-order", type=_positive, default=DEFAULT_MAX_ORDER)
    common.add_argument("--threads", type=_positive, default=1)

    sub.add_parser("inspect", parents=[common], help="order, center, series, solvability")
    sub.add_parser("classes", parents=[common], help="conjugacy classes with eta(AA^-1) and dl bounds")
    p_eta = sub.add_parser("eta", parents=[common], help="eta(AA^-1) for one class")
    p_eta.add_argument("--class-rep", default="auto-noncentral",
                       help="element index, or auto-noncentral for the least noncentral element")
    p_verify = sub.add_parser("verify", parents=[common], help="run verification checks")
    p_verify.add_argument("--suite", type=_suite, default=list(CHECKS),
                          help=f"comma list of {', '.join(SUITE_NAMES)}, or all")
    p_scan = sub.add_parser("scan", parents=[common], help="collect (eta, dl) rows over a corpus")
    p_scan.add_argument("--summary", action="store_true", help="also print the summary table to stderr")
    return parser


def _specs_from_args(args: argparse.Namespace) -> list[GroupSpec]:
    sources = [s for s in (args.spec, args.named, args.corpus) if s is not None]
    if len(sources) > 1:
        raise UsageError("give exactly one of --spec, --named, --corpus")
    if args.spec is not None:
        try:
            text = Path(args.spec).read_text(encoding="utf-8")
        except OSError as exc:
            raise UsageError(f"cannot read {args.spec}: {exc.strerror}") from None
        specs = parse_corpus(text)
        if not specs:
            raise UsageError(f"{args.spec} contains no group specs")
        return specs
    if args.named is not None:
        params = {}
        for key in NAMED_FAMILIES[args.named]:
            value = getattr(args, key)
            if value is None:
                raise UsageError(f"--named {args.named} needs --{key}")
            params[key] = value
        return [named(args.named, **params)]
    if args.corpus is not None:
        return CORPORA[args.corpus]()
    if args.command == "scan":
        return CORPORA["default"]()
    raise UsageError("no group given: use --spec, --named or --corpus")


def parse_config(argv: Sequence[str]) -> CliConfig:
    args = build_parser().parse_args(list(argv))
    default_format = "csv" if args.command == "scan" else "text"
    return CliConfig(
        command=args.command,
        specs=_specs_from_args(args),
        suite=getattr(args, "suite", []),
        output_format=args.output_format or default_format,
        output_path=args.output_path,
        max_order=args.max_order,
        threads=args.threads,
        class_rep=getattr(args, "class_rep", "auto-noncentral"),
        summary=getattr(args, "summary", False),
    )


# -- commands ---------------------------------------------------------------

def _build(cfg: CliConfig) -> list[Group]:
    return [build_from_spec(s, max_order=cfg.max_order) for s in cfg.specs]


def _csv_text(header: Sequence[str], rows: list[Sequence]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _inspect_record(G: Group) -> dict:
    solvable = st.is_solvable(G)
    chief = st.chief_series(G)
    return {
        "group": G.label,
        "order": G.order,
        "classes": len(all_classes(G)),
        "center_order": st.center(G).order,
        "derived_subgroup_order": st.derived_subgroup(G).order,
        "solvable": solvable,
        "derived_length": st.derived_length(G) if solvable else None,
        "supersolvable": st.is_supersolvable(G),
        "chief_factor_orders": chief.factor_orders,
    }


def cmd_inspect(cfg: CliConfig) -> tuple[str, int]:
    recs = [_inspect_record(G) for G in _build(cfg)]
    if cfg.output_format == "json":
        return json.dumps(recs if len(recs) > 1 else recs[0], indent=2) + "\n", EXIT_OK
    if cfg.output_format == "csv":
        keys = list(recs[0]) if recs else []
        rows = [[_cell(r[k]) for k in keys] for r in recs]
        return _csv_text(keys, rows), EXIT_OK
    blocks = []
    for r in recs:
        blocks.append("\n".join(f"{k}: {_cell(v)}" for k, v in r.items()))
    return "\n\n".join(blocks) + "\n", EXIT_OK


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, list):
        return " ".join(map(str, v))
    return str(v)


def _class_record(G: Group, i: int) -> dict:
    c = all_classes(G)[i]
    e = int(eta_aa_table(G)[i])
    return {
        "group": G.label,
        "class_rep": c.representative,
        "rep_name": G.name(c.representative),
        "class_size": c.size,
        "eta_aa": e,
        "dl_mod_centralizer": _dl_mod(G, _class_centralizer(G, i)),
        "bound": 2 * e - 1,
    }


def _inequality(rec: dict) -> str:
    d = rec["dl_mod_centralizer"]
    d = "undefined (not solvable)" if d is None else d
    return f"dl(G/C_G(A)) = {d} ≤ 2η−1 = {rec['bound']}"


def _emit_class_records(cfg: CliConfig, recs: list[dict], text_line) -> str:
    if cfg.output_format == "json":
        return json.dumps(recs, indent=2, ensure_ascii=False) + "\n"
    if cfg.output_format == "csv":
        keys = list(recs[0]) if recs else list(_CLASS_KEYS)
        return _csv_text(keys, [[_cell(r[k]) for k in keys] for r in recs])
    return "".join(text_line(r) + "\n" for r in recs)


_CLASS_KEYS = ("group", "class_rep", "rep_name", "class_size", "eta_aa", "dl_mod_centralizer", "bound")


def cmd_classes(cfg: CliConfig) -> tuple[str, int]:
    recs = [_class_record(G, i) for G in _build(cfg) for i in range(len(all_classes(G)))]

    def line(r):
        return (f"{r['group']}  rep {r['class_rep']} ({r['rep_name']})  size {r['class_size']}  "
                f"η(AA⁻¹)={r['eta_aa']}  {_inequality(r)}")
    return _emit_class_records(cfg, recs, line), EXIT_OK


def _pick_rep(G: Group, choice: str) -> int:
    if choice == "auto-noncentral":
        noncentral = [x for x in range(G.order) if not central_mask(G)[x]]
        if not noncentral:
            raise UsageError(f"{G.label} is abelian: no noncentral element")
        return noncentral[0]
    try:
        a = int(choice)
    except ValueError:
        raise UsageError(f"--class-rep must be an index or auto-noncentral, got {choice!r}") from None
    if not 0 <= a < G.order:
        raise UsageError(f"--class-rep {a} out of range for order {G.order}")
    return a


def cmd_eta(cfg: CliConfig) -> tuple[str, int]:
    recs = []
    for G in _build(cfg):
        a = _pick_rep(G, cfg.class_rep)
        rec = _class_record(G, int(class_ids(G)[a]))
        rec["element"] = a
        recs.append(rec)

    def line(r):
        return f"{r['group']}  a={r['element']}  η(AA⁻¹)={r['eta_aa']}\n{_inequality(r)}"
    return _emit_class_records(cfg, recs, line), EXIT_OK


def _verify_group(spec: GroupSpec, suite: list[str], max_order: int) -> list[VerificationReport]:
    G = build_from_spec(spec, max_order=max_order)
    return [CHECKS[name](G) for name in suite]


def cmd_verify(cfg: CliConfig) -> tuple[str, int]:
    per_group = [n for n in cfg.suite if n in CHECKS]
    with ThreadPoolExecutor(max_workers=cfg.threads) as pool:
        nested = list(pool.map(lambda s: _verify_group(s, per_group, cfg.max_order), cfg.specs))
    reports = [r for rs in nested for r in rs]
    if "examples" in cfg.suite:
        reports.append(verify_examples())
    code = EXIT_FAIL if any(r.status == "fail" for r in reports) else EXIT_OK
    if cfg.output_format == "json":
        return json.dumps([r.to_json() for r in reports], indent=2, ensure_ascii=False) + "\n", code
    if cfg.output_format == "csv":
        rows = [[r.check_name, r.group_label, r.status, r.cases_checked, len(r.failures),
                 len(r.skipped_cases), r.reason or ""] for r in reports]
        return _csv_text(("check", "group", "status", "cases", "failures", "skipped_cases", "reason"), rows), code
    lines = []
    for r in reports:
        status = f"skipped({r.reason})" if r.status == "skipped" else r.status
        extra = f", {len(r.skipped_cases)} skipped cases" if r.skipped_cases else ""
        lines.append(f"{r.group_label:<20} {r.check_name:<14} {status}  cases={r.cases_checked}{extra}")
        for w in r.failures[:5]:
            lines.append(f"    counterexample: {json.dumps(w, ensure_ascii=False)}")
    return "\n".join(lines) + "\n", code


def cmd_scan(cfg: CliConfig) -> tuple[str | bytes, int]:
    result = conjecture_scan(cfg.specs, ScanOptions(threads=cfg.threads, max_order=cfg.max_order))
    for skip in result.skipped:
        print(f"skipped {skip['group']}: {skip['reason']}", file=sys.stderr)
    if cfg.summary:
        print(result.summary.to_text(), file=sys.stderr)
    if cfg.output_format == "csv":
        return scan_csv_bytes(result.rows), EXIT_OK
    if cfg.output_format == "json":
        doc = {"rows": [r.__dict__ for r in result.rows], "summary": result.summary.to_json(),
               "skipped": result.skipped}
        return json.dumps(doc, indent=2) + "\n", EXIT_OK
    return result.summary.to_text() + "\n", EXIT_OK


HANDLERS = {"inspect": cmd_inspect, "classes": cmd_classes, "eta": cmd_eta,
            "verify": cmd_verify, "scan": cmd_scan}


def _write(payload: str | bytes, path: str | None) -> None:
    data = payload.encode("utf-8") if isinstance(payload, str) else payload
    if path is None:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    else:
        Path(path).write_bytes(data)


def run(argv: Sequence[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        cfg = parse_config(argv)
        payload, code = HANDLERS[cfg.command](cfg)
    except SystemExit as exc:         # argparse usage errors
        return EXIT_USAGE if exc.code else EXIT_OK
    except TheoremBViolation as exc:
        print(f"classprod: bound violated: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (UsageError, GroupError) as exc:
        print(f"classprod: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        _write(payload, cfg.output_path)
    except OSError as exc:
        print(f"classprod: error: cannot write output: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
