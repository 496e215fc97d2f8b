"""
Command line front end.

    punjabi-prep run INPUT --stoplist F --dict F --gazetteer F --out DIR
    punjabi-prep split CORPUS --ratio 0.7 --seed 42 --manifest FILE
    punjabi-prep stats REPORTS [--out FILE]
    punjabi-prep lexicon-check FILE [FILE ...]

Exit codes: 0 success, 1 invalid configuration / resource failure / fail-fast
abort, 2 finished but some documents were skipped.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from pathlib import Path
from typing import Any, Sequence

from . import __version__
from .corpus import CorpusStats, DomainLabel, aggregate_stats, discover_corpus, split_corpus
from .errors import OutputError, PreprocessError
from .pipeline import (
    DocumentReport,
    Resources,
    SkippedDocument,
    default_workers,
    process_many,
    write_outputs,
)
from .termlist import scan_term_file

log = logging.getLogger("punjabi_prep")

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_PARTIAL = 2

REPORT_COLUMNS = (
    "status", "source_path", "domain",
    "n_tokens", "n_duplicates", "n_stopwords", "n_dict", "n_gaz", "n_rejected",
    "accepted", "rejected", "error",
)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="punjabi-prep", description="Gurmukhi Punjabi text preprocessing")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    run = sub.add_parser("run", parents=[common], help="preprocess a document or a corpus directory")
    run.add_argument("input", type=Path, help="a .txt document or a corpus root")
    run.add_argument("--stoplist", type=Path, required=True)
    run.add_argument("--dict", dest="dictionary", type=Path, required=True)
    run.add_argument("--gazetteer", type=Path, required=True)
    run.add_argument("--out", type=Path, required=True, help="output directory")
    run.add_argument("--format", choices=("json", "csv"), default="json")
    run.add_argument("--keep-intermediate", action="store_true",
                     help="also write per-stage term files")
    run.add_argument("--fail-fast", action="store_true",
                     help="abort with exit 1 on the first skipped document")
    run.add_argument("--workers", type=_positive_int, default=None,
                     help="worker processes (default: $PUNJABI_PREP_WORKERS or CPU count)")
    run.set_defaults(func=cmd_run)

    split = sub.add_parser("split", parents=[common], help="write a learning/testing split manifest")
    split.add_argument("corpus", type=Path)
    split.add_argument("--ratio", type=float, default=0.7)
    split.add_argument("--seed", type=int, default=0)
    split.add_argument("--manifest", type=Path, required=True)
    split.set_defaults(func=cmd_split)

    stats = sub.add_parser("stats", parents=[common], help="re-aggregate an existing reports file")
    stats.add_argument("reports", type=Path, help="reports.jsonl or reports.csv")
    stats.add_argument("--out", type=Path, default=None, help="write stats here instead of stdout")
    stats.add_argument("--format", choices=("json", "csv"), default=None,
                       help="output format (default: from --out suffix, else json)")
    stats.set_defaults(func=cmd_stats)

    check = sub.add_parser("lexicon-check", parents=[common], help="validate stop-list / lexicon files")
    check.add_argument("paths", type=Path, nargs="+")
    check.set_defaults(func=cmd_lexicon_check)
    return parser


# --- report serialization -----------------------------------------------------


def _record_to_row(record: dict[str, Any]) -> dict[str, Any]:
    row = {col: record.get(col, "") for col in REPORT_COLUMNS}
    for col in ("accepted", "rejected"):
        if isinstance(row[col], list):
            row[col] = ",".join(row[col])
    return {k: ("" if v is None else v) for k, v in row.items()}


def _row_to_record(row: dict[str, str]) -> dict[str, Any]:
    record: dict[str, Any] = {
        "status": row["status"],
        "source_path": row["source_path"] or None,
        "domain": row["domain"] or None,
    }
    if row["status"] == "ok":
        for col in DocumentReport.COUNT_FIELDS:
            record[col] = int(row[col])
        for col in ("accepted", "rejected"):
            record[col] = [t for t in row[col].split(",") if t]
    else:
        record["error"] = row["error"]
    return record


def write_reports(records: list[dict[str, Any]], path: Path, fmt: str) -> None:
    if fmt == "json":
        text = "".join(json.dumps(r, ensure_ascii=False) + "\n" for r in records)
    else:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=REPORT_COLUMNS, lineterminator="\n")
        writer.writeheader()
        writer.writerows(_record_to_row(r) for r in records)
        text = buf.getvalue()
    path.write_text(text, encoding="utf-8")


def read_reports(path: Path) -> list[dict[str, Any]]:
    text = path.read_text(encoding="utf-8")
    if path.suffix == ".csv":
        return [_row_to_record(row) for row in csv.DictReader(io.StringIO(text))]
    return [json.loads(line) for line in text.splitlines() if line.strip()]


def stats_from_records(records: list[dict[str, Any]]) -> CorpusStats:
    ok = [DocumentReport.from_record(r) for r in records if r.get("status", "ok") == "ok"]
    skipped = [SkippedDocument.from_record(r) for r in records if r.get("status") == "skipped"]
    return aggregate_stats(ok, skipped)


def render_stats(stats: CorpusStats, fmt: str) -> str:
    data = stats.to_dict()
    if fmt == "json":
        return json.dumps(data, ensure_ascii=False, indent=2) + "\n"
    rows = [{"scope": "overall", **data["overall"]}]
    rows += [{"scope": name, **totals} for name, totals in data["per_domain"].items()]
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


# --- commands -----------------------------------------------------------------


def _display_path(path: Path, root: Path | None) -> Path:
    return path.relative_to(root) if root is not None else Path(path.name)


def cmd_run(args: argparse.Namespace) -> int:
    for flag, path in (("--stoplist", args.stoplist), ("--dict", args.dictionary),
                       ("--gazetteer", args.gazetteer)):
        if not path.is_file():
            log.error("%s: resource file not found: %s", flag, path)
            return EXIT_ERROR
    try:
        res = Resources.load(args.stoplist, args.dictionary, args.gazetteer)
    except (PreprocessError, OSError) as exc:
        log.error("cannot load resources: %s", exc)
        return EXIT_ERROR
    log.info("resources: %d stop words, %d dictionary terms, %d gazetteer terms",
             res.stops.size, res.dictionary.size, res.gazetteer.size)

    if args.input.is_dir():
        root: Path | None = args.input
        try:
            jobs: list[tuple[Path, DomainLabel | None]] = list(discover_corpus(args.input))
        except PreprocessError as exc:
            log.error("%s", exc)
            return EXIT_ERROR
    elif args.input.is_file():
        root = None
        jobs = [(args.input, None)]
    else:
        log.error("input not found: %s", args.input)
        return EXIT_ERROR

    terms_dir = args.out / "terms"
    try:
        terms_dir.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        log.error("cannot create output directory %s: %s", args.out, exc)
        return EXIT_ERROR

    workers = args.workers or default_workers()
    records = []
    n_skipped = 0
    for result in process_many(jobs, res, workers, args.keep_intermediate):
        rel = _display_path(result.source_path, root)
        result.source_path = rel
        if isinstance(result, DocumentReport):
            target = terms_dir / rel.parent
            try:
                target.mkdir(parents=True, exist_ok=True)
                write_outputs(result, target, rel.stem)
            except (OutputError, OSError) as exc:
                result = SkippedDocument(rel, result.domain, str(exc))
        if isinstance(result, SkippedDocument):
            n_skipped += 1
            log.warning("skipped %s: %s", rel, result.error)
            if args.fail_fast:
                log.error("aborting on first error (--fail-fast)")
                return EXIT_ERROR
        records.append(result.to_record())

    suffix = "jsonl" if args.format == "json" else "csv"
    write_reports(records, args.out / f"reports.{suffix}", args.format)
    stats = stats_from_records(records)
    (args.out / f"stats.{args.format}").write_text(render_stats(stats, args.format), encoding="utf-8")
    log.info("processed %d documents, %d skipped", len(records), n_skipped)
    return EXIT_PARTIAL if n_skipped else EXIT_OK


def cmd_split(args: argparse.Namespace) -> int:
    try:
        manifest = split_corpus(discover_corpus(args.corpus), args.ratio, args.seed)
    except (PreprocessError, OSError) as exc:
        log.error("%s", exc)
        return EXIT_ERROR
    args.manifest.write_text(manifest.to_text(args.corpus), encoding="utf-8")
    for domain, counts in sorted(manifest.counts().items()):
        log.info("%s: %d learning, %d testing", domain, *counts.values())
    return EXIT_OK


def cmd_stats(args: argparse.Namespace) -> int:
    try:
        records = read_reports(args.reports)
        stats = stats_from_records(records)
    except (OSError, ValueError, KeyError) as exc:
        log.error("cannot read reports %s: %s", args.reports, exc)
        return EXIT_ERROR
    fmt = args.format or ("csv" if args.out is not None and args.out.suffix == ".csv" else "json")
    text = render_stats(stats, fmt)
    if args.out is None:
        sys.stdout.write(text)
    else:
        args.out.write_text(text, encoding="utf-8")
    return EXIT_OK


def cmd_lexicon_check(args: argparse.Namespace) -> int:
    status = EXIT_OK
    for path in args.paths:
        try:
            scan = scan_term_file(path)
        except (PreprocessError, OSError) as exc:
            print(f"{path}: error: {exc}", file=sys.stderr)
            status = EXIT_ERROR
            continue
        for problem in scan.problems:
            print(f"{problem.path}:{problem.line_no}: {problem.reason}: {problem.line!r}",
                  file=sys.stderr)
        if scan.problems:
            status = EXIT_ERROR
        print(f"{path}: {len(scan.distinct)} entries, {scan.duplicate_count} duplicates"
              + (f", {len(scan.problems)} invalid lines" if scan.problems else ""))
    return status


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s: %(message)s",
    )
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
