"""
The six preprocessing stages applied to one document, plus batch fan-out.

Stages, in order: script gating and symbol removal, duplicate removal,
stop-word removal, dictionary matching, gazetteer matching. Every gated
token ends up counted in exactly one bucket, so

    n_tokens == n_duplicates + n_stopwords + n_dict + n_gaz + n_rejected
"""

from __future__ import annotations

import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Iterable, Iterator

from .core import TERM_SEPARATOR, RawDocument, gate_document, read_document
from .corpus import DomainLabel
from .errors import OutputError, PreprocessError
from .filters import StopList, dedup_terms, load_stoplist, remove_stopwords
from .lexicon import Lexicon, LexiconKind, load_lexicon, match_terms

logger = logging.getLogger(__name__)

# intermediate stage name -> output file suffix
INTERMEDIATE_STAGES = {
    "stripped": "stripped",
    "deduplicated": "dedup",
    "filtered": "nostop",
    "remaining": "remaining",
}


@dataclass(frozen=True)
class Resources:
    stops: StopList
    dictionary: Lexicon
    gazetteer: Lexicon

    def __post_init__(self):
        if self.dictionary.kind is not LexiconKind.DICTIONARY:
            raise ValueError("dictionary resource must be a DICTIONARY lexicon")
        if self.gazetteer.kind is not LexiconKind.GAZETTEER:
            raise ValueError("gazetteer resource must be a GAZETTEER lexicon")

    @classmethod
    def load(cls, stoplist: Path | str, dictionary: Path | str, gazetteer: Path | str) -> Resources:
        return cls(
            load_stoplist(stoplist),
            load_lexicon(dictionary, LexiconKind.DICTIONARY),
            load_lexicon(gazetteer, LexiconKind.GAZETTEER),
        )


@dataclass
class DocumentReport:
    source_path: Path | None
    domain: DomainLabel | None
    n_tokens: int
    n_duplicates: int
    n_stopwords: int
    n_dict: int
    n_gaz: int
    n_rejected: int
    accepted: list[str]
    rejected: list[str]
    intermediate: dict[str, list[str]] = field(default_factory=dict, repr=False)

    COUNT_FIELDS = ("n_tokens", "n_duplicates", "n_stopwords", "n_dict", "n_gaz", "n_rejected")

    def to_record(self) -> dict[str, Any]:
        record: dict[str, Any] = {
            "status": "ok",
            "source_path": None if self.source_path is None else str(self.source_path),
            "domain": None if self.domain is None else self.domain.name,
        }
        for name in self.COUNT_FIELDS:
            record[name] = getattr(self, name)
        record["accepted"] = list(self.accepted)
        record["rejected"] = list(self.rejected)
        return record

    @classmethod
    def from_record(cls, record: dict[str, Any]) -> DocumentReport:
        return cls(
            source_path=None if record.get("source_path") is None else Path(record["source_path"]),
            domain=None if record.get("domain") is None else DomainLabel(record["domain"]),
            accepted=list(record.get("accepted", [])),
            rejected=list(record.get("rejected", [])),
            **{name: int(record[name]) for name in cls.COUNT_FIELDS},
        )


@dataclass
class SkippedDocument:
    source_path: Path | None
    domain: DomainLabel | None
    error: str

    def to_record(self) -> dict[str, Any]:
        return {
            "status": "skipped",
            "source_path": None if self.source_path is None else str(self.source_path),
            "domain": None if self.domain is None else self.domain.name,
            "error": self.error,
        }

    @classmethod
    def from_record(cls, record: dict[str, Any]) -> SkippedDocument:
        return cls(
            None if record.get("source_path") is None else Path(record["source_path"]),
            None if record.get("domain") is None else DomainLabel(record["domain"]),
            record.get("error", ""),
        )


def preprocess_document(
    doc: RawDocument, res: Resources, keep_intermediate: bool = False
) -> DocumentReport:
    """
    Run all stages over one document.

    Raises NotGurmukhi when the document has no Gurmukhi text; callers
    processing a corpus record it as skipped.
    """
    tokens = gate_document(doc)
    dedup = dedup_terms(tokens)
    kept, n_stop = remove_stopwords(dedup.unique, res.stops)
    part = match_terms(kept, res.dictionary, res.gazetteer)

    report = DocumentReport(
        source_path=doc.source_path,
        domain=doc.domain,
        n_tokens=len(tokens),
        n_duplicates=dedup.duplicate_count,
        n_stopwords=n_stop,
        n_dict=len(part.dictionary_matched),
        n_gaz=len(part.gazetteer_matched),
        n_rejected=len(part.rejected),
        accepted=part.accepted,
        rejected=part.rejected,
    )
    if keep_intermediate:
        report.intermediate = {
            "stripped": tokens,
            "deduplicated": dedup.unique,
            "filtered": kept,
            "remaining": [t for t in kept if t not in res.dictionary.terms],
        }
    return report


def format_terms(terms: Iterable[str]) -> str:
    return TERM_SEPARATOR.join(terms)


def _write_text(path: Path, text: str) -> None:
    try:
        path.write_bytes(text.encode("utf-8"))
    except OSError as exc:
        raise OutputError(path, exc) from exc


def write_outputs(report: DocumentReport, out_dir: Path | str, stem: str | None = None) -> list[Path]:
    """
    Write ``<stem>.accepted.txt`` and ``<stem>.rejected.txt`` into out_dir.

    Files hold comma separated terms in UTF-8 with no trailing comma or
    newline. Intermediate stage files are written too when the report
    carries them.
    """
    out_dir = Path(out_dir)
    if stem is None:
        stem = report.source_path.stem if report.source_path is not None else "document"

    written = []
    outputs = [("accepted", report.accepted), ("rejected", report.rejected)]
    outputs += [
        (suffix, report.intermediate[stage])
        for stage, suffix in INTERMEDIATE_STAGES.items()
        if stage in report.intermediate
    ]
    for suffix, terms in outputs:
        path = out_dir / f"{stem}.{suffix}.txt"
        _write_text(path, format_terms(terms))
        written.append(path)
    return written


# --- batch processing -------------------------------------------------------

_worker_resources: Resources | None = None


def _init_worker(res: Resources) -> None:
    global _worker_resources
    _worker_resources = res


def _process_path(
    job: tuple[Path, DomainLabel | None], res: Resources, keep_intermediate: bool
) -> DocumentReport | SkippedDocument:
    path, domain = job
    try:
        doc = read_document(path, domain)
        return preprocess_document(doc, res, keep_intermediate)
    except (PreprocessError, OSError) as exc:
        return SkippedDocument(path, domain, str(exc))


def _process_in_worker(
    job: tuple[Path, DomainLabel | None], keep_intermediate: bool
) -> DocumentReport | SkippedDocument:
    assert _worker_resources is not None
    return _process_path(job, _worker_resources, keep_intermediate)


def default_workers() -> int:
    env = os.environ.get("PUNJABI_PREP_WORKERS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def process_many(
    jobs: Iterable[tuple[Path, DomainLabel | None]],
    res: Resources,
    workers: int = 1,
    keep_intermediate: bool = False,
) -> Iterator[DocumentReport | SkippedDocument]:
    """
    Process documents from disk, yielding one result per job in job order.

    Failures (undecodable or non-Gurmukhi documents, unreadable files) come
    back as SkippedDocument rather than raising. With workers > 1 the shared
    Resources are shipped once to each worker process.
    """
    jobs = list(jobs)
    if workers <= 1 or len(jobs) <= 1:
        for job in jobs:
            yield _process_path(job, res, keep_intermediate)
        return

    chunksize = max(1, len(jobs) // (workers * 4))
    with ProcessPoolExecutor(workers, initializer=_init_worker, initargs=(res,)) as pool:
        yield from pool.map(
            _process_in_worker, jobs, [keep_intermediate] * len(jobs), chunksize=chunksize
        )
