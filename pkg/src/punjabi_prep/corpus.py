"""
Corpus layout, learning/testing split, and corpus-level statistics.

A corpus root holds one subdirectory per domain, each containing ``.txt``
documents. The five standard domains are agriculture, entertainment,
health, politics and sports; any other subdirectory name is kept as a
free-form domain.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from decimal import ROUND_HALF_UP, Decimal
from fractions import Fraction
from pathlib import Path
from typing import TYPE_CHECKING, Any, Iterable

from .errors import EmptyCorpus, InvalidRatio

if TYPE_CHECKING:
    from .pipeline import DocumentReport, SkippedDocument

STANDARD_DOMAINS = ("agriculture", "entertainment", "health", "politics", "sports")


@dataclass(frozen=True, order=True)
class DomainLabel:
    """A corpus domain, named after its subdirectory (lower-cased for the standard five)."""

    name: str

    def __post_init__(self):
        if self.name.lower() in STANDARD_DOMAINS:
            object.__setattr__(self, "name", self.name.lower())

    @property
    def is_standard(self) -> bool:
        return self.name in STANDARD_DOMAINS

    def __str__(self) -> str:
        return self.name


AGRICULTURE = DomainLabel("agriculture")
ENTERTAINMENT = DomainLabel("entertainment")
HEALTH = DomainLabel("health")
POLITICS = DomainLabel("politics")
SPORTS = DomainLabel("sports")


def discover_corpus(root: Path | str) -> list[tuple[Path, DomainLabel]]:
    """List every ``.txt`` file under the domain subdirectories of root, sorted by path."""
    root = Path(root)
    if not root.is_dir():
        raise NotADirectoryError(f"{root}: not a directory")

    found = []
    for sub in root.iterdir():
        if not sub.is_dir():
            continue
        domain = DomainLabel(sub.name)
        found.extend((p, domain) for p in sub.rglob("*.txt") if p.is_file())
    if not found:
        raise EmptyCorpus(root)
    found.sort(key=lambda item: item[0].relative_to(root).as_posix())
    return found


# --- splitting ----------------------------------------------------------------


class Assignment(enum.Enum):
    LEARNING = "LEARNING"
    TESTING = "TESTING"


@dataclass
class SplitManifest:
    entries: list[tuple[Path, DomainLabel, Assignment]]
    ratio: float
    seed: int

    def counts(self) -> dict[DomainLabel, dict[Assignment, int]]:
        out: dict[DomainLabel, dict[Assignment, int]] = {}
        for _, domain, assignment in self.entries:
            per = out.setdefault(domain, {Assignment.LEARNING: 0, Assignment.TESTING: 0})
            per[assignment] += 1
        return out

    def to_text(self, root: Path | str | None = None) -> str:
        """Serialize as ``<assignment>\\t<domain>\\t<path>`` lines after a header comment.

        Paths are written relative to root when given.
        """
        lines = [f"# ratio={self.ratio!r} seed={self.seed}"]
        for path, domain, assignment in self.entries:
            shown = path.relative_to(root) if root is not None else path
            lines.append(f"{assignment.value}\t{domain.name}\t{shown.as_posix()}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> SplitManifest:
        ratio, seed = 0.0, 0
        entries = []
        for line in text.splitlines():
            if line.startswith("#"):
                for item in line[1:].split():
                    key, _, value = item.partition("=")
                    if key == "ratio":
                        ratio = float(value)
                    elif key == "seed":
                        seed = int(value)
                continue
            if not line.strip():
                continue
            assignment, domain, path = line.split("\t", 2)
            entries.append((Path(path), DomainLabel(domain), Assignment(assignment)))
        return cls(entries, ratio, seed)


def learning_count(size: int, ratio: float) -> int:
    """round-half-up(ratio * size), computed in decimal to avoid binary float drift."""
    exact = Decimal(repr(ratio)) * size
    return int(exact.quantize(Decimal(1), rounding=ROUND_HALF_UP))


def split_corpus(
    files: Iterable[tuple[Path, DomainLabel]], ratio: float = 0.7, seed: int = 0
) -> SplitManifest:
    """
    Split each domain into learning and testing documents.

    Each domain's files are sorted, shuffled with a generator seeded from
    (seed, domain) and the first round(ratio * n) go to LEARNING. The result
    does not depend on the order of ``files``.
    """
    if not 0 < ratio < 1:
        raise InvalidRatio(ratio)

    by_domain: dict[DomainLabel, list[Path]] = {}
    for path, domain in files:
        by_domain.setdefault(domain, []).append(Path(path))

    entries = []
    for domain in sorted(by_domain):
        paths = sorted(by_domain[domain], key=lambda p: p.as_posix())
        random.Random(f"{seed}:{domain.name}").shuffle(paths)
        n_learn = learning_count(len(paths), ratio)
        entries += [(p, domain, Assignment.LEARNING) for p in paths[:n_learn]]
        entries += [(p, domain, Assignment.TESTING) for p in paths[n_learn:]]
    return SplitManifest(entries, ratio, seed)


# --- statistics ---------------------------------------------------------------

COUNTED = ("n_duplicates", "n_stopwords", "n_dict", "n_gaz", "n_rejected")
PCT_NAMES = {
    "n_duplicates": "pct_duplicates",
    "n_stopwords": "pct_stopwords",
    "n_dict": "pct_dict",
    "n_gaz": "pct_gaz",
    "n_rejected": "pct_rejected",
}


def _pct(part: int | Fraction, whole: int) -> float:
    return float(Fraction(100) * part / whole) if whole else 0.0


@dataclass
class StageTotals:
    """
    Summed stage counts over a set of documents.

    Pooled (micro) percentages divide each count by the pooled n_tokens.
    Macro percentages average the per-document percentages over the
    documents with at least one token; their running sums are kept as exact
    fractions so merging is associative and order-independent.
    """

    n_documents: int = 0
    n_skipped: int = 0
    n_tokens: int = 0
    n_duplicates: int = 0
    n_stopwords: int = 0
    n_dict: int = 0
    n_gaz: int = 0
    n_rejected: int = 0
    n_macro_documents: int = 0
    macro_sums: dict[str, Fraction] = field(default_factory=lambda: {k: Fraction(0) for k in COUNTED})

    @classmethod
    def of_report(cls, report: DocumentReport) -> StageTotals:
        totals = cls(n_documents=1, n_tokens=report.n_tokens)
        for name in COUNTED:
            setattr(totals, name, getattr(report, name))
        if report.n_tokens:
            totals.n_macro_documents = 1
            totals.macro_sums = {k: Fraction(getattr(report, k), report.n_tokens) for k in COUNTED}
        return totals

    def __add__(self, other: StageTotals) -> StageTotals:
        merged = StageTotals(
            n_documents=self.n_documents + other.n_documents,
            n_skipped=self.n_skipped + other.n_skipped,
            n_tokens=self.n_tokens + other.n_tokens,
            n_macro_documents=self.n_macro_documents + other.n_macro_documents,
            macro_sums={k: self.macro_sums[k] + other.macro_sums[k] for k in COUNTED},
        )
        for name in COUNTED:
            setattr(merged, name, getattr(self, name) + getattr(other, name))
        return merged

    def percentages(self) -> dict[str, float]:
        return {PCT_NAMES[k]: _pct(getattr(self, k), self.n_tokens) for k in COUNTED}

    def macro_percentages(self) -> dict[str, float]:
        n = self.n_macro_documents
        return {
            "macro_" + PCT_NAMES[k]: float(100 * self.macro_sums[k] / n) if n else 0.0
            for k in COUNTED
        }

    @property
    def pct_duplicates(self) -> float:
        return _pct(self.n_duplicates, self.n_tokens)

    @property
    def pct_stopwords(self) -> float:
        return _pct(self.n_stopwords, self.n_tokens)

    @property
    def pct_dict(self) -> float:
        return _pct(self.n_dict, self.n_tokens)

    @property
    def pct_gaz(self) -> float:
        return _pct(self.n_gaz, self.n_tokens)

    @property
    def pct_rejected(self) -> float:
        return _pct(self.n_rejected, self.n_tokens)

    @property
    def mean_stopwords_per_document(self) -> float:
        return self.n_stopwords / self.n_documents if self.n_documents else 0.0

    def to_dict(self, precision: int = 4) -> dict[str, Any]:
        out: dict[str, Any] = {
            "n_documents": self.n_documents,
            "n_skipped": self.n_skipped,
            "n_tokens": self.n_tokens,
        }
        for name in COUNTED:
            out[name] = getattr(self, name)
        out.update({k: round(v, precision) for k, v in self.percentages().items()})
        out.update({k: round(v, precision) for k, v in self.macro_percentages().items()})
        out["mean_stopwords_per_document"] = round(self.mean_stopwords_per_document, precision)
        return out


@dataclass
class CorpusStats:
    per_domain: dict[str, StageTotals] = field(default_factory=dict)
    overall: StageTotals = field(default_factory=StageTotals)

    def __add__(self, other: CorpusStats) -> CorpusStats:
        per_domain = dict(self.per_domain)
        for name, totals in other.per_domain.items():
            per_domain[name] = per_domain.get(name, StageTotals()) + totals
        return CorpusStats(per_domain, self.overall + other.overall)

    @property
    def n_skipped(self) -> int:
        return self.overall.n_skipped

    def to_dict(self, precision: int = 4) -> dict[str, Any]:
        return {
            "overall": self.overall.to_dict(precision),
            "per_domain": {
                name: self.per_domain[name].to_dict(precision) for name in sorted(self.per_domain)
            },
        }


UNLABELED = "unlabeled"


def _domain_key(domain: DomainLabel | None) -> str:
    return domain.name if domain is not None else UNLABELED


def aggregate_stats(
    reports: Iterable[DocumentReport], skipped: Iterable[SkippedDocument] = ()
) -> CorpusStats:
    """
    Fold document reports into per-domain and overall totals.

    Skipped documents only bump the skip tally; they never enter a
    percentage denominator.
    """
    stats = CorpusStats()
    for report in reports:
        one = StageTotals.of_report(report)
        key = _domain_key(report.domain)
        stats.per_domain[key] = stats.per_domain.get(key, StageTotals()) + one
        stats.overall = stats.overall + one
    for skip in skipped:
        key = _domain_key(skip.domain)
        stats.per_domain[key] = stats.per_domain.get(key, StageTotals()) + StageTotals(n_skipped=1)
        stats.overall = stats.overall + StageTotals(n_skipped=1)
    return stats
