"""Duplicate-term elimination and stop-word removal."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .core import nfc
from .termlist import read_term_file


@dataclass(frozen=True)
class StopList:
    terms: frozenset[str]
    source_path: Path | None = None

    @property
    def size(self) -> int:
        return len(self.terms)

    def __contains__(self, term: object) -> bool:
        return term in self.terms

    def __len__(self) -> int:
        return len(self.terms)

    @classmethod
    def from_terms(cls, terms: Iterable[str]) -> StopList:
        return cls(frozenset(nfc(t) for t in terms))


@dataclass(frozen=True)
class DedupResult:
    unique: list[str]
    duplicate_count: int


def load_stoplist(path: Path | str) -> StopList:
    """Load a stop list file (one term per line, ``#`` comments)."""
    return StopList(read_term_file(path), Path(path))


def dedup_terms(terms: Sequence[str]) -> DedupResult:
    """Keep the first occurrence of each term; later repeats count as duplicates."""
    seen: set[str] = set()
    unique = []
    for term in terms:
        key = nfc(term)
        if key not in seen:
            seen.add(key)
            unique.append(term)
    return DedupResult(unique, len(terms) - len(unique))


def remove_stopwords(terms: Sequence[str], stops: StopList) -> tuple[list[str], int]:
    kept = [t for t in terms if t not in stops.terms]
    return kept, len(terms) - len(kept)
