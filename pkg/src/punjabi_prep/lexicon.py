"""
Dictionary and gazetteer term lists, and the three-way match of candidate terms.

A candidate is looked up in the dictionary first. Misses go on to the
gazetteer, and anything found in neither is rejected. A term present in
both lists therefore counts as a dictionary match.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from .core import nfc
from .termlist import read_term_file


class LexiconKind(enum.Enum):
    DICTIONARY = "dictionary"
    GAZETTEER = "gazetteer"


@dataclass(frozen=True)
class Lexicon:
    kind: LexiconKind
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
    def from_terms(cls, kind: LexiconKind, terms: Iterable[str]) -> Lexicon:
        return cls(kind, frozenset(nfc(t) for t in terms))


@dataclass
class MatchPartition:
    dictionary_matched: list[str] = field(default_factory=list)
    gazetteer_matched: list[str] = field(default_factory=list)
    rejected: list[str] = field(default_factory=list)

    @property
    def accepted(self) -> list[str]:
        """Dictionary matches followed by gazetteer matches, as written to the accepted file."""
        return self.dictionary_matched + self.gazetteer_matched


def load_lexicon(path: Path | str, kind: LexiconKind | str) -> Lexicon:
    return Lexicon(LexiconKind(kind), read_term_file(path), Path(path))


def lookup(term: str, lex: Lexicon) -> bool:
    return term in lex.terms


def match_terms(terms: Sequence[str], dictionary: Lexicon, gazetteer: Lexicon) -> MatchPartition:
    if dictionary.kind is not LexiconKind.DICTIONARY:
        raise ValueError(f"expected a dictionary lexicon, got {dictionary.kind.value}")
    if gazetteer.kind is not LexiconKind.GAZETTEER:
        raise ValueError(f"expected a gazetteer lexicon, got {gazetteer.kind.value}")

    part = MatchPartition()
    for term in terms:
        if term in dictionary.terms:
            part.dictionary_matched.append(term)
        elif term in gazetteer.terms:
            part.gazetteer_matched.append(term)
        else:
            part.rejected.append(term)
    return part
