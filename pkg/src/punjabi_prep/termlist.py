"""Reader for the line-oriented term list format shared by stop lists and lexicons.

One term per line, UTF-8, LF or CRLF line endings. Surrounding whitespace
is trimmed, blank lines are skipped and lines starting with ``#`` are
comments. Every entry must be a single Gurmukhi term.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .core import GURMUKHI_FIRST, GURMUKHI_LAST, nfc
from .errors import InvalidEncoding, InvalidEntry

COMMENT_PREFIX = "#"


@dataclass
class TermListScan:
    """Everything learned from one pass over a term list file."""

    path: Path
    entries: list[tuple[int, str]] = field(default_factory=list)
    problems: list[InvalidEntry] = field(default_factory=list)

    @property
    def distinct(self) -> frozenset[str]:
        return frozenset(term for _, term in self.entries)

    @property
    def duplicate_count(self) -> int:
        return len(self.entries) - len(self.distinct)


def _entry_problem(term: str) -> str | None:
    for ch in term:
        if not GURMUKHI_FIRST <= ord(ch) <= GURMUKHI_LAST:
            return f"non-Gurmukhi codepoint U+{ord(ch):04X}"
    return None


def scan_term_file(path: Path | str) -> TermListScan:
    """
    Read a term list, collecting every invalid line instead of stopping at the first.

    Raises FileNotFoundError if the file is missing and InvalidEncoding if it
    is not UTF-8.
    """
    path = Path(path)
    data = path.read_bytes()
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        line_no = data.count(b"\n", 0, exc.start) + 1
        raise InvalidEncoding(path, f"(line {line_no})") from exc
    if text.startswith("﻿"):
        text = text[1:]

    scan = TermListScan(path)
    for line_no, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith(COMMENT_PREFIX):
            continue
        term = nfc(line)
        reason = _entry_problem(term)
        if reason:
            scan.problems.append(InvalidEntry(path, line_no, line, reason))
        else:
            scan.entries.append((line_no, term))
    return scan


def read_term_file(path: Path | str) -> frozenset[str]:
    """Load a term list as a set, raising InvalidEntry on the first bad line."""
    scan = scan_term_file(path)
    if scan.problems:
        raise scan.problems[0]
    return scan.distinct
