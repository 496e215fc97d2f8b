"""
Character-level script gating and tokenization for Gurmukhi text.

Every codepoint falls in exactly one of three classes:

* GURMUKHI  - the Gurmukhi block U+0A00..U+0A7F, kept verbatim;
* SEPARATOR - whitespace, comma and the danda marks, which delimit terms;
* USELESS   - everything else (punctuation, symbols, digits, Latin, ...),
  which is dropped.

Runs of separators collapse to a single ASCII comma, so the normalized
form of a document is a comma separated list of terms.
"""

from __future__ import annotations

import enum
import re
import unicodedata
from dataclasses import dataclass
from pathlib import Path
from typing import TYPE_CHECKING

from .errors import InvalidEncoding, NotGurmukhi

if TYPE_CHECKING:
    from .corpus import DomainLabel

GURMUKHI_FIRST = 0x0A00
GURMUKHI_LAST = 0x0A7F

DANDA = "।"
DOUBLE_DANDA = "॥"
SEPARATOR_CHARS = frozenset(" \t\r\n," + DANDA + DOUBLE_DANDA)

TERM_SEPARATOR = ","

# Regex twins of classify_char, used on the hot path.
_USELESS_RE = re.compile(r"[^਀-੿ \t\r\n,।॥]+")
_SEPARATOR_RUN_RE = re.compile(r"[ \t\r\n,।॥]+")


class CharClass(enum.Enum):
    GURMUKHI = "gurmukhi"
    SEPARATOR = "separator"
    USELESS = "useless"


def classify_char(ch: str) -> CharClass:
    """Return the class of a single codepoint. Total over all codepoints."""
    if GURMUKHI_FIRST <= ord(ch) <= GURMUKHI_LAST:
        return CharClass.GURMUKHI
    if ch in SEPARATOR_CHARS:
        return CharClass.SEPARATOR
    return CharClass.USELESS


def is_gurmukhi_term(text: str) -> bool:
    """True if ``text`` is non-empty and made only of Gurmukhi codepoints."""
    return bool(text) and all(GURMUKHI_FIRST <= ord(c) <= GURMUKHI_LAST for c in text)


def nfc(text: str) -> str:
    return unicodedata.normalize("NFC", text)


@dataclass(frozen=True)
class RawDocument:
    content: str
    source_path: Path | None = None
    domain: DomainLabel | None = None

    @classmethod
    def from_bytes(
        cls, data: bytes, source_path: Path | None = None, domain: DomainLabel | None = None
    ) -> RawDocument:
        try:
            content = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise InvalidEncoding(source_path, f"(byte offset {exc.start})") from exc
        return cls(content, source_path, domain)


def read_document(path: Path | str, domain: DomainLabel | None = None) -> RawDocument:
    """Load a UTF-8 text file. Raises InvalidEncoding on undecodable bytes."""
    path = Path(path)
    return RawDocument.from_bytes(path.read_bytes(), path, domain)


def strip_symbols(content: str) -> str:
    """
    Drop useless codepoints and collapse separator runs to one comma.

    The result holds only Gurmukhi codepoints and single commas, with no
    leading or trailing comma, and is NFC-normalized.
    """
    text = _USELESS_RE.sub("", nfc(content))
    text = _SEPARATOR_RUN_RE.sub(TERM_SEPARATOR, text).strip(TERM_SEPARATOR)
    # dropping a symbol can bring combining marks together out of canonical order
    return nfc(text)


def tokenize(normalized: str) -> list[str]:
    return [t for t in normalized.split(TERM_SEPARATOR) if t]


def gate_document(doc: RawDocument) -> list[str]:
    """
    Run script gating and symbol removal over a document and return its terms.

    Foreign characters inside an otherwise Gurmukhi document are filtered
    out. A document that has visible content but not a single Gurmukhi
    codepoint is rejected with NotGurmukhi. Empty or whitespace-only
    documents yield no terms.
    """
    terms = tokenize(strip_symbols(doc.content))
    if not terms and any(classify_char(c) is CharClass.USELESS for c in doc.content):
        raise NotGurmukhi(doc.source_path)
    return terms
