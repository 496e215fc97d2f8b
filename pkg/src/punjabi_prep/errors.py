"""Exception types raised by the preprocessing stages."""

from __future__ import annotations

from pathlib import Path


class PreprocessError(Exception):
    """Base class for all errors raised by punjabi_prep."""


class InvalidEncoding(PreprocessError):
    def __init__(self, path: Path | str | None, detail: str = ""):
        self.path = path
        where = f"{path}: " if path is not None else ""
        super().__init__(f"{where}content is not valid UTF-8 {detail}".rstrip())


class NotGurmukhi(PreprocessError):
    """Raised when a document contains no Gurmukhi text at all."""

    def __init__(self, path: Path | str | None = None):
        self.path = path
        where = f"{path}: " if path is not None else ""
        super().__init__(f"{where}document contains no Gurmukhi codepoints")


class InvalidEntry(PreprocessError):
    """A term-list line that is not a single Gurmukhi term."""

    def __init__(self, path: Path | str, line_no: int, line: str, reason: str):
        self.path = path
        self.line_no = line_no
        self.line = line
        self.reason = reason
        super().__init__(f"{path}:{line_no}: {reason}: {line!r}")


class EmptyCorpus(PreprocessError):
    def __init__(self, root: Path | str):
        self.root = root
        super().__init__(f"{root}: no .txt documents found")


class InvalidRatio(PreprocessError, ValueError):
    def __init__(self, ratio: float):
        self.ratio = ratio
        super().__init__(f"split ratio must satisfy 0 < ratio < 1, got {ratio!r}")


class OutputError(PreprocessError):
    """Writing a term file failed (disk full, permissions, ...)."""

    def __init__(self, path: Path | str, cause: OSError):
        self.path = path
        self.cause = cause
        super().__init__(f"{path}: cannot write output: {cause.strerror or cause}")
