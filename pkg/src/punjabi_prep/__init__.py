"""Preprocessing of Gurmukhi-script Punjabi text for term extraction."""

__version__ = "0.1.0"

from .core import CharClass, RawDocument, classify_char, gate_document, read_document, strip_symbols, tokenize
from .corpus import (
    CorpusStats,
    DomainLabel,
    SplitManifest,
    aggregate_stats,
    discover_corpus,
    split_corpus,
)
from .errors import (
    EmptyCorpus,
    InvalidEncoding,
    InvalidEntry,
    InvalidRatio,
    NotGurmukhi,
    OutputError,
    PreprocessError,
)
from .filters import DedupResult, StopList, dedup_terms, load_stoplist, remove_stopwords
from .lexicon import Lexicon, LexiconKind, MatchPartition, load_lexicon, lookup, match_terms
from .pipeline import DocumentReport, Resources, SkippedDocument, preprocess_document, write_outputs
