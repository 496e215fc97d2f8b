import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import naive_is_rejected, naive_terms
from punjabi_prep.core import (
    CharClass,
    RawDocument,
    classify_char,
    gate_document,
    read_document,
    strip_symbols,
    tokenize,
)
from punjabi_prep.errors import InvalidEncoding, NotGurmukhi

any_codepoint = st.integers(min_value=0, max_value=0x10FFFF).map(chr)
mixed_text = st.text(
    alphabet=st.one_of(
        st.characters(min_codepoint=0x0A00, max_codepoint=0x0A7F),
        st.sampled_from(list(" \t\r\n,।॥")),
        st.characters(),
    ),
    max_size=200,
)


@pytest.mark.parametrize(
    "ch, expected",
    [
        ("ਪ", CharClass.GURMUKHI),
        ("\u0a00", CharClass.GURMUKHI),
        ("\u0a7f", CharClass.GURMUKHI),
        ("੧", CharClass.GURMUKHI),
        ("<", CharClass.USELESS),
        ("\n", CharClass.SEPARATOR),
        ("\t", CharClass.SEPARATOR),
        ("\r", CharClass.SEPARATOR),
        (" ", CharClass.SEPARATOR),
        (",", CharClass.SEPARATOR),
        ("।", CharClass.SEPARATOR),
        ("॥", CharClass.SEPARATOR),
        ("1", CharClass.USELESS),
        ("a", CharClass.USELESS),
        ("ह", CharClass.USELESS),
        ("\u09ff", CharClass.USELESS),
        ("\u0a80", CharClass.USELESS),
        ("\U0001F600", CharClass.USELESS),
        ("\u00a0", CharClass.USELESS),
    ],
)
def test_classify_char(ch, expected):
    assert classify_char(ch) is expected


@given(any_codepoint)
def test_classify_is_total_partition(ch):
    cls = classify_char(ch)
    assert cls in CharClass
    assert (cls is CharClass.GURMUKHI) == (0x0A00 <= ord(ch) <= 0x0A7F)


@pytest.mark.parametrize(
    "content, expected",
    [
        ('("ਮਨਰੇਗਾ")', "ਮਨਰੇਗਾ"),
        ("ਦਿਨ,, ਹੱਕ", "ਦਿਨ,ਹੱਕ"),
        ("", ""),
        ("  \n\tਦਿਨ\n\n", "ਦਿਨ"),
        ("ਹੈ। ਮਨਰੇਗਾ", "ਹੈ,ਮਨਰੇਗਾ"),
        ("ਨੂੰ 100 ਦਿਨ", "ਨੂੰ,ਦਿਨ"),
        ("ਦਿਨ\r\nਹੱਕ", "ਦਿਨ,ਹੱਕ"),
    ],
)
def test_strip_symbols(content, expected):
    assert strip_symbols(content) == expected


def test_strip_symbols_normalizes_nukta():
    precomposed = "\u0a5b"  # NFC decomposes it to ja + nukta
    assert strip_symbols(precomposed + "\u0a17") == "\u0a1c\u0a3c\u0a17"


@given(mixed_text)
def test_strip_symbols_idempotent(text):
    once = strip_symbols(text)
    assert strip_symbols(once) == once


@given(mixed_text)
def test_strip_symbols_output_alphabet(text):
    out = strip_symbols(text)
    assert all(c == "," or 0x0A00 <= ord(c) <= 0x0A7F for c in out)
    assert ",," not in out
    assert not out.startswith(",") and not out.endswith(",")


@pytest.mark.parametrize(
    "normalized, expected",
    [("ਦਿਨ,ਹੱਕ", ["ਦਿਨ", "ਹੱਕ"]), ("ਪੰਜਾਬ", ["ਪੰਜਾਬ"]), ("", [])],
)
def test_tokenize(normalized, expected):
    assert tokenize(normalized) == expected


@given(mixed_text)
def test_tokenize_never_emits_empty(text):
    assert all(tokenize(strip_symbols(text)))


@given(mixed_text)
def test_gate_matches_per_character_oracle(text):
    doc = RawDocument(text)
    if naive_is_rejected(text):
        with pytest.raises(NotGurmukhi):
            gate_document(doc)
    else:
        assert gate_document(doc) == naive_terms(text)


def test_gate_sample_input(golden_dir):
    terms = gate_document(read_document(golden_dir / "sample_input.txt"))
    assert len(terms) == 61
    assert terms[:3] == ["ਦੁਨੀਆਂ", "ਵਿੱਚ", "ਰੁਜ਼ਗਾਰ"]
    assert "ਮਨਰੇਗਾ" in terms
    joined = "".join(terms)
    for gone in ("100", '"', "(", ")", "।"):
        assert gone not in joined


def test_gate_rejects_non_gurmukhi():
    with pytest.raises(NotGurmukhi):
        gate_document(RawDocument("hello world 123"))


def test_gate_passes_through_single_term():
    assert gate_document(RawDocument("ਪੰਜਾਬ")) == ["ਪੰਜਾਬ"]


def test_gate_filters_mixed_document():
    assert gate_document(RawDocument("Punjab ਪੰਜਾਬ (2024)")) == ["ਪੰਜਾਬ"]


@pytest.mark.parametrize("content", ["", "   ", "\n\t,।"])
def test_gate_blank_document_yields_nothing(content):
    assert gate_document(RawDocument(content)) == []


def test_gurmukhi_digits_survive():
    assert gate_document(RawDocument("੧੦੦ ਦਿਨ")) == ["੧੦੦", "ਦਿਨ"]


def test_read_document_rejects_bad_utf8(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_bytes("ਦਿਨ ".encode() + b"\xff\xfe")
    with pytest.raises(InvalidEncoding):
        read_document(path)


@settings(max_examples=300)
@given(st.text(max_size=300))
def test_gate_script_purity(text):
    try:
        terms = gate_document(RawDocument(text))
    except NotGurmukhi:
        return
    for term in terms:
        assert term
        assert all(0x0A00 <= ord(c) <= 0x0A7F for c in term)
