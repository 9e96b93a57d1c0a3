from __future__ import annotations

import json
from pathlib import Path

import pytest
from conftest import BASE_NAMES, corpus
from hypothesis import given, settings
from hypothesis import strategies as st

from ddf.corpus import build_corpus, cyclic_monoid
from ddf.errors import ParseError, UnresolvedName
from ddf.interchange import Document, canonical, document_from_corpus, emit, parse
from ddf.lax_span import from_category

CORPUS_DIR = Path(__file__).resolve().parent.parent / "corpus"
FILES = {"vertical": "vertical_c2.json"}


def corpus_file(name: str) -> Path:
    return CORPUS_DIR / FILES.get(name, f"{name}.json")


@pytest.mark.parametrize("name", BASE_NAMES)
def test_round_trip_is_exact(name):
    doc = document_from_corpus(corpus(name))
    text = emit(doc)
    back = parse(text)
    assert emit(back) == text
    for section in ("lax_functors", "modules", "multimodulations", "ddfs", "profunctors", "multicells"):
        assert back.section(section) == doc.section(section), section


@pytest.mark.parametrize("name", BASE_NAMES)
def test_shipped_files_are_canonical(name):
    text = corpus_file(name).read_text(encoding="utf-8")
    assert canonical(text) == text
    assert text == emit(document_from_corpus(build_corpus(name)))


def test_emission_does_not_depend_on_insertion_history():
    a = emit(document_from_corpus(build_corpus("walking")))
    b = emit(document_from_corpus(build_corpus("walking")))
    assert a == b


@settings(max_examples=15)
@given(st.integers(1, 4))
def test_cyclic_monoids_round_trip(n):
    doc = Document()
    doc.add("lax_functors", "Z", from_category(cyclic_monoid(n)))
    text = emit(doc)
    assert parse(text).lax_functors["Z"] == doc.lax_functors["Z"]


def test_dependencies_are_named_after_their_owner():
    doc = Document()
    doc.add("lax_functors", "Z", from_category(cyclic_monoid(2)))
    assert list(doc.double_categories) == ["Z.base"]
    assert list(doc.categories) == ["Z.base.d0", "Z.base.d1"]
    with pytest.raises(ValueError, match="already used"):
        doc.add("lax_functors", "Z", from_category(cyclic_monoid(3)))


def test_empty_text_is_an_empty_document():
    assert parse("").is_empty()
    assert emit(parse("{}")) == "{}\n"


def test_syntax_errors_carry_line_and_column():
    with pytest.raises(ParseError) as info:
        parse('{\n  "sets": {\n    "A": [1,\n')
    assert info.value.location.startswith("line ")
    assert "column" in info.value.location


def test_unknown_section_is_located():
    with pytest.raises(ParseError) as info:
        parse('{"setz": {}}')
    assert info.value.location == "$.setz"


def test_type_errors_are_located():
    with pytest.raises(ParseError) as info:
        parse(json.dumps({"sets": {"A": ["a", 3]}}))
    assert info.value.location == "$.sets.A[1]"


def test_missing_field_is_located():
    data = json.loads(emit(document_from_corpus(corpus("terminal"))))
    del data["categories"]["terminal.d0"]["identities"]
    with pytest.raises(ParseError) as info:
        parse(json.dumps(data))
    assert info.value.location == "$.categories.terminal.d0"
    assert "identities" in info.value.message


def test_unresolved_reference_is_named():
    data = json.loads(emit(document_from_corpus(corpus("terminal"))))
    data["lax_functors"]["T"]["base"] = "nowhere"
    with pytest.raises(UnresolvedName) as info:
        parse(json.dumps(data))
    assert info.value.name == "nowhere"
    assert info.value.location == "$.lax_functors.T.base"


def test_ill_typed_tables_become_parse_errors():
    data = json.loads(emit(document_from_corpus(corpus("terminal"))))
    data["categories"]["terminal.d0"]["morphisms"]["1_*"] = ["*", "nowhere"]
    with pytest.raises(ParseError) as info:
        parse(json.dumps(data))
    assert info.value.location == "$.categories.terminal.d0"
