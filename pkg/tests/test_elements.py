from __future__ import annotations

import random

import pytest
from conftest import BASE_NAMES, corpus
from hypothesis import given, settings
from hypothesis import strategies as st
from oracles import is_discrete_fibration

from ddf.cat_core import FinFunctor, check_category, terminal_category
from ddf.corpus import arrow_category, random_over_arrow, vertical_functor
from ddf.double_cat import (
    check_double_category,
    horizontal_double,
    identity_double_functor,
    square_double,
    to_terminal,
    walking_proarrow,
)
from ddf.elements import (
    DDFCandidate,
    DDFMorphism,
    check_ddf_morphism,
    compose_ddf_morphisms,
    el_functor,
    el_transformation,
    elements_category,
    identity_ddf,
    identity_ddf_morphism,
    is_ddf,
    is_ddf_via_transpose,
    transpose_candidate,
)
from ddf.errors import CompositionMismatch, InvalidFunctor
from ddf.finset import FinFn, FinSet, split_pair
from ddf.lax_span import compose_transformations, from_category, identity_transformation


def test_elements_category_of_a_presheaf_on_the_arrow():
    c = arrow_category()
    sets = {"X": FinSet(("a", "b")), "Y": FinSet(("y",))}
    act = {"1_X": FinFn.identity(sets["X"]), "1_Y": FinFn.identity(sets["Y"]), "f": FinFn(sets["Y"], sets["X"], ("b",))}
    el = elements_category(c, sets.__getitem__, act.__getitem__)
    assert check_category(el).ok
    assert el.objects.elements == ("(X,a)", "(X,b)", "(Y,y)")
    assert el.hom("(X,b)", "(Y,y)") == ("(f,y)",)
    assert el.hom("(X,a)", "(Y,y)") == ()


@pytest.mark.parametrize("name", BASE_NAMES)
def test_elements_of_corpus_functors_are_ddfs(name):
    cp = corpus(name)
    for fname, f in cp.functors.items():
        p = el_functor(f)
        assert check_double_category(p.total).ok, fname
        assert is_ddf(p).ok, fname
        assert is_ddf_via_transpose(p).ok, fname
        b = f.base
        assert len(p.total.objects) == sum(len(f.obj(a)) for a in b.objects)
        assert len(p.total.arrows) == sum(len(f.obj(b.d0.cod(h))) for h in b.arrows)
        assert len(p.total.proarrows) == sum(len(f.vertex(m)) for m in b.proarrows)
        assert len(p.total.cells) == sum(len(f.vertex(b.cell_tgt(c))) for c in b.cells)


@pytest.mark.parametrize("name", BASE_NAMES)
def test_elements_of_transformations(name):
    cp = corpus(name)
    for tname, t in cp.transformations.items():
        h = el_transformation(t)
        assert check_ddf_morphism(h).ok, tname
        assert h.commutes()
    s = cp.functors["S"]
    assert el_transformation(identity_transformation(s)) == identity_ddf_morphism(el_functor(s))


def test_elements_preserve_composition():
    cp = corpus("representable")
    bang, inl = cp.transformations["bang_S"], cp.transformations["inl"]
    lhs = el_transformation(compose_transformations(bang, inl))
    rhs = compose_ddf_morphisms(el_transformation(bang), el_transformation(inl))
    assert lhs == rhs
    with pytest.raises(CompositionMismatch):
        compose_ddf_morphisms(el_transformation(inl), el_transformation(bang))


def test_elements_ids_are_tagged_pairs():
    p = el_functor(from_category(arrow_category()))
    assert [split_pair(x)[0] for x in p.total.objects] == ["*", "*"]
    assert set(p.total.proarrows) == {"(1_*,1_X)", "(1_*,1_Y)", "(1_*,f)"}
    assert p.total.ext_pro("(1_*,1_X)", "(1_*,f)") == "(1_*,f)"


def test_invalid_functor_is_rejected():
    f = from_category(arrow_category())
    bad = f.__class__(f.base, f.on_object, f.on_arrow, f.on_proarrow, f.on_cell, {}, f.comp_lax)
    with pytest.raises(InvalidFunctor) as info:
        el_functor(bad)
    assert info.value.report.has("UnitLaxityTyping")


def test_collapse_of_commutative_squares_is_not_a_ddf():
    b = square_double(arrow_category())
    bang = to_terminal(b)
    p = DDFCandidate(b, bang.tgt, bang)
    rep = is_ddf(p)
    assert rep.has("P0.DiscreteFibration") and rep.has("P1.DiscreteFibration")
    # the identity of the point has two lifts into Y: 1_Y and f
    assert ("Y", "1_*", 2) in [v.witness for v in rep.violations]
    assert not is_ddf_via_transpose(p).ok


def test_walking_proarrow_collapse_is_a_ddf():
    """Only identity arrows and cells, so every lift is unique."""
    b = walking_proarrow()
    bang = to_terminal(b)
    p = DDFCandidate(b, bang.tgt, bang)
    assert is_ddf(p).ok
    assert is_ddf_via_transpose(p).ok


def test_collapse_of_horizontal_arrow_is_not_a_ddf():
    b = horizontal_double(arrow_category())
    bang = to_terminal(b)
    assert not is_ddf(DDFCandidate(b, bang.tgt, bang)).ok


@pytest.mark.parametrize("name", BASE_NAMES)
def test_identity_is_a_ddf(name):
    b = corpus(name).base
    assert is_ddf(identity_ddf(b)).ok
    assert check_ddf_morphism(identity_ddf_morphism(identity_ddf(b))).ok


@settings(max_examples=60)
@given(st.integers(0, 2**31), st.integers(1, 4))
def test_horizontal_candidate_is_a_ddf_exactly_when_the_functor_is_a_fibration(seed, n):
    p = random_over_arrow(random.Random(seed), n)
    q = transpose_candidate(vertical_functor(p))
    expected = is_discrete_fibration(p)
    assert is_ddf(q).ok == expected
    assert is_ddf_via_transpose(q).ok == expected
    # the vertical form has only identity arrows and cells
    assert is_ddf(vertical_functor(p)).ok


def test_morphism_off_the_base_is_named():
    t = terminal_category()
    c = arrow_category()
    # the point sitting over X and the point sitting over Y
    d = FinFunctor.from_maps(t, c, {"*": "X"}, {"1_*": "1_X"})
    p = vertical_functor(d)
    q = vertical_functor(FinFunctor.from_maps(t, c, {"*": "Y"}, {"1_*": "1_Y"}))
    # both totals are the terminal double category, so the identity map is a double functor
    h = DDFMorphism(p, DDFCandidate(q.total, q.base, q.proj), identity_double_functor(p.total))
    rep = check_ddf_morphism(h)
    assert rep.has("OverBase")
