from __future__ import annotations

import random

import pytest
from conftest import BASE_NAMES, corpus
from hypothesis import given, settings
from hypothesis import strategies as st
from oracles import is_discrete_fibration

from ddf.cat_core import FinFunctor, identity_functor
from ddf.corpus import arrow_category, inclusion_of_source, random_over_arrow, vertical_functor
from ddf.double_cat import DoubleFunctor, square_double, to_terminal
from ddf.elements import DDFCandidate, DDFMorphism, el_functor, el_transformation, transpose_candidate
from ddf.errors import NotADDF, NotOverBase
from ddf.fiber_inverse import f_of_ddf, f_of_morphism, fiber_sizes
from ddf.finset import FinFn, split_pair
from ddf.lax_span import check_lax_functor, check_transformation, is_pseudo, over_category


@pytest.mark.parametrize("name", BASE_NAMES)
def test_fibers_of_elements_have_the_original_sizes(name):
    cp = corpus(name)
    for fname, f in cp.functors.items():
        p = el_functor(f)
        g = f_of_ddf(p)
        assert check_lax_functor(g).ok, fname
        objs, pros = fiber_sizes(p)
        assert objs == {a: len(f.obj(a)) for a in f.base.objects}
        assert pros == {m: len(f.vertex(m)) for m in f.base.proarrows}
        assert is_pseudo(g) == is_pseudo(f)


@pytest.mark.parametrize("name", BASE_NAMES)
def test_fibers_of_elements_untag_to_the_original(name):
    """Dropping the base tag from every fiber element recovers ``f`` table by table."""
    cp = corpus(name)
    for fname, f in cp.functors.items():
        g = f_of_ddf(el_functor(f))
        b = f.base

        def untag(x: str) -> str:
            return split_pair(x)[1]

        for h in b.arrows:
            assert {untag(y): untag(x) for y, x in g.star(h).as_dict().items()} == f.star(h).as_dict(), fname
        for m in b.proarrows:
            sp, fs = g.span(m), f.span(m)
            assert {untag(s): (untag(sp.leg0(s)), untag(sp.leg1(s))) for s in sp.vertex} == {
                s: (fs.leg0(s), fs.leg1(s)) for s in fs.vertex
            }
        for m, n in b.paths(2):
            got = {tuple(map(untag, split_pair(z))): untag(r) for z, r in g.phi(m, n).as_dict().items()}
            assert got == {split_pair(z): r for z, r in f.phi(m, n).as_dict().items()}


@pytest.mark.parametrize("name", BASE_NAMES)
def test_fibers_of_morphisms(name):
    cp = corpus(name)
    for tname, t in cp.transformations.items():
        u = f_of_morphism(el_transformation(t))
        assert check_transformation(u).ok, tname
        for a in t.base.objects:
            assert [split_pair(x)[1] for x in u.at(a).images] == list(t.at(a).images)


def test_vertical_candidate_recovers_over_category():
    for p in (identity_functor(arrow_category()), inclusion_of_source()):
        assert f_of_ddf(vertical_functor(p)) == over_category(p)


@settings(max_examples=40)
@given(st.integers(0, 2**31), st.integers(1, 4))
def test_random_vertical_candidates(seed, n):
    p = random_over_arrow(random.Random(seed), n)
    assert f_of_ddf(vertical_functor(p)) == over_category(p)
    q = transpose_candidate(vertical_functor(p))
    if is_discrete_fibration(p):
        assert check_lax_functor(f_of_ddf(q)).ok
    else:
        with pytest.raises(NotADDF):
            f_of_ddf(q)


def test_non_ddf_is_rejected():
    b = square_double(arrow_category())
    bang = to_terminal(b)
    with pytest.raises(NotADDF):
        f_of_ddf(DDFCandidate(b, bang.tgt, bang))


def constant_map(p: DDFCandidate, q: DDFCandidate) -> DoubleFunctor:
    """The double functor from ``p.total`` onto a total with one object, arrow, proarrow and cell."""
    e, g = p.total, q.total
    (x,), (f,), (m,), (c,) = g.objects, g.arrows, g.proarrows, g.cells
    return DoubleFunctor(
        e,
        g,
        FinFunctor(
            e.d0,
            g.d0,
            FinFn(e.objects, g.objects, (x,) * len(e.objects)),
            FinFn(e.arrows, g.arrows, (f,) * len(e.arrows)),
        ),
        FinFunctor(
            e.d1,
            g.d1,
            FinFn(e.proarrows, g.proarrows, (m,) * len(e.proarrows)),
            FinFn(e.cells, g.cells, (c,) * len(e.cells)),
        ),
    )


def test_morphism_off_the_base_is_rejected():
    cp = corpus("vertical")
    # the elements of Y_X sit over X and those of Y_Y over Y
    p, q = cp.ddfs["El_Y_X"], cp.ddfs["El_Y_Y"]
    with pytest.raises(NotOverBase):
        f_of_morphism(DDFMorphism(p, q, constant_map(p, q)))
