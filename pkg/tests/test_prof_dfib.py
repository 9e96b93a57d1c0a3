from __future__ import annotations

from dataclasses import replace

import pytest
from conftest import BASE_NAMES, corpus
from hypothesis import given, settings
from hypothesis import strategies as st

from ddf.cat_core import FinFunctor, category, check_category, identity_functor
from ddf.corpus import arrow_category, cyclic_monoid, parallel_pair
from ddf.double_cat import square_double, to_terminal
from ddf.elements import DDFCandidate, el_functor
from ddf.errors import FrameMismatch, NotADDF
from ddf.finset import split_pair
from ddf.lax_span import from_category, over_category
from ddf.prof_dfib import (
    check_internal_profunctor,
    check_prof_multicell,
    compose_prof_multicells,
    ext_multicell,
    identity_prof_multicell,
    iterated_pullback_category,
    left_action_multicell,
    right_action_multicell,
    unit_multicell,
    unit_profunctor,
)


def relabel(fn: FinFunctor, table: dict[str, str]) -> FinFunctor:
    """``fn`` with some object images replaced; identities follow, so a functor on a discrete domain stays one."""
    s, t = fn.src, fn.tgt
    objects = {**fn.on_objects.as_dict(), **table}
    morphisms = {**fn.on_morphisms.as_dict(), **{s.ident(x): t.ident(y) for x, y in table.items()}}
    return FinFunctor.from_maps(s, t, objects, morphisms)


def ddfs_of(name: str):
    return sorted(corpus(name).ddfs.items())


@pytest.mark.parametrize("name", BASE_NAMES)
def test_corpus_profunctors_validate(name):
    for pname, m in corpus(name).profunctors.items():
        assert check_internal_profunctor(m).ok, pname


@pytest.mark.parametrize("name", BASE_NAMES)
def test_corpus_multicells_validate(name):
    for uname, u in corpus(name).multicells.items():
        assert check_prof_multicell(u).ok, uname


@pytest.mark.parametrize("name", BASE_NAMES)
def test_action_multicells_validate(name):
    for pname, m in corpus(name).profunctors.items():
        assert check_prof_multicell(left_action_multicell(m)).ok, pname
        assert check_prof_multicell(right_action_multicell(m)).ok, pname
        assert check_prof_multicell(identity_prof_multicell(m)).ok, pname


@pytest.mark.parametrize("name", BASE_NAMES)
def test_external_composition_is_associative_and_unital(name):
    for pname, p in ddfs_of(name):
        ext, unit = ext_multicell(p), unit_multicell(p)
        one = identity_prof_multicell(unit_profunctor(p))
        a = compose_prof_multicells(ext, [ext, one])
        b = compose_prof_multicells(ext, [one, ext])
        assert a.mediating == b.mediating, pname
        assert check_prof_multicell(a).ok
        assert compose_prof_multicells(ext, [unit, one]) == one
        assert compose_prof_multicells(ext, [one, unit]) == one
        assert compose_prof_multicells(one, [ext]) == ext


@settings(max_examples=20)
@given(st.sampled_from(BASE_NAMES), st.integers(1, 3))
def test_iterated_pullback_counts(name, k):
    """Objects of the k-fold pullback are the composable k-chains, counted directly."""
    p = corpus(name).ddfs["El_S"]
    m = unit_profunctor(p)
    cat, projections = iterated_pullback_category([m] * k)
    assert check_category(cat).ok
    e = p.total
    chains = [(x,) for x in e.proarrows]
    for _ in range(k - 1):
        chains = [c + (y,) for c in chains for y in e.proarrows if e.pro_tgt(c[-1]) == e.pro_src(y)]
    assert len(cat.objects) == len(chains)
    assert len(projections) == k
    for z in cat.objects:
        assert tuple(q.ob(z) for q in projections) in set(chains)


def test_unit_profunctor_needs_a_ddf():
    b = square_double(arrow_category())
    bang = to_terminal(b)
    with pytest.raises(NotADDF):
        unit_profunctor(DDFCandidate(b, bang.tgt, bang))


def test_left_action_off_the_base_is_named():
    p = el_functor(over_category(identity_functor(parallel_pair())))
    m = unit_profunctor(p)
    # the unit at X acting on the element over f lands on the element over g: same boundary, wrong proarrow
    bad = replace(m, left=relabel(m.left, {"((1_X,1_X),(f,f))": "(g,g)"}))
    rep = check_internal_profunctor(bad)
    assert rep.axioms() == {"LeftActionOverBase"}


def test_right_action_off_the_base_is_named():
    p = el_functor(over_category(identity_functor(parallel_pair())))
    m = unit_profunctor(p)
    bad = replace(m, right=relabel(m.right, {"((f,f),(1_Y,1_Y))": "(g,g)"}))
    assert check_internal_profunctor(bad).axioms() == {"RightActionOverBase"}


def test_broken_projection_is_named():
    p = el_functor(over_category(identity_functor(parallel_pair())))
    m = unit_profunctor(p)
    # f and g share their boundary, so only the actions notice the element moved
    bad = replace(m, proj=relabel(m.proj, {"(f,f)": "g"}))
    assert check_internal_profunctor(bad).axioms() == {"LeftActionOverBase", "RightActionOverBase"}


def test_wrong_composite_breaks_equivariance():
    p = el_functor(from_category(cyclic_monoid(3)))
    ext = ext_multicell(p)
    bad = replace(ext, mediating=relabel(ext.mediating, {"((1_*,a1),(1_*,a1))": "(1_*,a1)"}))
    rep = check_prof_multicell(bad)
    assert rep.axioms() == {"LeftEquivariance", "RightEquivariance", "InnerEquivariance"}


def test_mediating_not_over_base_is_named():
    p = el_functor(over_category(identity_functor(parallel_pair())))
    one = identity_prof_multicell(unit_profunctor(p))
    bad = replace(one, mediating=relabel(one.mediating, {"(f,f)": "(g,g)"}))
    assert check_prof_multicell(bad).has("OverBase")


def test_nullary_unit_with_a_central_image_still_validates():
    """In a commutative monoid any element commutes with the actions."""
    p = el_functor(from_category(cyclic_monoid(3)))
    u = unit_multicell(p)
    (x,) = p.total.objects
    assert check_prof_multicell(replace(u, mediating=relabel(u.mediating, {x: "(1_*,a1)"}))).ok


def test_nullary_unit_with_a_non_central_image():
    # e, a, b with g ∘ f = g for g, f in {a, b}; a ∘ b = a but b ∘ a = b
    c = category(
        ["*"],
        {"a": ("*", "*"), "b": ("*", "*")},
        {("a", "a"): "a", ("a", "b"): "a", ("b", "a"): "b", ("b", "b"): "b"},
        identities={"*": "e"},
    )
    p = el_functor(from_category(c))
    u = unit_multicell(p)
    (x,) = p.total.objects
    bad = replace(u, mediating=relabel(u.mediating, {x: "(1_*,a)"}))
    assert check_prof_multicell(bad).axioms() == {"NullaryEquivariance"}


def test_frames_are_checked():
    cp = corpus("walking")
    ext = cp.multicells["Ext_El_S"]
    with pytest.raises(FrameMismatch):
        compose_prof_multicells(ext, [ext])
    with pytest.raises(FrameMismatch):
        check_prof_multicell(replace(ext, sources=ext.sources[:1]))
    other = corpus("terminal").profunctors["Unit_El_S"]
    with pytest.raises(ValueError, match="leg1"):
        replace(other, tgt=cp.ddfs["El_S"])


def test_unit_profunctor_carrier_is_the_proarrow_category():
    p = corpus("representable").ddfs["El_S"]
    m = unit_profunctor(p)
    assert m.carrier == p.total.d1
    assert {split_pair(x)[0] for x in m.carrier.objects} <= set(p.base.proarrows)
