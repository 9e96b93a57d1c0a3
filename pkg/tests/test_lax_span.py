from __future__ import annotations

import random
from dataclasses import replace
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ddf.cat_core import FinFunctor, category, check_category, identity_functor
from ddf.corpus import BASES, CATEGORIES, arrow_category, cyclic_monoid, random_over_arrow, random_poset
from ddf.double_cat import walking_proarrow
from ddf.errors import BaseMismatch, CompositionMismatch, InvalidObject
from ddf.finset import FinFn, FrozenMap
from ddf.lax_span import (
    LaxSpanFunctor,
    LaxTransformation,
    check_lax_functor,
    check_transformation,
    compose_transformations,
    coproduct,
    coproduct_injection,
    from_category,
    functor_transformation,
    identity_transformation,
    is_pseudo,
    over_category,
    representable,
    terminal_lax_functor,
    to_category,
    to_terminal_transformation,
)

# (object sizes, vertex sizes) of representables, frozen from the cell filter in
# test_representable_sizes_match_cell_count
REPRESENTABLE_SIZES = {
    ("horizontal", "X"): ({"X": 1, "Y": 0}, {"1_X": 1, "1_Y": 0}),
    ("horizontal", "Y"): ({"X": 1, "Y": 1}, {"1_X": 1, "1_Y": 1}),
    ("representable", "X"): ({"X": 1, "Y": 0}, {"1_X": 1, "1_Y": 0, "f": 0}),
    ("representable", "Y"): ({"X": 1, "Y": 1}, {"1_X": 1, "1_Y": 1, "f": 1}),
    ("terminal", "*"): ({"*": 1}, {"1_*": 1}),
    ("vertical", "X"): ({"X": 1, "Y": 0}, {"1_X": 1, "1_Y": 0, "f": 0}),
    ("vertical", "Y"): ({"X": 0, "Y": 1}, {"1_X": 0, "1_Y": 1, "f": 0}),
    ("walking", "A"): ({"A": 1, "B": 0}, {"u_A": 1, "u_B": 0, "m": 0}),
    ("walking", "B"): ({"A": 0, "B": 1}, {"u_A": 0, "u_B": 1, "m": 0}),
}


def with_comp_lax(f: LaxSpanFunctor, key, table: dict[str, str]) -> LaxSpanFunctor:
    """``f`` with some values of one composition laxity map overwritten."""
    phi = f.phi(*key)
    new = FinFn.from_map(phi.dom, phi.cod, {**phi.as_dict(), **table})
    return replace(f, comp_lax=FrozenMap({**f.comp_lax, key: new}))


def unital_magma(values):
    comp = {(g, h): values[2 * i + j] for i, g in enumerate("ab") for j, h in enumerate("ab")}
    return category(["*"], {"a": ("*", "*"), "b": ("*", "*")}, comp, identities={"*": "e"})


@pytest.mark.parametrize("key", sorted(REPRESENTABLE_SIZES))
def test_representable_sizes_match_cell_count(key):
    name, x = key
    b = BASES[name]()
    f = representable(b, x)
    assert check_lax_functor(f).ok
    assert is_pseudo(f)
    objs = {a: len(f.obj(a)) for a in b.objects}
    verts = {m: len(f.vertex(m)) for m in b.proarrows}
    assert (objs, verts) == REPRESENTABLE_SIZES[key]
    # independent count: cells from m into the unit at x
    ux = b.u(x)
    assert verts == {m: sum(1 for c in b.cells if b.cell_src(c) == m and b.cell_tgt(c) == ux) for m in b.proarrows}


def test_representable_needs_an_object():
    with pytest.raises(InvalidObject):
        representable(walking_proarrow(), "C")


@pytest.mark.parametrize("name", sorted(BASES))
def test_terminal_functor_is_pseudo(name):
    t = terminal_lax_functor(BASES[name]())
    assert check_lax_functor(t).ok
    assert is_pseudo(t)


@pytest.mark.parametrize("name", sorted(CATEGORIES))
def test_category_round_trip(name):
    c = CATEGORIES[name]()
    f = from_category(c)
    assert check_lax_functor(f).ok
    assert to_category(f) == c
    assert from_category(to_category(f)) == f
    # composition laxity is a bijection only when every morphism has a unique factorisation
    assert is_pseudo(f) == (name == "point")


def test_category_axioms_are_lax_functor_axioms():
    """All 81 unital tables on three endomorphisms: the two validators agree."""
    failures = 0
    for values in product("eab", repeat=4):
        c = unital_magma(values)
        rep = check_lax_functor(from_category(c))
        assert rep.ok == check_category(c).ok
        if not rep.ok:
            failures += 1
            assert rep.axioms() == {"LaxAssociativity"}
    assert failures == 70


def test_cyclic_group_with_wrong_product_is_not_associative():
    f = from_category(cyclic_monoid(3))
    bad = with_comp_lax(f, ("1_*", "1_*"), {"(a1,a2)": "a1"})
    rep = check_lax_functor(bad)
    assert rep.has("LaxAssociativity")
    assert not check_category(to_category(bad)).ok


def test_wrong_unit_laxity_is_named():
    f = from_category(arrow_category())
    bad = replace(f, unit_lax=FrozenMap({"*": FinFn.from_map(f.obj("*"), f.vertex("1_*"), {"X": "1_X", "Y": "1_X"})}))
    rep = check_lax_functor(bad)
    assert rep.has("UnitLaxitySquare")


@settings(max_examples=30)
@given(st.integers(0, 2**31), st.integers(1, 4))
def test_random_posets_round_trip(seed, n):
    c = random_poset(random.Random(seed), n)
    f = from_category(c)
    assert check_lax_functor(f).ok
    assert to_category(f) == c


@settings(max_examples=30)
@given(st.integers(0, 2**31), st.integers(1, 4))
def test_over_category_fibers(seed, n):
    p = random_over_arrow(random.Random(seed), n)
    f = over_category(p)
    assert check_lax_functor(f).ok
    for x in p.tgt.objects:
        assert len(f.obj(x)) == sum(1 for y in p.src.objects if p.ob(y) == x)
    for m in p.tgt.morphisms:
        assert len(f.vertex(m)) == sum(1 for e in p.src.morphisms if p.mor(e) == m)


def test_over_identity_has_singleton_fibers():
    f = over_category(identity_functor(arrow_category()))
    assert all(len(f.obj(x)) == 1 for x in ("X", "Y"))
    assert is_pseudo(f)


@pytest.mark.parametrize("name", sorted(BASES))
def test_coproduct_and_injections(name):
    b = BASES[name]()
    f, g = representable(b, b.objects[0]), representable(b, b.objects[-1])
    s = coproduct(f, g)
    assert check_lax_functor(s).ok
    for a in b.objects:
        assert len(s.obj(a)) == len(f.obj(a)) + len(g.obj(a))
    for i in (0, 1):
        assert check_transformation(coproduct_injection(f, g, i)).ok
    bang = to_terminal_transformation(s)
    assert check_transformation(bang).ok
    assert check_transformation(compose_transformations(bang, coproduct_injection(f, g, 0))).ok
    assert compose_transformations(bang, identity_transformation(s)) == bang


def test_coproduct_needs_one_base():
    with pytest.raises(BaseMismatch):
        coproduct(terminal_lax_functor(BASES["terminal"]()), terminal_lax_functor(walking_proarrow()))


def test_transformations_compose_only_when_composable():
    t = to_terminal_transformation(from_category(arrow_category()))
    with pytest.raises(CompositionMismatch):
        compose_transformations(t, t)


def test_functor_transformation_of_a_functor():
    c = arrow_category()
    p = FinFunctor.from_maps(c, c, {"X": "Y", "Y": "Y"}, {"1_X": "1_Y", "1_Y": "1_Y", "f": "1_Y"})
    t = functor_transformation(p)
    assert check_transformation(t).ok
    assert t.at("*") == p.on_objects


def test_non_functorial_map_breaks_functoriality():
    c = arrow_category()
    # sends f to 1_Y but X to X, so the feet do not match
    p = FinFunctor.from_maps(c, c, {"X": "X", "Y": "Y"}, {"1_X": "1_X", "1_Y": "1_Y", "f": "1_Y"})
    rep = check_transformation(functor_transformation(p))
    assert rep.has("ComponentSquare")


def test_swapped_injection_breaks_naturality():
    b = BASES["representable"]()
    f = representable(b, "Y")
    s = coproduct(f, f)
    inl = coproduct_injection(f, f, 0)
    # move one object component to the other summand but keep the proarrow components
    bad = LaxTransformation(
        f, s, FrozenMap({**inl.obj_comp, "X": FinFn(f.obj("X"), s.obj("X"), ("1:f",))}), inl.pro_comp
    )
    rep = check_transformation(bad)
    assert rep.has("ComponentSquare")
