from __future__ import annotations

import random
from dataclasses import replace

import pytest
from conftest import BASE_NAMES, corpus
from hypothesis import given, settings
from hypothesis import strategies as st

from ddf.cat_core import identity_functor
from ddf.corpus import (
    arrow_category,
    cyclic_monoid,
    inclusion_of_source,
    random_over_arrow,
    random_poset,
    vertical_functor,
)
from ddf.double_cat import to_terminal, walking_proarrow
from ddf.elements import DDFCandidate, el_functor
from ddf.equivalence import (
    el_module,
    el_multimodulation,
    epsilon,
    eta,
    f_of_multicell,
    f_of_profunctor,
    verify_ddf,
    verify_el_composition,
    verify_equivalence,
    verify_functor,
    verify_module,
    verify_multicell,
    verify_multimodulation,
    verify_profunctor,
    verify_triangles,
    verify_units,
)
from ddf.errors import InvalidModule
from ddf.finset import FinFn, FrozenMap, split_pair
from ddf.lax_modules import (
    check_module,
    identity_multimodulation,
    laxity_cell,
    unit_laxity_cell,
    unit_module,
)
from ddf.lax_span import from_category, over_category
from ddf.prof_dfib import ext_multicell, unit_multicell, unit_profunctor


def test_full_equivalence_report(cp):
    rep = verify_equivalence(cp)
    assert rep.ok, rep.summary()
    assert rep.checked > 100


@pytest.mark.parametrize("name", BASE_NAMES)
def test_elements_send_units_and_laxity_to_structure(name):
    for fname, f in corpus(name).functors.items():
        p = el_functor(f)
        assert el_module(unit_module(f)) == unit_profunctor(p), fname
        assert el_multimodulation(laxity_cell(f)) == ext_multicell(p), fname
        assert el_multimodulation(unit_laxity_cell(f)) == unit_multicell(p), fname
        assert verify_units(f).ok


@pytest.mark.parametrize("name", BASE_NAMES)
def test_elements_preserve_substitution(name):
    for fname, f in corpus(name).functors.items():
        phi, one, unit = laxity_cell(f), identity_multimodulation(unit_module(f)), unit_laxity_cell(f)
        for nus in ([phi, one], [one, phi], [unit, one], [one, unit], [unit, unit]):
            assert verify_el_composition(phi, nus).ok, fname


@pytest.mark.parametrize("name", BASE_NAMES)
def test_fibers_of_element_modules_have_the_original_sizes(name):
    for mname, mod in corpus(name).modules.items():
        back = f_of_profunctor(el_module(mod))
        assert check_module(back).ok, mname
        assert {m: len(back.vertex(m)) for m in mod.base.proarrows} == {
            m: len(mod.vertex(m)) for m in mod.base.proarrows
        }


@pytest.mark.parametrize("name", BASE_NAMES)
def test_fibers_of_element_multicells_untag(name):
    for mname, mu in corpus(name).multimodulations.items():
        back = f_of_multicell(el_multimodulation(mu))
        assert back.arity == mu.arity, mname
        b = mu.base
        for key, c in mu.components.items():
            got = back.at(key)
            out = b.u(key) if mu.arity == 0 else b.ext_path(key)
            assert sorted(split_pair(y) for y in got.images) == sorted((out, y) for y in c.images)


@settings(max_examples=25)
@given(st.integers(0, 2**31), st.integers(1, 4))
def test_random_over_categories_round_trip(seed, n):
    f = over_category(random_over_arrow(random.Random(seed), n))
    assert verify_functor(f).ok
    assert verify_triangles(f).ok
    assert verify_units(f).ok
    assert verify_module(unit_module(f)).ok


@settings(max_examples=25)
@given(st.integers(0, 2**31), st.integers(1, 4))
def test_random_categories_round_trip(seed, n):
    f = from_category(random_poset(random.Random(seed), n))
    assert verify_functor(f).ok
    assert verify_multimodulation(laxity_cell(f)).ok
    assert verify_multimodulation(unit_laxity_cell(f)).ok


def test_counit_of_fibrations_not_built_as_elements():
    """A DDF that is not literally El of something still has an invertible counit."""
    for p in (identity_functor(arrow_category()), inclusion_of_source()):
        assert verify_ddf(vertical_functor(p)).ok
    b = walking_proarrow()
    bang = to_terminal(b)
    q = DDFCandidate(b, bang.tgt, bang)
    rep = verify_ddf(q)
    assert rep.ok
    h = epsilon(q)
    assert h.map.f1.on_objects.is_bijection()
    assert sorted(split_pair(x)[1] for x in h.src.total.proarrows) == sorted(b.proarrows)


def test_counit_of_unit_profunctor_is_invertible():
    p = el_functor(from_category(cyclic_monoid(3)))
    assert verify_profunctor(unit_profunctor(p)).ok
    assert verify_multicell(ext_multicell(p)).ok
    assert verify_multicell(unit_multicell(p)).ok


def test_unit_components_are_tagging_maps():
    f = from_category(arrow_category())
    t = eta(f)
    assert t.at("*").images == ("(*,X)", "(*,Y)")
    assert t.at_pro("1_*").images == ("(1_*,1_X)", "(1_*,1_Y)", "(1_*,f)")


def test_invalid_inputs_are_reported_not_raised():
    f = from_category(cyclic_monoid(3))
    phi = f.phi("1_*", "1_*")
    bad_phi = FinFn.from_map(phi.dom, phi.cod, {**phi.as_dict(), "(a1,a2)": "a1"})
    bad = replace(f, comp_lax=FrozenMap({("1_*", "1_*"): bad_phi}))
    rep = verify_functor(bad)
    assert rep.has("Input.LaxAssociativity")
    assert not rep.has("UnitBijective")
    rep = verify_module(unit_module(bad))
    assert rep.has("Input.LeftAssociativity")
    with pytest.raises(InvalidModule):
        el_module(unit_module(bad))
