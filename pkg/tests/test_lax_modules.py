from __future__ import annotations

from dataclasses import replace

import pytest
from conftest import BASE_NAMES, corpus
from hypothesis import given, settings
from hypothesis import strategies as st

from ddf.corpus import cyclic_monoid
from ddf.errors import BaseMismatch, FrameMismatch
from ddf.finset import FinFn, FrozenMap
from ddf.lax_modules import (
    Module,
    Multimodulation,
    check_module,
    check_multimodulation,
    companion,
    compose_multimodulations,
    conjoint,
    identity_multimodulation,
    laxity_cell,
    left_action_cell,
    multimodulation_from_tables,
    unit_laxity_cell,
    unit_module,
)
from ddf.lax_span import from_category, identity_transformation, terminal_lax_functor


def patched(fn: FinFn, table: dict[str, str]) -> FinFn:
    return FinFn.from_map(fn.dom, fn.cod, {**fn.as_dict(), **table})


def functors_of(name: str):
    return sorted(corpus(name).functors.items())


@pytest.mark.parametrize("name", BASE_NAMES)
def test_corpus_modules_validate(name):
    for mname, mod in corpus(name).modules.items():
        assert check_module(mod).ok, mname


@pytest.mark.parametrize("name", BASE_NAMES)
def test_corpus_multimodulations_validate(name):
    for mname, mu in corpus(name).multimodulations.items():
        full = check_multimodulation(mu)
        assert full.ok, mname
        # the bound only skips the equivariance checks on longer paths
        bounded = check_multimodulation(mu, max_path_len=mu.arity)
        assert bounded.ok and bounded.checked <= full.checked


@pytest.mark.parametrize("name", BASE_NAMES)
def test_companion_and_conjoint_vertices(name):
    """Vertices are fiber products, counted here from plain dictionaries."""
    cp = corpus(name)
    t = cp.transformations["inl"]
    f, g, b = t.src, t.tgt, t.base
    comp, conj = companion(t), conjoint(t)
    for m in b.proarrows:
        a, c = b.pro_src(m), b.pro_tgt(m)
        tau_a = dict(zip(t.at(a).dom.elements, t.at(a).images))
        tau_c = dict(zip(t.at(c).dom.elements, t.at(c).images))
        gs = g.span(m)
        legs0 = dict(zip(gs.vertex.elements, gs.leg0.images))
        legs1 = dict(zip(gs.vertex.elements, gs.leg1.images))
        assert len(comp.vertex(m)) == sum(1 for x in tau_a for s in legs0 if legs0[s] == tau_a[x])
        assert len(conj.vertex(m)) == sum(1 for s in legs1 for y in tau_c if legs1[s] == tau_c[y])
    assert comp.src == f and comp.tgt == g
    assert conj.src == g and conj.tgt == f


@pytest.mark.parametrize("name", BASE_NAMES)
def test_unit_module_is_companion_of_identity_up_to_size(name):
    for _, f in functors_of(name):
        u, c = unit_module(f), companion(identity_transformation(f))
        assert check_module(c).ok
        assert all(len(u.vertex(m)) == len(c.vertex(m)) for m in f.base.proarrows)


@pytest.mark.parametrize("name", BASE_NAMES)
def test_laxity_is_associative_as_substitution(name):
    for fname, f in functors_of(name):
        phi, one = laxity_cell(f), identity_multimodulation(unit_module(f))
        a = compose_multimodulations(phi, [phi, one])
        b = compose_multimodulations(phi, [one, phi])
        assert a.components == b.components, fname
        assert check_multimodulation(a).ok


@pytest.mark.parametrize("name", BASE_NAMES)
def test_unit_laxity_is_a_unit_for_substitution(name):
    for fname, f in functors_of(name):
        phi, one, unit = laxity_cell(f), identity_multimodulation(unit_module(f)), unit_laxity_cell(f)
        assert compose_multimodulations(phi, [unit, one]) == one, fname
        assert compose_multimodulations(phi, [one, unit]) == one, fname
        assert compose_multimodulations(one, [phi]) == phi


@settings(max_examples=20)
@given(st.sampled_from(BASE_NAMES), st.integers(0, 1))
def test_substituting_identities_changes_nothing(name, which):
    cp = corpus(name)
    mu = cp.multimodulations[("lambda_Comp", "phi_S")[which]]
    ids = [identity_multimodulation(m) for m in mu.sources]
    assert compose_multimodulations(mu, ids) == mu


def test_nullary_substitution_into_nullary_target():
    cp = corpus("walking")
    mu = cp.multimodulations["unit_S"]
    assert compose_multimodulations(identity_multimodulation(mu.target), [mu]) == mu


def test_non_associative_laxity_breaks_substitution():
    f = from_category(cyclic_monoid(3))
    bad_phi = patched(f.phi("1_*", "1_*"), {"(a1,a2)": "a1"})
    bad = replace(f, comp_lax=FrozenMap({("1_*", "1_*"): bad_phi}))
    phi, one = laxity_cell(bad), identity_multimodulation(unit_module(bad))
    a = compose_multimodulations(phi, [phi, one])
    b = compose_multimodulations(phi, [one, phi])
    assert a.components != b.components
    assert check_module(unit_module(bad)).has("LeftAssociativity")


def test_broken_right_action_is_named():
    f = from_category(cyclic_monoid(3))
    mod = unit_module(f)
    key = ("1_*", "1_*")
    # the right action alone now computes a1·a1 = a1; the left action is untouched
    bad = replace(mod, right_act=FrozenMap({key: patched(mod.rho(*key), {"(a1,a1)": "a1"})}))
    rep = check_module(bad)
    assert rep.has("RightAssociativity")
    assert rep.has("Compatibility")
    assert not rep.has("LeftAssociativity")


def test_module_on_different_bases_is_rejected():
    cp1, cp2 = corpus("terminal"), corpus("walking")
    f, g = cp1.functors["T"], cp2.functors["T"]
    mod = unit_module(f)
    with pytest.raises(BaseMismatch):
        check_module(Module(f, g, mod.on_proarrow, mod.on_cell, mod.left_act, mod.right_act))


def test_non_homomorphic_component_breaks_equivariance():
    f = from_category(cyclic_monoid(3))
    mu = identity_multimodulation(unit_module(f))
    key = ("1_*",)
    # a2 ↦ a1 keeps the (trivial) feet but is not multiplicative
    bad = replace(mu, components=FrozenMap({key: patched(mu.at(key), {"a2": "a1"})}))
    rep = check_multimodulation(bad)
    assert rep.axioms() == {"LeftEquivariance", "RightEquivariance"}
    assert check_multimodulation(bad, max_path_len=1).ok


def test_frame_errors():
    cp = corpus("walking")
    mu = cp.multimodulations["phi_S"]
    with pytest.raises(FrameMismatch):
        check_multimodulation(replace(mu, sources=mu.sources[:1] + (cp.modules["U_T"],)))
    with pytest.raises(FrameMismatch):
        compose_multimodulations(mu, [mu])


def test_component_typing_is_reported():
    cp = corpus("walking")
    mu = cp.multimodulations["id_Comp"]
    rep = check_multimodulation(replace(mu, components=FrozenMap({})))
    assert rep.has("ComponentTyping")


def test_tables_round_trip():
    for name in BASE_NAMES:
        for mu in corpus(name).multimodulations.values():
            if mu.arity == 0:
                tables = {a: mu.at(a).as_dict() for a in mu.base.objects}
            else:
                tables = {p: mu.at(p).as_dict() for p in mu.base.paths(mu.arity)}
            rebuilt = multimodulation_from_tables(mu.sources, mu.target, mu.left, mu.right, tables)
            assert rebuilt == mu


def test_left_action_of_terminal_is_its_laxity():
    t = terminal_lax_functor(corpus("walking").base)
    assert left_action_cell(unit_module(t)) == laxity_cell(t)
    assert isinstance(laxity_cell(t), Multimodulation)
