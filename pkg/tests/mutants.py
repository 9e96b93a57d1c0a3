"""Handcrafted mutants, each breaking one axiom of one checker.

Every entry pairs a thunk producing the checker's report with the axiom the
report must name.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass, replace

from ddf.cat_core import FinFunctor, category, check_category, identity_functor, terminal_category
from ddf.corpus import arrow_category, cyclic_monoid, parallel_pair, vertical_functor
from ddf.double_cat import (
    DoubleCategory,
    check_double_category,
    identity_double_functor,
    square_double,
    to_terminal,
    vertical_double,
)
from ddf.elements import DDFCandidate, DDFMorphism, check_ddf_morphism, el_functor, is_ddf
from ddf.finset import FinFn, FrozenMap
from ddf.lax_modules import check_module, check_multimodulation, identity_multimodulation, unit_module
from ddf.lax_span import check_lax_functor, check_transformation, from_category, functor_transformation, over_category
from ddf.prof_dfib import check_internal_profunctor, check_prof_multicell, unit_multicell, unit_profunctor
from ddf.report import Report


@dataclass(frozen=True)
class Mutant:
    name: str
    expected: str
    report: Callable[[], Report]


def patched(fn: FinFn, table: dict[str, str]) -> FinFn:
    return FinFn.from_map(fn.dom, fn.cod, {**fn.as_dict(), **table})


def relabel(fn: FinFunctor, table: dict[str, str]) -> FinFunctor:
    """``fn`` with some object images replaced and their identities following."""
    s, t = fn.src, fn.tgt
    objects = {**fn.on_objects.as_dict(), **table}
    morphisms = {**fn.on_morphisms.as_dict(), **{s.ident(x): t.ident(y) for x, y in table.items()}}
    return FinFunctor.from_maps(s, t, objects, morphisms)


def rebuild(b: DoubleCategory, pro_patch: dict, cell_patch: dict) -> DoubleCategory:
    ext_p = {(m, n): b.ext_pro(m, n) for m, n in b.paths(2)}
    ext_c = {(x, y): b.ext_cell(x, y) for x, y in b.cell_paths(2)}
    return DoubleCategory.build(b.d0, b.d1, b.src, b.tgt, b.unit, {**ext_p, **pro_patch}, {**ext_c, **cell_patch})


def _bad_category() -> Report:
    # a∘a = b, a∘b = e, b∘a = a, b∘b = e on {e, a, b}
    comp = {("a", "a"): "b", ("a", "b"): "e", ("b", "a"): "a", ("b", "b"): "e"}
    return check_category(category(["*"], {"a": ("*", "*"), "b": ("*", "*")}, comp, identities={"*": "e"}))


def _bad_unit_law() -> Report:
    b = vertical_double(cyclic_monoid(2))
    return check_double_category(rebuild(b, {("e", "a1"): "e"}, {("1_e", "1_a1"): "1_e"}))


def _bad_ext_associativity() -> Report:
    b = vertical_double(cyclic_monoid(3))
    return check_double_category(rebuild(b, {("a1", "a1"): "a1"}, {("1_a1", "1_a1"): "1_a1"}))


def bad_z3():
    f = from_category(cyclic_monoid(3))
    return replace(f, comp_lax=FrozenMap({("1_*", "1_*"): patched(f.phi("1_*", "1_*"), {"(a1,a2)": "a1"})}))


def _bad_lax_associativity() -> Report:
    return check_lax_functor(bad_z3())


def _bad_unit_laxity() -> Report:
    f = from_category(arrow_category())
    unit = FinFn.from_map(f.obj("*"), f.vertex("1_*"), {"X": "1_X", "Y": "1_X"})
    return check_lax_functor(replace(f, unit_lax=FrozenMap({"*": unit})))


def _bad_component() -> Report:
    c = arrow_category()
    p = FinFunctor.from_maps(c, c, {"X": "X", "Y": "Y"}, {"1_X": "1_X", "1_Y": "1_Y", "f": "1_Y"})
    return check_transformation(functor_transformation(p))


def _bad_right_action() -> Report:
    mod = unit_module(from_category(cyclic_monoid(3)))
    key = ("1_*", "1_*")
    return check_module(replace(mod, right_act=FrozenMap({key: patched(mod.rho(*key), {"(a1,a1)": "a1"})})))


def _bad_multimodulation() -> Report:
    mu = identity_multimodulation(unit_module(from_category(cyclic_monoid(3))))
    key = ("1_*",)
    return check_multimodulation(replace(mu, components=FrozenMap({key: patched(mu.at(key), {"a2": "a1"})})))


def _collapse() -> Report:
    b = square_double(arrow_category())
    bang = to_terminal(b)
    return is_ddf(DDFCandidate(b, bang.tgt, bang))


def _bad_ddf_morphism() -> Report:
    t, c = terminal_category(), arrow_category()
    p = vertical_functor(FinFunctor.from_maps(t, c, {"*": "X"}, {"1_*": "1_X"}))
    q = vertical_functor(FinFunctor.from_maps(t, c, {"*": "Y"}, {"1_*": "1_Y"}))
    return check_ddf_morphism(DDFMorphism(p, q, identity_double_functor(p.total)))


def _bad_left_action() -> Report:
    m = unit_profunctor(el_functor(over_category(identity_functor(parallel_pair()))))
    return check_internal_profunctor(replace(m, left=relabel(m.left, {"((1_X,1_X),(f,f))": "(g,g)"})))


def _bad_nullary_multicell() -> Report:
    # left-zero monoid: g ∘ f = g, so a is not central
    c = category(
        ["*"],
        {"a": ("*", "*"), "b": ("*", "*")},
        {("a", "a"): "a", ("a", "b"): "a", ("b", "a"): "b", ("b", "b"): "b"},
        identities={"*": "e"},
    )
    u = unit_multicell(el_functor(from_category(c)))
    (x,) = u.target.src.total.objects
    return check_prof_multicell(replace(u, mediating=relabel(u.mediating, {x: "(1_*,a)"})))


MUTANTS = (
    Mutant("category: non-associative magma", "Associativity", _bad_category),
    Mutant("double category: unit not neutral", "ExtRightUnit", _bad_unit_law),
    Mutant("double category: idempotent generator", "ExtAssociativity", _bad_ext_associativity),
    Mutant("lax functor: wrong product in Z3", "LaxAssociativity", _bad_lax_associativity),
    Mutant("lax functor: unit laxity off its feet", "UnitLaxitySquare", _bad_unit_laxity),
    Mutant("transformation: non-functorial components", "ComponentSquare", _bad_component),
    Mutant("module: wrong right action", "RightAssociativity", _bad_right_action),
    Mutant("multimodulation: non-multiplicative component", "LeftEquivariance", _bad_multimodulation),
    Mutant("ddf: collapse of commutative squares", "P0.DiscreteFibration", _collapse),
    Mutant("ddf morphism: fibers over different objects", "OverBase", _bad_ddf_morphism),
    Mutant("profunctor: left action off the base", "LeftActionOverBase", _bad_left_action),
    Mutant("multicell: non-central unit", "NullaryEquivariance", _bad_nullary_multicell),
)
