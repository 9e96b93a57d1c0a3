"""The double category of elements of a lax functor and discrete double fibrations.

Element identifiers are canonical pairs: objects ``(A,x)``, arrows ``(f,y)``
with ``y`` the codomain element, proarrows ``(m,s)``, cells ``(θ,t)`` with ``t``
the element of the target proarrow.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass

from .cat_core import (
    FinCategory,
    FinFunctor,
    is_discrete_fibration,
    pullback_category,
)
from .double_cat import (
    DoubleCategory,
    DoubleFunctor,
    check_double_functor,
    compose_double_functors,
    identity_double_functor,
    transpose,
    transpose_functor,
)
from .errors import CompositionMismatch, InvalidFunctor, InvalidTransformation
from .finset import FinFn, FinSet, FrozenMap, pair, split_pair
from .lax_span import LaxSpanFunctor, LaxTransformation, check_lax_functor, check_transformation
from .report import Report


@dataclass(frozen=True)
class DDFCandidate:
    """A double functor ``proj: total → base``, a discrete double fibration when :func:`is_ddf` passes."""

    total: DoubleCategory
    base: DoubleCategory
    proj: DoubleFunctor

    def __post_init__(self) -> None:
        if self.proj.src != self.total or self.proj.tgt != self.base:
            raise ValueError("projection must go from the total double category to the base")


@dataclass(frozen=True)
class DDFMorphism:
    """A double functor between the totals of two candidates over the same base."""

    src: DDFCandidate
    tgt: DDFCandidate
    map: DoubleFunctor

    def __post_init__(self) -> None:
        if self.map.src != self.src.total or self.map.tgt != self.tgt.total:
            raise ValueError("map must go between the total double categories")

    def commutes(self) -> bool:
        return compose_double_functors(self.tgt.proj, self.map) == self.src.proj


def identity_ddf(b: DoubleCategory) -> DDFCandidate:
    return DDFCandidate(b, b, identity_double_functor(b))


def identity_ddf_morphism(p: DDFCandidate) -> DDFMorphism:
    return DDFMorphism(p, p, identity_double_functor(p.total))


def compose_ddf_morphisms(h2: DDFMorphism, h1: DDFMorphism) -> DDFMorphism:
    if h1.tgt != h2.src:
        raise CompositionMismatch("DDF morphisms are not composable")
    return DDFMorphism(h1.src, h2.tgt, compose_double_functors(h2.map, h1.map))


def elements_category(c: FinCategory, sets: Callable[[str], FinSet], action: Callable[[str], FinFn]) -> FinCategory:
    """Category of elements of a presheaf on ``c``.

    Objects are ``(x,s)`` with ``s ∈ sets(x)``; a morphism ``(f,t)`` with
    ``t ∈ sets(cod f)`` goes from ``(dom f, action(f)(t))`` to ``(cod f, t)``.
    """
    objs = FinSet(tuple(pair(x, s) for x in c.objects for s in sets(x)))
    mors, dom, cod = [], [], []
    for f in c.morphisms:
        a, b = c.dom(f), c.cod(f)
        act = action(f)
        for t in sets(b):
            mors.append(pair(f, t))
            dom.append(pair(a, act(t)))
            cod.append(pair(b, t))
    ms = FinSet(tuple(mors))
    comp = {}
    for (g, f), gf in c.comp.items():
        act_g = action(g)
        for t in sets(c.cod(g)):
            comp[(pair(g, t), pair(f, act_g(t)))] = pair(gf, t)
    return FinCategory(
        objs,
        ms,
        FinFn(ms, objs, tuple(dom)),
        FinFn(ms, objs, tuple(cod)),
        FinFn(objs, ms, tuple(pair(c.ident(x), s) for x in c.objects for s in sets(x))),
        FrozenMap(comp),
    )


def _el_categories(f: LaxSpanFunctor) -> tuple[FinCategory, FinCategory, dict]:
    b = f.base
    e0 = elements_category(b.d0, f.obj, f.star)
    e1 = elements_category(b.d1, f.vertex, lambda th: f.cell(th).vertex)
    cell_data = {cid: split_pair(cid) for cid in e1.morphisms}
    return e0, e1, cell_data


def el_functor(f: LaxSpanFunctor, validate: bool = True) -> DDFCandidate:
    """The double category of elements of ``f`` with its projection to the base."""
    if validate:
        rep = check_lax_functor(f)
        if not rep.ok:
            raise InvalidFunctor("lax functor does not validate", rep)
    b = f.base
    e0, e1, cell_data = _el_categories(f)
    src_o, tgt_o = [], []
    for m in b.proarrows:
        sp = f.span(m)
        a, c = b.pro_src(m), b.pro_tgt(m)
        for s in sp.vertex:
            src_o.append(pair(a, sp.leg0(s)))
            tgt_o.append(pair(c, sp.leg1(s)))
    src_m, tgt_m = [], []
    for cid in e1.morphisms:
        th, t = cell_data[cid]
        sp = f.span(b.cell_tgt(th))
        src_m.append(pair(b.cell_left(th), sp.leg0(t)))
        tgt_m.append(pair(b.cell_right(th), sp.leg1(t)))
    src = FinFunctor(
        e1, e0, FinFn(e1.objects, e0.objects, tuple(src_o)), FinFn(e1.morphisms, e0.morphisms, tuple(src_m))
    )
    tgt = FinFunctor(
        e1, e0, FinFn(e1.objects, e0.objects, tuple(tgt_o)), FinFn(e1.morphisms, e0.morphisms, tuple(tgt_m))
    )
    unit_o = tuple(pair(b.u(a), f.phi_unit(a)(x)) for a in b.objects for x in f.obj(a))
    unit_m = []
    for h in b.arrows:
        phi = f.phi_unit(b.d0.cod(h))
        for y in f.obj(b.d0.cod(h)):
            unit_m.append(pair(b.u_arrow(h), phi(y)))
    unit = FinFunctor(e0, e1, FinFn(e0.objects, e1.objects, unit_o), FinFn(e0.morphisms, e1.morphisms, tuple(unit_m)))
    pb, p0, p1 = pullback_category(tgt, src)
    ext_o = []
    for x, y in zip(p0.on_objects.images, p1.on_objects.images):
        m, s = split_pair(x)
        n, t = split_pair(y)
        ext_o.append(pair(b.ext_pro(m, n), f.phi(m, n)(pair(s, t))))
    ext_m = []
    for x, y in zip(p0.on_morphisms.images, p1.on_morphisms.images):
        al, t = cell_data[x]
        be, t2 = cell_data[y]
        ext_m.append(pair(b.ext_cell(al, be), f.phi(b.cell_tgt(al), b.cell_tgt(be))(pair(t, t2))))
    ext = FinFunctor(
        pb, e1, FinFn(pb.objects, e1.objects, tuple(ext_o)), FinFn(pb.morphisms, e1.morphisms, tuple(ext_m))
    )
    total = DoubleCategory(e0, e1, src, tgt, unit, ext)
    proj = DoubleFunctor(
        total,
        b,
        FinFunctor(
            e0,
            b.d0,
            FinFn(e0.objects, b.objects, tuple(a for a in b.objects for _ in f.obj(a))),
            FinFn(e0.morphisms, b.arrows, tuple(h for h in b.arrows for _ in f.obj(b.d0.cod(h)))),
        ),
        FinFunctor(
            e1,
            b.d1,
            FinFn(e1.objects, b.proarrows, tuple(m for m in b.proarrows for _ in f.vertex(m))),
            FinFn(e1.morphisms, b.cells, tuple(cell_data[c][0] for c in e1.morphisms)),
        ),
    )
    return DDFCandidate(total, b, proj)


def el_transformation(t: LaxTransformation, validate: bool = True) -> DDFMorphism:
    """The strict double functor ``El(F) → El(G)`` induced by ``t``, over the base."""
    if validate:
        rep = check_transformation(t)
        if not rep.ok:
            raise InvalidTransformation("transformation does not validate", rep)
    p, q = el_functor(t.src, validate=False), el_functor(t.tgt, validate=False)
    b = t.base
    e, g = p.total, q.total

    def over_objects(x: str) -> str:
        a, v = split_pair(x)
        return pair(a, t.at(a)(v))

    def over_arrows(x: str) -> str:
        h, v = split_pair(x)
        return pair(h, t.at(b.d0.cod(h))(v))

    def over_pros(x: str) -> str:
        m, v = split_pair(x)
        return pair(m, t.at_pro(m)(v))

    def over_cells(x: str) -> str:
        c, v = split_pair(x)
        return pair(c, t.at_pro(b.cell_tgt(c))(v))

    f0 = FinFunctor(
        e.d0,
        g.d0,
        FinFn(e.objects, g.objects, tuple(map(over_objects, e.objects))),
        FinFn(e.arrows, g.arrows, tuple(map(over_arrows, e.arrows))),
    )
    f1 = FinFunctor(
        e.d1,
        g.d1,
        FinFn(e.proarrows, g.proarrows, tuple(map(over_pros, e.proarrows))),
        FinFn(e.cells, g.cells, tuple(map(over_cells, e.cells))),
    )
    return DDFMorphism(p, q, DoubleFunctor(e, g, f0, f1))


def is_ddf(p: DDFCandidate) -> Report:
    rep = Report("discrete double fibration")
    rep.extend(is_discrete_fibration(p.proj.f0), "P0")
    rep.extend(is_discrete_fibration(p.proj.f1), "P1")
    return rep


def is_ddf_via_transpose(p: DDFCandidate) -> Report:
    """Test whether the target square of the transposed projection is a pullback in Cat."""
    rep = Report("transpose pullback")
    pt = transpose_functor(p.proj)
    et, bt = pt.src, pt.tgt
    pb, _, _ = pullback_category(bt.tgt, pt.f0)
    for level, dom, images, cod in (
        ("objects", et.d1.objects, zip(pt.f1.on_objects.images, et.tgt.on_objects.images), pb.objects),
        ("morphisms", et.d1.morphisms, zip(pt.f1.on_morphisms.images, et.tgt.on_morphisms.images), pb.morphisms),
    ):
        counts: dict[str, list[str]] = {z: [] for z in cod}
        for x, (b_part, e_part) in zip(dom, images):
            counts[pair(b_part, e_part)].append(x)
        for z, xs in counts.items():
            rep.expect(len(xs) == 1, "TransposePullback", f"comparison functor not bijective on {level}", z, len(xs))
    return rep


def check_ddf_morphism(h: DDFMorphism) -> Report:
    rep = Report("DDF morphism")
    rep.extend(check_double_functor(h.map))
    rep.expect(h.src.base == h.tgt.base, "SameBase", "candidates live over different bases")
    if rep.ok:
        rep.expect(h.commutes(), "OverBase", "map does not commute with the projections")
    return rep


def transpose_candidate(p: DDFCandidate) -> DDFCandidate:
    return DDFCandidate(transpose(p.total), transpose(p.base), transpose_functor(p.proj))
