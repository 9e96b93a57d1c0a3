"""Lax functors ``B^op → Span`` and their transformations.

A lax functor is stored contravariantly on ``B`` itself: an arrow ``f: A → C``
gets a transition function ``f*: FC → FA`` and a cell ``θ: m ⇒ n`` a span
morphism ``θ*: Fn → Fm``.  Laxity maps are

* ``φ_A: FA → F(u_A)`` (vertex of the span at the unit proarrow), and
* ``φ_{m,n}: Fm ×_{FB} Fn → F(n ⊗ m)`` on the pullback vertex, whose elements
  are canonical pairs ``(s,t)``.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass

from .cat_core import FinCategory, FinFunctor, fiber_objects
from .double_cat import DoubleCategory, terminal_double, vertical_double
from .errors import BaseMismatch, CompositionMismatch, InvalidObject
from .finset import (
    FinFn,
    FinSet,
    FrozenMap,
    Span,
    SpanMorphism,
    check_span_morphism,
    compose_fn,
    compose_spans,
    identity_span_morphism,
    pair,
    split_pair,
)
from .report import Report


@dataclass(frozen=True)
class LaxSpanFunctor:
    base: DoubleCategory
    on_object: FrozenMap
    on_arrow: FrozenMap
    on_proarrow: FrozenMap
    on_cell: FrozenMap
    unit_lax: FrozenMap
    comp_lax: FrozenMap

    def __post_init__(self) -> None:
        for name in ("on_object", "on_arrow", "on_proarrow", "on_cell", "unit_lax", "comp_lax"):
            v = getattr(self, name)
            if not isinstance(v, FrozenMap):
                object.__setattr__(self, name, FrozenMap(v))

    def obj(self, a: str) -> FinSet:
        return self.on_object[a]

    def star(self, f: str) -> FinFn:
        return self.on_arrow[f]

    def span(self, m: str) -> Span:
        return self.on_proarrow[m]

    def vertex(self, m: str) -> FinSet:
        return self.on_proarrow[m].vertex

    def cell(self, c: str) -> SpanMorphism:
        return self.on_cell[c]

    def phi_unit(self, a: str) -> FinFn:
        return self.unit_lax[a]

    def phi(self, m: str, n: str) -> FinFn:
        return self.comp_lax[(m, n)]

    def composite_vertex(self, m: str, n: str) -> FinSet:
        return compose_spans(self.span(m), self.span(n)).vertex

    @classmethod
    def build(
        cls,
        base: DoubleCategory,
        objects: Mapping[str, list[str] | tuple[str, ...]],
        arrows: Mapping[str, Mapping[str, str]],
        proarrows: Mapping[str, Mapping[str, tuple[str, str]]],
        cells: Mapping[str, Mapping[str, str]],
        unit: Mapping[str, Mapping[str, str]],
        comp: Mapping[tuple[str, str], Mapping[tuple[str, str], str]],
    ) -> LaxSpanFunctor:
        """Assemble from plain tables.

        ``proarrows[m]`` maps each vertex element to its pair of feet; ``cells``,
        ``unit`` and ``comp`` give vertex maps, with ``comp`` keyed by element pairs.
        """
        obj = {a: FinSet(tuple(objects[a])) for a in base.objects}
        arr = {}
        for f in base.arrows:
            a, c = base.d0.dom(f), base.d0.cod(f)
            arr[f] = FinFn.from_map(obj[c], obj[a], arrows[f])
        pro = {}
        for m in base.proarrows:
            a, b = base.pro_src(m), base.pro_tgt(m)
            table = proarrows[m]
            v = FinSet(tuple(table))
            pro[m] = Span(
                obj[a],
                v,
                obj[b],
                FinFn(v, obj[a], tuple(table[s][0] for s in v)),
                FinFn(v, obj[b], tuple(table[s][1] for s in v)),
            )
        cel = {}
        for c in base.cells:
            m, n = base.cell_src(c), base.cell_tgt(c)
            cel[c] = SpanMorphism(
                pro[n],
                pro[m],
                arr[base.cell_left(c)],
                FinFn.from_map(pro[n].vertex, pro[m].vertex, cells[c]),
                arr[base.cell_right(c)],
            )
        un = {a: FinFn.from_map(obj[a], pro[base.u(a)].vertex, unit[a]) for a in base.objects}
        cm = {}
        for m, n in base.paths(2):
            p = compose_spans(pro[m], pro[n]).vertex
            table = {pair(s, t): r for (s, t), r in comp[(m, n)].items()}
            cm[(m, n)] = FinFn.from_map(p, pro[base.ext_pro(m, n)].vertex, table)
        return cls(base, FrozenMap(obj), FrozenMap(arr), FrozenMap(pro), FrozenMap(cel), FrozenMap(un), FrozenMap(cm))


def check_lax_functor(f: LaxSpanFunctor) -> Report:
    rep = Report("lax functor")
    b = f.base
    rep.expect(
        set(f.on_object) == set(b.objects),
        "ObjectAssignment",
        "object assignment is not total",
        *sorted(set(b.objects) ^ set(f.on_object)),
    )
    rep.expect(set(f.on_arrow) == set(b.arrows), "ArrowTyping", "arrow assignment is not total")
    rep.expect(set(f.on_proarrow) == set(b.proarrows), "ProarrowTyping", "proarrow assignment is not total")
    rep.expect(set(f.on_cell) == set(b.cells), "CellTyping", "cell assignment is not total")
    rep.expect(set(f.unit_lax) == set(b.objects), "UnitLaxityTyping", "unit laxity is not total")
    rep.expect(set(f.comp_lax) == set(b.paths(2)), "CompLaxityTyping", "composition laxity is not total")
    if not rep.ok:
        return rep
    for a in b.arrows:
        s = f.star(a)
        rep.expect(
            s.dom == f.obj(b.d0.cod(a)) and s.cod == f.obj(b.d0.dom(a)),
            "ArrowTyping",
            "transition function has the wrong type",
            a,
        )
    for m in b.proarrows:
        s = f.span(m)
        rep.expect(
            s.left == f.obj(b.pro_src(m)) and s.right == f.obj(b.pro_tgt(m)),
            "ProarrowTyping",
            "span has the wrong feet",
            m,
        )
    if not rep.ok:
        return rep
    for c in b.cells:
        t = f.cell(c)
        rep.expect(
            t.src == f.span(b.cell_tgt(c))
            and t.tgt == f.span(b.cell_src(c))
            and t.left == f.star(b.cell_left(c))
            and t.right == f.star(b.cell_right(c)),
            "CellTyping",
            "cell image has the wrong frame",
            c,
        )
    for a in b.objects:
        p = f.phi_unit(a)
        rep.expect(
            p.dom == f.obj(a) and p.cod == f.vertex(b.u(a)), "UnitLaxityTyping", "unit laxity has the wrong type", a
        )
    for m, n in b.paths(2):
        p = f.phi(m, n)
        rep.expect(
            p.dom == f.composite_vertex(m, n) and p.cod == f.vertex(b.ext_pro(m, n)),
            "CompLaxityTyping",
            "composition laxity has the wrong type",
            (m, n),
        )
    if not rep.ok:
        return rep

    for c in b.cells:
        for v in check_span_morphism(f.cell(c)).violations:
            rep.add("CellSquare", "cell image is not a span morphism", c, *v.witness)
    for a in b.objects:
        p, s = f.phi_unit(a), f.span(b.u(a))
        for x in f.obj(a):
            rep.expect(s.leg0(p(x)) == x and s.leg1(p(x)) == x, "UnitLaxitySquare", "unit laxity moves the feet", a, x)
    for m, n in b.paths(2):
        comp = compose_spans(f.span(m), f.span(n))
        p, s = f.phi(m, n), f.span(b.ext_pro(m, n))
        for z in comp.vertex:
            rep.expect(
                s.leg0(p(z)) == comp.leg0(z) and s.leg1(p(z)) == comp.leg1(z),
                "CompLaxitySquare",
                "composition laxity moves the feet",
                (m, n),
                z,
            )
    if not rep.ok:
        return rep

    d0, d1 = b.d0, b.d1
    for a in b.objects:
        rep.expect(f.star(d0.ident(a)) == FinFn.identity(f.obj(a)), "ArrowFunctoriality", "identity not preserved", a)
    for (g, h), gh in d0.comp.items():
        rep.expect(
            f.star(gh) == compose_fn(f.star(h), f.star(g)),
            "ArrowFunctoriality",
            "(g∘f)* ≠ f*∘g*",
            (g, h),
        )
    for m in b.proarrows:
        rep.expect(
            f.cell(d1.ident(m)) == identity_span_morphism(f.span(m)),
            "CellFunctoriality",
            "identity cell not preserved",
            m,
        )
    for (y, x), yx in d1.comp.items():
        rep.expect(
            f.cell(yx).vertex == compose_fn(f.cell(x).vertex, f.cell(y).vertex),
            "CellFunctoriality",
            "(β∘α)* ≠ α*∘β*",
            (y, x),
        )

    for a in d0.morphisms:
        lhs = compose_fn(f.phi_unit(d0.dom(a)), f.star(a))
        rhs = compose_fn(f.cell(b.u_arrow(a)).vertex, f.phi_unit(d0.cod(a)))
        for y in lhs.dom:
            rep.expect(lhs(y) == rhs(y), "UnitNaturality", "φ_A ∘ f* ≠ (u_f)* ∘ φ_C", a, y)
    for al, be in b.cell_paths(2):
        m, n = b.cell_src(al), b.cell_src(be)
        p, q = b.cell_tgt(al), b.cell_tgt(be)
        lhs_phi, rhs_phi = f.phi(m, n), f.phi(p, q)
        a_star, b_star = f.cell(al).vertex, f.cell(be).vertex
        ab_star = f.cell(b.ext_cell(al, be)).vertex
        for z in rhs_phi.dom:
            t, t2 = split_pair(z)
            rep.expect(
                lhs_phi(pair(a_star(t), b_star(t2))) == ab_star(rhs_phi(z)),
                "CompNaturality",
                "φ ∘ (α*×β*) ≠ (β⊗α)* ∘ φ",
                (al, be),
                z,
            )

    for m in b.proarrows:
        a, c = b.pro_src(m), b.pro_tgt(m)
        s = f.span(m)
        left, right = f.phi(b.u(a), m), f.phi(m, b.u(c))
        pa, pc = f.phi_unit(a), f.phi_unit(c)
        for x in s.vertex:
            rep.expect(left(pair(pa(s.leg0(x)), x)) == x, "LeftUnitLaxity", "φ(φ_A(s₀), s) ≠ s", m, x)
            rep.expect(right(pair(x, pc(s.leg1(x)))) == x, "RightUnitLaxity", "φ(s, φ_B(s₁)) ≠ s", m, x)

    for m, n, p in b.paths(3):
        mn, np_ = b.ext_pro(m, n), b.ext_pro(n, p)
        outer_l, inner_l = f.phi(mn, p), f.phi(m, n)
        outer_r, inner_r = f.phi(m, np_), f.phi(n, p)
        dom = compose_spans(compose_spans(f.span(m), f.span(n)), f.span(p)).vertex
        for z in dom:
            ab, c = split_pair(z)
            a, bb = split_pair(ab)
            rep.expect(
                outer_l(pair(inner_l(ab), c)) == outer_r(pair(a, inner_r(pair(bb, c)))),
                "LaxAssociativity",
                "laxity is not associative",
                (m, n, p),
                z,
            )
    return rep


def is_pseudo(f: LaxSpanFunctor) -> bool:
    """True when every laxity map is a bijection."""
    return all(p.is_bijection() for p in f.unit_lax.values()) and all(p.is_bijection() for p in f.comp_lax.values())


# transformations --------------------------------------------------------


@dataclass(frozen=True)
class LaxTransformation:
    src: LaxSpanFunctor
    tgt: LaxSpanFunctor
    obj_comp: FrozenMap
    pro_comp: FrozenMap

    def __post_init__(self) -> None:
        for name in ("obj_comp", "pro_comp"):
            v = getattr(self, name)
            if not isinstance(v, FrozenMap):
                object.__setattr__(self, name, FrozenMap(v))

    @property
    def base(self) -> DoubleCategory:
        return self.src.base

    def at(self, a: str) -> FinFn:
        return self.obj_comp[a]

    def at_pro(self, m: str) -> FinFn:
        return self.pro_comp[m]

    @classmethod
    def build(
        cls,
        src: LaxSpanFunctor,
        tgt: LaxSpanFunctor,
        objects: Mapping[str, Mapping[str, str]],
        proarrows: Mapping[str, Mapping[str, str]],
    ) -> LaxTransformation:
        b = src.base
        return cls(
            src,
            tgt,
            FrozenMap({a: FinFn.from_map(src.obj(a), tgt.obj(a), objects[a]) for a in b.objects}),
            FrozenMap({m: FinFn.from_map(src.vertex(m), tgt.vertex(m), proarrows[m]) for m in b.proarrows}),
        )


def check_transformation(t: LaxTransformation) -> Report:
    if t.src.base != t.tgt.base:
        raise BaseMismatch("transformation between lax functors on different bases")
    rep = Report("transformation")
    f, g, b = t.src, t.tgt, t.src.base
    if set(t.obj_comp) != set(b.objects) or set(t.pro_comp) != set(b.proarrows):
        rep.add("ComponentTyping", "components are not total")
        return rep
    for a in b.objects:
        c = t.at(a)
        rep.expect(c.dom == f.obj(a) and c.cod == g.obj(a), "ComponentTyping", "object component has the wrong type", a)
    for m in b.proarrows:
        c = t.at_pro(m)
        rep.expect(
            c.dom == f.vertex(m) and c.cod == g.vertex(m), "ComponentTyping", "proarrow component has the wrong type", m
        )
    if not rep.ok:
        return rep
    for m in b.proarrows:
        fs, gs, c = f.span(m), g.span(m), t.at_pro(m)
        ta, tb = t.at(b.pro_src(m)), t.at(b.pro_tgt(m))
        for s in fs.vertex:
            rep.expect(
                gs.leg0(c(s)) == ta(fs.leg0(s)) and gs.leg1(c(s)) == tb(fs.leg1(s)),
                "ComponentSquare",
                "proarrow component does not respect the feet",
                m,
                s,
            )
    for a in b.arrows:
        dom, cod = b.d0.dom(a), b.d0.cod(a)
        lhs = compose_fn(t.at(dom), f.star(a))
        rhs = compose_fn(g.star(a), t.at(cod))
        for y in lhs.dom:
            rep.expect(lhs(y) == rhs(y), "ArrowNaturality", "τ ∘ f* ≠ f* ∘ τ", a, y)
    for c in b.cells:
        m, n = b.cell_src(c), b.cell_tgt(c)
        lhs = compose_fn(t.at_pro(m), f.cell(c).vertex)
        rhs = compose_fn(g.cell(c).vertex, t.at_pro(n))
        for y in lhs.dom:
            rep.expect(lhs(y) == rhs(y), "CellNaturality", "τ ∘ θ* ≠ θ* ∘ τ", c, y)
    for a in b.objects:
        u = b.u(a)
        for x in f.obj(a):
            rep.expect(
                t.at_pro(u)(f.phi_unit(a)(x)) == g.phi_unit(a)(t.at(a)(x)),
                "UnitFunctoriality",
                "τ_u ∘ φ_A ≠ γ_A ∘ τ_A",
                a,
                x,
            )
    for m, n in b.paths(2):
        mn = b.ext_pro(m, n)
        phi, gamma = f.phi(m, n), g.phi(m, n)
        tm, tn, tmn = t.at_pro(m), t.at_pro(n), t.at_pro(mn)
        for z in phi.dom:
            s, s2 = split_pair(z)
            image = pair(tm(s), tn(s2))
            if image not in gamma.dom:
                continue  # already reported as a ComponentSquare violation
            rep.expect(
                tmn(phi(z)) == gamma(image),
                "CompFunctoriality",
                "τ ∘ φ ≠ γ ∘ (τ×τ)",
                (m, n),
                z,
            )
    return rep


def identity_transformation(f: LaxSpanFunctor) -> LaxTransformation:
    b = f.base
    return LaxTransformation(
        f,
        f,
        FrozenMap({a: FinFn.identity(f.obj(a)) for a in b.objects}),
        FrozenMap({m: FinFn.identity(f.vertex(m)) for m in b.proarrows}),
    )


def compose_transformations(s: LaxTransformation, t: LaxTransformation) -> LaxTransformation:
    """``s ∘ t`` (``t`` first)."""
    if s.base != t.base:
        raise BaseMismatch("transformations on different bases")
    if t.tgt != s.src:
        raise CompositionMismatch("transformations are not composable")
    b = t.base
    return LaxTransformation(
        t.src,
        s.tgt,
        FrozenMap({a: compose_fn(s.at(a), t.at(a)) for a in b.objects}),
        FrozenMap({m: compose_fn(s.at_pro(m), t.at_pro(m)) for m in b.proarrows}),
    )


# examples ----------------------------------------------------------------


def representable(b: DoubleCategory, x: str) -> LaxSpanFunctor:
    """Arrows into ``x`` and cells into ``u_x``, acting by precomposition."""
    if x not in b.objects:
        raise InvalidObject(f"{x!r} is not an object of the base")
    ux = b.u(x)
    obj = {a: FinSet(b.d0.hom(a, x)) for a in b.objects}
    arr = {}
    for f in b.arrows:
        a, c = b.d0.dom(f), b.d0.cod(f)
        arr[f] = FinFn(obj[c], obj[a], tuple(b.comp_arrow(h, f) for h in obj[c]))
    pro = {}
    for m in b.proarrows:
        v = FinSet(tuple(c for c in b.cells if b.cell_src(c) == m and b.cell_tgt(c) == ux))
        pro[m] = Span(
            obj[b.pro_src(m)],
            v,
            obj[b.pro_tgt(m)],
            FinFn(v, obj[b.pro_src(m)], tuple(b.cell_left(c) for c in v)),
            FinFn(v, obj[b.pro_tgt(m)], tuple(b.cell_right(c) for c in v)),
        )
    cel = {}
    for th in b.cells:
        m, n = b.cell_src(th), b.cell_tgt(th)
        v = pro[n].vertex
        cel[th] = SpanMorphism(
            pro[n],
            pro[m],
            arr[b.cell_left(th)],
            FinFn(v, pro[m].vertex, tuple(b.comp_cell(al, th) for al in v)),
            arr[b.cell_right(th)],
        )
    un = {a: FinFn(obj[a], pro[b.u(a)].vertex, tuple(b.u_arrow(h) for h in obj[a])) for a in b.objects}
    cm = {}
    for m, n in b.paths(2):
        sp = compose_spans(pro[m], pro[n])
        cm[(m, n)] = FinFn(sp.vertex, pro[b.ext_pro(m, n)].vertex, tuple(b.ext_cell(*split_pair(z)) for z in sp.vertex))
    return LaxSpanFunctor(
        b, FrozenMap(obj), FrozenMap(arr), FrozenMap(pro), FrozenMap(cel), FrozenMap(un), FrozenMap(cm)
    )


def terminal_lax_functor(b: DoubleCategory) -> LaxSpanFunctor:
    pt = FinSet(("*",))
    const = FinFn(pt, pt, ("*",))
    sp = Span(pt, pt, pt, const, const)
    return LaxSpanFunctor(
        b,
        FrozenMap({a: pt for a in b.objects}),
        FrozenMap({f: const for f in b.arrows}),
        FrozenMap({m: sp for m in b.proarrows}),
        FrozenMap({c: SpanMorphism(sp, sp, const, const, const) for c in b.cells}),
        FrozenMap({a: const for a in b.objects}),
        FrozenMap({mn: FinFn(FinSet(("(*,*)",)), pt, ("*",)) for mn in b.paths(2)}),
    )


def from_category(c: FinCategory) -> LaxSpanFunctor:
    """Encode a category as a lax functor on the terminal double category."""
    b = terminal_double()
    return over_category(_to_point(c), b)


def to_category(f: LaxSpanFunctor) -> FinCategory:
    """Decode a lax functor on the terminal double category as a category."""
    b = f.base
    (x,) = b.objects
    (u,) = b.proarrows
    s = f.span(u)
    phi = f.phi(u, u)
    comp = {}
    for z in phi.dom:
        g1, g2 = split_pair(z)
        comp[(g2, g1)] = phi(z)
    return FinCategory(f.obj(x), s.vertex, s.leg0, s.leg1, f.phi_unit(x), FrozenMap(comp))


def _to_point(c: FinCategory) -> FinFunctor:
    from .cat_core import terminal_category

    t = terminal_category()
    return FinFunctor(
        c,
        t,
        FinFn(c.objects, t.objects, ("*",) * len(c.objects)),
        FinFn(c.morphisms, t.morphisms, ("1_*",) * len(c.morphisms)),
    )


def over_category(p: FinFunctor, base: DoubleCategory | None = None) -> LaxSpanFunctor:
    """The lax functor on ``vertical_double(C)`` presenting ``p: D → C`` as an object of Cat/C."""
    c, d = p.tgt, p.src
    b = base if base is not None else vertical_double(c)
    obj = {x: fiber_objects(p, x) for x in c.objects}
    arr = {b.d0.ident(x): FinFn.identity(obj[x]) for x in c.objects}
    pro = {}
    for m in c.morphisms:
        v = FinSet(tuple(e for e in d.morphisms if p.mor(e) == m))
        a, bb = c.dom(m), c.cod(m)
        pro[m] = Span(
            obj[a],
            v,
            obj[bb],
            FinFn(v, obj[a], tuple(d.dom(e) for e in v)),
            FinFn(v, obj[bb], tuple(d.cod(e) for e in v)),
        )
    cel = {b.d1.ident(m): identity_span_morphism(pro[m]) for m in c.morphisms}
    un = {x: FinFn(obj[x], pro[c.ident(x)].vertex, tuple(d.ident(y) for y in obj[x])) for x in c.objects}
    cm = {}
    for m, n in b.paths(2):
        sp = compose_spans(pro[m], pro[n])
        cm[(m, n)] = FinFn(
            sp.vertex,
            pro[b.ext_pro(m, n)].vertex,
            tuple(d.compose(split_pair(z)[1], split_pair(z)[0]) for z in sp.vertex),
        )
    return LaxSpanFunctor(
        b, FrozenMap(obj), FrozenMap(arr), FrozenMap(pro), FrozenMap(cel), FrozenMap(un), FrozenMap(cm)
    )


def _tagged(tag: str, xs: FinSet) -> tuple[str, ...]:
    return tuple(f"{tag}:{x}" for x in xs)


def coproduct(f: LaxSpanFunctor, g: LaxSpanFunctor) -> LaxSpanFunctor:
    """Pointwise disjoint union, elements tagged ``0:`` and ``1:``."""
    if f.base != g.base:
        raise BaseMismatch("coproduct of lax functors on different bases")
    b = f.base

    def tag(i: int, x: str) -> str:
        return f"{i}:{x}"

    def union_set(xs: FinSet, ys: FinSet) -> FinSet:
        return FinSet(_tagged("0", xs) + _tagged("1", ys))

    def union_fn(p: FinFn, q: FinFn, dom: FinSet, cod: FinSet, key=lambda i, z: z) -> FinFn:
        return FinFn(dom, cod, tuple(tag(0, p(key(0, x))) for x in p.dom) + tuple(tag(1, q(key(1, x))) for x in q.dom))

    obj = {a: union_set(f.obj(a), g.obj(a)) for a in b.objects}
    arr = {h: union_fn(f.star(h), g.star(h), obj[b.d0.cod(h)], obj[b.d0.dom(h)]) for h in b.arrows}
    pro = {}
    for m in b.proarrows:
        fs, gs = f.span(m), g.span(m)
        v = union_set(fs.vertex, gs.vertex)
        a, c = b.pro_src(m), b.pro_tgt(m)
        pro[m] = Span(obj[a], v, obj[c], union_fn(fs.leg0, gs.leg0, v, obj[a]), union_fn(fs.leg1, gs.leg1, v, obj[c]))
    cel = {}
    for th in b.cells:
        fc, gc = f.cell(th), g.cell(th)
        m, n = b.cell_src(th), b.cell_tgt(th)
        cel[th] = SpanMorphism(
            pro[n],
            pro[m],
            arr[b.cell_left(th)],
            union_fn(fc.vertex, gc.vertex, pro[n].vertex, pro[m].vertex),
            arr[b.cell_right(th)],
        )
    un = {a: union_fn(f.phi_unit(a), g.phi_unit(a), obj[a], pro[b.u(a)].vertex) for a in b.objects}
    cm = {}
    for m, n in b.paths(2):
        dom = compose_spans(pro[m], pro[n]).vertex
        table = {}
        for i, h in ((0, f), (1, g)):
            for z in h.phi(m, n).dom:
                s, t = split_pair(z)
                table[pair(tag(i, s), tag(i, t))] = tag(i, h.phi(m, n)(z))
        cm[(m, n)] = FinFn.from_map(dom, pro[b.ext_pro(m, n)].vertex, table)
    return LaxSpanFunctor(
        b, FrozenMap(obj), FrozenMap(arr), FrozenMap(pro), FrozenMap(cel), FrozenMap(un), FrozenMap(cm)
    )


def coproduct_injection(f: LaxSpanFunctor, g: LaxSpanFunctor, i: int) -> LaxTransformation:
    """The ``i``-th injection into :func:`coproduct`."""
    s = coproduct(f, g)
    h = (f, g)[i]
    b = f.base
    return LaxTransformation(
        h,
        s,
        FrozenMap({a: FinFn(h.obj(a), s.obj(a), _tagged(str(i), h.obj(a))) for a in b.objects}),
        FrozenMap({m: FinFn(h.vertex(m), s.vertex(m), _tagged(str(i), h.vertex(m))) for m in b.proarrows}),
    )


def to_terminal_transformation(f: LaxSpanFunctor) -> LaxTransformation:
    t = terminal_lax_functor(f.base)
    b = f.base
    pt = ("*",)
    return LaxTransformation(
        f,
        t,
        FrozenMap({a: FinFn(f.obj(a), t.obj(a), pt * len(f.obj(a))) for a in b.objects}),
        FrozenMap({m: FinFn(f.vertex(m), t.vertex(m), pt * len(f.vertex(m))) for m in b.proarrows}),
    )


def functor_transformation(p: FinFunctor) -> LaxTransformation:
    """A functor ``C → D`` as a transformation between the encoded lax functors on the terminal base."""
    f, g = from_category(p.src), from_category(p.tgt)
    b = f.base
    (x,) = b.objects
    (u,) = b.proarrows
    return LaxTransformation(
        f,
        g,
        FrozenMap({x: p.on_objects}),
        FrozenMap({u: p.on_morphisms}),
    )
