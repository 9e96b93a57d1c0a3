"""Modules between lax functors and multimodulations between modules.

A module ``M: F ⇸ G`` assigns to each proarrow ``m: A ⇸ B`` a span
``Mm: FA ⇸ GB``, to each cell a span morphism (contravariantly), and has
actions

* ``λ_{m,n}: Fm ×_{FB} Mn → M(n ⊗ m)`` and
* ``ρ_{m,n}: Mm ×_{GB} Gn → M(n ⊗ m)``.

A multimodulation ``μ: (M_1, ..., M_k) ⇒ N`` with vertical legs ``τ`` and
``σ`` has a component for every composable path ``(m_1, ..., m_k)``, defined
on the left-nested iterated pullback of the spans ``M_i m_i``.  Nullary
multimodulations have one component ``FA → N(u_A)`` per object.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from itertools import pairwise

from .double_cat import DoubleCategory
from .errors import BaseMismatch, FrameMismatch
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
    iterated_composite,
    nest_ids,
    pair,
    split_pair,
    unnest_ids,
)
from .lax_span import (
    LaxSpanFunctor,
    LaxTransformation,
    compose_transformations,
    identity_transformation,
)
from .report import Report


@dataclass(frozen=True)
class Module:
    src: LaxSpanFunctor
    tgt: LaxSpanFunctor
    on_proarrow: FrozenMap
    on_cell: FrozenMap
    left_act: FrozenMap
    right_act: FrozenMap

    def __post_init__(self) -> None:
        for name in ("on_proarrow", "on_cell", "left_act", "right_act"):
            v = getattr(self, name)
            if not isinstance(v, FrozenMap):
                object.__setattr__(self, name, FrozenMap(v))

    @property
    def base(self) -> DoubleCategory:
        return self.src.base

    def span(self, m: str) -> Span:
        return self.on_proarrow[m]

    def vertex(self, m: str) -> FinSet:
        return self.on_proarrow[m].vertex

    def cell(self, c: str) -> SpanMorphism:
        return self.on_cell[c]

    def lam(self, m: str, n: str) -> FinFn:
        return self.left_act[(m, n)]

    def rho(self, m: str, n: str) -> FinFn:
        return self.right_act[(m, n)]

    @classmethod
    def build(
        cls,
        src: LaxSpanFunctor,
        tgt: LaxSpanFunctor,
        proarrows: Mapping[str, Mapping[str, tuple[str, str]]],
        cells: Mapping[str, Mapping[str, str]],
        left: Mapping[tuple[str, str], Mapping[tuple[str, str], str]],
        right: Mapping[tuple[str, str], Mapping[tuple[str, str], str]],
    ) -> Module:
        """Assemble from plain tables, in the style of :meth:`LaxSpanFunctor.build`."""
        b = src.base
        pro = {}
        for m in b.proarrows:
            table = proarrows[m]
            v = FinSet(tuple(table))
            fa, gb = src.obj(b.pro_src(m)), tgt.obj(b.pro_tgt(m))
            pro[m] = Span(
                fa, v, gb, FinFn(v, fa, tuple(table[s][0] for s in v)), FinFn(v, gb, tuple(table[s][1] for s in v))
            )
        cel = {}
        for c in b.cells:
            m, n = b.cell_src(c), b.cell_tgt(c)
            cel[c] = SpanMorphism(
                pro[n],
                pro[m],
                src.star(b.cell_left(c)),
                FinFn.from_map(pro[n].vertex, pro[m].vertex, cells[c]),
                tgt.star(b.cell_right(c)),
            )
        lam, rho = {}, {}
        for m, n in b.paths(2):
            cod = pro[b.ext_pro(m, n)].vertex
            dom_l = compose_spans(src.span(m), pro[n]).vertex
            dom_r = compose_spans(pro[m], tgt.span(n)).vertex
            lam[(m, n)] = FinFn.from_map(dom_l, cod, {pair(s, t): r for (s, t), r in left[(m, n)].items()})
            rho[(m, n)] = FinFn.from_map(dom_r, cod, {pair(s, t): r for (s, t), r in right[(m, n)].items()})
        return cls(src, tgt, FrozenMap(pro), FrozenMap(cel), FrozenMap(lam), FrozenMap(rho))


def check_module(mod: Module) -> Report:
    f, g = mod.src, mod.tgt
    if f.base != g.base:
        raise BaseMismatch("module between lax functors on different bases")
    b = f.base
    rep = Report("module")
    if set(mod.on_proarrow) != set(b.proarrows) or set(mod.on_cell) != set(b.cells):
        rep.add("ProarrowTyping", "module assignment is not total")
        return rep
    if set(mod.left_act) != set(b.paths(2)) or set(mod.right_act) != set(b.paths(2)):
        rep.add("ActionTyping", "actions are not total")
        return rep
    for m in b.proarrows:
        s = mod.span(m)
        rep.expect(
            s.left == f.obj(b.pro_src(m)) and s.right == g.obj(b.pro_tgt(m)), "ProarrowTyping", "span has wrong feet", m
        )
    if not rep.ok:
        return rep
    for c in b.cells:
        t = mod.cell(c)
        rep.expect(
            t.src == mod.span(b.cell_tgt(c))
            and t.tgt == mod.span(b.cell_src(c))
            and t.left == f.star(b.cell_left(c))
            and t.right == g.star(b.cell_right(c)),
            "CellTyping",
            "cell image has the wrong frame",
            c,
        )
    for m, n in b.paths(2):
        cod = mod.vertex(b.ext_pro(m, n))
        lam, rho = mod.lam(m, n), mod.rho(m, n)
        rep.expect(
            lam.dom == compose_spans(f.span(m), mod.span(n)).vertex and lam.cod == cod,
            "ActionTyping",
            "left action has the wrong type",
            (m, n),
        )
        rep.expect(
            rho.dom == compose_spans(mod.span(m), g.span(n)).vertex and rho.cod == cod,
            "ActionTyping",
            "right action has the wrong type",
            (m, n),
        )
    if not rep.ok:
        return rep

    for c in b.cells:
        for v in check_span_morphism(mod.cell(c)).violations:
            rep.add("CellSquare", "cell image is not a span morphism", c, *v.witness)
    for m, n in b.paths(2):
        out = mod.span(b.ext_pro(m, n))
        for name, sp, act in (
            ("LeftActionSquare", compose_spans(f.span(m), mod.span(n)), mod.lam(m, n)),
            ("RightActionSquare", compose_spans(mod.span(m), g.span(n)), mod.rho(m, n)),
        ):
            for z in sp.vertex:
                rep.expect(
                    out.leg0(act(z)) == sp.leg0(z) and out.leg1(act(z)) == sp.leg1(z),
                    name,
                    "action moves the feet",
                    (m, n),
                    z,
                )
    if not rep.ok:
        return rep

    d1 = b.d1
    for m in b.proarrows:
        rep.expect(
            mod.cell(d1.ident(m)) == identity_span_morphism(mod.span(m)),
            "Functoriality",
            "identity cell not preserved",
            m,
        )
    for (y, x), yx in d1.comp.items():
        rep.expect(
            mod.cell(yx).vertex == compose_fn(mod.cell(x).vertex, mod.cell(y).vertex),
            "Functoriality",
            "M(β∘α) ≠ Mα ∘ Mβ",
            (y, x),
        )

    for al, be in b.cell_paths(2):
        m, n, p, q = b.cell_src(al), b.cell_src(be), b.cell_tgt(al), b.cell_tgt(be)
        outer = mod.cell(b.ext_cell(al, be)).vertex
        for name, act_mn, act_pq, first, second in (
            ("LeftNaturality", mod.lam(m, n), mod.lam(p, q), f.cell(al).vertex, mod.cell(be).vertex),
            ("RightNaturality", mod.rho(m, n), mod.rho(p, q), mod.cell(al).vertex, g.cell(be).vertex),
        ):
            for z in act_pq.dom:
                t, t2 = split_pair(z)
                rep.expect(
                    act_mn(pair(first(t), second(t2))) == outer(act_pq(z)),
                    name,
                    "action does not commute with cells",
                    (al, be),
                    z,
                )

    for m, n, p in b.paths(3):
        mn, np_ = b.ext_pro(m, n), b.ext_pro(n, p)
        dom = iterated_composite([f.span(m), f.span(n), mod.span(p)]).vertex
        for z in dom:
            a, bb, w = unnest_ids(z, 3)
            rep.expect(
                mod.lam(mn, p)(pair(f.phi(m, n)(pair(a, bb)), w))
                == mod.lam(m, np_)(pair(a, mod.lam(n, p)(pair(bb, w)))),
                "LeftAssociativity",
                "λ(φ(a,b),w) ≠ λ(a,λ(b,w))",
                (m, n, p),
                z,
            )
        dom = iterated_composite([mod.span(m), g.span(n), g.span(p)]).vertex
        for z in dom:
            w, bb, c = unnest_ids(z, 3)
            rep.expect(
                mod.rho(m, np_)(pair(w, g.phi(n, p)(pair(bb, c))))
                == mod.rho(mn, p)(pair(mod.rho(m, n)(pair(w, bb)), c)),
                "RightAssociativity",
                "ρ(w,γ(b,c)) ≠ ρ(ρ(w,b),c)",
                (m, n, p),
                z,
            )
        dom = iterated_composite([f.span(m), mod.span(n), g.span(p)]).vertex
        for z in dom:
            a, w, c = unnest_ids(z, 3)
            rep.expect(
                mod.rho(mn, p)(pair(mod.lam(m, n)(pair(a, w)), c))
                == mod.lam(m, np_)(pair(a, mod.rho(n, p)(pair(w, c)))),
                "Compatibility",
                "ρ(λ(a,w),c) ≠ λ(a,ρ(w,c))",
                (m, n, p),
                z,
            )

    for m in b.proarrows:
        a, c = b.pro_src(m), b.pro_tgt(m)
        s = mod.span(m)
        for w in s.vertex:
            rep.expect(mod.lam(b.u(a), m)(pair(f.phi_unit(a)(s.leg0(w)), w)) == w, "LeftUnit", "λ(φ_A(w₀),w) ≠ w", m, w)
            rep.expect(
                mod.rho(m, b.u(c))(pair(w, g.phi_unit(c)(s.leg1(w)))) == w, "RightUnit", "ρ(w,γ_B(w₁)) ≠ w", m, w
            )
    return rep


def unit_module(f: LaxSpanFunctor) -> Module:
    """``F`` as a module ``F ⇸ F`` acting on itself through its laxity."""
    return Module(f, f, f.on_proarrow, f.on_cell, f.comp_lax, f.comp_lax)


def companion(t: LaxTransformation) -> Module:
    """The module ``F ⇸ G`` with ``Mm = FA ×_{GA} Gm`` (elements ``(x,s)`` with ``τ_A x = s₀``)."""
    f, g, b = t.src, t.tgt, t.base
    pro = {}
    for m in b.proarrows:
        a, bb = b.pro_src(m), b.pro_tgt(m)
        gs, ta = g.span(m), t.at(a)
        elems = [(x, s) for x in f.obj(a) for s in gs.vertex if gs.leg0(s) == ta(x)]
        v = FinSet(tuple(pair(x, s) for x, s in elems))
        pro[m] = Span(
            f.obj(a),
            v,
            g.obj(bb),
            FinFn(v, f.obj(a), tuple(x for x, _ in elems)),
            FinFn(v, g.obj(bb), tuple(gs.leg1(s) for _, s in elems)),
        )
    cel = {}
    for c in b.cells:
        m, n = b.cell_src(c), b.cell_tgt(c)
        fl, gc = f.star(b.cell_left(c)), g.cell(c).vertex
        images = []
        for z in pro[n].vertex:
            x, s = split_pair(z)
            images.append(pair(fl(x), gc(s)))
        cel[c] = SpanMorphism(
            pro[n], pro[m], fl, FinFn(pro[n].vertex, pro[m].vertex, tuple(images)), g.star(b.cell_right(c))
        )
    lam, rho = {}, {}
    for m, n in b.paths(2):
        mn = b.ext_pro(m, n)
        dom_l = compose_spans(f.span(m), pro[n]).vertex
        images = []
        for z in dom_l:
            s, w = split_pair(z)
            _, t2 = split_pair(w)
            images.append(pair(f.span(m).leg0(s), g.phi(m, n)(pair(t.at_pro(m)(s), t2))))
        lam[(m, n)] = FinFn(dom_l, pro[mn].vertex, tuple(images))
        dom_r = compose_spans(pro[m], g.span(n)).vertex
        images = []
        for z in dom_r:
            w, s2 = split_pair(z)
            x, s = split_pair(w)
            images.append(pair(x, g.phi(m, n)(pair(s, s2))))
        rho[(m, n)] = FinFn(dom_r, pro[mn].vertex, tuple(images))
    return Module(f, g, FrozenMap(pro), FrozenMap(cel), FrozenMap(lam), FrozenMap(rho))


def conjoint(t: LaxTransformation) -> Module:
    """The module ``G ⇸ F`` with ``Mm = Gm ×_{GB} FB`` (elements ``(s,y)`` with ``s₁ = τ_B y``)."""
    f, g, b = t.src, t.tgt, t.base
    pro = {}
    for m in b.proarrows:
        a, bb = b.pro_src(m), b.pro_tgt(m)
        gs, tb = g.span(m), t.at(bb)
        elems = [(s, y) for s in gs.vertex for y in f.obj(bb) if gs.leg1(s) == tb(y)]
        v = FinSet(tuple(pair(s, y) for s, y in elems))
        pro[m] = Span(
            g.obj(a),
            v,
            f.obj(bb),
            FinFn(v, g.obj(a), tuple(gs.leg0(s) for s, _ in elems)),
            FinFn(v, f.obj(bb), tuple(y for _, y in elems)),
        )
    cel = {}
    for c in b.cells:
        m, n = b.cell_src(c), b.cell_tgt(c)
        gc, fr = g.cell(c).vertex, f.star(b.cell_right(c))
        images = []
        for z in pro[n].vertex:
            s, y = split_pair(z)
            images.append(pair(gc(s), fr(y)))
        cel[c] = SpanMorphism(
            pro[n], pro[m], g.star(b.cell_left(c)), FinFn(pro[n].vertex, pro[m].vertex, tuple(images)), fr
        )
    lam, rho = {}, {}
    for m, n in b.paths(2):
        mn = b.ext_pro(m, n)
        dom_l = compose_spans(g.span(m), pro[n]).vertex
        images = []
        for z in dom_l:
            s2, w = split_pair(z)
            s, y = split_pair(w)
            images.append(pair(g.phi(m, n)(pair(s2, s)), y))
        lam[(m, n)] = FinFn(dom_l, pro[mn].vertex, tuple(images))
        dom_r = compose_spans(pro[m], f.span(n)).vertex
        images = []
        for z in dom_r:
            w, r = split_pair(z)
            s, _ = split_pair(w)
            images.append(pair(g.phi(m, n)(pair(s, t.at_pro(n)(r))), f.span(n).leg1(r)))
        rho[(m, n)] = FinFn(dom_r, pro[mn].vertex, tuple(images))
    return Module(g, f, FrozenMap(pro), FrozenMap(cel), FrozenMap(lam), FrozenMap(rho))


# multimodulations ---------------------------------------------------------


@dataclass(frozen=True)
class Multimodulation:
    sources: tuple[Module, ...]
    target: Module
    left: LaxTransformation
    right: LaxTransformation
    components: FrozenMap

    def __post_init__(self) -> None:
        object.__setattr__(self, "sources", tuple(self.sources))
        if not isinstance(self.components, FrozenMap):
            object.__setattr__(self, "components", FrozenMap(self.components))

    @property
    def arity(self) -> int:
        return len(self.sources)

    @property
    def base(self) -> DoubleCategory:
        return self.target.base

    @property
    def domain_functor(self) -> LaxSpanFunctor:
        """For nullary cells, the lax functor on which the components are defined."""
        return self.left.src

    def at(self, key) -> FinFn:
        return self.components[key]

    def source_vertex(self, path: Sequence[str]) -> FinSet:
        return iterated_composite([mod.span(m) for mod, m in zip(self.sources, path)]).vertex


def check_frame(mu: Multimodulation) -> None:
    """Raise :class:`FrameMismatch` unless the boundary of ``mu`` is well formed."""
    t, s, n = mu.left, mu.right, mu.target
    if any(x.base != n.base for x in (t, s, *mu.sources)):
        raise FrameMismatch("multimodulation mixes bases")
    if t.tgt != n.src or s.tgt != n.tgt:
        raise FrameMismatch("vertical legs do not land on the target module")
    if mu.arity == 0:
        if t.src != s.src:
            raise FrameMismatch("nullary cell needs legs out of the same lax functor")
        return
    if t.src != mu.sources[0].src or s.src != mu.sources[-1].tgt:
        raise FrameMismatch("vertical legs do not start at the ends of the source chain")
    for m1, m2 in zip(mu.sources, mu.sources[1:]):
        if m1.tgt != m2.src:
            raise FrameMismatch("source modules do not chain")


def _functor_at(mu: Multimodulation, i: int) -> LaxSpanFunctor:
    """The lax functor between sources ``i`` and ``i+1`` (0 = leftmost)."""
    if i == 0:
        return mu.left.src
    return mu.sources[i - 1].tgt


def check_multimodulation(mu: Multimodulation, max_path_len: int | None = None) -> Report:
    check_frame(mu)
    rep = Report("multimodulation")
    if mu.arity == 0:
        return _check_nullary(mu, rep)
    b, k, n = mu.base, mu.arity, mu.target
    paths = b.paths(k)
    if set(mu.components) != set(paths):
        rep.add("ComponentTyping", "components are not indexed by the paths of the right length")
        return rep
    for p in paths:
        c = mu.at(p)
        rep.expect(
            c.dom == mu.source_vertex(p) and c.cod == n.vertex(b.ext_path(p)),
            "ComponentTyping",
            "component has the wrong type",
            p,
        )
    if not rep.ok:
        return rep
    for p in paths:
        dom = iterated_composite([m.span(x) for m, x in zip(mu.sources, p)])
        out, c = n.span(b.ext_path(p)), mu.at(p)
        ta, sb = mu.left.at(b.pro_src(p[0])), mu.right.at(b.pro_tgt(p[-1]))
        for z in dom.vertex:
            rep.expect(
                out.leg0(c(z)) == ta(dom.leg0(z)) and out.leg1(c(z)) == sb(dom.leg1(z)),
                "ComponentSquare",
                "component does not respect the vertical legs",
                p,
                z,
            )
    if not rep.ok:
        return rep
    for cp in b.cell_paths(k):
        src_path = tuple(b.cell_src(c) for c in cp)
        tgt_path = tuple(b.cell_tgt(c) for c in cp)
        outer = n.cell(b.ext_cell_path(cp)).vertex
        stars = [m.cell(c).vertex for m, c in zip(mu.sources, cp)]
        for z in mu.source_vertex(tgt_path):
            parts = unnest_ids(z, k) if k > 1 else (z,)
            moved = nest_ids(st(x) for st, x in zip(stars, parts))
            rep.expect(
                mu.at(src_path)(moved) == outer(mu.at(tgt_path)(z)),
                "Naturality",
                "μ ∘ (M θ) ≠ N[θ] ∘ μ",
                cp,
                z,
            )
    if max_path_len is not None and k + 1 > max_path_len:
        return rep
    f0, fk = mu.left.src, mu.right.src
    for path in b.paths(k + 1):
        x, rest = path[0], path[1:]
        spans = [f0.span(x)] + [m.span(p) for m, p in zip(mu.sources, rest)]
        merged = (b.ext_pro(x, rest[0]),) + rest[1:]
        mr = b.ext_path(rest)
        for z in iterated_composite(spans).vertex:
            e, *a = unnest_ids(z, k + 1)
            lhs = n.lam(x, mr)(pair(mu.left.at_pro(x)(e), mu.at(rest)(nest_ids(a))))
            first = mu.sources[0].lam(x, rest[0])(pair(e, a[0]))
            rhs = mu.at(merged)(nest_ids([first, *a[1:]]))
            rep.expect(lhs == rhs, "LeftEquivariance", "λ(τ e, μ a) ≠ μ(λ(e,a₁), ...)", path, z)
        rest, y = path[:-1], path[-1]
        spans = [m.span(p) for m, p in zip(mu.sources, rest)] + [fk.span(y)]
        merged = rest[:-1] + (b.ext_pro(rest[-1], y),)
        mr = b.ext_path(rest)
        for z in iterated_composite(spans).vertex:
            *a, e = unnest_ids(z, k + 1)
            lhs = n.rho(mr, y)(pair(mu.at(rest)(nest_ids(a)), mu.right.at_pro(y)(e)))
            last = mu.sources[-1].rho(rest[-1], y)(pair(a[-1], e))
            rhs = mu.at(merged)(nest_ids([*a[:-1], last]))
            rep.expect(lhs == rhs, "RightEquivariance", "ρ(μ a, σ e) ≠ μ(..., ρ(a_k,e))", path, z)
        for i in range(1, k):
            # path = (m_1..m_i, x, m_{i+1}..m_k); x sits at index i
            ms = path[:i] + path[i + 1 :]
            x = path[i]
            fi = _functor_at(mu, i)
            spans = [m.span(p) for m, p in zip(mu.sources[:i], path[:i])] + [fi.span(x)]
            spans += [m.span(p) for m, p in zip(mu.sources[i:], path[i + 1 :])]
            left_path = ms[: i - 1] + (b.ext_pro(ms[i - 1], x),) + ms[i:]
            right_path = ms[:i] + (b.ext_pro(x, ms[i]),) + ms[i + 1 :]
            for z in iterated_composite(spans).vertex:
                parts = unnest_ids(z, k + 1)
                a, e = list(parts[:i] + parts[i + 1 :]), parts[i]
                via_rho = mu.sources[i - 1].rho(ms[i - 1], x)(pair(a[i - 1], e))
                via_lam = mu.sources[i].lam(x, ms[i])(pair(e, a[i]))
                lhs = mu.at(left_path)(nest_ids(a[: i - 1] + [via_rho] + a[i:]))
                rhs = mu.at(right_path)(nest_ids(a[:i] + [via_lam] + a[i + 1 :]))
                rep.expect(
                    lhs == rhs, "InnerEquivariance", "μ(..ρ(a_i,e), a_{i+1}..) ≠ μ(..a_i, λ(e,a_{i+1})..)", path, z
                )
    return rep


def _check_nullary(mu: Multimodulation, rep: Report) -> Report:
    b, n, f = mu.base, mu.target, mu.domain_functor
    if set(mu.components) != set(b.objects):
        rep.add("ComponentTyping", "nullary components must be indexed by the objects")
        return rep
    for a in b.objects:
        c = mu.at(a)
        rep.expect(
            c.dom == f.obj(a) and c.cod == n.vertex(b.u(a)), "ComponentTyping", "component has the wrong type", a
        )
    if not rep.ok:
        return rep
    for a in b.objects:
        out, c = n.span(b.u(a)), mu.at(a)
        for y in f.obj(a):
            rep.expect(
                out.leg0(c(y)) == mu.left.at(a)(y) and out.leg1(c(y)) == mu.right.at(a)(y),
                "ComponentSquare",
                "component does not respect the vertical legs",
                a,
                y,
            )
    if not rep.ok:
        return rep
    for h in b.arrows:
        a, c = b.d0.dom(h), b.d0.cod(h)
        lhs = compose_fn(mu.at(a), f.star(h))
        rhs = compose_fn(n.cell(b.u_arrow(h)).vertex, mu.at(c))
        for y in lhs.dom:
            rep.expect(lhs(y) == rhs(y), "Naturality", "μ_A ∘ f* ≠ N(u_f) ∘ μ_C", h, y)
    for x in b.proarrows:
        a, c = b.pro_src(x), b.pro_tgt(x)
        sp = f.span(x)
        for e in sp.vertex:
            lhs = n.lam(x, b.u(c))(pair(mu.left.at_pro(x)(e), mu.at(c)(sp.leg1(e))))
            rhs = n.rho(b.u(a), x)(pair(mu.at(a)(sp.leg0(e)), mu.right.at_pro(x)(e)))
            rep.expect(lhs == rhs, "NullaryEquivariance", "λ(τ e, μ(e₁)) ≠ ρ(μ(e₀), σ e)", x, e)
    return rep


def identity_multimodulation(mod: Module) -> Multimodulation:
    b = mod.base
    return Multimodulation(
        (mod,),
        mod,
        identity_transformation(mod.src),
        identity_transformation(mod.tgt),
        FrozenMap({(m,): FinFn.identity(mod.vertex(m)) for m in b.proarrows}),
    )


def left_action_cell(mod: Module) -> Multimodulation:
    """The 2-ary cell ``(F, M) ⇒ M`` given by ``λ``."""
    b = mod.base
    return Multimodulation(
        (unit_module(mod.src), mod),
        mod,
        identity_transformation(mod.src),
        identity_transformation(mod.tgt),
        FrozenMap({p: mod.lam(*p) for p in b.paths(2)}),
    )


def right_action_cell(mod: Module) -> Multimodulation:
    """The 2-ary cell ``(M, G) ⇒ M`` given by ``ρ``."""
    b = mod.base
    return Multimodulation(
        (mod, unit_module(mod.tgt)),
        mod,
        identity_transformation(mod.src),
        identity_transformation(mod.tgt),
        FrozenMap({p: mod.rho(*p) for p in b.paths(2)}),
    )


def laxity_cell(f: LaxSpanFunctor) -> Multimodulation:
    """The composition laxity of ``F`` as a 2-ary cell ``(F, F) ⇒ F``."""
    return left_action_cell(unit_module(f))


def unit_laxity_cell(f: LaxSpanFunctor) -> Multimodulation:
    """The unit laxity of ``F`` as a nullary cell ``() ⇒ F``."""
    ident = identity_transformation(f)
    return Multimodulation((), unit_module(f), ident, ident, FrozenMap({a: f.phi_unit(a) for a in f.base.objects}))


def companion_unit(t: LaxTransformation) -> Multimodulation:
    """The nullary cell ``() ⇒ companion(τ)`` with legs ``1_F`` and ``τ``: ``y ↦ (y, γ_A(τ_A y))``."""
    mod = companion(t)
    f, g, b = t.src, t.tgt, t.base
    comps = {}
    for a in b.objects:
        comps[a] = FinFn(f.obj(a), mod.vertex(b.u(a)), tuple(pair(y, g.phi_unit(a)(t.at(a)(y))) for y in f.obj(a)))
    return Multimodulation((), mod, identity_transformation(f), t, FrozenMap(comps))


def compose_multimodulations(mu: Multimodulation, nus: Sequence[Multimodulation]) -> Multimodulation:
    """Substitute ``nus[j]`` into the ``j``-th source of ``mu``.

    The component at a concatenated path applies each ``ν_j`` to its block and
    then ``μ`` to the resulting path.  A nullary ``ν_j`` contributes the unit
    proarrow at its junction object, fed by the neighbouring element.
    """
    nus = tuple(nus)
    if len(nus) != mu.arity:
        raise FrameMismatch(f"expected {mu.arity} cells to substitute, got {len(nus)}")
    if mu.arity == 0:
        return mu
    for j, nu in enumerate(nus):
        if nu.target != mu.sources[j]:
            raise FrameMismatch(f"cell {j} does not land on source {j}")
        check_frame(nu)
    for a, c in pairwise(nus):
        if a.right != c.left:
            raise FrameMismatch("adjacent cells do not share their vertical leg")
    b = mu.base
    sources = tuple(m for nu in nus for m in nu.sources)
    left = compose_transformations(mu.left, nus[0].left)
    right = compose_transformations(mu.right, nus[-1].right)
    total = len(sources)
    comps = {}
    if total == 0:
        f = nus[0].domain_functor
        for a in b.objects:
            ua = b.u(a)
            images = []
            for y in f.obj(a):
                images.append(mu.at((ua,) * mu.arity)(nest_ids([nu.at(a)(y) for nu in nus])))
            comps[a] = FinFn(f.obj(a), mu.target.vertex(ua), tuple(images))
        return Multimodulation((), mu.target, left, right, FrozenMap(comps))
    arities = [nu.arity for nu in nus]
    for path in b.paths(total):
        dom = iterated_composite([m.span(p) for m, p in zip(sources, path)]).vertex
        images = []
        for z in dom:
            parts = unnest_ids(z, total) if total > 1 else (z,)
            block_pros, block_elts = [], []
            pos = 0
            for j, nu in enumerate(nus):
                r = arities[j]
                if r > 0:
                    sub = path[pos : pos + r]
                    block_pros.append(b.ext_path(sub))
                    block_elts.append(nu.at(sub)(nest_ids(parts[pos : pos + r])))
                else:
                    if pos > 0:
                        x = b.pro_tgt(path[pos - 1])
                        y = sources[pos - 1].span(path[pos - 1]).leg1(parts[pos - 1])
                    else:
                        x = b.pro_src(path[pos])
                        y = sources[pos].span(path[pos]).leg0(parts[pos])
                    block_pros.append(b.u(x))
                    block_elts.append(nu.at(x)(y))
                pos += r
            images.append(mu.at(tuple(block_pros))(nest_ids(block_elts)))
        comps[path] = FinFn(dom, mu.target.vertex(b.ext_path(path)), tuple(images))
    return Multimodulation(sources, mu.target, left, right, FrozenMap(comps))


def multimodulation_from_tables(
    sources: Sequence[Module],
    target: Module,
    left: LaxTransformation,
    right: LaxTransformation,
    tables: Mapping,
) -> Multimodulation:
    """Assemble from plain ``{path_or_object: {element: image}}`` tables."""
    b = target.base
    comps = {}
    if not sources:
        f = left.src
        for a in b.objects:
            comps[a] = FinFn.from_map(f.obj(a), target.vertex(b.u(a)), tables[a])
    else:
        for p in b.paths(len(sources)):
            dom = iterated_composite([m.span(x) for m, x in zip(sources, p)]).vertex
            comps[p] = FinFn.from_map(dom, target.vertex(b.ext_path(p)), tables[p])
    return Multimodulation(tuple(sources), target, left, right, FrozenMap(comps))
