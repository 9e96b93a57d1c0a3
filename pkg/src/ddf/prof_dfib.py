"""Internal profunctors between discrete double fibrations over a fixed base, and their multicells.

An internal profunctor ``M: P ⇸ Q`` (``P: E → B``, ``Q: G → B``) is a carrier
category with a discrete fibration ``proj`` to the proarrow category of ``B``,
legs into ``E_0`` and ``G_0``, and actions

* ``left: E_1 ×_{E_0} M → M`` on pairs ``(e,w)`` with ``tgt e = leg0 w``, and
* ``right: M ×_{G_0} G_1 → M`` on pairs ``(w,g)`` with ``leg1 w = src g``.

All checks run on both levels (objects and morphisms) because every piece of
structure is a functor.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from itertools import pairwise

from .cat_core import (
    FinCategory,
    FinFunctor,
    check_category,
    check_functor,
    compose_functors,
    identity_functor,
    is_discrete_fibration,
    pullback_category,
)
from .double_cat import DoubleCategory
from .elements import DDFCandidate, DDFMorphism, compose_ddf_morphisms, identity_ddf_morphism, is_ddf
from .errors import BaseMismatch, FrameMismatch, NotADDF
from .finset import FinFn, nest_ids, pair, unnest_ids
from .report import Report

LEVELS = ("objects", "morphisms")


def _at(f: FinFunctor, level: str) -> FinFn:
    return f.on_objects if level == "objects" else f.on_morphisms


def _elements(c: FinCategory, level: str):
    return c.objects if level == "objects" else c.morphisms


@dataclass(frozen=True)
class InternalProfunctor:
    src: DDFCandidate
    tgt: DDFCandidate
    carrier: FinCategory
    proj: FinFunctor
    leg0: FinFunctor
    leg1: FinFunctor
    left: FinFunctor
    right: FinFunctor

    def __post_init__(self) -> None:
        e, g = self.src.total, self.tgt.total
        if self.proj.src != self.carrier or self.proj.tgt != self.src.base.d1:
            raise ValueError("projection must go from the carrier to the proarrow category of the base")
        if self.leg0.src != self.carrier or self.leg0.tgt != e.d0:
            raise ValueError("leg0 must go from the carrier to the source object category")
        if self.leg1.src != self.carrier or self.leg1.tgt != g.d0:
            raise ValueError("leg1 must go from the carrier to the target object category")
        if self.left.src != pullback_category(e.tgt, self.leg0)[0] or self.left.tgt != self.carrier:
            raise ValueError("left action must be a functor E_1 ×_{E_0} M → M")
        if self.right.src != pullback_category(self.leg1, g.src)[0] or self.right.tgt != self.carrier:
            raise ValueError("right action must be a functor M ×_{G_0} G_1 → M")

    @property
    def base(self) -> DoubleCategory:
        return self.src.base


def check_internal_profunctor(m: InternalProfunctor) -> Report:
    if m.src.base != m.tgt.base:
        raise BaseMismatch("profunctor between fibrations over different bases")
    rep = Report("internal profunctor")
    rep.extend(check_category(m.carrier), "Carrier")
    if not rep.ok:
        return rep
    for name, fn in (("Proj", m.proj), ("Leg0", m.leg0), ("Leg1", m.leg1), ("Left", m.left), ("Right", m.right)):
        rep.extend(check_functor(fn), name)
    if not rep.ok:
        return rep
    for v in is_discrete_fibration(m.proj).violations:
        rep.add("ProjectionFibration", "carrier projection is not a discrete fibration", *v.witness)
    b, e, g = m.base, m.src.total, m.tgt.total
    p0, q0 = m.src.proj.f0, m.tgt.proj.f0
    p1, q1 = m.src.proj.f1, m.tgt.proj.f1
    for lv in LEVELS:
        for w in _elements(m.carrier, lv):
            pw = _at(m.proj, lv)(w)
            rep.expect(
                _at(p0, lv)(_at(m.leg0, lv)(w)) == _at(b.src, lv)(pw),
                "SpanSquare",
                "leg0 does not lie over the source of the projection",
                lv,
                w,
            )
            rep.expect(
                _at(q0, lv)(_at(m.leg1, lv)(w)) == _at(b.tgt, lv)(pw),
                "SpanSquare",
                "leg1 does not lie over the target of the projection",
                lv,
                w,
            )
    if not rep.ok:
        return rep
    left_dom, l0, l1 = pullback_category(e.tgt, m.leg0)
    right_dom, r0, r1 = pullback_category(m.leg1, g.src)
    for lv in LEVELS:
        proj, leg0, leg1 = _at(m.proj, lv), _at(m.leg0, lv), _at(m.leg1, lv)
        ext = _at(b.ext, lv)
        left, right = _at(m.left, lv), _at(m.right, lv)
        for z, x, w in zip(_elements(left_dom, lv), _at(l0, lv).images, _at(l1, lv).images):
            out = left(z)
            rep.expect(
                proj(out) == ext(pair(_at(p1, lv)(x), proj(w))),
                "LeftActionOverBase",
                "left action does not lie over the external composite",
                lv,
                z,
            )
            rep.expect(
                leg0(out) == _at(e.src, lv)(x) and leg1(out) == leg1(w),
                "LeftActionBoundary",
                "left action has the wrong boundary",
                lv,
                z,
            )
        for z, w, y in zip(_elements(right_dom, lv), _at(r0, lv).images, _at(r1, lv).images):
            out = right(z)
            rep.expect(
                proj(out) == ext(pair(proj(w), _at(q1, lv)(y))),
                "RightActionOverBase",
                "right action does not lie over the external composite",
                lv,
                z,
            )
            rep.expect(
                leg0(out) == leg0(w) and leg1(out) == _at(g.tgt, lv)(y),
                "RightActionBoundary",
                "right action has the wrong boundary",
                lv,
                z,
            )
    if not rep.ok:
        return rep
    for lv in LEVELS:
        leg0, leg1 = _at(m.leg0, lv), _at(m.leg1, lv)
        left, right = _at(m.left, lv), _at(m.right, lv)
        e_src, e_tgt, e_ext, e_unit = _at(e.src, lv), _at(e.tgt, lv), _at(e.ext, lv), _at(e.unit, lv)
        g_src, g_tgt, g_ext, g_unit = _at(g.src, lv), _at(g.tgt, lv), _at(g.ext, lv), _at(g.unit, lv)
        e_into: dict[str, list[str]] = {}
        for x in _elements(e.d1, lv):
            e_into.setdefault(e_tgt(x), []).append(x)
        g_from: dict[str, list[str]] = {}
        for y in _elements(g.d1, lv):
            g_from.setdefault(g_src(y), []).append(y)
        for w in _elements(m.carrier, lv):
            rep.expect(left(pair(e_unit(leg0(w)), w)) == w, "LeftActionUnit", "unit does not act trivially", lv, w)
            rep.expect(right(pair(w, g_unit(leg1(w)))) == w, "RightActionUnit", "unit does not act trivially", lv, w)
            for x2 in e_into.get(leg0(w), ()):
                for x1 in e_into.get(e_src(x2), ()):
                    rep.expect(
                        left(pair(e_ext(pair(x1, x2)), w)) == left(pair(x1, left(pair(x2, w)))),
                        "LeftActionAssociativity",
                        "left action is not associative",
                        lv,
                        (x1, x2, w),
                    )
            for y1 in g_from.get(leg1(w), ()):
                for y2 in g_from.get(g_tgt(y1), ()):
                    rep.expect(
                        right(pair(w, g_ext(pair(y1, y2)))) == right(pair(right(pair(w, y1)), y2)),
                        "RightActionAssociativity",
                        "right action is not associative",
                        lv,
                        (w, y1, y2),
                    )
            for x in e_into.get(leg0(w), ()):
                for y in g_from.get(leg1(w), ()):
                    rep.expect(
                        right(pair(left(pair(x, w)), y)) == left(pair(x, right(pair(w, y)))),
                        "ActionCompatibility",
                        "actions do not commute",
                        lv,
                        (x, w, y),
                    )
    return rep


def unit_profunctor(p: DDFCandidate, validate: bool = True) -> InternalProfunctor:
    """``E_1`` over ``B_1`` acting on itself by external composition."""
    if validate:
        rep = is_ddf(p)
        if not rep.ok:
            raise NotADDF(rep.summary())
    e = p.total
    return InternalProfunctor(p, p, e.d1, p.proj.f1, e.src, e.tgt, e.ext, e.ext)


# multicells ----------------------------------------------------------------


def iterated_pullback_category(sources: Sequence[InternalProfunctor]) -> tuple[FinCategory, list[FinFunctor]]:
    """Left-nested pullback ``M¹ ×_{E¹_0} M² × ...`` and its projections to each factor."""
    cat = sources[0].carrier
    projections = [identity_functor(cat)]
    last = sources[0].leg1
    for m in sources[1:]:
        cat, p_prev, p_new = pullback_category(last, m.leg0)
        projections = [compose_functors(q, p_prev) for q in projections] + [p_new]
        last = compose_functors(m.leg1, p_new)
    return cat, projections


@dataclass(frozen=True)
class ProfMulticell:
    sources: tuple[InternalProfunctor, ...]
    target: InternalProfunctor
    left: DDFMorphism
    right: DDFMorphism
    mediating: FinFunctor

    def __post_init__(self) -> None:
        object.__setattr__(self, "sources", tuple(self.sources))

    @property
    def arity(self) -> int:
        return len(self.sources)

    @property
    def base(self) -> DoubleCategory:
        return self.target.base

    def domain(self) -> FinCategory:
        if not self.sources:
            return self.left.src.total.d0
        return iterated_pullback_category(self.sources)[0]


def check_prof_frame(u: ProfMulticell) -> None:
    n, h, k = u.target, u.left, u.right
    if h.tgt != n.src or k.tgt != n.tgt:
        raise FrameMismatch("boundary morphisms do not land on the target profunctor")
    if u.arity == 0:
        if h.src != k.src:
            raise FrameMismatch("nullary multicell needs boundary morphisms out of the same fibration")
    else:
        if h.src != u.sources[0].src or k.src != u.sources[-1].tgt:
            raise FrameMismatch("boundary morphisms do not start at the ends of the source chain")
        for a, c in zip(u.sources, u.sources[1:]):
            if a.tgt != c.src:
                raise FrameMismatch("source profunctors do not chain")
    if u.mediating.src != u.domain() or u.mediating.tgt != n.carrier:
        raise FrameMismatch("mediating functor has the wrong domain or codomain")


def check_prof_multicell(u: ProfMulticell) -> Report:
    check_prof_frame(u)
    rep = Report("profunctor multicell")
    rep.extend(check_functor(u.mediating), "Mediating")
    if not rep.ok:
        return rep
    n, b = u.target, u.base
    h, k = u.left.map, u.right.map
    if u.arity == 0:
        return _check_nullary_prof(u, rep)
    dom, projs = iterated_pullback_category(u.sources)
    ar = u.arity
    for lv in LEVELS:
        med = _at(u.mediating, lv)
        ext = _at(b.ext, lv)
        for z in _elements(dom, lv):
            parts = [_at(p, lv)(z) for p in projs]
            over = [_at(s.proj, lv)(w) for s, w in zip(u.sources, parts)]
            composite = over[0]
            for o in over[1:]:
                composite = ext(pair(composite, o))
            out = med(z)
            rep.expect(_at(n.proj, lv)(out) == composite, "OverBase", "image does not lie over the composite", lv, z)
            rep.expect(
                _at(n.leg0, lv)(out) == _at(h.f0, lv)(_at(u.sources[0].leg0, lv)(parts[0]))
                and _at(n.leg1, lv)(out) == _at(k.f0, lv)(_at(u.sources[-1].leg1, lv)(parts[-1])),
                "Boundary",
                "image has the wrong boundary",
                lv,
                z,
            )
    if not rep.ok:
        return rep
    for lv in LEVELS:
        med = _at(u.mediating, lv)
        first, last = u.sources[0], u.sources[-1]
        e, g = first.src.total, last.tgt.total
        e_into: dict[str, list[str]] = {}
        for x in _elements(e.d1, lv):
            e_into.setdefault(_at(e.tgt, lv)(x), []).append(x)
        g_from: dict[str, list[str]] = {}
        for y in _elements(g.d1, lv):
            g_from.setdefault(_at(g.src, lv)(y), []).append(y)
        for z in _elements(dom, lv):
            parts = list(unnest_ids(z, ar))
            for x in e_into.get(_at(first.leg0, lv)(parts[0]), ()):
                moved = nest_ids([_at(first.left, lv)(pair(x, parts[0]))] + parts[1:])
                rep.expect(
                    med(moved) == _at(n.left, lv)(pair(_at(h.f1, lv)(x), med(z))),
                    "LeftEquivariance",
                    "U(L(e,w₁),...) ≠ L(He, U(w))",
                    lv,
                    (x, z),
                )
            for y in g_from.get(_at(last.leg1, lv)(parts[-1]), ()):
                moved = nest_ids(parts[:-1] + [_at(last.right, lv)(pair(parts[-1], y))])
                rep.expect(
                    med(moved) == _at(n.right, lv)(pair(med(z), _at(k.f1, lv)(y))),
                    "RightEquivariance",
                    "U(..., R(w_k,g)) ≠ R(U(w), Kg)",
                    lv,
                    (z, y),
                )
        for i in range(ar - 1):
            mi, mj = u.sources[i], u.sources[i + 1]
            mid = mi.tgt.total
            pairs_dom, pa, pb = pullback_category(mi.leg1, mid.src)
            # elements (w_1..w_k) paired with e: leg1(w_i) ⇸ ... ; enumerate via right-action domain of M_i
            by_w: dict[str, list[str]] = {}
            for _, w, x in zip(_elements(pairs_dom, lv), _at(pa, lv).images, _at(pb, lv).images):
                by_w.setdefault(w, []).append(x)
            for z in _elements(dom, lv):
                parts = list(unnest_ids(z, ar))
                for x in by_w.get(parts[i], ()):
                    leg = _at(mj.leg0, lv)(parts[i + 1])
                    if _at(mid.tgt, lv)(x) != leg:
                        continue
                    # both sides need a composable path with x inserted between w_i and w_{i+1};
                    # when x is not a unit the path (w_i, x, w_{i+1}) is not an element of dom.
                    lhs_parts = parts[:i] + [_at(mi.right, lv)(pair(parts[i], x))] + parts[i + 1 :]
                    rhs_parts = parts[: i + 1] + [_at(mj.left, lv)(pair(x, parts[i + 1]))] + parts[i + 2 :]
                    rep.expect(
                        med(nest_ids(lhs_parts)) == med(nest_ids(rhs_parts)),
                        "InnerEquivariance",
                        "U(..R(w_i,e), w_{i+1}..) ≠ U(..w_i, L(e,w_{i+1})..)",
                        lv,
                        (z, x),
                    )
    return rep


def _check_nullary_prof(u: ProfMulticell, rep: Report) -> Report:
    n, b = u.target, u.base
    p = u.left.src
    e = p.total
    h, k = u.left.map, u.right.map
    for lv in LEVELS:
        med = _at(u.mediating, lv)
        for x in _elements(e.d0, lv):
            out = med(x)
            rep.expect(
                _at(n.proj, lv)(out) == _at(b.unit, lv)(_at(p.proj.f0, lv)(x)),
                "OverBase",
                "image does not lie over a unit",
                lv,
                x,
            )
            rep.expect(
                _at(n.leg0, lv)(out) == _at(h.f0, lv)(x) and _at(n.leg1, lv)(out) == _at(k.f0, lv)(x),
                "Boundary",
                "image has the wrong boundary",
                lv,
                x,
            )
    if not rep.ok:
        return rep
    for lv in LEVELS:
        med = _at(u.mediating, lv)
        for x in _elements(e.d1, lv):
            lhs = _at(n.left, lv)(pair(_at(h.f1, lv)(x), med(_at(e.tgt, lv)(x))))
            rhs = _at(n.right, lv)(pair(med(_at(e.src, lv)(x)), _at(k.f1, lv)(x)))
            rep.expect(lhs == rhs, "NullaryEquivariance", "L(He, U(e₁)) ≠ R(U(e₀), Ke)", lv, x)
    return rep


def identity_prof_multicell(m: InternalProfunctor) -> ProfMulticell:
    return ProfMulticell(
        (m,), m, identity_ddf_morphism(m.src), identity_ddf_morphism(m.tgt), identity_functor(m.carrier)
    )


def ext_multicell(p: DDFCandidate) -> ProfMulticell:
    """External composition of ``E`` as a 2-ary multicell on the unit profunctor."""
    u = unit_profunctor(p)
    ident = identity_ddf_morphism(p)
    return ProfMulticell((u, u), u, ident, ident, p.total.ext)


def unit_multicell(p: DDFCandidate) -> ProfMulticell:
    """External units of ``E`` as a nullary multicell into the unit profunctor."""
    ident = identity_ddf_morphism(p)
    return ProfMulticell((), unit_profunctor(p), ident, ident, p.total.unit)


def left_action_multicell(m: InternalProfunctor) -> ProfMulticell:
    return ProfMulticell(
        (unit_profunctor(m.src), m), m, identity_ddf_morphism(m.src), identity_ddf_morphism(m.tgt), m.left
    )


def right_action_multicell(m: InternalProfunctor) -> ProfMulticell:
    return ProfMulticell(
        (m, unit_profunctor(m.tgt)), m, identity_ddf_morphism(m.src), identity_ddf_morphism(m.tgt), m.right
    )


def compose_prof_multicells(g: ProfMulticell, ds: Sequence[ProfMulticell]) -> ProfMulticell:
    """Substitute ``ds[j]`` into the ``j``-th source of ``g``; nullary blocks use the junction element."""
    ds = tuple(ds)
    if len(ds) != g.arity:
        raise FrameMismatch(f"expected {g.arity} multicells to substitute, got {len(ds)}")
    if g.arity == 0:
        return g
    for j, d in enumerate(ds):
        if d.target != g.sources[j]:
            raise FrameMismatch(f"multicell {j} does not land on source {j}")
    for a, c in pairwise(ds):
        if a.right != c.left:
            raise FrameMismatch("adjacent multicells do not share their boundary morphism")
    sources = tuple(s for d in ds for s in d.sources)
    left = compose_ddf_morphisms(g.left, ds[0].left)
    right = compose_ddf_morphisms(g.right, ds[-1].right)
    total = len(sources)
    if total == 0:
        dom = ds[0].left.src.total.d0
    else:
        dom, _ = iterated_pullback_category(sources)
    arities = [d.arity for d in ds]
    tables = {}
    for lv in LEVELS:
        g_med = _at(g.mediating, lv)
        images = []
        for z in _elements(dom, lv):
            if total == 0:
                images.append(g_med(nest_ids([_at(d.mediating, lv)(z) for d in ds])))
                continue
            parts = unnest_ids(z, total)
            blocks = []
            pos = 0
            for j, d in enumerate(ds):
                r = arities[j]
                med = _at(d.mediating, lv)
                if r > 0:
                    blocks.append(med(nest_ids(parts[pos : pos + r])))
                elif pos > 0:
                    blocks.append(med(_at(sources[pos - 1].leg1, lv)(parts[pos - 1])))
                else:
                    blocks.append(med(_at(sources[pos].leg0, lv)(parts[pos])))
                pos += r
            images.append(g_med(nest_ids(blocks)))
        tables[lv] = tuple(images)
    n = g.target.carrier
    med = FinFunctor(
        dom, n, FinFn(dom.objects, n.objects, tables["objects"]), FinFn(dom.morphisms, n.morphisms, tables["morphisms"])
    )
    return ProfMulticell(sources, g.target, left, right, med)


__all__ = [
    "InternalProfunctor",
    "ProfMulticell",
    "check_internal_profunctor",
    "check_prof_multicell",
    "compose_prof_multicells",
    "ext_multicell",
    "identity_prof_multicell",
    "iterated_pullback_category",
    "left_action_multicell",
    "right_action_multicell",
    "unit_multicell",
    "unit_profunctor",
]
