"""The pseudo-inverse of the elements construction: fibers of a discrete double fibration."""

from __future__ import annotations

from .cat_core import fiber_objects, unique_lift
from .elements import DDFCandidate, DDFMorphism, is_ddf
from .errors import NotADDF, NotOverBase
from .finset import FinFn, FrozenMap, Span, SpanMorphism, compose_spans, split_pair
from .lax_span import LaxSpanFunctor, LaxTransformation


def f_of_ddf(p: DDFCandidate, validate: bool = True) -> LaxSpanFunctor:
    """The lax functor of fibers ``F_P``.

    Transition functions and cell actions are computed by unique lifting; the
    laxity maps are the units ``X ↦ u_X`` and external composition ``(u,v) ↦ v ⊗ u``.
    """
    if validate:
        rep = is_ddf(p)
        if not rep.ok:
            raise NotADDF(rep.summary())
    e, b, proj = p.total, p.base, p.proj
    obj = {a: fiber_objects(proj.f0, a) for a in b.objects}
    arr = {}
    for h in b.arrows:
        a, c = b.d0.dom(h), b.d0.cod(h)
        arr[h] = FinFn(obj[c], obj[a], tuple(e.d0.dom(unique_lift(proj.f0, y, h)) for y in obj[c]))
    pro = {}
    for m in b.proarrows:
        v = fiber_objects(proj.f1, m)
        a, c = b.pro_src(m), b.pro_tgt(m)
        pro[m] = Span(
            obj[a], v, obj[c], FinFn(v, obj[a], tuple(map(e.pro_src, v))), FinFn(v, obj[c], tuple(map(e.pro_tgt, v)))
        )
    cel = {}
    for th in b.cells:
        m, n = b.cell_src(th), b.cell_tgt(th)
        vertex = FinFn(
            pro[n].vertex, pro[m].vertex, tuple(e.d1.dom(unique_lift(proj.f1, t, th)) for t in pro[n].vertex)
        )
        cel[th] = SpanMorphism(pro[n], pro[m], arr[b.cell_left(th)], vertex, arr[b.cell_right(th)])
    un = {a: FinFn(obj[a], pro[b.u(a)].vertex, tuple(map(e.u, obj[a]))) for a in b.objects}
    cm = {}
    for m, n in b.paths(2):
        dom = compose_spans(pro[m], pro[n]).vertex
        cm[(m, n)] = FinFn(dom, pro[b.ext_pro(m, n)].vertex, tuple(e.ext_pro(*split_pair(z)) for z in dom))
    return LaxSpanFunctor(
        b, FrozenMap(obj), FrozenMap(arr), FrozenMap(pro), FrozenMap(cel), FrozenMap(un), FrozenMap(cm)
    )


def f_of_morphism(h: DDFMorphism, validate: bool = True) -> LaxTransformation:
    """Restriction of a morphism over the base to the fibers."""
    if not h.commutes():
        raise NotOverBase("the map does not commute with the projections")
    f, g = f_of_ddf(h.src, validate), f_of_ddf(h.tgt, validate)
    b = h.src.base
    return LaxTransformation(
        f,
        g,
        FrozenMap({a: FinFn(f.obj(a), g.obj(a), tuple(map(h.map.ob, f.obj(a)))) for a in b.objects}),
        FrozenMap({m: FinFn(f.vertex(m), g.vertex(m), tuple(map(h.map.pro, f.vertex(m)))) for m in b.proarrows}),
    )


def fiber_sizes(p: DDFCandidate) -> tuple[dict[str, int], dict[str, int]]:
    """Number of total objects over each base object, and of proarrows over each proarrow."""
    return (
        {a: len(fiber_objects(p.proj.f0, a)) for a in p.base.objects},
        {m: len(fiber_objects(p.proj.f1, m)) for m in p.base.proarrows},
    )
