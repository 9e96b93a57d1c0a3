"""The elements construction and the fiber construction on modules and multicells, and their comparison maps.

``El`` sends a module ``M: F ⇸ G`` to an internal profunctor ``El(F) ⇸ El(G)``
and a multimodulation to a multicell; ``F`` (fibers) goes back.  The unit
``η`` and counit ``ε`` are identity-on-data relabelings: ``η`` tags an element
with the base cell it lies over and ``ε`` forgets the tag or looks it up by
unique lifting.
"""

from __future__ import annotations

from .cat_core import FinFunctor, compose_functors, fiber_objects, pullback_category, unique_lift
from .double_cat import DoubleFunctor
from .elements import (
    DDFCandidate,
    DDFMorphism,
    check_ddf_morphism,
    compose_ddf_morphisms,
    el_functor,
    el_transformation,
    elements_category,
    identity_ddf_morphism,
    is_ddf,
)
from .errors import InvalidModule, InvalidMultimodulation, InvalidProfunctor
from .fiber_inverse import f_of_ddf, f_of_morphism
from .finset import (
    FinFn,
    FrozenMap,
    Span,
    SpanMorphism,
    compose_spans,
    iterated_composite,
    nest_ids,
    pair,
    split_pair,
    unnest_ids,
)
from .lax_modules import (
    Module,
    Multimodulation,
    check_module,
    check_multimodulation,
    compose_multimodulations,
    identity_multimodulation,
    unit_module,
)
from .lax_span import (
    LaxSpanFunctor,
    LaxTransformation,
    check_lax_functor,
    check_transformation,
    compose_transformations,
    identity_transformation,
)
from .prof_dfib import (
    InternalProfunctor,
    ProfMulticell,
    check_internal_profunctor,
    check_prof_multicell,
    compose_prof_multicells,
    identity_prof_multicell,
    iterated_pullback_category,
    unit_profunctor,
)
from .report import Report

# elements ------------------------------------------------------------------


def el_module(mod: Module, validate: bool = True) -> InternalProfunctor:
    """The internal profunctor of elements of ``mod``: carrier objects ``(m,s)``, morphisms ``(θ,t)``."""
    if validate:
        rep = check_module(mod)
        if not rep.ok:
            raise InvalidModule("module does not validate", rep)
    b = mod.base
    p, q = el_functor(mod.src, validate=False), el_functor(mod.tgt, validate=False)
    e, g = p.total, q.total
    carrier = elements_category(b.d1, mod.vertex, lambda th: mod.cell(th).vertex)

    def legs(which: int) -> FinFunctor:
        end_ob = b.pro_src if which == 0 else b.pro_tgt
        end_cell = b.cell_left if which == 0 else b.cell_right
        d0 = e.d0 if which == 0 else g.d0
        obs, mors = [], []
        for z in carrier.objects:
            m, s = split_pair(z)
            sp = mod.span(m)
            obs.append(pair(end_ob(m), (sp.leg0 if which == 0 else sp.leg1)(s)))
        for z in carrier.morphisms:
            th, t = split_pair(z)
            sp = mod.span(b.cell_tgt(th))
            mors.append(pair(end_cell(th), (sp.leg0 if which == 0 else sp.leg1)(t)))
        return FinFunctor(
            carrier,
            d0,
            FinFn(carrier.objects, d0.objects, tuple(obs)),
            FinFn(carrier.morphisms, d0.morphisms, tuple(mors)),
        )

    leg0, leg1 = legs(0), legs(1)
    proj = FinFunctor(
        carrier,
        b.d1,
        FinFn(carrier.objects, b.proarrows, tuple(split_pair(z)[0] for z in carrier.objects)),
        FinFn(carrier.morphisms, b.cells, tuple(split_pair(z)[0] for z in carrier.morphisms)),
    )

    def action(dom_pb, act) -> FinFunctor:
        obs = []
        for z in dom_pb.objects:
            x, y = split_pair(z)
            m, s = split_pair(x)
            n, t = split_pair(y)
            obs.append(pair(b.ext_pro(m, n), act(m, n)(pair(s, t))))
        mors = []
        for z in dom_pb.morphisms:
            x, y = split_pair(z)
            al, t = split_pair(x)
            be, t2 = split_pair(y)
            mors.append(pair(b.ext_cell(al, be), act(b.cell_tgt(al), b.cell_tgt(be))(pair(t, t2))))
        return FinFunctor(
            dom_pb,
            carrier,
            FinFn(dom_pb.objects, carrier.objects, tuple(obs)),
            FinFn(dom_pb.morphisms, carrier.morphisms, tuple(mors)),
        )

    left = action(pullback_category(e.tgt, leg0)[0], mod.lam)
    right = action(pullback_category(leg1, g.src)[0], mod.rho)
    return InternalProfunctor(p, q, carrier, proj, leg0, leg1, left, right)


def el_multimodulation(mu: Multimodulation, validate: bool = True) -> ProfMulticell:
    """The multicell of elements: ``((m_i,s_i))_i ↦ (m_1 ⊗ ... ⊗ m_k, μ(s))``."""
    if validate:
        rep = check_multimodulation(mu)
        if not rep.ok:
            raise InvalidMultimodulation("multimodulation does not validate", rep)
    b = mu.base
    sources = tuple(el_module(m, validate=False) for m in mu.sources)
    target = el_module(mu.target, validate=False)
    left = el_transformation(mu.left, validate=False)
    right = el_transformation(mu.right, validate=False)
    n = target.carrier
    if mu.arity == 0:
        dom = left.src.total.d0
        obs = []
        for z in dom.objects:
            a, x = split_pair(z)
            obs.append(pair(b.u(a), mu.at(a)(x)))
        mors = []
        for z in dom.morphisms:
            h, y = split_pair(z)
            mors.append(pair(b.u_arrow(h), mu.at(b.d0.cod(h))(y)))
    else:
        k = mu.arity
        dom, _ = iterated_pullback_category(sources)
        obs = []
        for z in dom.objects:
            parts = [split_pair(w) for w in unnest_ids(z, k)]
            path = tuple(m for m, _ in parts)
            obs.append(pair(b.ext_path(path), mu.at(path)(nest_ids(s for _, s in parts))))
        mors = []
        for z in dom.morphisms:
            parts = [split_pair(w) for w in unnest_ids(z, k)]
            cells = tuple(c for c, _ in parts)
            path = tuple(b.cell_tgt(c) for c in cells)
            mors.append(pair(b.ext_cell_path(cells), mu.at(path)(nest_ids(t for _, t in parts))))
    med = FinFunctor(dom, n, FinFn(dom.objects, n.objects, tuple(obs)), FinFn(dom.morphisms, n.morphisms, tuple(mors)))
    return ProfMulticell(sources, target, left, right, med)


# fibers --------------------------------------------------------------------


def f_of_profunctor(m: InternalProfunctor, validate: bool = True) -> Module:
    """The module of fibers: ``Mm`` is the fiber of the carrier over ``m``, actions restrict ``L`` and ``R``."""
    if validate:
        rep = check_internal_profunctor(m)
        if not rep.ok:
            raise InvalidProfunctor("internal profunctor does not validate", rep)
    f, g = f_of_ddf(m.src, validate=False), f_of_ddf(m.tgt, validate=False)
    b = m.base
    c = m.carrier
    pro = {}
    for x in b.proarrows:
        v = fiber_objects(m.proj, x)
        fa, gb = f.obj(b.pro_src(x)), g.obj(b.pro_tgt(x))
        pro[x] = Span(fa, v, gb, FinFn(v, fa, tuple(map(m.leg0.ob, v))), FinFn(v, gb, tuple(map(m.leg1.ob, v))))
    cel = {}
    for th in b.cells:
        x, y = b.cell_src(th), b.cell_tgt(th)
        vertex = FinFn(pro[y].vertex, pro[x].vertex, tuple(c.dom(unique_lift(m.proj, t, th)) for t in pro[y].vertex))
        cel[th] = SpanMorphism(pro[y], pro[x], f.star(b.cell_left(th)), vertex, g.star(b.cell_right(th)))
    lam, rho = {}, {}
    for x, y in b.paths(2):
        cod = pro[b.ext_pro(x, y)].vertex
        dom_l = compose_spans(f.span(x), pro[y]).vertex
        dom_r = compose_spans(pro[x], g.span(y)).vertex
        lam[(x, y)] = FinFn(dom_l, cod, tuple(map(m.left.ob, dom_l)))
        rho[(x, y)] = FinFn(dom_r, cod, tuple(map(m.right.ob, dom_r)))
    return Module(f, g, FrozenMap(pro), FrozenMap(cel), FrozenMap(lam), FrozenMap(rho))


def f_of_multicell(u: ProfMulticell, validate: bool = True) -> Multimodulation:
    """Restriction of the mediating functor to fibers."""
    if validate:
        rep = check_prof_multicell(u)
        if not rep.ok:
            raise InvalidMultimodulation("multicell does not validate", rep)
    b = u.base
    sources = tuple(f_of_profunctor(s, validate=False) for s in u.sources)
    target = f_of_profunctor(u.target, validate=False)
    left, right = f_of_morphism(u.left, validate=False), f_of_morphism(u.right, validate=False)
    comps = {}
    if u.arity == 0:
        f = left.src
        for a in b.objects:
            comps[a] = FinFn(f.obj(a), target.vertex(b.u(a)), tuple(map(u.mediating.ob, f.obj(a))))
    else:
        for path in b.paths(u.arity):
            dom = iterated_composite([s.span(x) for s, x in zip(sources, path)]).vertex
            comps[path] = FinFn(dom, target.vertex(b.ext_path(path)), tuple(map(u.mediating.ob, dom)))
    return Multimodulation(sources, target, left, right, FrozenMap(comps))


# unit and counit -----------------------------------------------------------


def eta(f: LaxSpanFunctor) -> LaxTransformation:
    """``F → F(El F)``: ``x ↦ (A,x)`` and ``s ↦ (m,s)``."""
    g = f_of_ddf(el_functor(f, validate=False), validate=False)
    b = f.base
    return LaxTransformation(
        f,
        g,
        FrozenMap({a: FinFn(f.obj(a), g.obj(a), tuple(pair(a, x) for x in f.obj(a))) for a in b.objects}),
        FrozenMap({m: FinFn(f.vertex(m), g.vertex(m), tuple(pair(m, s) for s in f.vertex(m))) for m in b.proarrows}),
    )


def eta_module(mod: Module) -> Multimodulation:
    """The unary cell ``M ⇒ F(El M)`` with legs ``η_F`` and ``η_G``: ``s ↦ (m,s)``."""
    target = f_of_profunctor(el_module(mod, validate=False), validate=False)
    b = mod.base
    comps = {
        (m,): FinFn(mod.vertex(m), target.vertex(m), tuple(pair(m, s) for s in mod.vertex(m))) for m in b.proarrows
    }
    return Multimodulation((mod,), target, eta(mod.src), eta(mod.tgt), FrozenMap(comps))


def epsilon(p: DDFCandidate) -> DDFMorphism:
    """``El(F_P) → P``: forget the base tag on objects and proarrows, lift arrows and cells."""
    q = el_functor(f_of_ddf(p, validate=False), validate=False)
    e, t = q.total, p.total
    proj = p.proj

    def drop(z: str) -> str:
        return split_pair(z)[1]

    def lift_arrow(z: str) -> str:
        h, y = split_pair(z)
        return unique_lift(proj.f0, y, h)

    def lift_cell(z: str) -> str:
        th, s = split_pair(z)
        return unique_lift(proj.f1, s, th)

    f0 = FinFunctor(
        e.d0,
        t.d0,
        FinFn(e.objects, t.objects, tuple(map(drop, e.objects))),
        FinFn(e.arrows, t.arrows, tuple(map(lift_arrow, e.arrows))),
    )
    f1 = FinFunctor(
        e.d1,
        t.d1,
        FinFn(e.proarrows, t.proarrows, tuple(map(drop, e.proarrows))),
        FinFn(e.cells, t.cells, tuple(map(lift_cell, e.cells))),
    )
    return DDFMorphism(q, p, DoubleFunctor(e, t, f0, f1))


def epsilon_module(m: InternalProfunctor) -> ProfMulticell:
    """The unary multicell ``El(F_M) ⇒ M`` over ``ε``: ``(x,w) ↦ w`` and ``(θ,t) ↦ lift``."""
    source = el_module(f_of_profunctor(m, validate=False), validate=False)
    c = source.carrier
    med = FinFunctor(
        c,
        m.carrier,
        FinFn(c.objects, m.carrier.objects, tuple(split_pair(z)[1] for z in c.objects)),
        FinFn(
            c.morphisms,
            m.carrier.morphisms,
            tuple(unique_lift(m.proj, split_pair(z)[1], split_pair(z)[0]) for z in c.morphisms),
        ),
    )
    return ProfMulticell((source,), m, epsilon(m.src), epsilon(m.tgt), med)


def _bijective_functor(f: FinFunctor) -> bool:
    return f.on_objects.is_bijection() and f.on_morphisms.is_bijection()


# round trips ---------------------------------------------------------------


def verify_functor(f: LaxSpanFunctor) -> Report:
    """``El(F)`` is a DDF and ``η_F: F → F(El F)`` is a transformation with bijective components."""
    rep = Report("functor round trip")
    rep.extend(check_lax_functor(f), "Input")
    if not rep.ok:
        return rep
    p = el_functor(f, validate=False)
    rep.extend(is_ddf(p), "Elements")
    if not rep.ok:
        return rep
    rep.extend(check_lax_functor(f_of_ddf(p, validate=False)), "Fibers")
    t = eta(f)
    rep.extend(check_transformation(t), "Unit")
    for a in f.base.objects:
        rep.expect(t.at(a).is_bijection(), "UnitBijective", "unit component is not a bijection", a)
    for m in f.base.proarrows:
        rep.expect(t.at_pro(m).is_bijection(), "UnitBijective", "unit component is not a bijection", m)
    return rep


def verify_ddf(p: DDFCandidate) -> Report:
    """``F_P`` validates and ``ε_P: El(F_P) → P`` is an isomorphism over the base."""
    rep = Report("fibration round trip")
    rep.extend(is_ddf(p), "Input")
    if not rep.ok:
        return rep
    f = f_of_ddf(p, validate=False)
    rep.extend(check_lax_functor(f), "Fibers")
    if not rep.ok:
        return rep
    h = epsilon(p)
    rep.extend(check_ddf_morphism(h), "Counit")
    rep.expect(
        _bijective_functor(h.map.f0) and _bijective_functor(h.map.f1), "CounitBijective", "counit is not invertible"
    )
    return rep


def verify_module(mod: Module) -> Report:
    rep = Report("module round trip")
    rep.extend(check_module(mod), "Input")
    if not rep.ok:
        return rep
    m = el_module(mod, validate=False)
    rep.extend(check_internal_profunctor(m), "Elements")
    if not rep.ok:
        return rep
    rep.extend(check_module(f_of_profunctor(m, validate=False)), "Fibers")
    if not rep.ok:
        return rep
    u = eta_module(mod)
    rep.extend(check_multimodulation(u), "Unit")
    for key, c in u.components.items():
        rep.expect(c.is_bijection(), "UnitBijective", "unit component is not a bijection", key)
    return rep


def verify_profunctor(m: InternalProfunctor) -> Report:
    rep = Report("profunctor round trip")
    rep.extend(check_internal_profunctor(m), "Input")
    if not rep.ok:
        return rep
    mod = f_of_profunctor(m, validate=False)
    rep.extend(check_module(mod), "Fibers")
    if not rep.ok:
        return rep
    u = epsilon_module(m)
    rep.extend(check_prof_multicell(u), "Counit")
    rep.expect(_bijective_functor(u.mediating), "CounitBijective", "counit is not invertible")
    return rep


def verify_multimodulation(mu: Multimodulation, max_path_len: int | None = None) -> Report:
    """``El(μ)`` validates, ``F(El μ)`` validates and the unit is natural in ``μ``.

    Naturality is checked element-wise and, for ``k ≥ 1``, also as an equality
    of composite cells ``η_N ∘ μ = F(El μ) ∘ (η_{M_1}, ..., η_{M_k})``.
    """
    rep = Report("multimodulation round trip")
    rep.extend(check_multimodulation(mu, max_path_len), "Input")
    if not rep.ok:
        return rep
    u = el_multimodulation(mu, validate=False)
    rep.extend(check_prof_multicell(u), "Elements")
    if not rep.ok:
        return rep
    back = f_of_multicell(u, validate=False)
    rep.extend(check_multimodulation(back, max_path_len), "Fibers")
    if not rep.ok:
        return rep
    b = mu.base
    if mu.arity == 0:
        for a in b.objects:
            for x in mu.domain_functor.obj(a):
                rep.expect(
                    back.at(a)(pair(a, x)) == pair(b.u(a), mu.at(a)(x)), "UnitNaturality", "η ∘ μ ≠ F(El μ) ∘ η", a, x
                )
        return rep
    for path, c in mu.components.items():
        for z in c.dom:
            parts = unnest_ids(z, mu.arity)
            tagged = nest_ids(pair(m, s) for m, s in zip(path, parts))
            rep.expect(
                back.at(path)(tagged) == pair(b.ext_path(path), c(z)),
                "UnitNaturality",
                "η ∘ μ ≠ F(El μ) ∘ η",
                path,
                z,
            )
    lhs = compose_multimodulations(eta_module(mu.target), [mu])
    rhs = compose_multimodulations(back, [eta_module(m) for m in mu.sources])
    rep.expect(lhs == rhs, "UnitNaturality", "composite cells differ")
    return rep


def verify_transformation(t: LaxTransformation) -> Report:
    """Naturality of ``η`` in ``τ`` and the projection equation for ``El(τ)``."""
    rep = Report("transformation round trip")
    rep.extend(check_transformation(t), "Input")
    if not rep.ok:
        return rep
    h = el_transformation(t, validate=False)
    rep.extend(check_ddf_morphism(h), "Elements")
    back = f_of_morphism(h, validate=False)
    rep.extend(check_transformation(back), "Fibers")
    lhs = compose_transformations(back, eta(t.src))
    rhs = compose_transformations(eta(t.tgt), t)
    rep.expect(lhs == rhs, "UnitNaturality", "F(El τ) ∘ η ≠ η ∘ τ")
    return rep


def verify_ddf_morphism(h: DDFMorphism) -> Report:
    """Naturality of ``ε`` in ``H``: ``H ∘ ε_P = ε_Q ∘ El(F_H)``."""
    rep = Report("fibration morphism round trip")
    rep.extend(check_ddf_morphism(h), "Input")
    if not rep.ok:
        return rep
    back = f_of_morphism(h, validate=False)
    rep.extend(check_transformation(back), "Fibers")
    lhs = compose_ddf_morphisms(h, epsilon(h.src))
    rhs = compose_ddf_morphisms(epsilon(h.tgt), el_transformation(back, validate=False))
    rep.expect(lhs == rhs, "CounitNaturality", "H ∘ ε ≠ ε ∘ El(F_H)")
    return rep


def verify_triangles(f: LaxSpanFunctor) -> Report:
    """``ε_{El F} ∘ El(η_F) = 1`` and ``F(ε_P) ∘ η_{F_P} = 1`` for ``P = El F``."""
    rep = Report("triangle identities")
    p = el_functor(f, validate=False)
    first = compose_ddf_morphisms(epsilon(p), el_transformation(eta(f), validate=False))
    rep.expect(first == identity_ddf_morphism(p), "TriangleElements", "ε ∘ El(η) is not the identity")
    fp = f_of_ddf(p, validate=False)
    second = compose_transformations(f_of_morphism(epsilon(p), validate=False), eta(fp))
    rep.expect(second == identity_transformation(fp), "TriangleFibers", "F(ε) ∘ η is not the identity")
    return rep


def verify_multicell(u: ProfMulticell) -> Report:
    """``F(U)`` validates and ``ε`` is natural: ``U ∘ (ε_{M_i}) = ε_N ∘ El(F U)``."""
    rep = Report("multicell round trip")
    rep.extend(check_prof_multicell(u), "Input")
    if not rep.ok:
        return rep
    back = f_of_multicell(u, validate=False)
    rep.extend(check_multimodulation(back), "Fibers")
    if not rep.ok:
        return rep
    again = el_multimodulation(back, validate=False)
    eps_n = epsilon_module(u.target)
    for lv in ("objects", "morphisms"):
        via_el = getattr(compose_functors(eps_n.mediating, again.mediating), f"on_{lv}")
        dom = again.mediating.src
        elements = dom.objects if lv == "objects" else dom.morphisms
        if u.arity == 0:
            counit = getattr(epsilon(u.left.src).map.f0, f"on_{lv}")
            direct = [getattr(u.mediating, f"on_{lv}")(counit(z)) for z in elements]
        else:
            eps = [getattr(epsilon_module(m).mediating, f"on_{lv}") for m in u.sources]
            direct = []
            for z in elements:
                parts = unnest_ids(z, u.arity)
                direct.append(getattr(u.mediating, f"on_{lv}")(nest_ids(e(w) for e, w in zip(eps, parts))))
        for z, a, c in zip(elements, via_el.images, direct):
            rep.expect(a == c, "CounitNaturality", "U ∘ ε ≠ ε ∘ El(F U)", lv, z)
    return rep


def verify_units(f: LaxSpanFunctor) -> Report:
    """``El`` and ``F`` send unit modules to unit profunctors on the nose."""
    rep = Report("unit preservation")
    p = el_functor(f, validate=False)
    rep.expect(
        el_module(unit_module(f), validate=False) == unit_profunctor(p, validate=False),
        "ElementsUnit",
        "El(U_F) ≠ U_{El F}",
    )
    fp = f_of_ddf(p, validate=False)
    rep.expect(
        f_of_profunctor(unit_profunctor(p, validate=False), validate=False) == unit_module(fp),
        "FibersUnit",
        "F(U_P) ≠ U_{F P}",
    )
    return rep


def verify_equivalence(corpus, max_path_len: int | None = None) -> Report:
    """Run every round-trip check over the instances of a :class:`~ddf.corpus.Corpus`-shaped object."""
    rep = Report(f"equivalence over {getattr(corpus, 'base_name', 'base')}")
    for name, f in corpus.functors.items():
        rep.extend(verify_functor(f), f"functor {name}")
        rep.extend(verify_triangles(f), f"functor {name}")
        rep.extend(verify_units(f), f"functor {name}")
    for name, t in corpus.transformations.items():
        rep.extend(verify_transformation(t), f"transformation {name}")
    for name, p in corpus.ddfs.items():
        rep.extend(verify_ddf(p), f"ddf {name}")
    for name, h in corpus.ddf_morphisms.items():
        rep.extend(verify_ddf_morphism(h), f"ddf morphism {name}")
    for name, m in corpus.modules.items():
        rep.extend(verify_module(m), f"module {name}")
    for name, mu in corpus.multimodulations.items():
        rep.extend(verify_multimodulation(mu, max_path_len), f"multimodulation {name}")
        rep.extend(verify_el_identity(mu), f"multimodulation {name}")
    for name, m in corpus.profunctors.items():
        rep.extend(verify_profunctor(m), f"profunctor {name}")
    for name, u in corpus.multicells.items():
        rep.extend(verify_multicell(u), f"multicell {name}")
    return rep


def verify_el_identity(mu: Multimodulation) -> Report:
    """``El`` and ``F`` preserve identities and substitution of identities."""
    rep = Report("identities")
    for j, m in enumerate(mu.sources):
        ident = identity_multimodulation(m)
        rep.expect(
            el_multimodulation(ident, validate=False) == identity_prof_multicell(el_module(m, validate=False)),
            "ElementsIdentity",
            "El(1) ≠ 1",
            j,
        )
    if mu.arity:
        ids = [identity_multimodulation(m) for m in mu.sources]
        rep.extend(verify_el_composition(mu, ids))
        rep.expect(compose_multimodulations(mu, ids) == mu, "IdentityComposition", "μ ∘ 1 ≠ μ")
    return rep


def verify_el_composition(mu: Multimodulation, nus: list[Multimodulation]) -> Report:
    """``El`` preserves substitution of multicells on the nose."""
    rep = Report("elements preserve composition")
    lhs = el_multimodulation(compose_multimodulations(mu, nus), validate=False)
    rhs = compose_prof_multicells(
        el_multimodulation(mu, validate=False), [el_multimodulation(n, validate=False) for n in nus]
    )
    rep.expect(lhs == rhs, "ElementsComposition", "El(μ ∘ ν) ≠ El(μ) ∘ El(ν)")
    return rep


__all__ = [
    "el_module",
    "el_multimodulation",
    "epsilon",
    "epsilon_module",
    "eta",
    "eta_module",
    "f_of_multicell",
    "f_of_profunctor",
    "verify_ddf",
    "verify_ddf_morphism",
    "verify_el_composition",
    "verify_el_identity",
    "verify_equivalence",
    "verify_functor",
    "verify_module",
    "verify_multicell",
    "verify_multimodulation",
    "verify_profunctor",
    "verify_transformation",
    "verify_triangles",
    "verify_units",
]
