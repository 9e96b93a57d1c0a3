"""Finite presented categories, functors, and discrete fibrations.

Composition tables are explicit: ``comp[(g, f)]`` is ``g ∘ f`` and must be
present for exactly the composable pairs.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field

from .errors import CompositionMismatch, InvalidObject, NotAFibration
from .finset import FinFn, FinSet, FrozenMap, pair, pullback
from .report import Report


@dataclass(frozen=True)
class FinCategory:
    objects: FinSet
    morphisms: FinSet
    dom: FinFn
    cod: FinFn
    ident: FinFn
    comp: FrozenMap
    _cache: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        if not isinstance(self.comp, FrozenMap):
            object.__setattr__(self, "comp", FrozenMap(self.comp))
        for name, fn, d, c in (
            ("dom", self.dom, self.morphisms, self.objects),
            ("cod", self.cod, self.morphisms, self.objects),
            ("ident", self.ident, self.objects, self.morphisms),
        ):
            if fn.dom != d or fn.cod != c:
                raise ValueError(f"{name} has the wrong domain or codomain")
        object.__setattr__(self, "_cache", {})

    def id(self, x: str) -> str:
        return self.ident(x)

    def compose(self, g: str, f: str) -> str:
        """``g ∘ f``."""
        try:
            return self.comp[(g, f)]
        except KeyError:
            raise CompositionMismatch(f"{g!r} ∘ {f!r} is not defined") from None

    def compose_path(self, fs: Iterable[str]) -> str:
        """Composite of ``f1, f2, ...`` taken in diagrammatic order (f1 first)."""
        fs = list(fs)
        out = fs[0]
        for f in fs[1:]:
            out = self.compose(f, out)
        return out

    def hom(self, x: str, y: str) -> tuple[str, ...]:
        return tuple(f for f in self.morphisms if self.dom(f) == x and self.cod(f) == y)

    def into(self, y: str) -> tuple[str, ...]:
        return tuple(f for f in self.morphisms if self.cod(f) == y)

    def composable_pairs(self) -> list[tuple[str, str]]:
        """All ``(g, f)`` with ``cod f = dom g``."""
        by_dom: dict[str, list[str]] = {}
        for g in self.morphisms:
            by_dom.setdefault(self.dom(g), []).append(g)
        return [(g, f) for f in self.morphisms for g in by_dom.get(self.cod(f), ())]

    def is_identity(self, f: str) -> bool:
        return self.ident(self.dom(f)) == f


def category(
    objects: Iterable[str],
    arrows: Mapping[str, tuple[str, str]],
    comp: Mapping[tuple[str, str], str] | None = None,
    identities: Mapping[str, str] | None = None,
) -> FinCategory:
    """Build a category from non-identity arrows and their composites.

    Identities are added (named ``1_X`` unless given) together with every
    composite involving an identity.  ``comp`` lists the remaining composites.
    """
    objs = FinSet(tuple(objects))
    identities = dict(identities or {})
    ids = {x: identities.get(x, f"1_{x}") for x in objs}
    morphs = [ids[x] for x in objs] + [a for a in arrows if a not in ids.values()]
    typing = {ids[x]: (x, x) for x in objs}
    typing.update(arrows)
    mset = FinSet(tuple(morphs))
    table: dict[tuple[str, str], str] = {}
    for f in mset:
        d, c = typing[f]
        table[(ids[c], f)] = f
        table[(f, ids[d])] = f
    for k, v in (comp or {}).items():
        table[k] = v
    return FinCategory(
        objs,
        mset,
        FinFn(mset, objs, tuple(typing[f][0] for f in mset)),
        FinFn(mset, objs, tuple(typing[f][1] for f in mset)),
        FinFn(objs, mset, tuple(ids[x] for x in objs)),
        FrozenMap(table),
    )


def discrete_category(objects: Iterable[str], identity_name=lambda x: f"1_{x}") -> FinCategory:
    objs = tuple(objects)
    return category(objs, {}, identities={x: identity_name(x) for x in objs})


def terminal_category() -> FinCategory:
    return category(["*"], {})


def check_category(c: FinCategory) -> Report:
    rep = Report("category")
    for x in c.objects:
        i = c.ident(x)
        rep.expect(c.dom(i) == x and c.cod(i) == x, "IdentityTyping", "identity has the wrong boundary", x)
    for (g, f), h in c.comp.items():
        if not (g in c.morphisms and f in c.morphisms and h in c.morphisms):
            rep.add("UnknownMorphism", "composition table mentions an unknown morphism", (g, f), h)
            continue
        if not rep.expect(
            c.cod(f) == c.dom(g), "ComposabilityViolation", "composite defined on a non-composable pair", (g, f)
        ):
            continue
        rep.expect(
            c.dom(h) == c.dom(f) and c.cod(h) == c.cod(g),
            "CompositeTyping",
            "composite has the wrong boundary",
            (g, f),
            h,
        )
    pairs = c.composable_pairs()
    missing = [p for p in pairs if p not in c.comp]
    for p in missing:
        rep.add("MissingComposite", "composable pair has no composite", p)
    rep.checked += len(pairs)
    if not rep.ok:
        return rep
    for f in c.morphisms:
        rep.expect(c.compose(c.ident(c.cod(f)), f) == f, "LeftUnit", "identity is not a left unit", f)
        rep.expect(c.compose(f, c.ident(c.dom(f))) == f, "RightUnit", "identity is not a right unit", f)
    for g, f in pairs:
        for h in c.morphisms:
            if c.dom(h) != c.cod(g):
                continue
            rep.expect(
                c.compose(h, c.compose(g, f)) == c.compose(c.compose(h, g), f),
                "Associativity",
                "composition is not associative",
                (h, g, f),
            )
    return rep


@dataclass(frozen=True)
class FinFunctor:
    src: FinCategory
    tgt: FinCategory
    on_objects: FinFn
    on_morphisms: FinFn
    _cache: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        if self.on_objects.dom != self.src.objects or self.on_objects.cod != self.tgt.objects:
            raise ValueError("object map has the wrong domain or codomain")
        if self.on_morphisms.dom != self.src.morphisms or self.on_morphisms.cod != self.tgt.morphisms:
            raise ValueError("morphism map has the wrong domain or codomain")
        object.__setattr__(self, "_cache", {})

    def ob(self, x: str) -> str:
        return self.on_objects(x)

    def mor(self, f: str) -> str:
        return self.on_morphisms(f)

    @classmethod
    def from_maps(
        cls, src: FinCategory, tgt: FinCategory, objects: Mapping[str, str], morphisms: Mapping[str, str]
    ) -> FinFunctor:
        return cls(
            src,
            tgt,
            FinFn.from_map(src.objects, tgt.objects, objects),
            FinFn.from_map(src.morphisms, tgt.morphisms, morphisms),
        )


def identity_functor(c: FinCategory) -> FinFunctor:
    return FinFunctor(c, c, FinFn.identity(c.objects), FinFn.identity(c.morphisms))


def compose_functors(g: FinFunctor, f: FinFunctor) -> FinFunctor:
    """``g ∘ f``."""
    if f.tgt != g.src:
        raise CompositionMismatch("functors are not composable")
    return FinFunctor(
        f.src,
        g.tgt,
        FinFn(f.src.objects, g.tgt.objects, tuple(g.ob(x) for x in f.on_objects.images)),
        FinFn(f.src.morphisms, g.tgt.morphisms, tuple(g.mor(x) for x in f.on_morphisms.images)),
    )


def check_functor(f: FinFunctor) -> Report:
    rep = Report("functor")
    a, b = f.src, f.tgt
    for m in a.morphisms:
        fm = f.mor(m)
        rep.expect(b.dom(fm) == f.ob(a.dom(m)), "FunctorDomain", "image does not start at the image of the domain", m)
        rep.expect(b.cod(fm) == f.ob(a.cod(m)), "FunctorCodomain", "image does not end at the image of the codomain", m)
    for x in a.objects:
        rep.expect(f.mor(a.ident(x)) == b.ident(f.ob(x)), "FunctorIdentity", "identity not preserved", x)
    if not rep.ok:
        return rep
    for (g, h), gh in a.comp.items():
        if (g, h) in a.comp and g in a.morphisms and h in a.morphisms:
            key = (f.mor(g), f.mor(h))
            rep.expect(
                key in b.comp and b.comp[key] == f.mor(gh),
                "FunctorComposition",
                "composite not preserved",
                (g, h),
            )
    return rep


def _lift_index(f: FinFunctor) -> dict[tuple[str, str], list[str]]:
    cache = f._cache
    if "lifts" not in cache:
        idx: dict[tuple[str, str], list[str]] = {}
        for e in f.src.morphisms:
            idx.setdefault((f.src.cod(e), f.mor(e)), []).append(e)
        cache["lifts"] = idx
    return cache["lifts"]


def is_discrete_fibration(f: FinFunctor) -> Report:
    """Every base morphism into ``F(Y)`` has exactly one lift with codomain ``Y``."""
    rep = Report("discrete fibration")
    idx = _lift_index(f)
    base = f.tgt
    base_into: dict[str, list[str]] = {}
    for m in base.morphisms:
        base_into.setdefault(base.cod(m), []).append(m)
    for y in f.src.objects:
        for m in base_into.get(f.ob(y), ()):
            count = len(idx.get((y, m), ()))
            rep.expect(count == 1, "DiscreteFibration", "lift is not unique", y, m, count)
    return rep


def is_discrete_fibration_pullback(f: FinFunctor) -> Report:
    """Independent test: the codomain square of ``f`` is a pullback of sets."""
    rep = Report("pullback square")
    p, _, _ = pullback(f.tgt.cod, f.on_objects)
    comparison = {}
    for e in f.src.morphisms:
        comparison.setdefault(pair(f.mor(e), f.src.cod(e)), []).append(e)
    for z in p:
        n = len(comparison.get(z, ()))
        rep.expect(n == 1, "PullbackSquare", "comparison map is not bijective", z, n)
    return rep


def unique_lift(f: FinFunctor, y: str, m: str) -> str:
    """The unique morphism with codomain ``y`` lying over ``m``."""
    if y not in f.src.objects:
        raise InvalidObject(f"{y!r} is not an object")
    if f.tgt.cod(m) != f.ob(y):
        raise NotAFibration(f"{m!r} does not end at the image of {y!r}")
    found = _lift_index(f).get((y, m), [])
    if len(found) != 1:
        raise NotAFibration(f"{len(found)} lifts of {m!r} at {y!r}")
    return found[0]


def fiber_objects(f: FinFunctor, b: str) -> FinSet:
    if b not in f.tgt.objects:
        raise InvalidObject(f"{b!r} is not an object of the base")
    return FinSet(tuple(x for x, fx in zip(f.src.objects, f.on_objects.images) if fx == b))


def fiber_category(f: FinFunctor, b: str) -> FinCategory:
    objs = fiber_objects(f, b)
    idb = f.tgt.ident(b)
    morphs = FinSet(tuple(m for m, fm in zip(f.src.morphisms, f.on_morphisms.images) if fm == idb))
    c = f.src
    return FinCategory(
        objs,
        morphs,
        FinFn(morphs, objs, tuple(c.dom(m) for m in morphs)),
        FinFn(morphs, objs, tuple(c.cod(m) for m in morphs)),
        FinFn(objs, morphs, tuple(c.ident(x) for x in objs)),
        FrozenMap({k: v for k, v in c.comp.items() if k[0] in morphs and k[1] in morphs}),
    )


def pullback_category(f: FinFunctor, g: FinFunctor) -> tuple[FinCategory, FinFunctor, FinFunctor]:
    """Strict pullback of ``f: A → C`` and ``g: B → C``; cells are named ``(a,b)``."""
    if f.tgt != g.tgt:
        raise CompositionMismatch("pullback needs a common codomain")
    key = ("pullback", id(g))
    cached = f._cache.get(key)
    if cached is not None and cached[0] is g:
        return cached[1]
    a, b = f.src, g.src
    objs, o0, o1 = pullback(f.on_objects, g.on_objects)
    morphs, m0, m1 = pullback(f.on_morphisms, g.on_morphisms)
    comp = {}
    # (x2,y2) ∘ (x,y) = (x2∘x, y2∘y)
    pairs_by_dom: dict[str, list[tuple[str, str, str]]] = {}
    for m, x, y in zip(morphs, m0.images, m1.images):
        pairs_by_dom.setdefault(pair(a.dom(x), b.dom(y)), []).append((m, x, y))
    for m, x, y in zip(morphs, m0.images, m1.images):
        for n, x2, y2 in pairs_by_dom.get(pair(a.cod(x), b.cod(y)), ()):
            comp[(n, m)] = pair(a.compose(x2, x), b.compose(y2, y))
    cat = FinCategory(
        objs,
        morphs,
        FinFn(morphs, objs, tuple(pair(a.dom(x), b.dom(y)) for x, y in zip(m0.images, m1.images))),
        FinFn(morphs, objs, tuple(pair(a.cod(x), b.cod(y)) for x, y in zip(m0.images, m1.images))),
        FinFn(objs, morphs, tuple(pair(a.ident(x), b.ident(y)) for x, y in zip(o0.images, o1.images))),
        FrozenMap(comp),
    )
    result = (
        cat,
        FinFunctor(cat, a, o0, m0),
        FinFunctor(cat, b, o1, m1),
    )
    f._cache[key] = (g, result)
    return result
