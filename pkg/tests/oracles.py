"""Brute-force reference computations, written against plain dicts and lists.

Nothing here reuses the library's composition or lifting code.
"""

from __future__ import annotations

from itertools import product


def table(f) -> dict[str, str]:
    return dict(zip(f.dom.elements, f.images))


def pullback_pairs(f: dict, g: dict) -> list[tuple[str, str]]:
    return [(x, y) for x, y in product(f, g) if f[x] == g[y]]


def span_composite_size(leg1: dict, leg0: dict) -> int:
    """Σ_b |leg1⁻¹(b)| · |leg0⁻¹(b)|."""
    mids = set(leg1.values()) | set(leg0.values())
    return sum(sum(1 for v in leg1.values() if v == b) * sum(1 for v in leg0.values() if v == b) for b in mids)


def lifts(f, y: str, m: str) -> list[str]:
    """All morphisms of ``f.src`` with codomain ``y`` sitting over ``m``."""
    c = f.src
    return [e for e in c.morphisms.elements if c.cod(e) == y and f.mor(e) == m]


def is_discrete_fibration(f) -> bool:
    b = f.tgt
    for y in f.src.objects.elements:
        for m in b.morphisms.elements:
            if b.cod(m) == f.ob(y) and len(lifts(f, y, m)) != 1:
                return False
    return True


def category_ok(objects, morphisms: dict, identities: dict, comp: dict) -> bool:
    """Category axioms straight from the tables ``morphisms[f] = (dom, cod)`` and ``comp[(g, f)]``."""
    for x in objects:
        if morphisms[identities[x]] != (x, x):
            return False
    for f, (d, c) in morphisms.items():
        for g, (d2, c2) in morphisms.items():
            if d2 != c:
                continue
            h = comp.get((g, f))
            if h is None or morphisms[h] != (d, c2):
                return False
        if comp.get((identities[c], f)) != f or comp.get((f, identities[d])) != f:
            return False
    for f, (d, c) in morphisms.items():
        for g, (d2, c2) in morphisms.items():
            if d2 != c:
                continue
            for h, (d3, _) in morphisms.items():
                if d3 == c2 and comp[(h, comp[(g, f)])] != comp[(comp[(h, g)], f)]:
                    return False
    return True


def category_tables(c):
    morphisms = {f: (c.dom(f), c.cod(f)) for f in c.morphisms.elements}
    identities = {x: c.ident(x) for x in c.objects.elements}
    return list(c.objects.elements), morphisms, identities, dict(c.comp.items())


def count_elements(functor_record: dict) -> tuple[int, int]:
    """Object and proarrow counts of the elements of a lax functor, from its JSON record."""
    objs = sum(len(xs) for xs in functor_record["objects"].values())
    pros = sum(len(v) for v in functor_record["proarrows"].values())
    return objs, pros
