"""Strict double categories, presented as category objects in finite categories.

``d0`` carries objects and arrows, ``d1`` carries proarrows and cells (with
internal composition of cells).  External composition is a functor on the
pullback ``d1 ×_{d0} d1`` whose objects are pairs ``(m,n)`` with
``tgt m = src n``; it sends ``(m,n)`` to ``n ⊗ m``.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field
from itertools import product

from .cat_core import (
    FinCategory,
    FinFunctor,
    category,
    check_category,
    check_functor,
    compose_functors,
    identity_functor,
    pullback_category,
    terminal_category,
)
from .errors import CompositionMismatch, InvalidObject
from .finset import FinFn, FinSet, FrozenMap, pair
from .report import Report


@dataclass(frozen=True)
class DoubleCategory:
    d0: FinCategory
    d1: FinCategory
    src: FinFunctor
    tgt: FinFunctor
    unit: FinFunctor
    ext: FinFunctor
    _cache: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        for name, fn, a, b in (
            ("src", self.src, self.d1, self.d0),
            ("tgt", self.tgt, self.d1, self.d0),
            ("unit", self.unit, self.d0, self.d1),
        ):
            if fn.src != a or fn.tgt != b:
                raise ValueError(f"{name} functor has the wrong domain or codomain")
        if self.ext.src != self.composable_category() or self.ext.tgt != self.d1:
            raise ValueError("external composition must be a functor d1 ×_{d0} d1 → d1")
        object.__setattr__(self, "_cache", {})

    def composable_category(self) -> FinCategory:
        return pullback_category(self.tgt, self.src)[0]

    @classmethod
    def build(
        cls,
        d0: FinCategory,
        d1: FinCategory,
        src: FinFunctor,
        tgt: FinFunctor,
        unit: FinFunctor,
        ext_proarrows: Mapping[tuple[str, str], str],
        ext_cells: Mapping[tuple[str, str], str],
    ) -> DoubleCategory:
        """Assemble from external composition tables keyed by ``(first, second)``."""
        pb = pullback_category(tgt, src)[0]
        obj_map = {pair(m, n): p for (m, n), p in ext_proarrows.items()}
        cell_map = {pair(a, b): c for (a, b), c in ext_cells.items()}
        ext = FinFunctor(
            pb,
            d1,
            FinFn.from_map(pb.objects, d1.objects, obj_map),
            FinFn.from_map(pb.morphisms, d1.morphisms, cell_map),
        )
        return cls(d0, d1, src, tgt, unit, ext)

    # accessors -----------------------------------------------------------

    @property
    def objects(self) -> FinSet:
        return self.d0.objects

    @property
    def arrows(self) -> FinSet:
        return self.d0.morphisms

    @property
    def proarrows(self) -> FinSet:
        return self.d1.objects

    @property
    def cells(self) -> FinSet:
        return self.d1.morphisms

    def pro_src(self, m: str) -> str:
        return self.src.ob(m)

    def pro_tgt(self, m: str) -> str:
        return self.tgt.ob(m)

    def cell_src(self, theta: str) -> str:
        """Source proarrow of a cell."""
        return self.d1.dom(theta)

    def cell_tgt(self, theta: str) -> str:
        return self.d1.cod(theta)

    def cell_left(self, theta: str) -> str:
        """Left frame arrow of a cell."""
        return self.src.mor(theta)

    def cell_right(self, theta: str) -> str:
        return self.tgt.mor(theta)

    def u(self, a: str) -> str:
        return self.unit.ob(a)

    def u_arrow(self, f: str) -> str:
        return self.unit.mor(f)

    def ext_pro(self, m: str, n: str) -> str:
        """``n ⊗ m`` for ``m`` followed by ``n``."""
        try:
            return self.ext.ob(pair(m, n))
        except InvalidObject:
            raise CompositionMismatch(f"proarrows {m!r}, {n!r} are not composable") from None

    def ext_cell(self, a: str, b: str) -> str:
        try:
            return self.ext.mor(pair(a, b))
        except InvalidObject:
            raise CompositionMismatch(f"cells {a!r}, {b!r} are not composable") from None

    def ext_path(self, ms: tuple[str, ...] | list[str]) -> str:
        out = ms[0]
        for m in ms[1:]:
            out = self.ext_pro(out, m)
        return out

    def ext_cell_path(self, cs: tuple[str, ...] | list[str]) -> str:
        out = cs[0]
        for c in cs[1:]:
            out = self.ext_cell(out, c)
        return out

    def comp_arrow(self, g: str, f: str) -> str:
        return self.d0.compose(g, f)

    def comp_cell(self, b: str, a: str) -> str:
        return self.d1.compose(b, a)

    def proarrows_from(self, a: str) -> tuple[str, ...]:
        return tuple(m for m in self.proarrows if self.pro_src(m) == a)

    def paths(self, k: int) -> list[tuple[str, ...]]:
        """All composable paths of ``k`` proarrows (``k >= 1``)."""
        key = ("paths", k)
        if key not in self._cache:
            if k == 1:
                out = [(m,) for m in self.proarrows]
            else:
                out = [p + (m,) for p in self.paths(k - 1) for m in self.proarrows_from(self.pro_tgt(p[-1]))]
            self._cache[key] = out
        return self._cache[key]

    def cell_paths(self, k: int) -> list[tuple[str, ...]]:
        key = ("cell_paths", k)
        if key not in self._cache:
            by_left: dict[str, list[str]] = {}
            for c in self.cells:
                by_left.setdefault(self.cell_left(c), []).append(c)
            if k == 1:
                out = [(c,) for c in self.cells]
            else:
                out = [p + (c,) for p in self.cell_paths(k - 1) for c in by_left.get(self.cell_right(p[-1]), ())]
            self._cache[key] = out
        return self._cache[key]


def check_double_category(b: DoubleCategory) -> Report:
    rep = Report("double category")
    rep.extend(check_category(b.d0), "d0")
    rep.extend(check_category(b.d1), "d1")
    if not rep.ok:
        return rep
    for name, fn in (("src", b.src), ("tgt", b.tgt), ("unit", b.unit)):
        rep.extend(check_functor(fn), name)
    if not rep.ok:
        return rep
    rep.extend(check_category(b.ext.src), "composable")
    rep.extend(check_functor(b.ext), "ExtFunctor")
    if not rep.ok:
        return rep
    for x in b.objects:
        rep.expect(b.src.ob(b.u(x)) == x, "SrcUnit", "source of a unit proarrow", x)
        rep.expect(b.tgt.ob(b.u(x)) == x, "TgtUnit", "target of a unit proarrow", x)
    for f in b.arrows:
        rep.expect(b.src.mor(b.u_arrow(f)) == f, "SrcUnit", "left frame of a unit cell", f)
        rep.expect(b.tgt.mor(b.u_arrow(f)) == f, "TgtUnit", "right frame of a unit cell", f)
    pb = b.ext.src
    for mn, p in zip(pb.objects, b.ext.on_objects.images):
        m, n = _split(pb, mn, b)
        rep.expect(b.pro_src(p) == b.pro_src(m), "ExtSource", "composite starts elsewhere", (m, n))
        rep.expect(b.pro_tgt(p) == b.pro_tgt(n), "ExtTarget", "composite ends elsewhere", (m, n))
    for ab, c in zip(pb.morphisms, b.ext.on_morphisms.images):
        a, bb = _split_cell(pb, ab, b)
        rep.expect(b.cell_left(c) == b.cell_left(a), "ExtSource", "composite cell has the wrong left frame", (a, bb))
        rep.expect(
            b.cell_right(c) == b.cell_right(bb), "ExtTarget", "composite cell has the wrong right frame", (a, bb)
        )
    if not rep.ok:
        return rep
    for m in b.proarrows:
        rep.expect(b.ext_pro(b.u(b.pro_src(m)), m) == m, "ExtRightUnit", "m ⊗ u_A ≠ m", m)
        rep.expect(b.ext_pro(m, b.u(b.pro_tgt(m))) == m, "ExtLeftUnit", "u_B ⊗ m ≠ m", m)
    for c in b.cells:
        rep.expect(b.ext_cell(b.u_arrow(b.cell_left(c)), c) == c, "ExtRightUnit", "θ ⊗ u_f ≠ θ", c)
        rep.expect(b.ext_cell(c, b.u_arrow(b.cell_right(c))) == c, "ExtLeftUnit", "u_g ⊗ θ ≠ θ", c)
    for m, n, p in b.paths(3):
        rep.expect(
            b.ext_pro(b.ext_pro(m, n), p) == b.ext_pro(m, b.ext_pro(n, p)),
            "ExtAssociativity",
            "external composition is not associative",
            (m, n, p),
        )
    for x, y, z in b.cell_paths(3):
        rep.expect(
            b.ext_cell(b.ext_cell(x, y), z) == b.ext_cell(x, b.ext_cell(y, z)),
            "ExtAssociativity",
            "external composition of cells is not associative",
            (x, y, z),
        )
    rep.extend(check_interchange(b))
    return rep


def check_interchange(b: DoubleCategory) -> Report:
    """Element-wise interchange law, independent of the functor check on ``ext``."""
    rep = Report("interchange")
    after: dict[str, list[str]] = {}
    for c in b.cells:
        after.setdefault(b.cell_src(c), []).append(c)
    for a, c in b.cell_paths(2):
        for a2 in after.get(b.cell_tgt(a), ()):
            for c2 in after.get(b.cell_tgt(c), ()):
                if b.cell_right(a2) != b.cell_left(c2):
                    continue
                lhs = b.ext_cell(b.comp_cell(a2, a), b.comp_cell(c2, c))
                rhs = b.comp_cell(b.ext_cell(a2, c2), b.ext_cell(a, c))
                rep.expect(lhs == rhs, "Interchange", "interchange law fails", (a, c, a2, c2))
    return rep


def _split(pb: FinCategory, mn: str, b: DoubleCategory) -> tuple[str, str]:
    cache = b._cache.setdefault("split_ob", {})
    if not cache:
        _, p0, p1 = pullback_category(b.tgt, b.src)
        for z, m, n in zip(pb.objects, p0.on_objects.images, p1.on_objects.images):
            cache[z] = (m, n)
    return cache[mn]


def _split_cell(pb: FinCategory, ab: str, b: DoubleCategory) -> tuple[str, str]:
    cache = b._cache.setdefault("split_mor", {})
    if not cache:
        _, p0, p1 = pullback_category(b.tgt, b.src)
        for z, m, n in zip(pb.morphisms, p0.on_morphisms.images, p1.on_morphisms.images):
            cache[z] = (m, n)
    return cache[ab]


# double functors --------------------------------------------------------


@dataclass(frozen=True)
class DoubleFunctor:
    src: DoubleCategory
    tgt: DoubleCategory
    f0: FinFunctor
    f1: FinFunctor

    def __post_init__(self) -> None:
        if self.f0.src != self.src.d0 or self.f0.tgt != self.tgt.d0:
            raise ValueError("f0 has the wrong domain or codomain")
        if self.f1.src != self.src.d1 or self.f1.tgt != self.tgt.d1:
            raise ValueError("f1 has the wrong domain or codomain")

    def ob(self, x: str) -> str:
        return self.f0.ob(x)

    def arrow(self, f: str) -> str:
        return self.f0.mor(f)

    def pro(self, m: str) -> str:
        return self.f1.ob(m)

    def cell(self, c: str) -> str:
        return self.f1.mor(c)


def identity_double_functor(b: DoubleCategory) -> DoubleFunctor:
    return DoubleFunctor(b, b, identity_functor(b.d0), identity_functor(b.d1))


def compose_double_functors(g: DoubleFunctor, f: DoubleFunctor) -> DoubleFunctor:
    """``g ∘ f``."""
    if f.tgt != g.src:
        raise CompositionMismatch("double functors are not composable")
    return DoubleFunctor(f.src, g.tgt, compose_functors(g.f0, f.f0), compose_functors(g.f1, f.f1))


def to_terminal(b: DoubleCategory) -> DoubleFunctor:
    t = terminal_double()
    return DoubleFunctor(
        b,
        t,
        FinFunctor(
            b.d0,
            t.d0,
            FinFn(b.objects, t.objects, ("*",) * len(b.objects)),
            FinFn(b.arrows, t.arrows, ("1_*",) * len(b.arrows)),
        ),
        FinFunctor(
            b.d1,
            t.d1,
            FinFn(b.proarrows, t.proarrows, ("1_*",) * len(b.proarrows)),
            FinFn(b.cells, t.cells, ("1_1_*",) * len(b.cells)),
        ),
    )


def check_double_functor(h: DoubleFunctor) -> Report:
    rep = Report("double functor")
    rep.extend(check_functor(h.f0), "f0")
    rep.extend(check_functor(h.f1), "f1")
    if not rep.ok:
        return rep
    a, b = h.src, h.tgt
    for m in a.proarrows:
        rep.expect(b.pro_src(h.pro(m)) == h.ob(a.pro_src(m)), "DoubleFunctorSource", "source not preserved", m)
        rep.expect(b.pro_tgt(h.pro(m)) == h.ob(a.pro_tgt(m)), "DoubleFunctorTarget", "target not preserved", m)
    for c in a.cells:
        rep.expect(
            b.cell_left(h.cell(c)) == h.arrow(a.cell_left(c)), "DoubleFunctorSource", "left frame not preserved", c
        )
        rep.expect(
            b.cell_right(h.cell(c)) == h.arrow(a.cell_right(c)), "DoubleFunctorTarget", "right frame not preserved", c
        )
    for x in a.objects:
        rep.expect(h.pro(a.u(x)) == b.u(h.ob(x)), "DoubleFunctorUnit", "unit proarrow not preserved", x)
    for f in a.arrows:
        rep.expect(h.cell(a.u_arrow(f)) == b.u_arrow(h.arrow(f)), "DoubleFunctorUnit", "unit cell not preserved", f)
    if not rep.ok:
        return rep
    for m, n in a.paths(2):
        rep.expect(
            h.pro(a.ext_pro(m, n)) == b.ext_pro(h.pro(m), h.pro(n)),
            "DoubleFunctorExt",
            "external composite not preserved",
            (m, n),
        )
    for x, y in a.cell_paths(2):
        rep.expect(
            h.cell(a.ext_cell(x, y)) == b.ext_cell(h.cell(x), h.cell(y)),
            "DoubleFunctorExt",
            "external composite of cells not preserved",
            (x, y),
        )
    return rep


# transpose and opposite -------------------------------------------------


def transpose(b: DoubleCategory) -> DoubleCategory:
    """Exchange arrows and proarrows; an involution on the nose."""
    d0, d1 = b.d0, b.d1
    pb, p0, p1 = pullback_category(b.tgt, b.src)
    comp0 = {}
    for z, m, n in zip(pb.objects, p0.on_objects.images, p1.on_objects.images):
        comp0[(n, m)] = b.ext.ob(z)
    comp1 = {}
    for z, x, y in zip(pb.morphisms, p0.on_morphisms.images, p1.on_morphisms.images):
        comp1[(y, x)] = b.ext.mor(z)
    t0 = FinCategory(d0.objects, d1.objects, b.src.on_objects, b.tgt.on_objects, b.unit.on_objects, FrozenMap(comp0))
    t1 = FinCategory(
        d0.morphisms, d1.morphisms, b.src.on_morphisms, b.tgt.on_morphisms, b.unit.on_morphisms, FrozenMap(comp1)
    )
    src = FinFunctor(t1, t0, d0.dom, d1.dom)
    tgt = FinFunctor(t1, t0, d0.cod, d1.cod)
    unit = FinFunctor(t0, t1, d0.ident, d1.ident)
    tpb = pullback_category(tgt, src)[0]
    ext_o = {}
    for (g, f), h in d0.comp.items():
        ext_o[pair(f, g)] = h
    ext_m = {}
    for (y, x), z in d1.comp.items():
        ext_m[pair(x, y)] = z
    ext = FinFunctor(
        tpb,
        t1,
        FinFn.from_map(tpb.objects, t1.objects, ext_o),
        FinFn.from_map(tpb.morphisms, t1.morphisms, ext_m),
    )
    return DoubleCategory(t0, t1, src, tgt, unit, ext)


def transpose_functor(h: DoubleFunctor) -> DoubleFunctor:
    a, b = transpose(h.src), transpose(h.tgt)
    return DoubleFunctor(
        a,
        b,
        FinFunctor(a.d0, b.d0, h.f0.on_objects, h.f1.on_objects),
        FinFunctor(a.d1, b.d1, h.f0.on_morphisms, h.f1.on_morphisms),
    )


def _op_category(c: FinCategory) -> FinCategory:
    return FinCategory(
        c.objects, c.morphisms, c.cod, c.dom, c.ident, FrozenMap({(f, g): h for (g, f), h in c.comp.items()})
    )


def opposite(b: DoubleCategory) -> DoubleCategory:
    """Reverse arrows and cells internally; proarrows keep their direction."""
    d0, d1 = _op_category(b.d0), _op_category(b.d1)
    src = FinFunctor(d1, d0, b.src.on_objects, b.src.on_morphisms)
    tgt = FinFunctor(d1, d0, b.tgt.on_objects, b.tgt.on_morphisms)
    unit = FinFunctor(d0, d1, b.unit.on_objects, b.unit.on_morphisms)
    pb = pullback_category(tgt, src)[0]
    ext = FinFunctor(pb, d1, b.ext.on_objects, b.ext.on_morphisms)
    return DoubleCategory(d0, d1, src, tgt, unit, ext)


# generators -------------------------------------------------------------


def vertical_double(c: FinCategory) -> DoubleCategory:
    """Morphisms of ``c`` as proarrows, with only identity arrows and cells."""
    d0 = category(c.objects, {})
    cells = {m: f"1_{m}" for m in c.morphisms}
    d1 = category(c.morphisms, {}, identities=cells)
    src = FinFunctor.from_maps(
        d1, d0, {m: c.dom(m) for m in c.morphisms}, {cells[m]: d0.ident(c.dom(m)) for m in c.morphisms}
    )
    tgt = FinFunctor.from_maps(
        d1, d0, {m: c.cod(m) for m in c.morphisms}, {cells[m]: d0.ident(c.cod(m)) for m in c.morphisms}
    )
    unit = FinFunctor.from_maps(
        d0, d1, {x: c.ident(x) for x in c.objects}, {d0.ident(x): cells[c.ident(x)] for x in c.objects}
    )
    ext_p = {(f, g): h for (g, f), h in c.comp.items()}
    ext_c = {(cells[f], cells[g]): cells[h] for (f, g), h in ext_p.items()}
    return DoubleCategory.build(d0, d1, src, tgt, unit, ext_p, ext_c)


def terminal_double() -> DoubleCategory:
    return vertical_double(terminal_category())


def walking_proarrow() -> DoubleCategory:
    """Objects A, B; proarrows u_A, u_B and m: A ⇸ B; only identity arrows and cells."""
    return vertical_double(category(["A", "B"], {"m": ("A", "B")}, identities={"A": "u_A", "B": "u_B"}))


def horizontal_double(c: FinCategory) -> DoubleCategory:
    return transpose(vertical_double(c))


def _square(m: str, f: str, g: str, n: str) -> str:
    return f"[{m}|{f}|{g}|{n}]"


def square_double(c: FinCategory) -> DoubleCategory:
    """Morphisms of ``c`` as arrows and proarrows; cells are commutative squares."""
    sq: dict[str, tuple[str, str, str, str]] = {}
    for m, f in product(c.morphisms, c.morphisms):
        if c.dom(m) != c.dom(f):
            continue
        for g in c.morphisms:
            if c.dom(g) != c.cod(m):
                continue
            for n in c.morphisms:
                if c.dom(n) == c.cod(f) and c.cod(n) == c.cod(g) and c.compose(n, f) == c.compose(g, m):
                    sq[_square(m, f, g, n)] = (m, f, g, n)
    ids = {m: _square(m, c.ident(c.dom(m)), c.ident(c.cod(m)), m) for m in c.morphisms}
    arrows = {k: (v[0], v[3]) for k, v in sq.items() if k not in ids.values()}
    comp = {}
    for k1, (m, f, g, n) in sq.items():
        for k2, (n2, f2, g2, p) in sq.items():
            if n2 == n:
                comp[(k2, k1)] = _square(m, c.compose(f2, f), c.compose(g2, g), p)
    d1 = category(c.morphisms, arrows, comp, identities=ids)
    d0 = c
    src = FinFunctor.from_maps(d1, d0, {m: c.dom(m) for m in c.morphisms}, {k: v[1] for k, v in sq.items()})
    tgt = FinFunctor.from_maps(d1, d0, {m: c.cod(m) for m in c.morphisms}, {k: v[2] for k, v in sq.items()})
    unit = FinFunctor.from_maps(
        d0,
        d1,
        {x: c.ident(x) for x in c.objects},
        {f: _square(c.ident(c.dom(f)), f, f, c.ident(c.cod(f))) for f in c.morphisms},
    )
    ext_p = {(f, g): h for (g, f), h in c.comp.items()}
    ext_c = {}
    for k1, (m, f, g, n) in sq.items():
        for k2, (m2, f2, g2, n2) in sq.items():
            if f2 == g:
                ext_c[(k1, k2)] = _square(c.compose(m2, m), f, g2, c.compose(n2, n))
    return DoubleCategory.build(d0, d1, src, tgt, unit, ext_p, ext_c)
