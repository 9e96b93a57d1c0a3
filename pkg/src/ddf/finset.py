"""Finite sets, functions and spans: the ambient material of the double category Span.

Elements are opaque strings.  Pullbacks name their elements with canonical pair
identifiers ``"(x,y)"`` so that iterated composites carry their bracketing in
their names and the associator is a mechanical re-bracketing.
"""

from __future__ import annotations

from collections.abc import Hashable, Iterable, Iterator, Mapping
from dataclasses import dataclass, field
from typing import Any

from .errors import CompositionMismatch, InvalidObject
from .report import Report


def pair(x: str, y: str) -> str:
    return f"({x},{y})"


def split_pair(s: str) -> tuple[str, str]:
    """Inverse of :func:`pair`: split at the top-level comma."""
    if not (s.startswith("(") and s.endswith(")")):
        raise ValueError(f"not a pair identifier: {s!r}")
    depth = 0
    for i, ch in enumerate(s[1:-1], start=1):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            return s[1:i], s[i + 1 : -1]
    raise ValueError(f"not a pair identifier: {s!r}")


def nest_ids(xs: Iterable[str]) -> str:
    """Left-nested pair identifier ``((x1,x2),x3)``; a single id is returned unchanged."""
    xs = list(xs)
    if not xs:
        raise ValueError("nest_ids needs at least one identifier")
    out = xs[0]
    for x in xs[1:]:
        out = pair(out, x)
    return out


def unnest_ids(s: str, k: int) -> tuple[str, ...]:
    """Inverse of :func:`nest_ids` for a known arity ``k``."""
    parts: list[str] = []
    for _ in range(k - 1):
        s, last = split_pair(s)
        parts.append(last)
    parts.append(s)
    return tuple(reversed(parts))


class FrozenMap(Mapping):
    """Immutable, hashable, insertion-ordered mapping."""

    __slots__ = ("_data", "_hash")

    def __init__(self, data: Mapping | Iterable[tuple[Any, Any]] = ()):
        self._data = dict(data)
        self._hash: int | None = None

    def __getitem__(self, key: Hashable) -> Any:
        return self._data[key]

    def __iter__(self) -> Iterator:
        return iter(self._data)

    def __len__(self) -> int:
        return len(self._data)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._data.items()))
        return self._hash

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FrozenMap):
            return self._data == other._data
        if isinstance(other, Mapping):
            return self._data == dict(other)
        return NotImplemented

    def __repr__(self) -> str:
        return f"FrozenMap({self._data!r})"

    def with_item(self, key: Hashable, value: Any) -> FrozenMap:
        d = dict(self._data)
        d[key] = value
        return FrozenMap(d)


@dataclass(frozen=True)
class FinSet:
    elements: tuple[str, ...] = ()
    _index: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        elems = tuple(self.elements)
        object.__setattr__(self, "elements", elems)
        index = {x: i for i, x in enumerate(elems)}
        if len(index) != len(elems):
            seen: set[str] = set()
            dup = next(x for x in elems if x in seen or seen.add(x))
            raise ValueError(f"duplicate element {dup!r} in finite set")
        object.__setattr__(self, "_index", index)

    def __contains__(self, x: object) -> bool:
        return x in self._index

    def __iter__(self) -> Iterator[str]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __getitem__(self, i: int) -> str:
        return self.elements[i]

    def index(self, x: str) -> int:
        try:
            return self._index[x]
        except KeyError:
            raise InvalidObject(f"{x!r} is not an element") from None


@dataclass(frozen=True)
class FinFn:
    """A total function between finite sets, stored as images aligned with ``dom``."""

    dom: FinSet
    cod: FinSet
    images: tuple[str, ...]

    def __post_init__(self) -> None:
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if len(images) != len(self.dom):
            raise ValueError(f"function table has {len(images)} images for {len(self.dom)} domain elements")
        for x, y in zip(self.dom, images):
            if y not in self.cod:
                raise ValueError(f"image {y!r} of {x!r} is not in the codomain")

    @classmethod
    def from_map(cls, dom: FinSet, cod: FinSet, table: Mapping[str, str]) -> FinFn:
        missing = [x for x in dom if x not in table]
        if missing:
            raise ValueError(f"function table is missing {missing[0]!r}")
        return cls(dom, cod, tuple(table[x] for x in dom))

    @classmethod
    def identity(cls, a: FinSet) -> FinFn:
        return cls(a, a, a.elements)

    def __call__(self, x: str) -> str:
        return self.images[self.dom.index(x)]

    def as_dict(self) -> dict[str, str]:
        return dict(zip(self.dom.elements, self.images))

    def is_bijection(self) -> bool:
        return len(self.dom) == len(self.cod) and len(set(self.images)) == len(self.images)


@dataclass(frozen=True)
class Span:
    left: FinSet
    vertex: FinSet
    right: FinSet
    leg0: FinFn
    leg1: FinFn

    def __post_init__(self) -> None:
        if self.leg0.dom != self.vertex or self.leg1.dom != self.vertex:
            raise CompositionMismatch("span legs must have the vertex as domain")
        if self.leg0.cod != self.left or self.leg1.cod != self.right:
            raise CompositionMismatch("span legs must land in the left and right feet")

    @classmethod
    def from_legs(cls, leg0: FinFn, leg1: FinFn) -> Span:
        return cls(leg0.cod, leg0.dom, leg1.cod, leg0, leg1)


@dataclass(frozen=True)
class SpanMorphism:
    """A cell of Span: maps of the feet and vertex between two spans.

    Typing is enforced on construction; the two commuting squares are data,
    checked by :func:`check_span_morphism`.
    """

    src: Span
    tgt: Span
    left: FinFn
    vertex: FinFn
    right: FinFn

    def __post_init__(self) -> None:
        if (self.left.dom, self.left.cod) != (self.src.left, self.tgt.left):
            raise CompositionMismatch("left component has the wrong type")
        if (self.vertex.dom, self.vertex.cod) != (self.src.vertex, self.tgt.vertex):
            raise CompositionMismatch("vertex component has the wrong type")
        if (self.right.dom, self.right.cod) != (self.src.right, self.tgt.right):
            raise CompositionMismatch("right component has the wrong type")


def compose_fn(g: FinFn, f: FinFn) -> FinFn:
    if f.cod != g.dom:
        raise CompositionMismatch("cannot compose: codomain of f is not the domain of g")
    return FinFn(f.dom, g.cod, tuple(g(y) for y in f.images))


def pullback(f: FinFn, g: FinFn) -> tuple[FinSet, FinFn, FinFn]:
    if f.cod != g.cod:
        raise CompositionMismatch("pullback needs a common codomain")
    by_image: dict[str, list[str]] = {}
    for y, z in zip(g.dom, g.images):
        by_image.setdefault(z, []).append(y)
    xs, ys, ps = [], [], []
    for x, z in zip(f.dom, f.images):
        for y in by_image.get(z, ()):
            xs.append(x)
            ys.append(y)
            ps.append(pair(x, y))
    p = FinSet(tuple(ps))
    return p, FinFn(p, f.dom, tuple(xs)), FinFn(p, g.dom, tuple(ys))


def compose_spans(s: Span, t: Span) -> Span:
    """The pullback composite ``s`` then ``t``; vertex elements are pairs ``(s_elt,t_elt)``."""
    if s.right != t.left:
        raise CompositionMismatch("spans are not composable")
    p, p0, p1 = pullback(s.leg1, t.leg0)
    return Span(s.left, p, t.right, compose_fn(s.leg0, p0), compose_fn(t.leg1, p1))


def identity_span(a: FinSet) -> Span:
    ident = FinFn.identity(a)
    return Span(a, a, a, ident, ident)


def identity_span_morphism(s: Span) -> SpanMorphism:
    return SpanMorphism(s, s, FinFn.identity(s.left), FinFn.identity(s.vertex), FinFn.identity(s.right))


def compose_span_morphisms(b: SpanMorphism, a: SpanMorphism) -> SpanMorphism:
    """Vertical composite: ``a`` then ``b``."""
    if a.tgt != b.src:
        raise CompositionMismatch("span morphisms are not composable")
    return SpanMorphism(
        a.src, b.tgt, compose_fn(b.left, a.left), compose_fn(b.vertex, a.vertex), compose_fn(b.right, a.right)
    )


def check_span_morphism(m: SpanMorphism) -> Report:
    rep = Report("span morphism")
    for v in m.src.vertex:
        w = m.vertex(v)
        rep.expect(
            m.tgt.leg0(w) == m.left(m.src.leg0(v)),
            "SpanSquareLeft",
            "left square does not commute",
            v,
        )
        rep.expect(
            m.tgt.leg1(w) == m.right(m.src.leg1(v)),
            "SpanSquareRight",
            "right square does not commute",
            v,
        )
    return rep


def iterated_composite(spans: list[Span]) -> Span:
    """Left-bracketed composite ``((s1 s2) s3)...``; element ids are :func:`nest_ids` of components."""
    if not spans:
        raise ValueError("need at least one span")
    out = spans[0]
    for s in spans[1:]:
        out = compose_spans(out, s)
    return out


def associator(r: Span, s: Span, t: Span) -> FinFn:
    """Canonical bijection from the vertex of ``(rs)t`` to that of ``r(st)``."""
    left = compose_spans(compose_spans(r, s), t)
    right = compose_spans(r, compose_spans(s, t))
    images = []
    for v in left.vertex:
        rs, c = split_pair(v)
        a, b = split_pair(rs)
        images.append(pair(a, pair(b, c)))
    return FinFn(left.vertex, right.vertex, tuple(images))
