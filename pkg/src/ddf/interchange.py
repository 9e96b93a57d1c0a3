"""JSON interchange format.

A document is one JSON object whose sections map entity names to entity
records.  Records refer to other entities by name only; element identifiers
are plain strings.  :func:`emit` is deterministic (fixed section and field
order, tables in construction order), so two entities are equal exactly when
their canonical texts are equal.
"""

from __future__ import annotations

import json
from collections.abc import Callable, Mapping
from dataclasses import dataclass, field
from typing import Any

from .cat_core import FinCategory, FinFunctor, pullback_category
from .double_cat import DoubleCategory, DoubleFunctor
from .elements import DDFCandidate, DDFMorphism
from .errors import DDFError, ParseError, UnresolvedName
from .finset import FinFn, FinSet, FrozenMap, split_pair
from .lax_modules import Module, Multimodulation, multimodulation_from_tables
from .lax_span import LaxSpanFunctor, LaxTransformation
from .prof_dfib import InternalProfunctor, ProfMulticell

SECTIONS = (
    "sets",
    "functions",
    "categories",
    "double_categories",
    "lax_functors",
    "transformations",
    "ddfs",
    "ddf_morphisms",
    "modules",
    "multimodulations",
    "profunctors",
    "multicells",
)


@dataclass
class Document:
    sets: dict[str, FinSet] = field(default_factory=dict)
    functions: dict[str, FinFn] = field(default_factory=dict)
    categories: dict[str, FinCategory] = field(default_factory=dict)
    double_categories: dict[str, DoubleCategory] = field(default_factory=dict)
    lax_functors: dict[str, LaxSpanFunctor] = field(default_factory=dict)
    transformations: dict[str, LaxTransformation] = field(default_factory=dict)
    ddfs: dict[str, DDFCandidate] = field(default_factory=dict)
    ddf_morphisms: dict[str, DDFMorphism] = field(default_factory=dict)
    modules: dict[str, Module] = field(default_factory=dict)
    multimodulations: dict[str, Multimodulation] = field(default_factory=dict)
    profunctors: dict[str, InternalProfunctor] = field(default_factory=dict)
    multicells: dict[str, ProfMulticell] = field(default_factory=dict)

    def section(self, name: str) -> dict[str, Any]:
        return getattr(self, name)

    def is_empty(self) -> bool:
        return not any(self.section(s) for s in SECTIONS)

    def name_of(self, section: str, obj: Any) -> str | None:
        entries = self.section(section)
        for name, v in entries.items():
            if v is obj:
                return name
        for name, v in entries.items():
            if v == obj:
                return name
        return None

    def _ensure(self, section: str, obj: Any, default: str) -> str:
        found = self.name_of(section, obj)
        if found is not None:
            return found
        self.add(section, default, obj)
        return default

    def add(self, section: str, name: str, obj: Any) -> str:
        """Register ``obj`` under ``name`` together with everything it refers to."""
        if section not in SECTIONS:
            raise ValueError(f"unknown section {section!r}")
        entries = self.section(section)
        if name in entries:
            if entries[name] == obj:
                return name
            raise ValueError(f"name {name!r} already used in {section}")
        if section == "functions":
            self._ensure("sets", obj.dom, f"{name}.dom")
            self._ensure("sets", obj.cod, f"{name}.cod")
        elif section == "double_categories":
            self._ensure("categories", obj.d0, f"{name}.d0")
            self._ensure("categories", obj.d1, f"{name}.d1")
        elif section == "lax_functors":
            self._ensure("double_categories", obj.base, f"{name}.base")
        elif section == "transformations":
            self._ensure("lax_functors", obj.src, f"{name}.src")
            self._ensure("lax_functors", obj.tgt, f"{name}.tgt")
        elif section == "ddfs":
            self._ensure("double_categories", obj.total, f"{name}.total")
            self._ensure("double_categories", obj.base, f"{name}.base")
        elif section == "ddf_morphisms":
            self._ensure("ddfs", obj.src, f"{name}.src")
            self._ensure("ddfs", obj.tgt, f"{name}.tgt")
        elif section == "modules":
            self._ensure("lax_functors", obj.src, f"{name}.src")
            self._ensure("lax_functors", obj.tgt, f"{name}.tgt")
        elif section == "multimodulations":
            for i, m in enumerate(obj.sources):
                self._ensure("modules", m, f"{name}.source{i}")
            self._ensure("modules", obj.target, f"{name}.target")
            self._ensure("transformations", obj.left, f"{name}.left")
            self._ensure("transformations", obj.right, f"{name}.right")
        elif section == "profunctors":
            self._ensure("ddfs", obj.src, f"{name}.src")
            self._ensure("ddfs", obj.tgt, f"{name}.tgt")
            self._ensure("categories", obj.carrier, f"{name}.carrier")
        elif section == "multicells":
            for i, m in enumerate(obj.sources):
                self._ensure("profunctors", m, f"{name}.source{i}")
            self._ensure("profunctors", obj.target, f"{name}.target")
            self._ensure("ddf_morphisms", obj.left, f"{name}.left")
            self._ensure("ddf_morphisms", obj.right, f"{name}.right")
        entries[name] = obj
        return name


def document_from_corpus(cp) -> Document:
    """A document holding every instance of a :class:`~ddf.corpus.Corpus`."""
    doc = Document()
    doc.add("double_categories", cp.base_name, cp.base)
    for section, attr in (
        ("categories", "categories"),
        ("lax_functors", "functors"),
        ("transformations", "transformations"),
        ("ddfs", "ddfs"),
        ("ddf_morphisms", "ddf_morphisms"),
        ("modules", "modules"),
        ("multimodulations", "multimodulations"),
        ("profunctors", "profunctors"),
        ("multicells", "multicells"),
    ):
        for name, obj in getattr(cp, attr).items():
            doc.add(section, name, obj)
    return doc


# emission ------------------------------------------------------------------


def _table(f: FinFn) -> dict[str, str]:
    return dict(zip(f.dom, f.images))


def _functor_table(f: FinFunctor) -> dict[str, dict[str, str]]:
    return {"objects": _table(f.on_objects), "morphisms": _table(f.on_morphisms)}


def _ref(doc: Document, section: str, obj: Any) -> str:
    name = doc.name_of(section, obj)
    if name is None:
        raise ValueError(f"entity refers to an unregistered member of {section}")
    return name


def _emit_category(c: FinCategory) -> dict:
    return {
        "objects": list(c.objects),
        "morphisms": {f: [d, e] for f, d, e in zip(c.morphisms, c.dom.images, c.cod.images)},
        "identities": _table(c.ident),
        "composition": [[g, f, h] for (g, f), h in c.comp.items()],
    }


def _emit_double(doc: Document, b: DoubleCategory) -> dict:
    _, p0, p1 = pullback_category(b.tgt, b.src)
    return {
        "d0": _ref(doc, "categories", b.d0),
        "d1": _ref(doc, "categories", b.d1),
        "src": _functor_table(b.src),
        "tgt": _functor_table(b.tgt),
        "unit": _functor_table(b.unit),
        "ext": {
            "proarrows": [
                [m, n, p] for m, n, p in zip(p0.on_objects.images, p1.on_objects.images, b.ext.on_objects.images)
            ],
            "cells": [
                [a, c, d] for a, c, d in zip(p0.on_morphisms.images, p1.on_morphisms.images, b.ext.on_morphisms.images)
            ],
        },
    }


def _emit_lax(doc: Document, f: LaxSpanFunctor) -> dict:
    b = f.base
    rows = []
    for m, n in b.paths(2):
        phi = f.phi(m, n)
        for z, r in zip(phi.dom, phi.images):
            s, t = split_pair(z)
            rows.append([m, n, s, t, r])
    return {
        "base": _ref(doc, "double_categories", b),
        "objects": {a: list(f.obj(a)) for a in b.objects},
        "arrows": {h: _table(f.star(h)) for h in b.arrows},
        "proarrows": {m: _span_table(f.span(m)) for m in b.proarrows},
        "cells": {c: _table(f.cell(c).vertex) for c in b.cells},
        "unit": {a: _table(f.phi_unit(a)) for a in b.objects},
        "composition": rows,
    }


def _span_table(s) -> dict[str, list[str]]:
    return {v: [x, y] for v, x, y in zip(s.vertex, s.leg0.images, s.leg1.images)}


def _emit_transformation(doc: Document, t: LaxTransformation) -> dict:
    b = t.base
    return {
        "src": _ref(doc, "lax_functors", t.src),
        "tgt": _ref(doc, "lax_functors", t.tgt),
        "objects": {a: _table(t.at(a)) for a in b.objects},
        "proarrows": {m: _table(t.at_pro(m)) for m in b.proarrows},
    }


def _emit_ddf(doc: Document, p: DDFCandidate) -> dict:
    return {
        "total": _ref(doc, "double_categories", p.total),
        "base": _ref(doc, "double_categories", p.base),
        "f0": _functor_table(p.proj.f0),
        "f1": _functor_table(p.proj.f1),
    }


def _emit_ddf_morphism(doc: Document, h: DDFMorphism) -> dict:
    return {
        "src": _ref(doc, "ddfs", h.src),
        "tgt": _ref(doc, "ddfs", h.tgt),
        "f0": _functor_table(h.map.f0),
        "f1": _functor_table(h.map.f1),
    }


def _emit_module(doc: Document, mod: Module) -> dict:
    b = mod.base
    left, right = [], []
    for m, n in b.paths(2):
        for rows, act in ((left, mod.lam(m, n)), (right, mod.rho(m, n))):
            for z, r in zip(act.dom, act.images):
                s, t = split_pair(z)
                rows.append([m, n, s, t, r])
    return {
        "src": _ref(doc, "lax_functors", mod.src),
        "tgt": _ref(doc, "lax_functors", mod.tgt),
        "proarrows": {m: _span_table(mod.span(m)) for m in b.proarrows},
        "cells": {c: _table(mod.cell(c).vertex) for c in b.cells},
        "left": left,
        "right": right,
    }


def _emit_multimodulation(doc: Document, mu: Multimodulation) -> dict:
    if mu.arity == 0:
        comps = [{"object": a, "map": _table(c)} for a, c in mu.components.items()]
    else:
        comps = [{"path": list(p), "map": _table(c)} for p, c in mu.components.items()]
    return {
        "sources": [_ref(doc, "modules", m) for m in mu.sources],
        "target": _ref(doc, "modules", mu.target),
        "left": _ref(doc, "transformations", mu.left),
        "right": _ref(doc, "transformations", mu.right),
        "components": comps,
    }


def _emit_profunctor(doc: Document, m: InternalProfunctor) -> dict:
    return {
        "src": _ref(doc, "ddfs", m.src),
        "tgt": _ref(doc, "ddfs", m.tgt),
        "carrier": _ref(doc, "categories", m.carrier),
        "proj": _functor_table(m.proj),
        "leg0": _functor_table(m.leg0),
        "leg1": _functor_table(m.leg1),
        "left": _functor_table(m.left),
        "right": _functor_table(m.right),
    }


def _emit_multicell(doc: Document, u: ProfMulticell) -> dict:
    return {
        "sources": [_ref(doc, "profunctors", m) for m in u.sources],
        "target": _ref(doc, "profunctors", u.target),
        "left": _ref(doc, "ddf_morphisms", u.left),
        "right": _ref(doc, "ddf_morphisms", u.right),
        "mediating": _functor_table(u.mediating),
    }


def to_data(doc: Document) -> dict:
    emitters: dict[str, Callable[[Any], Any]] = {
        "sets": lambda s: list(s),
        "functions": lambda f: {
            "dom": _ref(doc, "sets", f.dom),
            "cod": _ref(doc, "sets", f.cod),
            "map": _table(f),
        },
        "categories": _emit_category,
        "double_categories": lambda x: _emit_double(doc, x),
        "lax_functors": lambda x: _emit_lax(doc, x),
        "transformations": lambda x: _emit_transformation(doc, x),
        "ddfs": lambda x: _emit_ddf(doc, x),
        "ddf_morphisms": lambda x: _emit_ddf_morphism(doc, x),
        "modules": lambda x: _emit_module(doc, x),
        "multimodulations": lambda x: _emit_multimodulation(doc, x),
        "profunctors": lambda x: _emit_profunctor(doc, x),
        "multicells": lambda x: _emit_multicell(doc, x),
    }
    out = {}
    for s in SECTIONS:
        entries = doc.section(s)
        if entries:
            out[s] = {name: emitters[s](obj) for name, obj in entries.items()}
    return out


def emit(doc: Document) -> str:
    """Canonical text of ``doc``."""
    return json.dumps(to_data(doc), indent=2, ensure_ascii=False) + "\n"


# parsing -------------------------------------------------------------------


class _Parser:
    def __init__(self, data: Any):
        self.data = data
        self.doc = Document()

    # helpers

    @staticmethod
    def obj(x: Any, loc: str) -> dict:
        if not isinstance(x, dict):
            raise ParseError(loc, "expected an object")
        return x

    @staticmethod
    def arr(x: Any, loc: str) -> list:
        if not isinstance(x, list):
            raise ParseError(loc, "expected a list")
        return x

    @staticmethod
    def string(x: Any, loc: str) -> str:
        if not isinstance(x, str):
            raise ParseError(loc, "expected a string")
        return x

    def field(self, rec: dict, key: str, loc: str) -> Any:
        if key not in rec:
            raise ParseError(loc, f"missing field {key!r}")
        return rec[key]

    def strmap(self, x: Any, loc: str) -> dict[str, str]:
        d = self.obj(x, loc)
        for k, v in d.items():
            self.string(v, f"{loc}.{k}")
        return d

    def ref(self, section: str, rec: dict, key: str, loc: str, kind: str) -> Any:
        name = self.string(self.field(rec, key, loc), f"{loc}.{key}")
        entries = self.doc.section(section)
        if name not in entries:
            raise UnresolvedName(f"{loc}.{key}", kind, name)
        return entries[name]

    def functor(self, rec: dict, key: str, loc: str, src: FinCategory, tgt: FinCategory) -> FinFunctor:
        t = self.obj(self.field(rec, key, loc), f"{loc}.{key}")
        obs = self.strmap(self.field(t, "objects", f"{loc}.{key}"), f"{loc}.{key}.objects")
        mors = self.strmap(self.field(t, "morphisms", f"{loc}.{key}"), f"{loc}.{key}.morphisms")
        return FinFunctor.from_maps(src, tgt, obs, mors)

    def rows(self, x: Any, loc: str, width: int) -> list[list[str]]:
        out = []
        for i, r in enumerate(self.arr(x, loc)):
            self.arr(r, f"{loc}[{i}]")
            if len(r) != width:
                raise ParseError(f"{loc}[{i}]", f"expected {width} entries")
            for j, v in enumerate(r):
                self.string(v, f"{loc}[{i}][{j}]")
            out.append(r)
        return out

    # sections

    def run(self) -> Document:
        top = self.obj(self.data, "$")
        for key in top:
            if key not in SECTIONS:
                raise ParseError(f"$.{key}", "unknown section")
        for s in SECTIONS:
            entries = self.obj(top.get(s, {}), f"$.{s}")
            build = getattr(self, f"build_{s}")
            for name, rec in entries.items():
                loc = f"$.{s}.{name}"
                try:
                    self.doc.section(s)[name] = build(rec, loc)
                except ParseError:
                    raise
                except (DDFError, ValueError, KeyError) as exc:
                    raise ParseError(loc, str(exc) or type(exc).__name__) from exc
        return self.doc

    def build_sets(self, rec: Any, loc: str) -> FinSet:
        items = self.arr(rec, loc)
        for i, x in enumerate(items):
            self.string(x, f"{loc}[{i}]")
        return FinSet(tuple(items))

    def build_functions(self, rec: Any, loc: str) -> FinFn:
        rec = self.obj(rec, loc)
        dom = self.ref("sets", rec, "dom", loc, "set")
        cod = self.ref("sets", rec, "cod", loc, "set")
        return FinFn.from_map(dom, cod, self.strmap(self.field(rec, "map", loc), f"{loc}.map"))

    def build_categories(self, rec: Any, loc: str) -> FinCategory:
        rec = self.obj(rec, loc)
        objs = self.build_sets(self.field(rec, "objects", loc), f"{loc}.objects")
        typing = self.obj(self.field(rec, "morphisms", loc), f"{loc}.morphisms")
        for k, v in typing.items():
            if len(self.arr(v, f"{loc}.morphisms.{k}")) != 2:
                raise ParseError(f"{loc}.morphisms.{k}", "expected [dom, cod]")
        ms = FinSet(tuple(typing))
        idents = self.strmap(self.field(rec, "identities", loc), f"{loc}.identities")
        comp = {(g, f): h for g, f, h in self.rows(self.field(rec, "composition", loc), f"{loc}.composition", 3)}
        return FinCategory(
            objs,
            ms,
            FinFn(ms, objs, tuple(typing[f][0] for f in ms)),
            FinFn(ms, objs, tuple(typing[f][1] for f in ms)),
            FinFn.from_map(objs, ms, idents),
            FrozenMap(comp),
        )

    def build_double_categories(self, rec: Any, loc: str) -> DoubleCategory:
        rec = self.obj(rec, loc)
        d0 = self.ref("categories", rec, "d0", loc, "category")
        d1 = self.ref("categories", rec, "d1", loc, "category")
        src = self.functor(rec, "src", loc, d1, d0)
        tgt = self.functor(rec, "tgt", loc, d1, d0)
        unit = self.functor(rec, "unit", loc, d0, d1)
        ext = self.obj(self.field(rec, "ext", loc), f"{loc}.ext")
        pros = {
            (m, n): p for m, n, p in self.rows(self.field(ext, "proarrows", f"{loc}.ext"), f"{loc}.ext.proarrows", 3)
        }
        cells = {(a, b): c for a, b, c in self.rows(self.field(ext, "cells", f"{loc}.ext"), f"{loc}.ext.cells", 3)}
        return DoubleCategory.build(d0, d1, src, tgt, unit, pros, cells)

    def nested(self, rec: dict, key: str, loc: str) -> dict[str, dict[str, str]]:
        d = self.obj(self.field(rec, key, loc), f"{loc}.{key}")
        return {k: self.strmap(v, f"{loc}.{key}.{k}") for k, v in d.items()}

    def spans(self, rec: dict, key: str, loc: str) -> dict[str, dict[str, tuple[str, str]]]:
        d = self.obj(self.field(rec, key, loc), f"{loc}.{key}")
        out = {}
        for m, table in d.items():
            table = self.obj(table, f"{loc}.{key}.{m}")
            out[m] = {}
            for s, feet in table.items():
                feet = self.arr(feet, f"{loc}.{key}.{m}.{s}")
                if len(feet) != 2:
                    raise ParseError(f"{loc}.{key}.{m}.{s}", "expected [left, right]")
                out[m][s] = (feet[0], feet[1])
        return out

    def grouped(self, rec: dict, key: str, loc: str) -> dict[tuple[str, str], dict[tuple[str, str], str]]:
        out: dict[tuple[str, str], dict[tuple[str, str], str]] = {}
        for m, n, s, t, r in self.rows(self.field(rec, key, loc), f"{loc}.{key}", 5):
            out.setdefault((m, n), {})[(s, t)] = r
        return out

    def build_lax_functors(self, rec: Any, loc: str) -> LaxSpanFunctor:
        rec = self.obj(rec, loc)
        b = self.ref("double_categories", rec, "base", loc, "double category")
        objs = self.obj(self.field(rec, "objects", loc), f"{loc}.objects")
        objects = {a: self.build_sets(v, f"{loc}.objects.{a}").elements for a, v in objs.items()}
        comp = self.grouped(rec, "composition", loc)
        for mn in b.paths(2):
            comp.setdefault(mn, {})
        return LaxSpanFunctor.build(
            b,
            objects,
            self.nested(rec, "arrows", loc),
            self.spans(rec, "proarrows", loc),
            self.nested(rec, "cells", loc),
            self.nested(rec, "unit", loc),
            comp,
        )

    def build_transformations(self, rec: Any, loc: str) -> LaxTransformation:
        rec = self.obj(rec, loc)
        f = self.ref("lax_functors", rec, "src", loc, "lax functor")
        g = self.ref("lax_functors", rec, "tgt", loc, "lax functor")
        return LaxTransformation.build(f, g, self.nested(rec, "objects", loc), self.nested(rec, "proarrows", loc))

    def build_ddfs(self, rec: Any, loc: str) -> DDFCandidate:
        rec = self.obj(rec, loc)
        e = self.ref("double_categories", rec, "total", loc, "double category")
        b = self.ref("double_categories", rec, "base", loc, "double category")
        f0 = self.functor(rec, "f0", loc, e.d0, b.d0)
        f1 = self.functor(rec, "f1", loc, e.d1, b.d1)
        return DDFCandidate(e, b, DoubleFunctor(e, b, f0, f1))

    def build_ddf_morphisms(self, rec: Any, loc: str) -> DDFMorphism:
        rec = self.obj(rec, loc)
        p = self.ref("ddfs", rec, "src", loc, "ddf")
        q = self.ref("ddfs", rec, "tgt", loc, "ddf")
        f0 = self.functor(rec, "f0", loc, p.total.d0, q.total.d0)
        f1 = self.functor(rec, "f1", loc, p.total.d1, q.total.d1)
        return DDFMorphism(p, q, DoubleFunctor(p.total, q.total, f0, f1))

    def build_modules(self, rec: Any, loc: str) -> Module:
        rec = self.obj(rec, loc)
        f = self.ref("lax_functors", rec, "src", loc, "lax functor")
        g = self.ref("lax_functors", rec, "tgt", loc, "lax functor")
        left, right = self.grouped(rec, "left", loc), self.grouped(rec, "right", loc)
        for mn in f.base.paths(2):
            left.setdefault(mn, {})
            right.setdefault(mn, {})
        return Module.build(f, g, self.spans(rec, "proarrows", loc), self.nested(rec, "cells", loc), left, right)

    def build_multimodulations(self, rec: Any, loc: str) -> Multimodulation:
        rec = self.obj(rec, loc)
        sources = self._ref_list(rec, "sources", loc, "modules", "module")
        target = self.ref("modules", rec, "target", loc, "module")
        left = self.ref("transformations", rec, "left", loc, "transformation")
        right = self.ref("transformations", rec, "right", loc, "transformation")
        tables: dict[Any, Mapping[str, str]] = {}
        for i, c in enumerate(self.arr(self.field(rec, "components", loc), f"{loc}.components")):
            cl = f"{loc}.components[{i}]"
            c = self.obj(c, cl)
            key: Any
            if "object" in c:
                key = self.string(c["object"], f"{cl}.object")
            else:
                path = self.arr(self.field(c, "path", cl), f"{cl}.path")
                key = tuple(self.string(x, f"{cl}.path") for x in path)
            tables[key] = self.strmap(self.field(c, "map", cl), f"{cl}.map")
        return multimodulation_from_tables(sources, target, left, right, tables)

    def _ref_list(self, rec: dict, key: str, loc: str, section: str, kind: str) -> list:
        out = []
        entries = self.doc.section(section)
        for i, name in enumerate(self.arr(self.field(rec, key, loc), f"{loc}.{key}")):
            self.string(name, f"{loc}.{key}[{i}]")
            if name not in entries:
                raise UnresolvedName(f"{loc}.{key}[{i}]", kind, name)
            out.append(entries[name])
        return out

    def build_profunctors(self, rec: Any, loc: str) -> InternalProfunctor:
        rec = self.obj(rec, loc)
        p = self.ref("ddfs", rec, "src", loc, "ddf")
        q = self.ref("ddfs", rec, "tgt", loc, "ddf")
        c = self.ref("categories", rec, "carrier", loc, "category")
        proj = self.functor(rec, "proj", loc, c, p.base.d1)
        leg0 = self.functor(rec, "leg0", loc, c, p.total.d0)
        leg1 = self.functor(rec, "leg1", loc, c, q.total.d0)
        left = self.functor(rec, "left", loc, pullback_category(p.total.tgt, leg0)[0], c)
        right = self.functor(rec, "right", loc, pullback_category(leg1, q.total.src)[0], c)
        return InternalProfunctor(p, q, c, proj, leg0, leg1, left, right)

    def build_multicells(self, rec: Any, loc: str) -> ProfMulticell:
        rec = self.obj(rec, loc)
        sources = self._ref_list(rec, "sources", loc, "profunctors", "profunctor")
        target = self.ref("profunctors", rec, "target", loc, "profunctor")
        left = self.ref("ddf_morphisms", rec, "left", loc, "ddf morphism")
        right = self.ref("ddf_morphisms", rec, "right", loc, "ddf morphism")
        shell = ProfMulticell(tuple(sources), target, left, right, None)
        med = self.functor(rec, "mediating", loc, shell.domain(), target.carrier)
        return ProfMulticell(tuple(sources), target, left, right, med)


def parse(text: str) -> Document:
    """Parse a document; raises :class:`ParseError` (or :class:`UnresolvedName`) with a location."""
    try:
        data = json.loads(text) if text.strip() else {}
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno} column {exc.colno}", exc.msg) from None
    return _Parser(data).run()


def canonical(text: str) -> str:
    return emit(parse(text))
