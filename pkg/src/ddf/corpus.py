"""Small example families: categories, bases and, for each base, a coherent set of instances.

Every instance produced here validates.  :func:`build_corpus` returns the
lax side (functors, transformations, modules, multimodulations) together
with its image under the elements construction, so the equivalence checks
have matching inputs on both sides.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .cat_core import FinCategory, FinFunctor, category, identity_functor, terminal_category
from .double_cat import (
    DoubleCategory,
    DoubleFunctor,
    horizontal_double,
    square_double,
    terminal_double,
    vertical_double,
    walking_proarrow,
)
from .elements import DDFCandidate, DDFMorphism, el_functor, el_transformation
from .equivalence import el_module, el_multimodulation
from .finset import FinFn
from .lax_modules import (
    Module,
    Multimodulation,
    companion,
    companion_unit,
    compose_multimodulations,
    conjoint,
    identity_multimodulation,
    laxity_cell,
    left_action_cell,
    right_action_cell,
    unit_laxity_cell,
    unit_module,
)
from .lax_span import (
    LaxSpanFunctor,
    LaxTransformation,
    compose_transformations,
    coproduct,
    coproduct_injection,
    from_category,
    identity_transformation,
    over_category,
    representable,
    terminal_lax_functor,
    to_terminal_transformation,
)
from .prof_dfib import InternalProfunctor, ProfMulticell, ext_multicell, unit_multicell, unit_profunctor

# categories ----------------------------------------------------------------


def arrow_category() -> FinCategory:
    """``X → Y``."""
    return category(["X", "Y"], {"f": ("X", "Y")})


def parallel_pair() -> FinCategory:
    """Two parallel arrows ``f, g: X → Y``; four morphisms in all."""
    return category(["X", "Y"], {"f": ("X", "Y"), "g": ("X", "Y")})


def chain3() -> FinCategory:
    """``X → Y → Z`` with the composite."""
    return category(
        ["X", "Y", "Z"],
        {"f": ("X", "Y"), "g": ("Y", "Z"), "gf": ("X", "Z")},
        {("g", "f"): "gf"},
    )


def cyclic_monoid(n: int) -> FinCategory:
    """The cyclic group of order ``n`` as a one-object category; ``a^i`` is named ``a{i}``."""
    names = ["e"] + [f"a{i}" for i in range(1, n)]
    arrows = {x: ("*", "*") for x in names[1:]}
    comp = {}
    for i in range(1, n):
        for j in range(1, n):
            comp[(names[i], names[j])] = names[(i + j) % n]
    return category(["*"], arrows, comp, identities={"*": "e"})


def idempotent_monoid() -> FinCategory:
    """``{e, p}`` with ``p∘p = p``."""
    return category(["*"], {"p": ("*", "*")}, {("p", "p"): "p"}, identities={"*": "e"})


def random_poset(rng: random.Random, n: int, levels: dict[str, int] | None = None) -> FinCategory:
    """A random finite poset on ``n`` points as a category.

    When ``levels`` is given, only pairs with non-decreasing level are related,
    so the level map is monotone.
    """
    pts = [f"p{i}" for i in range(n)]
    rel = {(a, a) for a in pts}
    for i, a in enumerate(pts):
        for b in pts[i + 1 :]:
            if levels is not None and levels[a] > levels[b]:
                continue
            if rng.random() < 0.5:
                rel.add((a, b))
    changed = True
    while changed:
        changed = False
        for a, b in list(rel):
            for c, d in list(rel):
                if b == c and (a, d) not in rel:
                    rel.add((a, d))
                    changed = True
    name = {(a, b): f"{a}<{b}" for a, b in rel if a != b}
    arrows = {name[(a, b)]: (a, b) for a in pts for b in pts if (a, b) in name}
    comp = {}
    for (a, b), f in name.items():
        for (c, d), g in name.items():
            if b == c:
                comp[(g, f)] = name[(a, d)]
    return category(pts, arrows, comp, identities={a: f"1_{a}" for a in pts})


def random_over_arrow(rng: random.Random, n: int) -> FinFunctor:
    """A random poset over ``X → Y`` via a monotone level map."""
    c = arrow_category()
    levels = {f"p{i}": rng.randint(0, 1) for i in range(n)}
    d = random_poset(rng, n, levels)
    obj = {x: ("X", "Y")[levels[x]] for x in d.objects}
    mor = {}
    for f in d.morphisms:
        a, b = obj[d.dom(f)], obj[d.cod(f)]
        mor[f] = c.ident(a) if a == b else "f"
    return FinFunctor.from_maps(d, c, obj, mor)


def inclusion_of_source() -> FinFunctor:
    """The object ``X`` of ``X → Y`` as a functor from the terminal category."""
    t, c = terminal_category(), arrow_category()
    return FinFunctor.from_maps(t, c, {"*": "X"}, {"1_*": "1_X"})


def vertical_functor(p: FinFunctor) -> DDFCandidate:
    """``p: D → C`` as a double functor between vertical double categories."""
    vd, vc = vertical_double(p.src), vertical_double(p.tgt)
    f0 = FinFunctor(
        vd.d0,
        vc.d0,
        p.on_objects,
        FinFn(vd.arrows, vc.arrows, tuple(vc.d0.ident(p.ob(vd.d0.dom(a))) for a in vd.arrows)),
    )
    f1 = FinFunctor(
        vd.d1,
        vc.d1,
        p.on_morphisms,
        FinFn(vd.cells, vc.cells, tuple(vc.d1.ident(p.mor(vd.d1.dom(c))) for c in vd.cells)),
    )
    return DDFCandidate(vd, vc, DoubleFunctor(vd, vc, f0, f1))


CATEGORIES = {
    "point": terminal_category,
    "arrow": arrow_category,
    "pair": parallel_pair,
    "chain3": chain3,
    "z2": lambda: cyclic_monoid(2),
    "z3": lambda: cyclic_monoid(3),
    "idem": idempotent_monoid,
}

BASES = {
    "terminal": terminal_double,
    "vertical": lambda: vertical_double(arrow_category()),
    "vertical_pair": lambda: vertical_double(parallel_pair()),
    "walking": walking_proarrow,
    "representable": lambda: square_double(arrow_category()),
    "horizontal": lambda: horizontal_double(arrow_category()),
}


# corpora -------------------------------------------------------------------


@dataclass
class Corpus:
    """Named instances over one base, in dependency order."""

    base_name: str
    base: DoubleCategory
    categories: dict[str, FinCategory] = field(default_factory=dict)
    functors: dict[str, LaxSpanFunctor] = field(default_factory=dict)
    transformations: dict[str, LaxTransformation] = field(default_factory=dict)
    ddfs: dict[str, DDFCandidate] = field(default_factory=dict)
    ddf_morphisms: dict[str, DDFMorphism] = field(default_factory=dict)
    modules: dict[str, Module] = field(default_factory=dict)
    multimodulations: dict[str, Multimodulation] = field(default_factory=dict)
    profunctors: dict[str, InternalProfunctor] = field(default_factory=dict)
    multicells: dict[str, ProfMulticell] = field(default_factory=dict)


def build_corpus(base_name: str, seed: int | None = None) -> Corpus:
    """The standard instances over ``BASES[base_name]``.

    ``seed`` adds one randomly generated functor (a random poset, over the
    arrow category for the vertical base) drawn deterministically from it.
    """
    b = BASES[base_name]()
    cp = Corpus(base_name, b)
    fs = cp.functors
    fs["T"] = terminal_lax_functor(b)
    for x in b.objects:
        fs[f"Y_{x}"] = representable(b, x)
    first, last = f"Y_{b.objects[0]}", f"Y_{b.objects[-1]}"
    fs["S"] = coproduct(fs[first], fs[last])
    if base_name == "terminal":
        for name in ("arrow", "z2", "chain3"):
            fs[f"Cat_{name}"] = from_category(CATEGORIES[name]())
    if base_name == "vertical":
        fs["Over_id"] = over_category(identity_functor(arrow_category()))
        fs["Over_X"] = over_category(inclusion_of_source())
    if seed is not None:
        rng = random.Random(seed)
        if base_name == "terminal":
            fs["Random"] = from_category(random_poset(rng, 3))
        elif base_name == "vertical":
            fs["Random"] = over_category(random_over_arrow(rng, 3))
    ts = cp.transformations
    ts["id_S"] = identity_transformation(fs["S"])
    ts["inl"] = coproduct_injection(fs[first], fs[last], 0)
    ts["inr"] = coproduct_injection(fs[first], fs[last], 1)
    ts["bang_S"] = to_terminal_transformation(fs["S"])
    ts["bang_inl"] = compose_transformations(ts["bang_S"], ts["inl"])
    ms = cp.modules
    ms["U_S"] = unit_module(fs["S"])
    ms["U_T"] = unit_module(fs["T"])
    ms["Comp_inl"] = companion(ts["inl"])
    ms["Conj_inl"] = conjoint(ts["inl"])
    ms["Comp_bang"] = companion(ts["bang_S"])
    mm = cp.multimodulations
    mm["id_Comp"] = identity_multimodulation(ms["Comp_inl"])
    mm["lambda_Comp"] = left_action_cell(ms["Comp_inl"])
    mm["rho_Conj"] = right_action_cell(ms["Conj_inl"])
    mm["phi_S"] = laxity_cell(fs["S"])
    mm["unit_S"] = unit_laxity_cell(fs["S"])
    mm["unit_Comp"] = companion_unit(ts["inl"])
    mm["phi3_S"] = compose_multimodulations(mm["phi_S"], [mm["phi_S"], identity_multimodulation(ms["U_S"])])
    for name, f in fs.items():
        cp.ddfs[f"El_{name}"] = el_functor(f)
    for name, t in ts.items():
        cp.ddf_morphisms[f"El_{name}"] = el_transformation(t)
    for name, m in ms.items():
        cp.profunctors[f"El_{name}"] = el_module(m)
    cp.profunctors["Unit_El_S"] = unit_profunctor(cp.ddfs["El_S"])
    for name, mu in mm.items():
        cp.multicells[f"El_{name}"] = el_multimodulation(mu)
    cp.multicells["Ext_El_S"] = ext_multicell(cp.ddfs["El_S"])
    cp.multicells["Unit_El_S"] = unit_multicell(cp.ddfs["El_S"])
    return cp
