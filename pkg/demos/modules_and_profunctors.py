"""Modules between lax functors become profunctors between their elements.

Over the walking proarrow A -> B, take the coproduct S of the two
representables and its first injection.  The companion of the injection is
a module; its elements form an internal profunctor.  Multimodulations such
as the laxity of S become multicells, and the fibers bring everything back.
"""

from __future__ import annotations

from ddf.corpus import build_corpus
from ddf.equivalence import (
    el_module,
    el_multimodulation,
    f_of_multicell,
    f_of_profunctor,
    verify_equivalence,
    verify_module,
    verify_multimodulation,
)
from ddf.lax_modules import check_module, check_multimodulation
from ddf.prof_dfib import check_internal_profunctor, check_prof_multicell

cp = build_corpus("walking")
b = cp.base
mod = cp.modules["Comp_inl"]
print("companion vertices:", {m: mod.vertex(m).elements for m in b.proarrows})
print(check_module(mod).summary())

m = el_module(mod)
print("profunctor carrier:", m.carrier.objects.elements)
print(check_internal_profunctor(m).summary())
back = f_of_profunctor(m)
print("fibers:", {x: back.vertex(x).elements for x in b.proarrows})
print(verify_module(mod).summary())

for name in ("phi_S", "unit_S", "phi3_S"):
    mu = cp.multimodulations[name]
    cell = el_multimodulation(mu)
    print(f"{name}: arity {mu.arity}")
    print("  ", check_multimodulation(mu).summary())
    print("  ", check_prof_multicell(cell).summary())
    print("   back to a multimodulation of arity", f_of_multicell(cell).arity)
    print("  ", verify_multimodulation(mu).summary())

print(verify_equivalence(cp).summary().splitlines()[0])
