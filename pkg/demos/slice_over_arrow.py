"""Functors into a category C are lax functors on the vertical double category of C.

Take the inclusion of X into the arrow category X -> Y, turn it into a lax
functor on the vertical base, and compare its elements with the functor
itself.  Then contrast a functor that is not a discrete fibration: its
transpose is rejected as a discrete double fibration.
"""

from __future__ import annotations

import random

from ddf.cat_core import is_discrete_fibration
from ddf.corpus import inclusion_of_source, random_over_arrow, vertical_functor
from ddf.elements import el_functor, is_ddf, transpose_candidate
from ddf.fiber_inverse import f_of_ddf
from ddf.lax_span import check_lax_functor, over_category

p = inclusion_of_source()
f = over_category(p)
print("base objects:", f.base.objects.elements, "proarrows:", f.base.proarrows.elements)
print({a: f.obj(a).elements for a in f.base.objects})
print({m: f.vertex(m).elements for m in f.base.proarrows})
print(check_lax_functor(f).summary())
print("fibers of the vertical functor equal the encoding:", f_of_ddf(vertical_functor(p)) == f)
e = el_functor(f).total
print("elements:", e.objects.elements, e.proarrows.elements)

rng = random.Random(3)
for _ in range(4):
    q = random_over_arrow(rng, 3)
    fib = is_discrete_fibration(q).ok
    print(
        f"random functor over X -> Y: fibration={fib}, transpose is a DDF={is_ddf(transpose_candidate(vertical_functor(q))).ok}"
    )
