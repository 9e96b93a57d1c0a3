"""A small category is a lax functor from the point into spans.

Encode the arrow category X -> Y, look at the span it assigns to the unit
proarrow, build its double category of elements, then recover the functor
from the fibers.  Finally break associativity and watch the checker name it.
"""

from __future__ import annotations

from dataclasses import replace

from ddf.corpus import arrow_category, cyclic_monoid
from ddf.elements import el_functor, is_ddf
from ddf.equivalence import verify_functor
from ddf.fiber_inverse import f_of_ddf
from ddf.finset import FinFn, FrozenMap
from ddf.lax_span import check_lax_functor, from_category, to_category

c = arrow_category()
f = from_category(c)
print("objects over the point:", f.obj("*").elements)
span = f.span("1_*")
print("unit span vertex:", span.vertex.elements)
print("  legs:", {s: (span.leg0(s), span.leg1(s)) for s in span.vertex})
print("lax functor check:", check_lax_functor(f).summary())

p = el_functor(f)
print("elements:", p.total.objects.elements, p.total.proarrows.elements)
print("is a discrete double fibration:", is_ddf(p).ok)
g = f_of_ddf(p)
print("fibers over the point:", g.obj("*").elements)
print("decodes to the original category:", to_category(f) == c)
print(verify_functor(f).summary())

# in Z/3, declare a1 * a2 = a1 instead of e
z = from_category(cyclic_monoid(3))
phi = z.phi("1_*", "1_*")
bad_phi = FinFn.from_map(phi.dom, phi.cod, {**phi.as_dict(), "(a1,a2)": "a1"})
bad = replace(z, comp_lax=FrozenMap({("1_*", "1_*"): bad_phi}))
rep = check_lax_functor(bad)
print("broken Z/3:", sorted(rep.axioms()))
print("first witness:", rep.violations[0].witness)
