"""The representable on Y over the double category of commutative squares in X -> Y.

Its elements form the double slice over Y, projected by taking domains.
Collapsing the whole base to a point is a double functor too, but two
different arrows lift the identity of the point, so it is not a discrete
double fibration.
"""

from __future__ import annotations

from ddf.corpus import arrow_category
from ddf.double_cat import square_double, to_terminal
from ddf.elements import DDFCandidate, el_functor, is_ddf, is_ddf_via_transpose
from ddf.lax_span import is_pseudo, representable

b = square_double(arrow_category())
print(
    "base:", len(b.objects), "objects,", len(b.arrows), "arrows,", len(b.proarrows), "proarrows,", len(b.cells), "cells"
)
y = representable(b, "Y")
print("Y(A) for each A:", {a: y.obj(a).elements for a in b.objects})
print("pseudo:", is_pseudo(y))

p = el_functor(y)
print("elements:", p.total.objects.elements)
print("projection on objects:", p.proj.f0.on_objects.as_dict())
print("DDF:", is_ddf(p).ok, "via transpose:", is_ddf_via_transpose(p).ok)

bang = to_terminal(b)
rep = is_ddf(DDFCandidate(b, bang.tgt, bang))
print(rep.summary())
