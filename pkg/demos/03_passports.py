"""Passports: the three-row matrix that classifies a measured algebra.

Row s lists the weights of infinite-measure homogeneous components, row u the
weights of finite-measure ones, row m their finite measures.  The decision
procedures below reduce isomorphism and isometry questions to row
comparisons, and each Decision names the rule it applied and a witness.
"""

import math

from logspaces import (
    ClosedForm,
    Component,
    FiniteList,
    MeasureSpace,
    Passport,
    build_passport,
    constant_density,
    decide_isometric_external,
    decide_isometric_generalized,
    decide_isomorphic_pair,
    decide_star_isomorphic,
    density,
    ratio_bounded,
    render_passport,
)

halfline = Component(density([(0.0, math.inf, 1.0)]))
finite3 = Component(constant_density(0, 3), weight=1)

space = MeasureSpace((halfline, finite3))
print("passport of [0,inf)_w0 + [0,3)_w1:")
print(render_passport(build_passport(space)))

# Same-weight components merge; measures add.
split = MeasureSpace((Component(constant_density(0, 1)), Component(constant_density(0, 2))))
print("\nmerged passport of two weight-0 components:")
print(render_passport(build_passport(split)))

# Isomorphism of all-infinite algebras is decided on the first rows.
print("\niso-pair:", decide_isomorphic_pair(Passport((0, 2)), Passport((0, 2))))
print("iso-pair:", decide_isomorphic_pair(Passport((0, 1)), Passport((0, 2))))

# Star-isomorphism additionally wants bounded measure ratios both ways.
lin1 = Passport((), None, ClosedForm("LINEAR", (1.0, 0.0)))
lin2 = Passport((), None, ClosedForm("LINEAR", (2.0, 0.0)))
print("\nstar-iso LINEAR vs LINEAR:", decide_star_isomorphic(lin1, lin2).verdict)
const = Passport((), None, ClosedForm("CONST", (1.0,)))
recip = Passport((), None, ClosedForm("RECIP", (1.0,)))
print("star-iso CONST vs RECIP:  ", decide_star_isomorphic(const, recip))
print("ratio_bounded(CONST, RECIP):", ratio_bounded(const.row_m, recip.row_m))
print("ratio_bounded(RECIP, CONST):", ratio_bounded(recip.row_m, const.row_m))

# Isometry of the plain norm spaces needs the whole passport to coincide.
p2 = Passport((), (0,), FiniteList((2.0,)))
p3 = Passport((), (0,), FiniteList((3.0,)))
print("\nisometric, equal totals:  ", decide_isometric_external(p2, p2))
print("isometric, unequal totals:", decide_isometric_external(p2, p3))

# For two generalized norms over one algebra only the third rows matter.
a = Passport((), (0, 1), FiniteList((1.0, 0.5)))
b = Passport((), (0, 1), FiniteList((0.5, 1.0)))
print("\ngen-isometric:", decide_isometric_generalized(a, a).verdict)
print("gen-isometric:", decide_isometric_generalized(a, b))
