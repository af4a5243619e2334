"""Measure spaces from interval components.

A space is a disjoint union of interval carriers, each with a strictly
positive piecewise-constant density.  Every measure and integral below is
computed in closed form, so the identities print exactly.
"""

import math

from logspaces import (
    Component,
    IntervalPiece,
    MeasurableSet,
    MeasureSpace,
    constant_density,
    density,
    integrate_piecewise,
    interval_space,
    measure,
    rn_derivative,
    reweight,
    total_measure,
)

# The unit interval with Lebesgue measure.
unit = interval_space(0, 1)
print("total measure of [0,1):", total_measure(unit).value)

# A set is a finite union of half-open subintervals, tagged by component.
a = MeasurableSet(((0, 0.0, 0.25), (0, 0.5, 0.75)))
print("measure of [0,.25) u [.5,.75):", measure(unit, a).value)

# Densities change the measure without changing the underlying algebra.
weighted = MeasureSpace((Component(density([(0.0, 0.5, 0.5), (0.5, 1.0, 2.0)])),))
print("same set under d(nu) = (0.5, 2) dx:", measure(weighted, a).value)

# The derivative of nu with respect to mu recovers the density ratio, and
# converts integrals: the integral of f d(nu) equals the integral of h f d(mu).
h = rn_derivative(weighted, unit)[0]
print("dnu/dmu pieces:", [(p.start, p.stop, p.value) for p in h.pieces])

indicator = ((IntervalPiece(0.0, 0.5, 1.0), IntervalPiece(0.5, 1.0, 0.0)),)
lhs = integrate_piecewise(weighted, indicator).value
hf = ((IntervalPiece(0.0, 0.5, 0.5), IntervalPiece(0.5, 1.0, 0.0)),)
rhs = integrate_piecewise(unit, hf).value
print("int 1_[0,.5) dnu =", lhs, "= int h 1_[0,.5) dmu =", rhs)

# Unbounded carriers model infinite sigma-finite measures.  Components with a
# positive weight label are symbolic: they join passports but carry no sets.
halfline = Component(density([(0.0, math.inf, 1.0)]))
symbolic = Component(constant_density(0, 3), weight=1)
mixed = MeasureSpace((halfline, symbolic))
print("total measure of [0,inf) + symbolic [0,3):", total_measure(mixed))

# reweight builds the space whose measure is h d(mu); useful everywhere below.
doubled = reweight(unit, (constant_density(0, 1, 2.0),))
print("reweighted total:", total_measure(doubled).value)
