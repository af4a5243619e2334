"""The three logarithmic F-norms on step functions.

external:            integral of log(1 + |f|) d(mu)
internal with h:     integral of log(1 + h|f|) d(mu)
generalized h1, h2:  integral of h1 log(1 + h2|f|) d(mu)

Step functions keep the integrand piecewise constant, so norms come out in
closed form; a midpoint Riemann sum provides the independent check.
"""

import math

from logspaces import (
    EXTERNAL,
    Component,
    Generalized,
    Internal,
    MeasureSpace,
    StepFunction,
    add,
    density,
    distance,
    interval_space,
    is_member,
    log_norm,
    riemann_oracle,
    scale,
    uniform_density,
)

unit = interval_space(0, 1)

# A function worth remembering: log(1 + (e-1)) = 1.
f = StepFunction.from_pieces(unit, [(0, 0.0, 1.0, math.e - 1)])
print("||(e-1) 1_[0,1)|| =", log_norm(f, unit).value)

# Two steps: 0.5 log 4 + 0.5 log 2 = 1.5 log 2.
steps = StepFunction.from_pieces(unit, [(0, 0.0, 0.5, 3), (0, 0.5, 1.0, 1)])
print("two-step norm      =", log_norm(steps, unit).value)
print("1.5 log 2          =", 1.5 * math.log(2))
print("midpoint oracle    =", riemann_oracle(steps, unit, EXTERNAL, 10**5))

# The norm only sees |f|; complex coefficients are welcome.
rotated = scale(steps, complex(0, 1))
print("norm of i*f        =", log_norm(rotated, unit).value)

# Internal norms fold a density into the argument of the logarithm.
h = uniform_density(unit, 2.0)
g = StepFunction.from_pieces(unit, [(0, 0.0, 1.0, (math.e - 1) / 2)])
print("internal, h=2      =", log_norm(g, unit, Internal(h)).value)

# Generalized norms weight the integral and the argument independently.
kind = Generalized(uniform_density(unit, 2.0), uniform_density(unit, 0.5))
two = StepFunction.from_pieces(unit, [(0, 0.0, 1.0, 2)])
print("generalized        =", log_norm(two, unit, kind).value, "= 2 log 2 =", 2 * math.log(2))

# Membership is finiteness of the norm.  A constant on an infinite carrier
# has infinite norm; compact support keeps it finite.
halfline = MeasureSpace((Component(density([(0.0, math.inf, 1.0)])),))
const = StepFunction.from_pieces(halfline, [(0, 0.0, math.inf, 1)])
bump = StepFunction.from_pieces(halfline, [(0, 0.0, 2.0, 7)])
print("constant on [0,inf) member?", is_member(const, halfline))
print("bump on [0,inf) member?    ", is_member(bump, halfline))

# The norm induces a metric: d(f, g) = ||f - g||.
p = StepFunction.from_pieces(unit, [(0, 0.0, 0.5, 3)])
q = StepFunction.from_pieces(unit, [(0, 0.0, 0.5, 1)])
print("d(3,1 on half)     =", distance(p, q, unit).value, "= 0.5 log 3 =", 0.5 * math.log(3))

# Subadditivity in action.
print(
    "triangle:",
    log_norm(add(p, q), unit).value,
    "<=",
    log_norm(p, unit).value + log_norm(q, unit).value,
)
