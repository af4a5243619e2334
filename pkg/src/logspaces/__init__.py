"""Log-integrable function spaces over interval measure spaces.

The package realizes measured Boolean algebras as disjoint unions of real
intervals with piecewise-constant densities, computes the external, internal
and generalized log-norms of complex step functions exactly, classifies
spaces by their three-row passports, and constructs and verifies the
measure-transport and weighting isometries between them.
"""

from .errors import LogSpaceError, WorkspaceError
from .extreal import INF, ExtendedReal, ext_sum, finite
from .measure import (
    Component,
    IntervalPiece,
    MeasurableSet,
    MeasureSpace,
    PiecewiseDensity,
    SpaceDensity,
    WeightLabel,
    constant_density,
    density,
    integrate_piecewise,
    interval_space,
    measure,
    refine,
    reweight,
    rn_derivative,
    space,
    total_measure,
    uniform_density,
)
from .passports import (
    ClosedForm,
    Decision,
    FiniteList,
    MeasureSeq,
    Passport,
    build_passport,
    decide_isometric_external,
    decide_isometric_generalized,
    decide_isomorphic_pair,
    decide_star_isomorphic,
    ratio_bounded,
    render_passport,
)
from .stepfunctions import (
    EXTERNAL,
    External,
    Generalized,
    Internal,
    NormKind,
    StepFunction,
    StepPiece,
    add,
    distance,
    is_member,
    log_norm,
    multiply,
    riemann_oracle,
    scale,
)
from .transport import (
    AffinePiece,
    ComponentTransport,
    IsometryReport,
    TransportMap,
    glue_transports,
    lift,
    monotone_transport,
    render_transport,
    transport_between_spaces,
    transport_set,
    verify_isometry,
    weighting_isometry,
)
from .workspace import Workspace, emit_workspace, load_workspace, parse_workspace

__version__ = "0.1.0"
