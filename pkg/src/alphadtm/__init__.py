"""Alpha-parameterized differential transform method with exact rational arithmetic."""
from .bvp import (
    BoundaryCondition,
    BvpSolution,
    LinearOde2,
    UnknownLinearSeq,
    assemble_system,
    error_report,
    propagate_recurrence,
    solve_bvp,
)
from .eig import (
    EigenPair,
    EigProblem,
    Root,
    RootReport,
    characteristic_det,
    characteristic_entries,
    find_real_roots,
    parity_sequences,
    solve_eig,
)
from .errors import (
    ConfigError,
    DegenerateRootError,
    DtmError,
    InsufficientOrderError,
    NotAnEigenvalueError,
    ResonanceError,
    ShapeMismatchError,
    SingularSystemError,
)
from .poly import LambdaPoly
from .transform import (
    UNIT,
    AlphaParam,
    AlphaSeries,
    EndpointJet,
    Interval,
    alpha_combine,
    as_rational,
    boundary_weights,
    constant_jet,
    evaluate,
    evaluate_derivative,
    jet_add,
    jet_differentiate,
    jet_multiply,
    jet_scale,
    monomial_jet,
    polynomial_jet,
    zero_jet,
)

__version__ = "0.1.0"
