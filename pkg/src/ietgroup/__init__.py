"""Exact computations in the group of interval exchange transformations of [0, 1)."""

from .flows import (
    ConsistentWithRotation,
    FlowSpec,
    Inconclusive,
    NotRotation,
    NotStandard,
    RotationDecomposition,
    decompose_standard,
    flow_at,
    flow_fixed_set,
    restricted_rotation,
    torus_element,
    verify_rotation_family,
)
from .golden import golden_fn, golden_gn
from .growth import CapacityError, GrowthReport, growth
from .iet import (
    IntervalExchange,
    Permutation,
    apply,
    canonicalize,
    compose,
    delta,
    fix_set,
    identity,
    invert,
    omega,
    power,
    rotation,
)
from .metric import StepFunction, distance, koopman_l2_sq, sup_displacement
from .plot import plot_segments
from .scalar import FieldMismatchError, Scalar, ScalarParseError, format_scalar, parse_scalar, sqrt
from .sets import IntervalUnion

__version__ = "0.1.0"
