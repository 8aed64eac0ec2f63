"""Planar-arm kinematics: reach, configuration-space topology and paired IK."""

from .core import (
    ArmSpec,
    Configuration,
    EndEffectorTarget,
    SortedArm,
    base_length,
    canonical_angle,
    config_distance,
    forward_kinematics,
    invert_permutation,
    lift_rotation,
    normalize_arm,
    permute_configuration,
)
from .design import IKPair, SolveResult, SweepRow, design_pair, solve, solve_restricted, sweep
from .engine import (
    ChordMap,
    MapKind,
    SignPlan,
    TriangleAngles,
    chord_chain,
    evaluate_ik,
    interval_sign,
    triangle_angles,
)
from .reach import ReachInterval, reach_closed, reach_recursive
from .topology import (
    Connectivity,
    PathClass,
    StateBlock,
    TransitionMark,
    Variant,
    classify_connectivity,
    path_class,
    state_block,
    transition_values,
    vital_critical_values,
)
from .verify import (
    ComponentCertificate,
    ContinuityReport,
    brute_force_components,
    component_certificate,
    continuity_report,
)

__all__ = [
    "ArmSpec",
    "ChordMap",
    "ComponentCertificate",
    "Configuration",
    "Connectivity",
    "ContinuityReport",
    "EndEffectorTarget",
    "IKPair",
    "MapKind",
    "PathClass",
    "ReachInterval",
    "SignPlan",
    "SolveResult",
    "SortedArm",
    "StateBlock",
    "SweepRow",
    "TransitionMark",
    "TriangleAngles",
    "Variant",
    "base_length",
    "brute_force_components",
    "canonical_angle",
    "chord_chain",
    "classify_connectivity",
    "component_certificate",
    "config_distance",
    "continuity_report",
    "design_pair",
    "evaluate_ik",
    "forward_kinematics",
    "interval_sign",
    "invert_permutation",
    "lift_rotation",
    "normalize_arm",
    "path_class",
    "permute_configuration",
    "reach_closed",
    "reach_recursive",
    "solve",
    "solve_restricted",
    "state_block",
    "sweep",
    "transition_values",
    "triangle_angles",
    "vital_critical_values",
]
