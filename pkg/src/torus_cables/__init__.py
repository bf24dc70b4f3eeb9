"""Exact classification data for Legendrian and transverse cables of
positive torus knots, with brute-force oracles for every closed form."""

from .farey import (
    INFINITY,
    ContinuedFraction,
    Slope,
    cf_expand,
    cf_eval,
    farey_combine,
    intersect,
    is_edge,
    mediant,
    neighbors,
    neighbors_oracle,
    normalize,
)
from .bypass import BACK, FRONT, TorusState, attach_bypass, attach_bypass_oracle
from .torus_knots import (
    CensusRecord,
    InfluenceInterval,
    Region,
    ThickeningOutcome,
    TorusKnotSpec,
    exceptional_indices,
    exceptional_slope,
    influence_interval,
    locate,
    nonthickenable_profile,
    thickening_outcome,
    tori_census,
    width,
)
from .legendrian import (
    Branch,
    CableSpec,
    Classification,
    Common,
    Generator,
    MountainRange,
    bennequin_bound,
    cable_rot,
    classes_at,
    classify,
    collapse_coherent,
    count_classes,
    count_three_points,
    destabilizes,
    divide_tb,
    max_tb,
    mountain_range,
    peak_rotations,
    ruling_tb,
    same_class,
    stabilize,
)
from .transverse import (
    QualReport,
    TransverseBranch,
    TransverseClassification,
    classify_transverse,
    count_transverse,
    max_sl,
    pushoff_sl,
    quotient_transverse,
    verify_qualitative,
)

__version__ = "1.0.0"

__all__ = [
    "INFINITY",
    "ContinuedFraction",
    "Slope",
    "cf_expand",
    "cf_eval",
    "farey_combine",
    "intersect",
    "is_edge",
    "mediant",
    "neighbors",
    "neighbors_oracle",
    "normalize",
    "BACK",
    "FRONT",
    "TorusState",
    "attach_bypass",
    "attach_bypass_oracle",
    "CensusRecord",
    "InfluenceInterval",
    "Region",
    "ThickeningOutcome",
    "TorusKnotSpec",
    "exceptional_indices",
    "exceptional_slope",
    "influence_interval",
    "locate",
    "nonthickenable_profile",
    "thickening_outcome",
    "tori_census",
    "width",
    "Branch",
    "CableSpec",
    "Classification",
    "Common",
    "Generator",
    "MountainRange",
    "bennequin_bound",
    "cable_rot",
    "classes_at",
    "classify",
    "collapse_coherent",
    "count_classes",
    "count_three_points",
    "destabilizes",
    "divide_tb",
    "max_tb",
    "mountain_range",
    "peak_rotations",
    "ruling_tb",
    "same_class",
    "stabilize",
    "QualReport",
    "TransverseBranch",
    "TransverseClassification",
    "classify_transverse",
    "count_transverse",
    "max_sl",
    "pushoff_sl",
    "quotient_transverse",
    "verify_qualitative",
]
