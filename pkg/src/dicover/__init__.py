"""Covering-space computations for precubical sets.

Precubical sets and their face maps, integer cellular homology in low
degrees, directed edge-paths and cellular approximation, and finite
windows of the universal cover on which the lifted order can be checked
for antisymmetry.
"""

from .covering import (
    UNKNOWN,
    CoverBall,
    PathClass,
    SquareRelation,
    build_cover_ball,
    check_antisymmetry,
    lift_path,
    normalize,
    square_relations,
)
from .dipaths import (
    EdgePath,
    PLDipath,
    Segment,
    VertexPreorder,
    cellular_approximate,
    corner_chain,
    cycle_chain,
    degree,
    has_directed_cycle,
    is_essential,
    reachability,
)
from .errors import (
    CertificateError,
    DicoverError,
    DomainError,
    OutOfWindowError,
    ParseError,
    PreconditionError,
    SearchLimitError,
    StructureError,
    UncertifiedError,
    ValidationError,
)
from .formats import parse, serialize
from .generators import generate
from .homology import (
    Chain,
    HomologyResult,
    boundary1,
    boundary2,
    face_degree,
    homology,
    is_nullhomologous,
    nonnegative_cycle_audit,
)
from .precubical import (
    CubeId,
    PrecubicalSet,
    RealizationPoint,
    SubPrecubicalSet,
    corner,
    generated,
    skeleton,
    standard_cube,
    support,
    validate,
)

__all__ = [
    "CertificateError",
    "Chain",
    "CoverBall",
    "CubeId",
    "DicoverError",
    "DomainError",
    "EdgePath",
    "HomologyResult",
    "OutOfWindowError",
    "PLDipath",
    "ParseError",
    "PathClass",
    "PreconditionError",
    "PrecubicalSet",
    "RealizationPoint",
    "SearchLimitError",
    "Segment",
    "SquareRelation",
    "StructureError",
    "SubPrecubicalSet",
    "UNKNOWN",
    "UncertifiedError",
    "ValidationError",
    "VertexPreorder",
    "boundary1",
    "boundary2",
    "build_cover_ball",
    "cellular_approximate",
    "check_antisymmetry",
    "corner",
    "corner_chain",
    "cycle_chain",
    "degree",
    "face_degree",
    "generate",
    "generated",
    "has_directed_cycle",
    "homology",
    "is_essential",
    "is_nullhomologous",
    "lift_path",
    "nonnegative_cycle_audit",
    "normalize",
    "parse",
    "reachability",
    "serialize",
    "skeleton",
    "square_relations",
    "standard_cube",
    "support",
    "validate",
    "__version__",
]

__version__ = "0.1.0"
