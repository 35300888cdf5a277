"""Newton polygons of Jacobians of cyclic covers of P^1 branched at three points."""

from .arith import (
    FrobeniusOrbit,
    FrobeniusOrbitPartition,
    Residue,
    fractional_part,
    frobenius_orbits,
    is_self_dual,
    multiplicative_order,
    orbit_order,
    subgroup_generated,
)
from .monodromy import (
    InvalidDatumError,
    MonodromyDatum,
    Signature,
    canonical_form,
    cm_factors,
    enumerate_classes,
    genus,
    signature,
    validate,
)
from .polygon import IsoclinicBlock, NewtonPolygon, amalgamate, display, parse, p_rank, is_supersingular
from .shimura import (
    OrbitSlopeReport,
    newton_polygon_at_p,
    newton_polygon_for_class,
    newton_polygon_for_subgroup,
    orbit_slopes,
    supersingular_by_self_duality,
)

__version__ = "0.1.0"
