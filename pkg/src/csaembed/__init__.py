"""Exact numerical criteria for homomorphisms between semi-simple algebras,
orbit counts, and the local-global obstruction for embedding fields into
central simple algebras over global fields."""

__version__ = "0.1.0"

from .algebra import (
    GlobalSourceFactor,
    LocalRing,
    TargetSimple,
    TensorFactorData,
    WedderburnData,
    ell_values,
    field_factor,
    wedderburn_from_global,
)
from .brauer import (
    BaseChangedCSA,
    ExtensionProfile,
    GlobalCSA,
    Place,
    base_change,
    capacity,
    capacity_after_base_change,
    index,
    validate_csa,
    validate_profile,
)
from .charpoly import FactoredPolynomial, PolyFactor, charpoly_admissible_global, charpoly_admissible_local
from .core_arith import (
    QModZ,
    enumerate_weighted_solutions,
    qmodz_from_rational,
    qmodz_scale,
    restricted_partition_count,
)
from .embed import (
    FeasibilityResult,
    embed_csa,
    embedding_exists,
    hom_exists,
    partition_set,
    split_criterion_max_degree,
)
from .hasse import construct_counterexample, hasse_verdict, local_report, obstruction
from .orbits import OrbitCount, mod_count, orbit_count, orbit_count_semisimple_target
