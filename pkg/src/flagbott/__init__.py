"""Littlewood-Richardson fillings, Bott's theorem on flag varieties and
Dolbeault cohomology of Schur bundles, with vanishing certificates."""

from .bott import (
    BottResult,
    DimensionError,
    FlagShape,
    beta_bijection,
    bott,
    bott_partial,
    grassmann_bott,
    is_admissible,
    lemma55,
    splitting,
)
from .cohomology import (
    CohomologyTable,
    dim_schur,
    flag_cohomology,
    grassmann_cohomology,
    omega_decomposition,
    table_dimensions,
)
from .lr import (
    LRFilling,
    SchurDecomposition,
    check_classical,
    check_eight,
    enumerate_fillings,
    is_height_increasing,
    lr_order_less,
    lr_product,
)
from .partitions import (
    GeneralizedPartition,
    Partition,
    PartitionError,
    SkewShape,
    chi,
    dominates,
    reconstruct,
    reorder_decreasing,
    skew_cells,
    squared_norm,
    transpose,
)
from .vanishing import VanishingQuery, certify, delta

__version__ = "0.1.0"
