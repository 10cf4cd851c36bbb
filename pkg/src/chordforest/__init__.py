"""Exact counting of tree and forest chord diagrams.

The same numbers are computed three independent ways: closed-form formulas
(:mod:`.formulas`), a truncated formal power-series engine (:mod:`.series`),
and a brute-force enumeration oracle (:mod:`.oracle`).  The ``chordforest
verify`` command cross-checks them.
"""

from .diagrams import (
    ChordDiagram,
    Classification,
    IntersectionGraph,
    SupportPartition,
    blocks_cross,
    classify,
    crosses,
    format_diagram,
    from_pairs,
    intersection_graph,
    parse_diagram,
    support_partition,
)
from .errors import ConsistencyError, EnumerationCapError
from .formulas import (
    PartitionType,
    binomial,
    catalan,
    double_factorial_pairings,
    falling_factorial,
    forest_count,
    kreweras_count,
    lagrange_coeff,
    rooted_forest_count,
    tree_count,
    type_sum_forest_count,
)
from .oracle import (
    CountTable,
    brute_force_counts,
    enumerate_diagrams,
    enumerate_noncrossing_partitions,
    enumerate_types,
)
from .series import TruncatedSeries, coeff_of_power, rooted_gf, solve_ternary_gf, tree_gf

__version__ = "0.1.0"
