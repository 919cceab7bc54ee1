"""Littlewood-Richardson coefficients and branching rules for wreath products F wr S_n,
and the quiver of the category F wr FI_n."""

from .errors import BudgetExceeded, InvalidArgument, NonIntegralMultiplicity
from .partitions import (
    Composition,
    MultiPartition,
    Partition,
    contains,
    multipartitions_of,
    parse_multipartition,
    parse_partition,
    partitions_of,
    standard_tableau_count,
    y_minus,
    y_plus,
)
from .quiver import Quiver, arrow_exists, arrows_via_branching, build_quiver, connected_components
from .tableaux import (
    SkewShape,
    SkewTableau,
    enumerate_lr_tableaux,
    is_lattice_word,
    is_semistandard,
    lattice_violation,
    lr_coefficient,
    lr_expand,
    row_word,
)
from .wreath_rules import (
    Decomposition,
    IrrLabel,
    induce_one_step,
    restrict_one_step,
    wreath_lr_coefficient,
    wreath_lr_expand,
)

__all__ = [
    "BudgetExceeded",
    "Composition",
    "Decomposition",
    "InvalidArgument",
    "IrrLabel",
    "MultiPartition",
    "NonIntegralMultiplicity",
    "Partition",
    "Quiver",
    "SkewShape",
    "SkewTableau",
    "arrow_exists",
    "arrows_via_branching",
    "build_quiver",
    "connected_components",
    "contains",
    "enumerate_lr_tableaux",
    "induce_one_step",
    "is_lattice_word",
    "is_semistandard",
    "lattice_violation",
    "lr_coefficient",
    "lr_expand",
    "multipartitions_of",
    "parse_multipartition",
    "parse_partition",
    "partitions_of",
    "restrict_one_step",
    "row_word",
    "standard_tableau_count",
    "wreath_lr_coefficient",
    "wreath_lr_expand",
    "y_minus",
    "y_plus",
]
