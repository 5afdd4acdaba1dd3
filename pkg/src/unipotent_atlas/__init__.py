"""Unipotent conjugacy classes of classical groups, with an emphasis on
characteristic 2: partition combinatorics, subgroup parameterizations,
Richardson block tables, class labels, and exhaustive verifiers."""

from .balacarter import (
    ParabolicProduct,
    RegularSubgroupDescriptor,
    diagram_string,
    is_extra_class,
    label,
    o_not_so_conjugate,
    phi1,
    phi2,
    psi1,
    psi2,
)
from .classes import (
    Char,
    ClassParam,
    EpsilonMap,
    Family,
    GroupSpec,
    combine,
    enumerate_classes,
    is_distinguished,
    is_valid_class,
    minimal_levi,
    splits_in_so,
)
from .decomp import (
    Decomposition,
    FAssignment,
    apply_f,
    decompose,
    has_bad_sequence,
    satisfies_difference_condition,
)
from .errors import InputError, ResourceLimitError
from .partitions import Partition, dual, double, merge, multiplicity
from .richardson import (
    ParabolicDescriptor,
    enumerate_distinguished_parabolics,
    in_richardson_image,
    parabolic_from_blocks,
    regular_jordan_blocks,
    richardson_jordan_blocks,
)

__version__ = "0.1.0"

__all__ = [
    "Char",
    "ClassParam",
    "Decomposition",
    "EpsilonMap",
    "FAssignment",
    "Family",
    "GroupSpec",
    "InputError",
    "ParabolicDescriptor",
    "ParabolicProduct",
    "Partition",
    "RegularSubgroupDescriptor",
    "ResourceLimitError",
    "apply_f",
    "combine",
    "decompose",
    "diagram_string",
    "double",
    "dual",
    "enumerate_classes",
    "enumerate_distinguished_parabolics",
    "has_bad_sequence",
    "in_richardson_image",
    "is_distinguished",
    "is_extra_class",
    "is_valid_class",
    "label",
    "merge",
    "minimal_levi",
    "multiplicity",
    "o_not_so_conjugate",
    "parabolic_from_blocks",
    "phi1",
    "phi2",
    "psi1",
    "psi2",
    "regular_jordan_blocks",
    "richardson_jordan_blocks",
    "satisfies_difference_condition",
    "splits_in_so",
]
