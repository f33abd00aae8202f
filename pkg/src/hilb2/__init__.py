"""Betti tables for squares of complex manifolds from mod-2 cohomology input.

A descriptor names a basis of H*(X; F_2) for a complex n-fold X together
with the Steenrod square action (and, optionally, cup products and integral
torsion flags).  From that finite input the package computes Betti tables
of the exceptional divisor, the symmetric square, the configuration
complement, and the Hilbert square, plus the kernel of the pushforward
from the exceptional divisor and, for torsion-free inputs, the integral
homology of the symmetric square.
"""

from .betti import (
    GroupProfile,
    Hilb2TorsionFlags,
    NegativeRank,
    TorsionFlagRequired,
    betti_config,
    betti_hilb2_closed,
    betti_hilb2_exact,
    betti_sym2_f2,
    integral_sym2,
    torsion_flags_hilb2,
)
from .catalog import UnknownCatalogName, catalog_get, catalog_names, catalog_text
from .exdiv import (
    ExClass,
    OutOfRange,
    betti_exceptional,
    boundary_no_b,
    boundary_with_b,
    e_multiply,
    format_exclass,
    from_base,
    hilb_restriction,
    zero_class,
)
from .gf2 import F2Matrix, F2Vector, span_dims_by_degree
from .kernel import (
    KernelGenerator,
    corollary_check,
    kernel_dimensions,
    kernel_generators,
    redundant_degrees,
)
from .report import Report
from .spaces import (
    BettiTable,
    DescriptorError,
    IntegralFlags,
    InvalidDescriptor,
    ManifoldDescriptor,
    betti_of_x,
    descriptor_to_json,
    descriptor_violations,
    load_descriptor,
    parse_descriptor,
)
from .steenrod import Sq1NotZero, UnknownClass, UnstableModule, adem_expand, is_sq1_zero, sq
from .steenrod import validate as validate_module
from .verify import check_duality, check_euler, known_answers, run_suite

__version__ = "0.1.0"

__all__ = [
    "BettiTable",
    "DescriptorError",
    "ExClass",
    "F2Matrix",
    "F2Vector",
    "GroupProfile",
    "Hilb2TorsionFlags",
    "IntegralFlags",
    "InvalidDescriptor",
    "KernelGenerator",
    "ManifoldDescriptor",
    "NegativeRank",
    "OutOfRange",
    "Report",
    "Sq1NotZero",
    "TorsionFlagRequired",
    "UnknownCatalogName",
    "UnknownClass",
    "UnstableModule",
    "adem_expand",
    "betti_config",
    "betti_exceptional",
    "betti_hilb2_closed",
    "betti_hilb2_exact",
    "betti_of_x",
    "betti_sym2_f2",
    "boundary_no_b",
    "boundary_with_b",
    "catalog_get",
    "catalog_names",
    "catalog_text",
    "check_duality",
    "check_euler",
    "corollary_check",
    "descriptor_to_json",
    "descriptor_violations",
    "e_multiply",
    "format_exclass",
    "from_base",
    "hilb_restriction",
    "integral_sym2",
    "is_sq1_zero",
    "kernel_dimensions",
    "kernel_generators",
    "known_answers",
    "load_descriptor",
    "parse_descriptor",
    "redundant_degrees",
    "run_suite",
    "span_dims_by_degree",
    "sq",
    "torsion_flags_hilb2",
    "validate_module",
    "zero_class",
    "__version__",
]
