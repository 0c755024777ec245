"""Unitary and symmetric unit groups of modular abelian group algebras.

For ``F = F_p`` (``p`` odd) and ``G`` a finite abelian ``p``-group with an
involutory automorphism ``eta``, this package builds explicit bases of the
unitary subgroup and of the symmetric units of ``V(FG)``, computes their
cyclic invariants, and checks everything against brute-force enumeration.
"""

from .algebra import (
    AlgebraElement,
    apply_involution,
    augmentation,
    inv_unit,
    mul,
    power,
    supported_on_power_subgroup,
    unit_order,
)
from .errors import (
    AugmentationZero,
    ConsistencyFailure,
    FGUnitsError,
    GroupMismatch,
    InvalidGroup,
    NotAGroup,
    NotInvolutory,
    NotNormalized,
    NotWellDefined,
    TooLarge,
)
from .group import GroupSpec, group_inv, group_mul
from .involution import (
    DiagonalForm,
    InvolutionSpec,
    diagonalize,
    eigensplit,
    fixed_subgroup_orders,
    sqrt_in_G,
    validate_involution,
)
from .structure import (
    IndexClass,
    StructureReport,
    build_u_alpha,
    enumerate_L,
    invariants_symmetric,
    invariants_unitary,
    predicted_unit_order,
    psi1,
    psi2,
    structure_report,
    symmetric_basis,
    unitary_basis,
)

__version__ = "0.1.0"

__all__ = [
    "GroupSpec",
    "group_inv",
    "group_mul",
    "AlgebraElement",
    "AugmentationZero",
    "ConsistencyFailure",
    "DiagonalForm",
    "FGUnitsError",
    "GroupMismatch",
    "IndexClass",
    "InvalidGroup",
    "InvolutionSpec",
    "NotAGroup",
    "NotInvolutory",
    "NotNormalized",
    "NotWellDefined",
    "StructureReport",
    "TooLarge",
    "apply_involution",
    "augmentation",
    "build_u_alpha",
    "diagonalize",
    "eigensplit",
    "enumerate_L",
    "fixed_subgroup_orders",
    "inv_unit",
    "invariants_symmetric",
    "invariants_unitary",
    "mul",
    "power",
    "predicted_unit_order",
    "psi1",
    "psi2",
    "sqrt_in_G",
    "structure_report",
    "supported_on_power_subgroup",
    "symmetric_basis",
    "unit_order",
    "unitary_basis",
    "validate_involution",
]
