"""Exact equivariant resultants and symmetric discriminants."""

from symres.combinatorics import (
    Partition,
    chain_coefficient_degree,
    degree_identity_check,
    falling_quotient,
    m_lambda,
    m_zero_discriminant,
    m_zero_resultant,
    multinomial,
    partitions,
)
from symres.discriminant import (
    DiscriminantResult,
    SymmetricPoly,
    a_exponent,
    basis_partitions,
    discriminant_decomposition,
    discriminant_value,
    expand_elementary,
    partial_derivatives,
)
from symres.divdiff import (
    DividedDifferenceTable,
    EquivarianceError,
    EquivariantSystem,
    check_equivariance,
    divided_difference_determinant,
    divided_difference_recursive,
)
from symres.equivariant import (
    AveragingReport,
    FactoredResultant,
    SpecializedSystem,
    VerificationReport,
    averaged_chain_resultant,
    block_leads,
    decompose_resultant,
    elementary_symmetric,
    generic_equivariant_system,
    random_integer_equivariant_system,
    rho_lambda,
    specialize_chain,
    verify_decomposition,
)
from symres.parser import (
    ParseError,
    parse_poly,
    parse_system_file,
    print_coefficient,
    print_poly,
)
from symres.resultant import (
    macaulay_resultant,
    sylvester_resultant,
)
from symres.ring import (
    Coefficient,
    NotDivisibleError,
    ParameterRing,
    Polynomial,
    SquareMatrix,
    determinant,
)

__all__ = [
    "AveragingReport",
    "Coefficient",
    "DiscriminantResult",
    "DividedDifferenceTable",
    "EquivarianceError",
    "EquivariantSystem",
    "FactoredResultant",
    "NotDivisibleError",
    "ParameterRing",
    "ParseError",
    "Partition",
    "Polynomial",
    "SpecializedSystem",
    "SquareMatrix",
    "SymmetricPoly",
    "VerificationReport",
    "a_exponent",
    "averaged_chain_resultant",
    "basis_partitions",
    "block_leads",
    "chain_coefficient_degree",
    "check_equivariance",
    "decompose_resultant",
    "degree_identity_check",
    "determinant",
    "discriminant_decomposition",
    "discriminant_value",
    "divided_difference_determinant",
    "divided_difference_recursive",
    "elementary_symmetric",
    "expand_elementary",
    "falling_quotient",
    "generic_equivariant_system",
    "m_lambda",
    "m_zero_discriminant",
    "m_zero_resultant",
    "macaulay_resultant",
    "multinomial",
    "parse_poly",
    "parse_system_file",
    "partial_derivatives",
    "partitions",
    "print_coefficient",
    "print_poly",
    "random_integer_equivariant_system",
    "rho_lambda",
    "specialize_chain",
    "sylvester_resultant",
    "verify_decomposition",
]
