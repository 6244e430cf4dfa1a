"""Exact discriminant distributions of monic polynomials over finite fields."""

__version__ = "0.1.0"

from .field import (
    FieldElement,
    FieldSpec,
    arith,
    field_from_order,
    generator,
    inv,
    is_nth_power,
    make_field,
    power,
    quadratic_character,
)
from .partitions import Partition, partitions
from .poly import (
    Factorization,
    Poly,
    derivative,
    discriminant,
    discriminant_oracle,
    factor,
    factorization_type,
    is_irreducible,
    is_squarefree,
    mobius,
    poly_arith,
    resultant,
    scale_roots,
    translate,
)

__all__ = [
    "__version__",
    "FieldElement",
    "FieldSpec",
    "arith",
    "field_from_order",
    "generator",
    "inv",
    "is_nth_power",
    "make_field",
    "power",
    "quadratic_character",
    "Partition",
    "partitions",
    "Factorization",
    "Poly",
    "derivative",
    "discriminant",
    "discriminant_oracle",
    "factor",
    "factorization_type",
    "is_irreducible",
    "is_squarefree",
    "mobius",
    "poly_arith",
    "resultant",
    "scale_roots",
    "translate",
]
