"""Exact computations in the cyclotomic Hecke algebra H(r, n).

The package implements the algebra over generic, rational, and cyclotomic
coefficient systems, its permutation and cell modules, the shift/transfer
generator families of a shape, the mechanical construction of cell-module
homomorphisms by solving the resulting linear conditions, and a desk-scale
verification that the generators span the kernel ideal.

Modules: :mod:`~akspecht.perms` and :mod:`~akspecht.shapes` carry the
combinatorics, :mod:`~akspecht.coeffs` the coefficient systems,
:mod:`~akspecht.algebra` the normal-form arithmetic, :mod:`~akspecht.cells`
the module reductions, :mod:`~akspecht.linalg` exact elimination,
:mod:`~akspecht.homsolver` the condition systems and the ideal check, and
:mod:`~akspecht.cli` the batch front end.
"""

from .algebra import (
    AlgebraContext,
    Element,
    coset_sum,
    hom_image,
    m_of,
    m_semistandard,
    m_semistandard_product,
    m_st,
    shift_generator,
    transfer_generator,
    u_plus,
    x_of,
)
from .cells import ModuleSpace, SpechtVector, residue
from .coeffs import (
    CyclotomicCoeffs,
    GenericCoeffs,
    MultiPoly,
    RatFunc,
    RationalCoeffs,
)
from .homsolver import (
    ConditionSystem,
    IdealReport,
    SolveReport,
    condition_system,
    generator_elements,
    generator_families,
    ideal_equal,
    random_specialization,
    reproduce_example,
    solve,
)
from .shapes import Multicomposition, all_multipartitions, dominates
from .tableaux import (
    Tableau,
    TypedTableau,
    enumerate_semistandard,
    enumerate_standard,
    initial_tableau,
)

__all__ = [
    "AlgebraContext",
    "Element",
    "coset_sum",
    "hom_image",
    "m_of",
    "m_semistandard",
    "m_semistandard_product",
    "m_st",
    "shift_generator",
    "transfer_generator",
    "u_plus",
    "x_of",
    "ModuleSpace",
    "SpechtVector",
    "residue",
    "CyclotomicCoeffs",
    "GenericCoeffs",
    "MultiPoly",
    "RatFunc",
    "RationalCoeffs",
    "ConditionSystem",
    "IdealReport",
    "SolveReport",
    "condition_system",
    "generator_elements",
    "generator_families",
    "ideal_equal",
    "random_specialization",
    "reproduce_example",
    "solve",
    "Multicomposition",
    "all_multipartitions",
    "dominates",
    "Tableau",
    "TypedTableau",
    "enumerate_semistandard",
    "enumerate_standard",
    "initial_tableau",
]
