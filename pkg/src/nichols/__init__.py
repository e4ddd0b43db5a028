"""Exact computation of Nichols algebras of braided vector spaces.

The package builds braided pairs of finite group type (diagonal matrices,
crossed-set cocycle braidings, induced modules over finite groups, and the
hand-picked three- and four-dimensional families), computes the graded
components of their Nichols algebras inside the tensor coalgebra, extracts
relation bases and skew derivations, analyses rank-2 diagonal braidings
through adjoint nilpotency orders, and computes crossed-set cohomology over
finite cyclic coefficients.  All arithmetic is exact, over cyclotomic fields.
"""

from .scalars import (
    Cyc,
    INFINITE,
    integer,
    one,
    order,
    q_binomial,
    q_factorial,
    q_number,
    rational,
    root_of_unity,
    zero,
)
from .pairs import (
    BraidedPair,
    Decomposition,
    change_basis,
    check,
    diagonal,
    direct_sum,
    find_decomposition,
    from_cocycle,
    induced_yd,
    is_diagonal,
    restrict,
    transpose,
    two_by_two,
    v3,
    v4,
)
from .algebra import (
    GradedComputation,
    HilbertResult,
    adjoint,
    degree_basis,
    derivation,
    hilbert,
    kernel_basis,
    multiply,
    new_leading_words,
    nilpotency_order,
    relations,
)
from .quandles import (
    Cochain2,
    CrossedSet,
    braidings_check,
    conjugation_crossed_set,
    dihedral_crossed_set,
    h1,
    h2,
    trivial_crossed_set,
)
from .rank2 import analyze, analyze_best, cartan, csgr_screen, is_qls, screen

__version__ = "0.1.0"
