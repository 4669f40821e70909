"""Exact equivariant indices of invariant polynomial 1-forms.

The package computes, in exact arithmetic, the homological index and the
(reduced) radial index of a 1-form with polynomial coefficients that is
invariant under a diagonal action of a finite cyclic group on affine space,
together with the ring operations (character ring, Burnside ring, induction,
restriction, reduction) needed to state and verify the identities relating
the two indices.
"""

from .equiv_index import (
    ConservationReport,
    DiagonalAction,
    IndexReport,
    OneForm,
    OrbitContribution,
    StratumData,
    check_invariance,
    conservation_check,
    equivariant_pullback,
    exterior_derivative,
    global_index_character,
    hom_index,
    index_report,
    isotropy_subgroup,
    local_index_at_point,
    radial_index,
    reduced_radial_index,
    st_sum,
)
from .errors import (
    DimensionGuardFailedError,
    DimensionMismatchError,
    EqidxError,
    GloballyNonZeroDimensionalError,
    GroupMismatchError,
    InputError,
    NonIsolatedError,
    NonZeroDimensionalError,
    NotEquivariantMapError,
    NotInvariantError,
    ParseError,
    PreconditionError,
    RestrictedNonIsolatedError,
    SingularLinearPartError,
)
from .poly import (
    MonomialOrder,
    Polynomial,
    format_polynomial,
    monomial_weight,
    parse_polynomial,
)
from .rep_rings import (
    BurnsideElement,
    CyclicGroup,
    RepRingElement,
    Subgroup,
    divisors,
    induce,
    integer_determinant,
    reduce_to_rep,
    restrict_rep,
)
from .standard_basis import (
    GeneratorSet,
    QuotientBasis,
    ReducedBasis,
    buchberger_global,
    mora_local,
    normal_form,
    quotient_basis,
    s_polynomial,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
