"""Equivariant indices of invariant polynomial 1-forms at the origin.

A diagonal action of the cyclic group of order m on affine n-space assigns
each coordinate an integer weight mod m.  For an invariant 1-form whose zero
at the origin is algebraically isolated two indices are computed here.  The
homological index is the character of the local quotient algebra twisted by
the volume form; it lives in the character ring.  The radial index is a
virtual G-set: on each fixed subspace the restricted form has a Milnor
number, and solving the resulting triangular system over the divisor lattice
recovers how many orbits of each isotropy type a generic equivariant
perturbation sends near the origin.  Reducing the radial index to its
permutation character lands in the character ring, where the two indices can
be compared.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import (
    DimensionGuardFailedError,
    DimensionMismatchError,
    GloballyNonZeroDimensionalError,
    GroupMismatchError,
    NonIsolatedError,
    NonZeroDimensionalError,
    NotEquivariantMapError,
    NotInvariantError,
    RestrictedNonIsolatedError,
    SingularLinearPartError,
)
from .poly import Monomial, MonomialOrder, Polynomial, monomial_weight
from .rep_rings import (
    BurnsideElement,
    CyclicGroup,
    RepRingElement,
    Subgroup,
    divisors,
    induce,
    reduce_to_rep,
)
from .standard_basis import (
    GeneratorSet,
    QuotientBasis,
    buchberger_global,
    mora_local,
    quotient_basis,
)


@dataclass(frozen=True)
class DiagonalAction:
    """A diagonal action of a cyclic group: variable i scales by the root to weights[i]."""

    group: CyclicGroup
    weights: tuple[int, ...]

    def __post_init__(self) -> None:
        m = self.group.order
        if len(self.weights) < 1:
            raise ValueError("an action needs at least one variable")
        object.__setattr__(self, "weights", tuple(int(k) % m for k in self.weights))

    @property
    def nvars(self) -> int:
        return len(self.weights)

    def weight_of(self, mon: Monomial) -> int:
        return monomial_weight(mon, self.weights, self.group.order)

    def volume_weight(self) -> int:
        """Weight of the top form dz_1 ^ ... ^ dz_n."""
        return sum(self.weights) % self.group.order

    def fixed_variables(self, order: int) -> tuple[int, ...]:
        """Indices of the variables fixed by the subgroup of the given order.

        That subgroup is generated by the (m/order)-th power of the group
        generator, which fixes variable i exactly when order divides its
        weight.
        """
        return tuple(i for i, k in enumerate(self.weights) if k % order == 0)

    def subgroup_action(self, order: int) -> "DiagonalAction":
        """The same coordinates seen through the subgroup of the given order."""
        sub = Subgroup(self.group, order)
        return DiagonalAction(sub.as_group(), tuple(k % order for k in self.weights))


@dataclass(frozen=True)
class OneForm:
    """A polynomial 1-form sum f_i dz_i on affine n-space."""

    components: tuple[Polynomial, ...]

    def __post_init__(self) -> None:
        comps = tuple(self.components)
        if not comps:
            raise ValueError("a 1-form needs at least one component")
        n = len(comps)
        for f in comps:
            if f.nvars != n:
                raise DimensionMismatchError(
                    f"{n} components but a component lives in {f.nvars} variables"
                )
        object.__setattr__(self, "components", comps)

    @property
    def nvars(self) -> int:
        return len(self.components)

    def vanishes_at_origin(self) -> bool:
        return all(f.constant_term() == 0 for f in self.components)


def exterior_derivative(f: Polynomial) -> OneForm:
    """The differential of a polynomial function, as a 1-form."""
    return OneForm(tuple(f.partial_derivative(i) for i in range(f.nvars)))


@dataclass(frozen=True)
class StratumData:
    """Per-subgroup diagnostics: the fixed variables and the restricted Milnor number."""

    fixed_variables: tuple[int, ...]
    milnor_number: int


@dataclass(frozen=True)
class IndexReport:
    """Both indices of one form, with the per-stratum data that produced them."""

    hom: RepRingElement
    radial: BurnsideElement
    reduced_radial: RepRingElement
    strata: Mapping[int, StratumData]


def _check_pairing(form: OneForm, action: DiagonalAction) -> None:
    if form.nvars != action.nvars:
        raise DimensionMismatchError(
            f"form has {form.nvars} components, action has {action.nvars} weights"
        )


def check_invariance(form: OneForm, action: DiagonalAction) -> bool:
    """Whether every monomial of every component satisfies the weight congruence.

    The coefficient of dz_i transforms with weight -weights[i], so f_i dz_i is
    invariant exactly when each monomial of f_i has weight -weights[i] mod m.
    """
    _check_pairing(form, action)
    m = action.group.order
    for i, f in enumerate(form.components):
        target = (-action.weights[i]) % m
        for mon in f.terms:
            if action.weight_of(mon) != target:
                return False
    return True


def _require_invariant(form: OneForm, action: DiagonalAction) -> None:
    _check_pairing(form, action)
    m = action.group.order
    for i, f in enumerate(form.components):
        target = (-action.weights[i]) % m
        for mon in f.terms:
            if action.weight_of(mon) != target:
                raise NotInvariantError(
                    f"component {i + 1} has a monomial of weight "
                    f"{action.weight_of(mon)}, expected {target} (mod {m})"
                )


def _local_quotient(components: Sequence[Polynomial]) -> QuotientBasis:
    n = components[0].nvars
    order = MonomialOrder.local_order(n)
    basis = mora_local(GeneratorSet(tuple(components), order))
    return quotient_basis(basis)


def _character_of_quotient(qb: QuotientBasis, action: DiagonalAction) -> RepRingElement:
    m = action.group.order
    twist = action.volume_weight()
    coeffs = [0] * m
    for mon in qb.monomials:
        coeffs[(action.weight_of(mon) + twist) % m] += 1
    return RepRingElement(action.group, tuple(coeffs))


def hom_index(form: OneForm, action: DiagonalAction) -> RepRingElement:
    """The homological index: the character of the twisted local quotient algebra.

    The group acts on the local algebra at the origin modulo the components
    of the form, twisted by the weight of the volume form; the monomials
    outside the leading ideal are simultaneous eigenvectors, so the character
    is read off their weights.
    """
    _require_invariant(form, action)
    try:
        qb = _local_quotient(form.components)
    except NonZeroDimensionalError as e:
        raise NonIsolatedError(f"the zero at the origin is not isolated: {e}") from e
    return _character_of_quotient(qb, action)


def _stratum_table(
    form: OneForm,
    action: DiagonalAction,
    dimension_cache: dict[tuple[int, ...], int] | None = None,
) -> dict[int, StratumData]:
    """Fixed variables and restricted Milnor number for every subgroup order.

    The subgroup of order a fixes the subspace spanned by the variables whose
    weight is divisible by a.  Invariance forces the other components to
    vanish there, so restricting the fixed components gives the restricted
    form; its local quotient dimension is the stratum's Milnor number.  An
    empty fixed subspace is the origin alone and counts with multiplicity 1.
    Different subgroups may share a fixed set, so dimensions are cached by it.
    """
    if not form.vanishes_at_origin():
        raise NonIsolatedError("the origin is not a zero of the form")
    cache = {} if dimension_cache is None else dimension_cache
    out: dict[int, StratumData] = {}
    for a in divisors(action.group.order):
        keep = action.fixed_variables(a)
        if not keep:
            out[a] = StratumData((), 1)
            continue
        if keep not in cache:
            restricted = tuple(form.components[i].restrict_to(keep) for i in keep)
            try:
                qb = _local_quotient(restricted)
            except NonZeroDimensionalError as e:
                if a == 1:
                    raise NonIsolatedError(
                        f"the zero at the origin is not isolated: {e}"
                    ) from e
                raise RestrictedNonIsolatedError(
                    f"the restriction to the fixed subspace of the order {a} "
                    f"subgroup does not have an isolated zero: {e}"
                ) from e
            cache[keep] = qb.dimension
        out[a] = StratumData(keep, cache[keep])
    return out


def _orbit_counts(strata: Mapping[int, StratumData], m: int) -> dict[int, int]:
    """Solve the triangular orbit-count system over the divisor lattice.

    A generic equivariant perturbation splits the zero at the origin into
    orbits; d[b] of them have isotropy of order b.  On the fixed subspace of
    the order a subgroup only orbits with a dividing b are visible, each
    contributing m/b points, and the signed point count there equals the
    signed restricted Milnor number.  Divisors are processed downward, so
    every right-hand side is already known.
    """
    divs = divisors(m)
    d: dict[int, int] = {}
    for a in sorted(divs, reverse=True):
        data = strata[a]
        target = (-1) ** len(data.fixed_variables) * data.milnor_number
        known = sum(d[b] * (m // b) for b in divs if b != a and b % a == 0)
        q, r = divmod(target - known, m // a)
        if r:
            raise NonIsolatedError(
                "stratum Milnor numbers are inconsistent with an isolated invariant zero"
            )
        d[a] = q
    return d


def radial_index(form: OneForm, action: DiagonalAction) -> BurnsideElement:
    """The radial index as a virtual G-set.

    Requires the form to be invariant with an algebraically isolated zero at
    the origin on every fixed subspace.
    """
    _require_invariant(form, action)
    strata = _stratum_table(form, action)
    counts = _orbit_counts(strata, action.group.order)
    sign = (-1) ** form.nvars
    return BurnsideElement(action.group, {b: sign * c for b, c in counts.items()})


def reduced_radial_index(form: OneForm, action: DiagonalAction) -> RepRingElement:
    """The permutation character of the radial index."""
    return reduce_to_rep(radial_index(form, action))


def index_report(form: OneForm, action: DiagonalAction) -> IndexReport:
    """Both indices at once, sharing the per-stratum computations."""
    _require_invariant(form, action)
    if not form.vanishes_at_origin():
        raise NonIsolatedError("the origin is not a zero of the form")
    try:
        full_qb = _local_quotient(form.components)
    except NonZeroDimensionalError as e:
        raise NonIsolatedError(f"the zero at the origin is not isolated: {e}") from e
    seed = {tuple(range(form.nvars)): full_qb.dimension}
    strata = _stratum_table(form, action, dimension_cache=seed)
    counts = _orbit_counts(strata, action.group.order)
    sign = (-1) ** form.nvars
    radial = BurnsideElement(action.group, {b: sign * c for b, c in counts.items()})
    return IndexReport(
        hom=_character_of_quotient(full_qb, action),
        radial=radial,
        reduced_radial=reduce_to_rep(radial),
        strata=strata,
    )


def st_sum(
    form_a: OneForm,
    action_a: DiagonalAction,
    form_b: OneForm,
    action_b: DiagonalAction,
) -> tuple[OneForm, DiagonalAction]:
    """The direct sum of two forms on disjoint sets of variables.

    Both actions must belong to the same group.  The components of the first
    form keep their variables, those of the second are shifted past them, and
    the weight lists are concatenated.
    """
    if action_a.group != action_b.group:
        raise GroupMismatchError("direct sums require actions of the same group")
    n = form_a.nvars
    p = form_b.nvars
    total = n + p
    comps = [f.embed(total, range(n)) for f in form_a.components]
    comps += [g.embed(total, range(n, total)) for g in form_b.components]
    action = DiagonalAction(action_a.group, action_a.weights + action_b.weights)
    return OneForm(tuple(comps)), action


def _rational_determinant(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    a = [list(map(Fraction, row)) for row in rows]
    n = len(a)
    det = Fraction(1)
    for k in range(n):
        pivot = next((i for i in range(k, n) if a[i][k] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != k:
            a[k], a[pivot] = a[pivot], a[k]
            det = -det
        det *= a[k][k]
        inv = Fraction(1) / a[k][k]
        for i in range(k + 1, n):
            factor = a[i][k] * inv
            if factor:
                for j in range(k, n):
                    a[i][j] -= factor * a[k][j]
    return det


def equivariant_pullback(
    form: OneForm, substitution: Sequence[Polynomial], action: DiagonalAction
) -> OneForm:
    """Pull the form back along a polynomial map germ with invertible linear part.

    The map must fix the origin, commute with the action (the j-th component
    is a sum of monomials of weight weights[j]), and have an exactly
    invertible linear part; then the pullback is again an invariant form with
    an isolated zero of the same indices.
    """
    _check_pairing(form, action)
    n = form.nvars
    if len(substitution) != n:
        raise DimensionMismatchError(f"expected {n} substitution components")
    for phi in substitution:
        if phi.nvars != n:
            raise DimensionMismatchError("substitution components live in the wrong ring")
    m = action.group.order
    for j, phi in enumerate(substitution):
        if phi.constant_term() != 0:
            raise NotEquivariantMapError(f"component {j + 1} does not fix the origin")
        for mon in phi.terms:
            if action.weight_of(mon) != action.weights[j]:
                raise NotEquivariantMapError(
                    f"component {j + 1} mixes weights: monomial of weight "
                    f"{action.weight_of(mon)}, expected {action.weights[j]} (mod {m})"
                )
    linear = [
        [
            phi.terms.get(tuple(1 if i == t else 0 for t in range(n)), Fraction(0))
            for i in range(n)
        ]
        for phi in substitution
    ]
    if _rational_determinant(linear) == 0:
        raise SingularLinearPartError("the linear part of the substitution is singular")
    pulled = []
    composed = [f.compose(list(substitution)) for f in form.components]
    for i in range(n):
        acc = Polynomial.zero(n)
        for j in range(n):
            acc = acc + composed[j] * substitution[j].partial_derivative(i)
        pulled.append(acc)
    return OneForm(tuple(pulled))


def isotropy_subgroup(point: Sequence, action: DiagonalAction) -> Subgroup:
    """The subgroup fixing the given point.

    An element fixes the point exactly when it fixes every coordinate where
    the point is nonzero; the fixing elements form the unique subgroup whose
    order is their count.
    """
    if len(point) != action.nvars:
        raise DimensionMismatchError("point dimension does not match the action")
    m = action.group.order
    support = [i for i, v in enumerate(point) if Fraction(v) != 0]
    count = sum(
        1
        for t in range(m)
        if all((t * action.weights[i]) % m == 0 for i in support)
    )
    return Subgroup(action.group, count)


def local_index_at_point(
    form: OneForm, point: Sequence, action: DiagonalAction
) -> RepRingElement:
    """The homological index of the form at a point, over its isotropy subgroup.

    The form is recentered at the point and the ambient space is viewed
    through the isotropy subgroup, whose action the recentered form inherits.
    The result is a virtual character of the abstract cyclic group of the
    isotropy order.
    """
    _require_invariant(form, action)
    sub = isotropy_subgroup(point, action)
    pt = [Fraction(v) for v in point]
    shifted = OneForm(tuple(f.shift(pt) for f in form.components))
    return hom_index(shifted, action.subgroup_action(sub.order))


def global_index_character(form: OneForm, action: DiagonalAction) -> RepRingElement:
    """The character of the twisted global quotient algebra.

    Requires the affine zero set of the form to be finite, certified by the
    leading ideal of a Groebner basis under a degree order.  The result sums
    the induced local indices over every zero orbit in affine space.
    """
    _require_invariant(form, action)
    n = form.nvars
    gens = GeneratorSet(form.components, MonomialOrder.global_order(n))
    basis = buchberger_global(gens)
    try:
        qb = quotient_basis(basis)
    except NonZeroDimensionalError as e:
        raise GloballyNonZeroDimensionalError(
            f"the affine zero set is not finite: {e}"
        ) from e
    return _character_of_quotient(qb, action)


@dataclass(frozen=True)
class OrbitContribution:
    """One zero orbit in a pointwise conservation check."""

    representative: tuple[Fraction, ...]
    isotropy_order: int
    local_index: RepRingElement
    induced: RepRingElement


@dataclass(frozen=True)
class ConservationReport:
    """Outcome of a conservation-of-number check.

    ``reference`` is the homological index of the original form at the
    origin; ``total`` is the matching sum for the deformation: either the
    global quotient character, or the origin's index plus the induced local
    indices over the supplied zero orbits.  ``matched`` records equality.
    """

    mode: str
    reference: RepRingElement
    total: RepRingElement
    origin: RepRingElement | None
    orbits: tuple[OrbitContribution, ...]
    matched: bool


def conservation_check(
    form: OneForm,
    deformed: OneForm,
    action: DiagonalAction,
    points: Sequence[Sequence] | None = None,
) -> ConservationReport:
    """Check that a deformation redistributes the index without losing any of it.

    Both forms must be invariant; the deformation must have a finite affine
    zero set whose total multiplicity equals the Milnor number of the
    original form at the origin (the dimension guard, which certifies that no
    multiplicity escaped).  With ``points`` omitted the comparison is against
    the global quotient character of the deformation.  With ``points`` given
    as orbit representatives of the nonzero zeros, the comparison is against
    the index at the origin plus the sum of the induced local indices.
    """
    _require_invariant(form, action)
    _require_invariant(deformed, action)
    try:
        qb_local = _local_quotient(form.components)
    except NonZeroDimensionalError as e:
        raise NonIsolatedError(f"the zero at the origin is not isolated: {e}") from e
    reference = _character_of_quotient(qb_local, action)

    n = form.nvars
    gens = GeneratorSet(deformed.components, MonomialOrder.global_order(n))
    try:
        qb_global = quotient_basis(buchberger_global(gens))
    except NonZeroDimensionalError as e:
        raise GloballyNonZeroDimensionalError(
            f"the deformation's affine zero set is not finite: {e}"
        ) from e
    if qb_global.dimension != qb_local.dimension:
        raise DimensionGuardFailedError(
            f"global multiplicity {qb_global.dimension} of the deformation differs "
            f"from the local multiplicity {qb_local.dimension} at the origin"
        )

    if points is None:
        total = _character_of_quotient(qb_global, action)
        return ConservationReport(
            mode="global",
            reference=reference,
            total=total,
            origin=None,
            orbits=(),
            matched=total == reference,
        )

    origin = hom_index(deformed, action)
    orbits = []
    total = origin
    for point in points:
        pt = tuple(Fraction(v) for v in point)
        sub = isotropy_subgroup(pt, action)
        local = local_index_at_point(deformed, pt, action)
        lifted = induce(sub, local)
        orbits.append(
            OrbitContribution(
                representative=pt,
                isotropy_order=sub.order,
                local_index=local,
                induced=lifted,
            )
        )
        total = total + lifted
    return ConservationReport(
        mode="pointwise",
        reference=reference,
        total=total,
        origin=origin,
        orbits=tuple(orbits),
        matched=total == reference,
    )
