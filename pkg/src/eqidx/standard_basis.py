"""Groebner and local standard bases of polynomial ideals over the rationals.

The global engine is Buchberger's algorithm under a degree order, with the
coprimality criterion and full autoreduction, so its output is the reduced
Groebner basis.  The local engine computes a minimal standard basis under a
negative-degree order using Mora's weak normal form, whose reducer selection
minimizes the ecart (the gap between the degree of a polynomial and the
degree of its leading monomial) and which may recruit earlier partial
remainders as reducers; with that discipline division terminates even though
the ordering is not a well-order.  Termination can still be impractically
slow (a reducer that is a unit multiple of a variable with a deep tail makes
the leading monomial creep down one monomial at a time), so the local pair
loop guards its step count, term counts and coefficient sizes; a tripped
guard reroutes the computation through a terminating global route: a
degree-capped rerun whose cap is certified by a global Groebner basis, or a
homogenizing lift when the ideal is not globally zero-dimensional.  Either
route recovers a minimal standard basis of the same ideal.  Quotient
extraction enumerates the standard monomials of a zero-dimensional leading
ideal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import gcd, lcm
from typing import Sequence

from .errors import NonZeroDimensionalError
from .poly import (
    Monomial,
    MonomialOrder,
    Polynomial,
    mon_degree,
    mon_div,
    mon_divides,
    mon_lcm,
    mon_mul,
)


@dataclass(frozen=True)
class GeneratorSet:
    """Ideal generators together with the monomial order of the computation."""

    generators: tuple[Polynomial, ...]
    order: MonomialOrder

    def __post_init__(self) -> None:
        gens = tuple(self.generators)
        if not gens:
            raise ValueError("at least one generator is required")
        for g in gens:
            if g.nvars != self.order.nvars:
                raise ValueError("generator and order disagree on the number of variables")
        object.__setattr__(self, "generators", gens)


@dataclass(frozen=True)
class ReducedBasis:
    """A computed basis: reduced Groebner basis (global) or minimal standard basis (local).

    Elements are monic and no leading monomial divides another; for
    kind ``global`` the tails are fully reduced as well.  Elements are sorted
    by decreasing leading monomial.
    """

    elements: tuple[Polynomial, ...]
    order: MonomialOrder
    kind: str

    def leading_monomials(self) -> tuple[Monomial, ...]:
        return tuple(g.leading_monomial(self.order) for g in self.elements)


@dataclass(frozen=True)
class QuotientBasis:
    """The standard monomials of a zero-dimensional quotient, smallest degree first."""

    monomials: tuple[Monomial, ...]

    @property
    def dimension(self) -> int:
        return len(self.monomials)


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    """The S-polynomial, cancelling the leading terms of f and g."""
    lmf = f.leading_monomial(order)
    lmg = g.leading_monomial(order)
    lcm = mon_lcm(lmf, lmg)
    cf = f.leading_coefficient(order)
    cg = g.leading_coefficient(order)
    uf = Polynomial.monomial(f.nvars, mon_div(lcm, lmf), Fraction(1) / cf)
    ug = Polynomial.monomial(g.nvars, mon_div(lcm, lmg), Fraction(1) / cg)
    return uf * f - ug * g


def _reduce_once(h: Polynomial, lm_h: Monomial, g: Polynomial, lm_g: Monomial,
                 order: MonomialOrder) -> Polynomial:
    """Cancel the leading term of h against g."""
    factor = Polynomial.monomial(
        h.nvars,
        mon_div(lm_h, lm_g),
        h.terms[lm_h] / g.terms[lm_g],
    )
    return h - factor * g


def global_normal_form(p: Polynomial, basis: Sequence[Polynomial],
                       order: MonomialOrder) -> Polynomial:
    """Remainder of full division by ``basis`` under a global order.

    Every term of the remainder is reducible by no basis element, so against
    a Groebner basis this is the canonical normal form.
    """
    if order.is_local:
        raise ValueError("global normal form requires a global order")
    lms = [g.leading_monomial(order) for g in basis]
    remainder: dict[Monomial, Fraction] = {}
    work = p
    while work.terms:
        lm = work.leading_monomial(order)
        for g, lm_g in zip(basis, lms):
            if mon_divides(lm_g, lm):
                work = _reduce_once(work, lm, g, lm_g, order)
                break
        else:
            remainder[lm] = work.terms[lm]
            work = work - Polynomial.monomial(work.nvars, lm, work.terms[lm])
    return Polynomial(p.nvars, remainder)


# Limits on one local basis computation before it is rerouted through the
# homogenizing lift.  Tame inputs use a few hundred steps, small coefficients
# and short polynomials; a creeping reduction blows all three up together,
# and the bit bound trips well before the arithmetic gets expensive.
_MORA_STEP_LIMIT = 2000
_MORA_TERM_LIMIT = 1500
_MORA_COEFF_BITS = 1024


class _BudgetExhausted(Exception):
    pass


def mora_normal_form(p: Polynomial, basis: Sequence[Polynomial],
                     order: MonomialOrder) -> Polynomial:
    """Mora's weak normal form of p with respect to ``basis`` under a local order.

    Returns a polynomial whose leading monomial is divisible by no leading
    monomial of the basis (or zero).  Unlike ordinary division the tail may
    keep reducible monomials: there exists a unit u with u*p = sum + result,
    which is exactly what leading-ideal and dimension computations need.
    """
    return _mora_weak_nf(p, basis, order, None)


def _truncate(p: Polynomial, cap: int) -> Polynomial:
    """Drop the terms of degree at least ``cap``."""
    return Polynomial(
        p.nvars, {mon: c for mon, c in p.terms.items() if mon_degree(mon) < cap}
    )


def _primitive(p: Polynomial) -> Polynomial:
    """Rescale by a positive rational so the coefficients are coprime integers.

    Scaling changes no reduction decision (reducers are chosen by leading
    monomial alone), but keeping intermediate polynomials primitive stops the
    exponential denominator growth of repeated monic division.
    """
    if not p.terms:
        return p
    num = 0
    den = 1
    for c in p.terms.values():
        num = gcd(num, c.numerator)
        den = lcm(den, c.denominator)
    scale = Fraction(den, num)
    if scale == 1:
        return p
    return Polynomial(p.nvars, {mon: c * scale for mon, c in p.terms.items()})


def _mora_weak_nf(p: Polynomial, basis: Sequence[Polynomial],
                  order: MonomialOrder, budget: list[int] | None,
                  cap: int | None = None, normalize: bool = False) -> Polynomial:
    if not order.is_local:
        raise ValueError("Mora normal form requires a local order")
    if not p.terms:
        return p

    def ecart(f: Polynomial, lm: Monomial) -> int:
        return f.total_degree() - mon_degree(lm)

    # Reducer pool; entries are (lm, ecart, polynomial, insertion index).
    pool = []
    for i, g in enumerate(basis):
        if g.terms:
            lm = g.leading_monomial(order)
            pool.append((lm, ecart(g, lm), g, i))
    counter = len(pool)
    h = p
    while h.terms:
        lm_h = h.leading_monomial(order)
        candidates = [e for e in pool if mon_divides(e[0], lm_h)]
        if not candidates:
            break
        if budget is not None:
            budget[0] -= 1
            lc = h.terms[lm_h]
            if (
                budget[0] < 0
                or len(h.terms) > _MORA_TERM_LIMIT
                or lc.numerator.bit_length() + lc.denominator.bit_length()
                > _MORA_COEFF_BITS
            ):
                raise _BudgetExhausted
        lm_g, ec_g, g, _ = min(
            candidates, key=lambda e: (e[1], order.key(e[0]), e[3])
        )
        if ec_g > ecart(h, lm_h):
            # Recruiting h itself keeps later reductions from raising the
            # ecart without bound; this is what makes Mora division terminate.
            pool.append((lm_h, ecart(h, lm_h), h, counter))
            counter += 1
        h = _reduce_once(h, lm_h, g, lm_g, order)
        if cap is not None:
            h = _truncate(h, cap)
        if normalize and h.terms:
            h = _primitive(h)
    return h


def _select_pair(pending: list[tuple[int, int]], lms: Sequence[Monomial],
                 order: MonomialOrder) -> tuple[int, int]:
    """Deterministic pair selection: lowest lcm degree, then order key, then age."""

    def rank(pair):
        i, j = pair
        lcm = mon_lcm(lms[i], lms[j])
        return (mon_degree(lcm), order.key(lcm), i, j)

    best = min(pending, key=rank)
    pending.remove(best)
    return best


def buchberger_global(gens: GeneratorSet) -> ReducedBasis:
    """The reduced Groebner basis of the ideal under the (global) order of ``gens``."""
    order = gens.order
    if order.is_local:
        raise ValueError("buchberger_global requires a global order")
    basis = [g.monic(order) for g in gens.generators if g.terms]
    if not basis:
        return ReducedBasis((), order, "global")
    lms = [g.leading_monomial(order) for g in basis]
    pending = [(i, j) for j in range(len(basis)) for i in range(j)]
    while pending:
        i, j = _select_pair(pending, lms, order)
        # Coprime leading monomials always reduce to zero.
        if mon_mul(lms[i], lms[j]) == mon_lcm(lms[i], lms[j]):
            continue
        h = global_normal_form(s_polynomial(basis[i], basis[j], order), basis, order)
        if h.terms:
            h = h.monic(order)
            basis.append(h)
            lms.append(h.leading_monomial(order))
            pending.extend((k, len(basis) - 1) for k in range(len(basis) - 1))
    return ReducedBasis(tuple(_autoreduce(basis, order)), order, "global")


def _minimalize(basis: list[Polynomial], order: MonomialOrder) -> list[Polynomial]:
    """Drop elements whose leading monomial is divisible by another's."""
    decorated = sorted(
        ((g.leading_monomial(order), g) for g in basis),
        key=lambda t: (mon_degree(t[0]), order.key(t[0])),
    )
    kept: list[tuple[Monomial, Polynomial]] = []
    for lm, g in decorated:
        if not any(mon_divides(lm_k, lm) for lm_k, _ in kept):
            kept.append((lm, g))
    return [g for _, g in kept]


def _autoreduce(basis: list[Polynomial], order: MonomialOrder) -> list[Polynomial]:
    """Minimalize, then reduce every tail against the others until stable."""
    current = _minimalize(basis, order)
    changed = True
    while changed:
        changed = False
        reduced: list[Polynomial] = []
        for i, g in enumerate(current):
            others = reduced + current[i + 1 :]
            r = global_normal_form(g, others, order) if others else g
            if not r.terms:
                changed = True
                continue
            r = r.monic(order)
            if r != g:
                changed = True
            reduced.append(r)
        current = reduced
    current.sort(key=lambda g: order.key(g.leading_monomial(order)), reverse=True)
    return current


def _homogenize(p: Polynomial) -> Polynomial:
    """Make every term of p the same total degree with a trailing new variable."""
    d = p.total_degree()
    return Polynomial(
        p.nvars + 1,
        {mon + (d - mon_degree(mon),): c for mon, c in p.terms.items()},
    )


def _dehomogenize(p: Polynomial) -> Polynomial:
    """Set the trailing variable to one.  Homogeneous terms never collide."""
    return Polynomial(p.nvars - 1, {mon[:-1]: c for mon, c in p.terms.items()})


def _homogenized_local(gens: GeneratorSet) -> ReducedBasis:
    """Minimal standard basis via a Groebner basis of the homogenized generators.

    Under the ``homogenized`` order the leading term of a homogeneous
    polynomial dehomogenizes to its local leading term, and any relation
    g = sum p_i f_i homogenizes to t^a g^h = sum t^(a_i) p_i^h f_i^h; so the
    dehomogenized Groebner basis elements lie in the original ideal and their
    leading monomials generate its full local leading ideal.
    """
    order = gens.order
    lifted = GeneratorSet(
        tuple(_homogenize(g) for g in gens.generators if g.terms),
        MonomialOrder("homogenized", order.nvars + 1),
    )
    polys = [_dehomogenize(b).monic(order) for b in buchberger_global(lifted).elements]
    minimal = _minimalize(polys, order)
    minimal.sort(key=lambda g: order.key(g.leading_monomial(order)), reverse=True)
    return ReducedBasis(tuple(minimal), order, "local")


def _degree_monomials(nvars: int, degree: int) -> list[Monomial]:
    if nvars == 1:
        return [(degree,)]
    return [
        (e,) + rest
        for e in range(degree + 1)
        for rest in _degree_monomials(nvars - 1, degree - e)
    ]


def _capped_local(gens: GeneratorSet, cap: int) -> ReducedBasis:
    """Minimal standard basis when the local ideal provably contains m^cap.

    Every dropped term of degree >= cap lies in the ideal already, so all
    arithmetic may be truncated below the cap; the monomial universe becomes
    finite and no reduction can creep.  The degree-cap monomials surviving
    minimalization are appended to complete the leading ideal; their pairs
    need no processing, since an S-polynomial against a monomial without a
    tail lands entirely in degree >= cap.
    """
    order = gens.order
    basis = []
    for g in gens.generators:
        t = _truncate(g, cap)
        if t.terms:
            basis.append(_primitive(t))
    lms = [g.leading_monomial(order) for g in basis]
    pending = [(i, j) for j in range(len(basis)) for i in range(j)]
    while pending:
        i, j = _select_pair(pending, lms, order)
        if mon_mul(lms[i], lms[j]) == mon_lcm(lms[i], lms[j]):
            continue
        h = _mora_weak_nf(
            _truncate(s_polynomial(basis[i], basis[j], order), cap),
            basis, order, None, cap, normalize=True,
        )
        if h.terms:
            h = _primitive(h)
            basis.append(h)
            lms.append(h.leading_monomial(order))
            pending.extend((k, len(basis) - 1) for k in range(len(basis) - 1))
    minimal = _minimalize(basis, order)
    kept = [g.leading_monomial(order) for g in minimal]
    for mon in _degree_monomials(order.nvars, cap):
        if not any(mon_divides(lm, mon) for lm in kept):
            minimal.append(Polynomial.monomial(order.nvars, mon, Fraction(1)))
    minimal.sort(key=lambda g: order.key(g.leading_monomial(order)), reverse=True)
    return ReducedBasis(tuple(g.monic(order) for g in minimal), order, "local")


def _local_noether_bound(lms: Sequence[Monomial], nvars: int) -> int | None:
    """Least N with every degree-N monomial divisible by one of ``lms``.

    None when the monomial ideal is not zero-dimensional.  Otherwise N is one
    more than the largest degree of a monomial outside the ideal, and every
    monomial of degree N or more is divisible by one of the generators.
    """
    bounds: list[int] = []
    for i in range(nvars):
        pure = [
            lm[i] for lm in lms if all(e == 0 for j, e in enumerate(lm) if j != i)
        ]
        if not pure:
            return None
        bounds.append(min(pure))
    best = 0
    for mon in product(*(range(b) for b in bounds)):
        if not any(mon_divides(lm, mon) for lm in lms):
            best = max(best, mon_degree(mon) + 1)
    return best


def _rescued_local(gens: GeneratorSet) -> ReducedBasis:
    """Exact reroute for inputs that trip the weak-normal-form guards.

    A run capped at degree c computes the ideal plus m^c, and its sub-cap
    leading monomials always belong to the true leading ideal.  Once those
    monomials cut out a finite quotient, one more than the largest standard
    monomial degree is a certified Noether exponent N: every monomial of
    degree at least N lies in the leading ideal, so it reduces into the
    ideal term by order-ascending term, giving m^N inside the ideal and
    making a run capped at max(c, N) exact.  Caps deepen geometrically while
    the certificate overshoots.  Inputs whose visible leading monomials
    never become zero-dimensional fall through to a global Groebner gate --
    a finite global quotient bounds the local one -- and finally to the
    homogenizing lift, which needs no bound at all.
    """
    order = gens.order
    cap = 6
    while cap <= 48:
        run = _capped_local(gens, cap)
        kept = [lm for lm in run.leading_monomials() if mon_degree(lm) < cap]
        bound = _local_noether_bound(kept, order.nvars)
        if bound is not None:
            if bound <= cap:
                return run
            if bound <= 2 * cap:
                return _capped_local(gens, bound)
        cap *= 2
    glob = buchberger_global(
        GeneratorSet(gens.generators, MonomialOrder.global_order(order.nvars))
    )
    try:
        dim = quotient_basis(glob).dimension
    except NonZeroDimensionalError:
        return _homogenized_local(gens)
    return _capped_local(gens, max(dim, 1))


def mora_local(gens: GeneratorSet) -> ReducedBasis:
    """A minimal standard basis of the ideal in the local ring at the origin.

    Buchberger's pair loop with Mora's weak normal form in place of ordinary
    division.  The result is minimal and monic; tails are not reduced, which
    is enough to determine the leading ideal and hence all quotient data.
    Inputs that drive the weak normal form past its step budget are rerouted
    through the homogenizing lift instead; the leading ideal (and so every
    quotient invariant) is the same either way.
    """
    order = gens.order
    if not order.is_local:
        raise ValueError("mora_local requires a local order")
    basis = [_primitive(g) for g in gens.generators if g.terms]
    if not basis:
        return ReducedBasis((), order, "local")
    lms = [g.leading_monomial(order) for g in basis]
    pending = [(i, j) for j in range(len(basis)) for i in range(j)]
    budget = [_MORA_STEP_LIMIT]
    try:
        while pending:
            i, j = _select_pair(pending, lms, order)
            # The coprimality criterion is order-independent: for coprime
            # leading monomials, spoly(f, g) = tail(g) f - tail(f) g is
            # already a standard representation, so the pair contributes
            # nothing.
            if mon_mul(lms[i], lms[j]) == mon_lcm(lms[i], lms[j]):
                continue
            h = _mora_weak_nf(
                s_polynomial(basis[i], basis[j], order), basis, order, budget,
                normalize=True,
            )
            if h.terms:
                h = _primitive(h)
                basis.append(h)
                lms.append(h.leading_monomial(order))
                pending.extend((k, len(basis) - 1) for k in range(len(basis) - 1))
    except _BudgetExhausted:
        return _rescued_local(gens)
    minimal = _minimalize(basis, order)
    minimal.sort(key=lambda g: order.key(g.leading_monomial(order)), reverse=True)
    return ReducedBasis(tuple(g.monic(order) for g in minimal), order, "local")


def normal_form(p: Polynomial, basis: ReducedBasis) -> Polynomial:
    """Normal form of p: canonical remainder (global) or Mora weak form (local)."""
    if basis.kind == "global":
        return global_normal_form(p, basis.elements, basis.order)
    return mora_normal_form(p, basis.elements, basis.order)


def quotient_basis(basis: ReducedBasis) -> QuotientBasis:
    """Standard monomials of the quotient by the ideal of ``basis``.

    The quotient is finite dimensional exactly when the leading ideal
    contains a pure power of every variable; otherwise
    NonZeroDimensionalError reports a variable with no such power.  The
    monomials outside the leading ideal are returned sorted by increasing
    degree (deterministic tie-break), and they form an order ideal: any
    divisor of a standard monomial is standard.
    """
    order = basis.order
    n = order.nvars
    lms = basis.leading_monomials()
    bounds: list[int] = []
    for i in range(n):
        pure = [
            lm[i]
            for lm in lms
            if all(e == 0 for j, e in enumerate(lm) if j != i)
        ]
        if not pure:
            raise NonZeroDimensionalError(
                f"no pure power of z{i + 1} in the leading ideal", variable=i
            )
        bounds.append(min(pure))
    monomials = [
        mon
        for mon in product(*(range(b) for b in bounds))
        if not any(mon_divides(lm, mon) for lm in lms)
    ]
    ranking = MonomialOrder("degrevlex", n)
    monomials.sort(key=ranking.key)
    return QuotientBasis(tuple(monomials))
