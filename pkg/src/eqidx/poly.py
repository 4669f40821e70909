"""Sparse multivariate polynomials over exact rationals.

Monomials are exponent tuples of a fixed length; a polynomial maps monomials
to nonzero Fractions.  The module also provides the monomial orderings used
by the basis engines (degree orders for the polynomial ring, negative-degree
orders for the local ring at the origin, where the constant monomial is the
largest), the weight of a monomial under a diagonal action, and the parser
and printer for the textual input grammar.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import DimensionMismatchError, ParseError

Monomial = tuple[int, ...]


def mon_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mon_divides(a: Monomial, b: Monomial) -> bool:
    """Whether a divides b componentwise."""
    return all(x <= y for x, y in zip(a, b))


def mon_div(a: Monomial, b: Monomial) -> Monomial:
    """The quotient a/b; b must divide a."""
    return tuple(x - y for x, y in zip(a, b))


def mon_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mon_degree(a: Monomial) -> int:
    return sum(a)


def monomial_weight(mon: Monomial, weights: Sequence[int], modulus: int) -> int:
    """Weight of a monomial under the diagonal action with the given weights.

    The group element acting by the primitive root scales z^mon by the root
    raised to this value.
    """
    return sum(e * w for e, w in zip(mon, weights)) % modulus


_GLOBAL_KINDS = ("degrevlex", "deglex", "homogenized")
_LOCAL_KINDS = ("negdegrevlex", "negdeglex")


@dataclass(frozen=True)
class MonomialOrder:
    """A multiplicative total order on monomials in a fixed number of variables.

    Global kinds (``degrevlex``, ``deglex``) refine total degree, so the
    constant monomial is the smallest; local kinds (``negdegrevlex``,
    ``negdeglex``) refine negative total degree, so the constant monomial is
    the largest.  Larger sort key means larger monomial.

    The ``homogenized`` kind is a global order for a ring with a trailing
    homogenizing variable: total degree first, then the exponent of that
    variable, then reverse-negative on the rest.  On homogeneous polynomials
    it sorts exactly as ``negdegrevlex`` sorts their dehomogenizations, which
    lets a local standard-basis computation be lifted to a terminating
    global one.
    """

    kind: str
    nvars: int

    def __post_init__(self) -> None:
        if self.kind not in _GLOBAL_KINDS + _LOCAL_KINDS:
            raise ValueError(f"unknown monomial order kind {self.kind!r}")
        if self.nvars < 0:
            raise ValueError("nvars must be nonnegative")
        if self.kind == "homogenized" and self.nvars < 1:
            raise ValueError("homogenized order needs the homogenizing variable")

    @classmethod
    def global_order(cls, nvars: int) -> "MonomialOrder":
        return cls("degrevlex", nvars)

    @classmethod
    def local_order(cls, nvars: int) -> "MonomialOrder":
        return cls("negdegrevlex", nvars)

    @property
    def is_local(self) -> bool:
        return self.kind in _LOCAL_KINDS

    def key(self, mon: Monomial):
        d = sum(mon)
        if self.kind == "degrevlex":
            return (d, tuple(-e for e in reversed(mon)))
        if self.kind == "deglex":
            return (d, mon)
        if self.kind == "homogenized":
            return (d, mon[-1], tuple(-e for e in reversed(mon[:-1])))
        if self.kind == "negdegrevlex":
            return (-d, tuple(-e for e in reversed(mon)))
        return (-d, mon)

    def greater(self, a: Monomial, b: Monomial) -> bool:
        return self.key(a) > self.key(b)

    def max(self, monomials: Iterable[Monomial]) -> Monomial:
        return max(monomials, key=self.key)


class Polynomial:
    """An immutable sparse polynomial with Fraction coefficients.

    ``terms`` maps exponent tuples to nonzero coefficients.  Arithmetic never
    mutates; every operation validates that the ambient dimensions agree.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Monomial, Fraction] | None = None):
        if nvars < 0:
            raise ValueError("nvars must be nonnegative")
        clean: dict[Monomial, Fraction] = {}
        for mon, c in (terms or {}).items():
            mon = tuple(mon)
            if len(mon) != nvars or any(e < 0 or not isinstance(e, int) for e in mon):
                raise ValueError(f"bad exponent tuple {mon} for {nvars} variables")
            c = Fraction(c)
            if c != 0:
                clean[mon] = c
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls(nvars, {})

    @classmethod
    def constant(cls, nvars: int, value) -> "Polynomial":
        return cls(nvars, {(0,) * nvars: Fraction(value)})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "Polynomial":
        """The variable with zero-based index i."""
        if not 0 <= i < nvars:
            raise ValueError(f"variable index {i} out of range for {nvars} variables")
        mon = tuple(1 if j == i else 0 for j in range(nvars))
        return cls(nvars, {mon: Fraction(1)})

    @classmethod
    def monomial(cls, nvars: int, mon: Monomial, coefficient=1) -> "Polynomial":
        return cls(nvars, {tuple(mon): Fraction(coefficient)})

    def _check_compatible(self, other: "Polynomial") -> None:
        if self.nvars != other.nvars:
            raise DimensionMismatchError(
                f"polynomials in {self.nvars} and {other.nvars} variables"
            )

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.nvars, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_compatible(other)
        out = dict(self.terms)
        for mon, c in other.terms.items():
            s = out.get(mon, Fraction(0)) + c
            if s:
                out[mon] = s
            else:
                out.pop(mon, None)
        return Polynomial(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.nvars, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return Polynomial(self.nvars, {m: c * v for m, v in self.terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_compatible(other)
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mon = mon_mul(m1, m2)
                s = out.get(mon, Fraction(0)) + c1 * c2
                if s:
                    out[mon] = s
                else:
                    out.pop(mon, None)
        return Polynomial(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Polynomial.constant(self.nvars, 1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def total_degree(self) -> int:
        """Maximum degree of a term, or -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(mon_degree(m) for m in self.terms)

    def leading_monomial(self, order: MonomialOrder) -> Monomial:
        if not self.terms:
            raise ValueError("the zero polynomial has no leading monomial")
        return max(self.terms, key=order.key)

    def leading_coefficient(self, order: MonomialOrder) -> Fraction:
        return self.terms[self.leading_monomial(order)]

    def monic(self, order: MonomialOrder) -> "Polynomial":
        lc = self.leading_coefficient(order)
        if lc == 1:
            return self
        inv = Fraction(1) / lc
        return Polynomial(self.nvars, {m: inv * c for m, c in self.terms.items()})

    def partial_derivative(self, i: int) -> "Polynomial":
        if not 0 <= i < self.nvars:
            raise ValueError(f"variable index {i} out of range")
        out: dict[Monomial, Fraction] = {}
        for mon, c in self.terms.items():
            e = mon[i]
            if e == 0:
                continue
            lowered = tuple(v - 1 if j == i else v for j, v in enumerate(mon))
            out[lowered] = out.get(lowered, Fraction(0)) + c * e
        return Polynomial(self.nvars, out)

    def compose(self, substitutions: Sequence["Polynomial"]) -> "Polynomial":
        """Substitute a polynomial for each variable.

        All substituted polynomials must share a common number of variables,
        which becomes the ambient dimension of the result.
        """
        if len(substitutions) != self.nvars:
            raise DimensionMismatchError(
                f"{self.nvars} variables but {len(substitutions)} substitutions"
            )
        if self.nvars == 0:
            return Polynomial(0, dict(self.terms))
        target = substitutions[0].nvars
        for p in substitutions:
            if p.nvars != target:
                raise DimensionMismatchError("substitutions have mixed ambient dimensions")
        # Power tables avoid recomputing repeated powers of each substitution.
        maxes = [0] * self.nvars
        for mon in self.terms:
            for i, e in enumerate(mon):
                if e > maxes[i]:
                    maxes[i] = e
        powers: list[list[Polynomial]] = []
        for i, p in enumerate(substitutions):
            table = [Polynomial.constant(target, 1)]
            for _ in range(maxes[i]):
                table.append(table[-1] * p)
            powers.append(table)
        acc = Polynomial.zero(target)
        for mon, c in self.terms.items():
            term = Polynomial.constant(target, c)
            for i, e in enumerate(mon):
                if e:
                    term = term * powers[i][e]
            acc = acc + term
        return acc

    def evaluate(self, point: Sequence) -> Fraction:
        if len(point) != self.nvars:
            raise DimensionMismatchError("point dimension does not match")
        pt = [Fraction(v) for v in point]
        total = Fraction(0)
        for mon, c in self.terms.items():
            v = c
            for x, e in zip(pt, mon):
                if e:
                    v *= x**e
            total += v
        return total

    def shift(self, point: Sequence) -> "Polynomial":
        """Compose with the translation z -> z + point."""
        subs = [
            Polynomial.variable(self.nvars, i) + Fraction(point[i])
            for i in range(self.nvars)
        ]
        return self.compose(subs)

    def restrict_to(self, keep: Sequence[int]) -> "Polynomial":
        """Set every variable outside ``keep`` to zero and reindex onto ``keep``.

        ``keep`` is a strictly increasing sequence of zero-based indices; the
        result lives in len(keep) variables.
        """
        keep = tuple(keep)
        keep_set = set(keep)
        out: dict[Monomial, Fraction] = {}
        for mon, c in self.terms.items():
            if any(e and i not in keep_set for i, e in enumerate(mon)):
                continue
            reduced = tuple(mon[i] for i in keep)
            out[reduced] = out.get(reduced, Fraction(0)) + c
        return Polynomial(len(keep), out)

    def embed(self, nvars: int, positions: Sequence[int]) -> "Polynomial":
        """Reinterpret in a larger ring, sending variable i to ``positions[i]``."""
        positions = tuple(positions)
        if len(positions) != self.nvars:
            raise DimensionMismatchError("positions must list every current variable")
        out: dict[Monomial, Fraction] = {}
        for mon, c in self.terms.items():
            big = [0] * nvars
            for i, e in enumerate(mon):
                big[positions[i]] = e
            out[tuple(big)] = c
        return Polynomial(nvars, out)

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def __str__(self) -> str:
        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"Polynomial({self.nvars}, {format_polynomial(self)!r})"


class _Scanner:
    """Tokenizer for the polynomial grammar; tracks source positions for errors."""

    def __init__(self, text: str, nvars: int):
        self.text = text
        self.nvars = nvars
        self.pos = 0

    def skip_space(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_space()
        if self.pos >= len(self.text):
            return ""
        return self.text[self.pos]

    def take(self) -> str:
        ch = self.peek()
        if ch:
            self.pos += 1
        return ch

    def integer(self) -> int:
        self.skip_space()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise ParseError("expected an integer", start)
        return int(self.text[start : self.pos])


class _Parser:
    """Recursive descent for sums of products of powers of atoms.

    expr   := [sign] term ((+|-) term)*
    term   := factor (* factor)*
    factor := atom [^ INT]
    atom   := INT [/ INT] | VAR | ( expr )

    Variables are z1..zn; when n is 1 the bare name z is accepted as well.
    Exponents and literals are nonnegative integers, negative values arise
    only from the leading sign of a term.
    """

    def __init__(self, text: str, nvars: int):
        self.s = _Scanner(text, nvars)
        self.nvars = nvars

    def parse(self) -> Polynomial:
        p = self.expr()
        self.s.skip_space()
        if self.s.pos != len(self.s.text):
            raise ParseError(f"unexpected {self.s.text[self.s.pos]!r}", self.s.pos)
        return p

    def expr(self) -> Polynomial:
        sign = 1
        if self.s.peek() in ("+", "-"):
            if self.s.take() == "-":
                sign = -1
        acc = self.term() * sign
        while self.s.peek() in ("+", "-"):
            op = self.s.take()
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self) -> Polynomial:
        acc = self.factor()
        while self.s.peek() == "*":
            self.s.take()
            acc = acc * self.factor()
        return acc

    def factor(self) -> Polynomial:
        base = self.atom()
        if self.s.peek() == "^":
            self.s.take()
            e = self.s.integer()
            base = base**e
        return base

    def atom(self) -> Polynomial:
        ch = self.s.peek()
        if ch == "(":
            self.s.take()
            p = self.expr()
            if self.s.peek() != ")":
                raise ParseError("expected ')'", self.s.pos)
            self.s.take()
            return p
        if ch.isdigit():
            num = self.s.integer()
            if self.s.peek() == "/":
                self.s.take()
                at = self.s.pos
                den = self.s.integer()
                if den == 0:
                    raise ParseError("zero denominator", at)
                return Polynomial.constant(self.nvars, Fraction(num, den))
            return Polynomial.constant(self.nvars, num)
        if ch == "z":
            at = self.s.pos
            self.s.take()
            if self.s.pos < len(self.s.text) and self.s.text[self.s.pos].isdigit():
                idx = self.s.integer()
                if not 1 <= idx <= self.nvars:
                    raise ParseError(
                        f"variable z{idx} out of range for {self.nvars} variables", at
                    )
                return Polynomial.variable(self.nvars, idx - 1)
            if self.nvars == 1:
                return Polynomial.variable(1, 0)
            raise ParseError("bare variable z is only valid in one variable", at)
        raise ParseError(f"unexpected {ch!r}" if ch else "unexpected end of input", self.s.pos)


def parse_polynomial(text: str, nvars: int) -> Polynomial:
    """Parse the textual polynomial grammar into an exact polynomial."""
    return _Parser(text, nvars).parse()


def format_polynomial(p: Polynomial) -> str:
    """Canonical text form; parses back to an equal polynomial.

    Terms are listed in decreasing degree order with deterministic
    tie-breaking, coefficients are printed as integers or fractions, and unit
    coefficients are suppressed.
    """
    if not p.terms:
        return "0"
    order = MonomialOrder("degrevlex", p.nvars)
    parts: list[str] = []
    for mon in sorted(p.terms, key=order.key, reverse=True):
        c = p.terms[mon]
        negative = c < 0
        mag = -c if negative else c
        factors: list[str] = []
        if mag != 1 or mon_degree(mon) == 0:
            factors.append(str(mag))
        for i, e in enumerate(mon):
            if e == 1:
                factors.append(f"z{i + 1}")
            elif e > 1:
                factors.append(f"z{i + 1}^{e}")
        body = "*".join(factors)
        if not parts:
            parts.append(f"-{body}" if negative else body)
        else:
            parts.append(f"- {body}" if negative else f"+ {body}")
    return " ".join(parts)
