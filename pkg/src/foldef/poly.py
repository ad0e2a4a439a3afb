"""Sparse multivariate polynomials with exact scalar coefficients.

A monomial is an exponent tuple, one entry per variable.  Terms are kept in a
dict; no zero coefficient is ever stored, so two polynomials are equal exactly
when their term dicts are equal.  The canonical term order used everywhere
(printing, matrix assembly, division) is graded lexicographic, descending:
higher total degree first, then lexicographically larger exponent tuple first
(x^2 > x*y > x*z > y^2 > ...).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .scalars import GaussianRational, Scalar, as_scalar

Monomial = tuple[int, ...]


def monomial_degree(m: Monomial) -> int:
    return sum(m)


def grlex_key(m: Monomial) -> tuple[int, Monomial]:
    """Sort key; sort with reverse=True for the canonical descending order."""
    return (sum(m), m)


def monomials_of_degree(n: int, degree: int) -> list[Monomial]:
    """All exponent tuples of the given total degree, in descending grlex order."""
    if degree < 0:
        return []
    if n == 1:
        return [(degree,)]
    out = []
    for first in range(degree, -1, -1):
        for rest in monomials_of_degree(n - 1, degree - first):
            out.append((first,) + rest)
    return out


class DegreeOfZero:
    """Singleton degree of the zero polynomial, distinct from every integer."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "DEGREE_OF_ZERO"


DEGREE_OF_ZERO = DegreeOfZero()

_SCALAR_TYPES = (int, Fraction, GaussianRational)


class Poly:
    """A polynomial in ``ambient_dim`` variables over Q or Q(i)."""

    __slots__ = ("ambient_dim", "terms")

    def __init__(self, ambient_dim: int, terms: dict[Monomial, Scalar] | None = None):
        if ambient_dim < 1:
            raise ValueError("ambient_dim must be >= 1")
        clean: dict[Monomial, Scalar] = {}
        for mono, coeff in (terms or {}).items():
            if len(mono) != ambient_dim or any(e < 0 for e in mono):
                raise ValueError(f"bad monomial {mono} for ambient_dim={ambient_dim}")
            coeff = as_scalar(coeff)
            if coeff != 0:
                clean[mono] = coeff
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "Poly":
        return cls(n, {})

    @classmethod
    def constant(cls, n: int, value) -> "Poly":
        return cls(n, {(0,) * n: as_scalar(value)})

    @classmethod
    def variable(cls, n: int, index: int) -> "Poly":
        if not 0 <= index < n:
            raise IndexError(f"variable index {index} out of range for {n} variables")
        exps = [0] * n
        exps[index] = 1
        return cls(n, {tuple(exps): Fraction(1)})

    @classmethod
    def monomial(cls, n: int, exponents: Iterable[int], coeff=1) -> "Poly":
        return cls(n, {tuple(exponents): as_scalar(coeff)})

    # -- predicates and structure ------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ambient_dim == other.ambient_dim and self.terms == other.terms
        if isinstance(other, _SCALAR_TYPES):
            return self == Poly.constant(self.ambient_dim, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.ambient_dim, frozenset(self.terms.items())))

    def sorted_terms(self) -> list[tuple[Monomial, Scalar]]:
        """Terms in descending grlex order (leading term first)."""
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def leading_term(self) -> tuple[Monomial, Scalar]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        mono = max(self.terms, key=grlex_key)
        return mono, self.terms[mono]

    def total_degree(self) -> int | None:
        """Max total degree of a term; None for the zero polynomial."""
        if not self.terms:
            return None
        return max(sum(m) for m in self.terms)

    def homogeneous_degree(self):
        """The common degree of all terms, None if mixed, DEGREE_OF_ZERO if zero."""
        if not self.terms:
            return DEGREE_OF_ZERO
        degrees = {sum(m) for m in self.terms}
        if len(degrees) == 1:
            return degrees.pop()
        return None

    def is_homogeneous(self) -> bool:
        return isinstance(self.homogeneous_degree(), int)

    def coefficient(self, mono: Monomial) -> Scalar:
        return self.terms.get(tuple(mono), Fraction(0))

    # -- ring operations ----------------------------------------------------

    def _require_same_dim(self, other: "Poly"):
        if self.ambient_dim != other.ambient_dim:
            raise ValueError(
                f"ambient dimension mismatch: {self.ambient_dim} vs {other.ambient_dim}"
            )

    def __add__(self, other):
        if isinstance(other, _SCALAR_TYPES):
            other = Poly.constant(self.ambient_dim, other)
        if not isinstance(other, Poly):
            return NotImplemented
        self._require_same_dim(other)
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            out[mono] = out.get(mono, Fraction(0)) + coeff
        return Poly(self.ambient_dim, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ambient_dim, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, _SCALAR_TYPES):
            other = Poly.constant(self.ambient_dim, other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, _SCALAR_TYPES):
            c = as_scalar(other)
            if c == 0:
                return Poly.zero(self.ambient_dim)
            return Poly(self.ambient_dim, {m: v * c for m, v in self.terms.items()})
        if not isinstance(other, Poly):
            return NotImplemented
        self._require_same_dim(other)
        out: dict[Monomial, Scalar] = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                mono = tuple(x + y for x, y in zip(ma, mb))
                out[mono] = out.get(mono, Fraction(0)) + ca * cb
        return Poly(self.ambient_dim, out)

    __rmul__ = __mul__

    def __pow__(self, power: int):
        if not isinstance(power, int) or power < 0:
            raise ValueError("polynomial powers must be non-negative integers")
        result = Poly.constant(self.ambient_dim, 1)
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base if power > 1 else base
            power >>= 1
        return result

    # -- calculus and evaluation ---------------------------------------------

    def diff(self, index: int) -> "Poly":
        """Exact partial derivative with respect to variable ``index``."""
        if not 0 <= index < self.ambient_dim:
            raise IndexError(
                f"variable index {index} out of range for {self.ambient_dim} variables"
            )
        out: dict[Monomial, Scalar] = {}
        for mono, coeff in self.terms.items():
            e = mono[index]
            if e == 0:
                continue
            lowered = list(mono)
            lowered[index] = e - 1
            out[tuple(lowered)] = coeff * e
        return Poly(self.ambient_dim, out)

    def evaluate(self, point: Iterable) -> Scalar:
        values = [as_scalar(v) for v in point]
        if len(values) != self.ambient_dim:
            raise ValueError(
                f"point has {len(values)} coordinates, expected {self.ambient_dim}"
            )
        total: Scalar = Fraction(0)
        for mono, coeff in self.terms.items():
            term = coeff
            for exp, val in zip(mono, values):
                for _ in range(exp):
                    term = term * val
            total = total + term
        return total

    def exact_div(self, den: "Poly") -> "Poly | None":
        """The quotient q with self == q * den, or None when den does not divide."""
        self._require_same_dim(den)
        if den.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        quotient = Poly.zero(self.ambient_dim)
        remainder = self
        den_mono, den_coeff = den.leading_term()
        while not remainder.is_zero():
            rem_mono, rem_coeff = remainder.leading_term()
            diff = tuple(a - b for a, b in zip(rem_mono, den_mono))
            if any(e < 0 for e in diff):
                return None
            factor = Poly.monomial(self.ambient_dim, diff, rem_coeff / den_coeff)
            quotient = quotient + factor
            remainder = remainder - factor * den
        return quotient

    # -- reshaping ------------------------------------------------------------

    def lift(self, new_dim: int) -> "Poly":
        """View in a larger ambient space; new trailing variables do not occur."""
        if new_dim < self.ambient_dim:
            raise ValueError("lift cannot shrink the ambient dimension")
        pad = (0,) * (new_dim - self.ambient_dim)
        return Poly(new_dim, {m + pad: c for m, c in self.terms.items()})

    def substitute(self, index: int, value) -> "Poly":
        """Replace variable ``index`` by a scalar; the slot stays in the tuple."""
        if not 0 <= index < self.ambient_dim:
            raise IndexError("variable index out of range")
        value = as_scalar(value)
        out: dict[Monomial, Scalar] = {}
        for mono, coeff in self.terms.items():
            scale: Scalar = Fraction(1)
            for _ in range(mono[index]):
                scale = scale * value
            if scale == 0:
                continue
            reduced = list(mono)
            reduced[index] = 0
            key = tuple(reduced)
            out[key] = out.get(key, Fraction(0)) + coeff * scale
        return Poly(self.ambient_dim, out)

    def drop_last_variable(self) -> "Poly":
        """Remove the last variable; it must not occur in any term."""
        if self.ambient_dim < 2:
            raise ValueError("cannot drop below one variable")
        if any(m[-1] != 0 for m in self.terms):
            raise ValueError("last variable still occurs; substitute it first")
        return Poly(self.ambient_dim - 1, {m[:-1]: c for m, c in self.terms.items()})

    def __repr__(self):
        from .expressions import render_poly

        return f"Poly({render_poly(self)!r})"
