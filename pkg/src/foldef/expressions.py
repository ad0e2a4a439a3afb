"""Parsing and canonical rendering of polynomial and one-form expressions.

Grammar (no implicit multiplication):

    expr    :=  ["+"|"-"] term { ("+"|"-") term }
    term    :=  factor { "*" factor }
    factor  :=  atom [ "^" INT ]
    atom    :=  INT [ "/" INT ]  |  "i"  |  VAR  |  "d" VAR  |  "(" expr ")"

``i`` is the imaginary unit unless a variable of that name is declared; a
name ``d<var>`` is the differential of a declared variable unless it is
itself declared.  One-form input must be a sum of terms each containing
exactly one differential factor; differentials may not be raised to powers
or appear inside parentheses.

Rendering is canonical: terms in descending graded-lex order, components in
increasing variable order, so parse(render(x)) == x and rendering is stable
across runs.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .forms import Form
from .poly import Poly
from .scalars import Scalar, make_scalar, render_scalar, scalar_parts


class ExpressionError(ValueError):
    """Syntax or naming error, with the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at offset {position})")
        self.position = position


def default_variables(n: int) -> list[str]:
    if n <= 4:
        return ["x", "y", "z", "w"][:n]
    return [f"x{k + 1}" for k in range(n)]


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|([-+*^/()]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            raise ExpressionError(f"unexpected character {stripped[0]!r}", len(text) - len(stripped))
        number, name, op = match.groups()
        start = match.end() - len(match.group().lstrip())
        if number is not None:
            tokens.append(("int", number, start))
        elif name is not None:
            tokens.append(("name", name, start))
        else:
            tokens.append(("op", op, start))
        pos = match.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Differential:
    __slots__ = ("index", "position")

    def __init__(self, index: int, position: int):
        self.index = index
        self.position = position


class _Parser:
    def __init__(self, text: str, variables: list[str]):
        self.text = text
        self.variables = variables
        self.n = max(len(variables), 1)
        self.tokens = _tokenize(text)
        self.cursor = 0

    def peek(self):
        return self.tokens[self.cursor]

    def advance(self):
        token = self.tokens[self.cursor]
        self.cursor += 1
        return token

    def expect_op(self, op: str):
        kind, value, pos = self.peek()
        if kind != "op" or value != op:
            raise ExpressionError(f"expected {op!r}", pos)
        return self.advance()

    # each parsed term is (Poly coefficient, differential index or None)

    def parse_sum(self, allow_diff: bool) -> list[tuple[Poly, int | None]]:
        terms = []
        sign = 1
        kind, value, _ = self.peek()
        if kind == "op" and value in "+-":
            self.advance()
            sign = -1 if value == "-" else 1
        terms.append(self._signed_term(sign, allow_diff))
        while True:
            kind, value, pos = self.peek()
            if kind == "op" and value in "+-":
                self.advance()
                terms.append(self._signed_term(-1 if value == "-" else 1, allow_diff))
            elif kind == "end" or (kind == "op" and value == ")"):
                return terms
            else:
                raise ExpressionError(f"unexpected token {value!r}", pos)

    def _signed_term(self, sign: int, allow_diff: bool) -> tuple[Poly, int | None]:
        poly, diff = self.parse_term(allow_diff)
        return (poly if sign == 1 else -poly), diff

    def parse_term(self, allow_diff: bool) -> tuple[Poly, int | None]:
        coeff = Poly.constant(self.n, 1)
        diff_index: int | None = None
        while True:
            factor = self.parse_factor(allow_diff)
            if isinstance(factor, _Differential):
                if diff_index is not None:
                    raise ExpressionError("more than one differential in a term", factor.position)
                diff_index = factor.index
            else:
                coeff = coeff * factor
            kind, value, _ = self.peek()
            if kind == "op" and value == "*":
                self.advance()
                continue
            return coeff, diff_index

    def parse_factor(self, allow_diff: bool):
        atom = self.parse_atom(allow_diff)
        kind, value, pos = self.peek()
        if kind == "op" and value == "^":
            self.advance()
            kind, value, pos = self.peek()
            if kind != "int":
                raise ExpressionError("exponent must be an integer literal", pos)
            self.advance()
            if isinstance(atom, _Differential):
                raise ExpressionError("differentials cannot be raised to powers", pos)
            return atom ** int(value)
        return atom

    def parse_atom(self, allow_diff: bool):
        kind, value, pos = self.advance()
        if kind == "int":
            nxt_kind, nxt_value, nxt_pos = self.peek()
            if nxt_kind == "op" and nxt_value == "/":
                self.advance()
                den_kind, den_value, den_pos = self.peek()
                if den_kind != "int":
                    raise ExpressionError("fraction denominator must be an integer", den_pos)
                self.advance()
                if int(den_value) == 0:
                    raise ExpressionError("zero denominator", den_pos)
                return Poly.constant(self.n, Fraction(int(value), int(den_value)))
            return Poly.constant(self.n, int(value))
        if kind == "name":
            if value in self.variables:
                return Poly.variable(self.n, self.variables.index(value))
            if value == "i":
                return Poly.constant(self.n, make_scalar(0, 1))
            if value.startswith("d") and value[1:] in self.variables:
                if not allow_diff:
                    raise ExpressionError(f"misplaced differential {value!r}", pos)
                return _Differential(self.variables.index(value[1:]), pos)
            raise ExpressionError(f"undeclared variable {value!r}", pos)
        if kind == "op" and value == "(":
            terms = self.parse_sum(allow_diff=False)
            self.expect_op(")")
            total = Poly.zero(self.n)
            for poly, _ in terms:
                total = total + poly
            return total
        raise ExpressionError(f"unexpected token {value!r}" if value else "unexpected end of input", pos)


def parse_poly(text: str, variables: list[str]) -> Poly:
    """Parse a polynomial in the declared variables."""
    parser = _Parser(text, list(variables))
    terms = parser.parse_sum(allow_diff=False)
    kind, value, pos = parser.peek()
    if kind != "end":
        raise ExpressionError(f"unexpected trailing token {value!r}", pos)
    total = Poly.zero(parser.n)
    for poly, _ in terms:
        total = total + poly
    return total


def parse_form(text: str, variables: list[str]) -> Form:
    """Parse a one-form: a sum of terms each with exactly one differential."""
    parser = _Parser(text, list(variables))
    terms = parser.parse_sum(allow_diff=True)
    kind, value, pos = parser.peek()
    if kind != "end":
        raise ExpressionError(f"unexpected trailing token {value!r}", pos)
    n = parser.n
    components: dict[tuple[int, ...], Poly] = {}
    for poly, diff_index in terms:
        if diff_index is None:
            if poly.is_zero():
                continue
            raise ExpressionError("one-form term without a differential", 0)
        key = (diff_index,)
        existing = components.get(key)
        components[key] = poly if existing is None else existing + poly
    return Form(n, 1, components)


def parse_scalar(text: str) -> Scalar:
    """Parse a constant expression (integer, fraction, or Gaussian literal)."""
    poly = parse_poly(text, [])
    constant = poly.coefficient((0,) * poly.ambient_dim)
    return constant


def _render_monomial(mono, names: list[str]) -> str:
    parts = []
    for name, exp in zip(names, mono):
        if exp == 0:
            continue
        parts.append(name if exp == 1 else f"{name}^{exp}")
    return "*".join(parts)


def render_poly(poly: Poly, names: list[str] | None = None) -> str:
    """Canonical expression string; parse_poly(render_poly(p)) == p."""
    if names is None:
        names = default_variables(poly.ambient_dim)
    if poly.is_zero():
        return "0"
    pieces: list[str] = []
    for mono, coeff in poly.sorted_terms():
        monomial = _render_monomial(mono, names)
        re, im = scalar_parts(coeff)
        if im != 0:
            body = f"({render_scalar(coeff)})"
            if monomial:
                body = f"{body}*{monomial}"
            pieces.append(("+", body))
            continue
        negative = re < 0
        magnitude = -re if negative else re
        if not monomial:
            body = render_scalar(magnitude)
        elif magnitude == 1:
            body = monomial
        else:
            body = f"{render_scalar(magnitude)}*{monomial}"
        pieces.append(("-" if negative else "+", body))
    first_sign, first_body = pieces[0]
    out = first_body if first_sign == "+" else f"-{first_body}"
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


def render_form(form: Form, names: list[str] | None = None) -> str:
    """Canonical one-form string; parse_form(render_form(f)) == f."""
    if form.arity != 1:
        raise ValueError("canonical rendering is defined for one-forms")
    if names is None:
        names = default_variables(form.ambient_dim)
    if form.is_zero():
        return "0"
    pieces = []
    for (index,), poly in form.sorted_components():
        differential = f"d{names[index]}"
        if poly == Poly.constant(form.ambient_dim, 1):
            pieces.append(differential)
        else:
            pieces.append(f"({render_poly(poly, names)})*{differential}")
    return " + ".join(pieces)
