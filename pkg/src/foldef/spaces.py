"""Coordinatized subspaces of homogeneous one-forms.

The space of homogeneous one-forms of total degree e in n variables is given
the fixed coordinate basis [(component index, monomial)] with components in
increasing variable order and monomials in descending graded-lex order.  A
SubspaceBasis stores the reduced row echelon matrix of a subspace over that
basis; since RREF is a canonical form, two subspaces are equal exactly when
their row matrices are equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from . import linalg
from .forms import Form
from .poly import Monomial, Poly, monomials_of_degree
from .scalars import Scalar

Coordinate = tuple[int, Monomial]


def one_form_coordinates(n: int, total_degree: int) -> tuple[Coordinate, ...]:
    """Ordered coordinates of the degree-e one-forms (coefficients of degree e-1)."""
    if total_degree < 1:
        raise ValueError("one-forms need total degree >= 1")
    coords: list[Coordinate] = []
    for i in range(n):
        for mono in monomials_of_degree(n, total_degree - 1):
            coords.append((i, mono))
    return tuple(coords)


def form_to_vector(form: Form, coords: Sequence[Coordinate]) -> tuple[Scalar, ...]:
    if form.arity != 1:
        raise ValueError("expected a one-form")
    return tuple(form.component((i,)).coefficient(mono) for i, mono in coords)


def vector_to_form(n: int, vector: Sequence[Scalar], coords: Sequence[Coordinate]) -> Form:
    polys: dict[int, dict[Monomial, Scalar]] = {}
    for (i, mono), value in zip(coords, vector):
        if value != 0:
            polys.setdefault(i, {})[mono] = value
    return Form(n, 1, {(i,): Poly(n, terms) for i, terms in polys.items()})


@dataclass(frozen=True, eq=False)
class SubspaceBasis:
    """Canonical echelon basis of a space of homogeneous degree-e one-forms.

    When ``modulo`` is set, the rows span the canonical complement of the line
    spanned by ``modulo`` inside the original space; its dimension equals the
    dimension of the quotient space, and the rows are coset representatives.
    """

    ambient_dim: int
    degree: int
    coordinates: tuple[Coordinate, ...]
    rows: tuple[tuple[Scalar, ...], ...]
    generators: tuple[Form, ...] = ()
    modulo: Form | None = None

    def __eq__(self, other):
        if not isinstance(other, SubspaceBasis):
            return NotImplemented
        return (
            self.ambient_dim == other.ambient_dim
            and self.degree == other.degree
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.ambient_dim, self.degree, self.rows))

    @property
    def dim(self) -> int:
        return len(self.rows)

    def pivots(self) -> tuple[int, ...]:
        out = []
        for row in self.rows:
            for c, v in enumerate(row):
                if v != 0:
                    out.append(c)
                    break
        return tuple(out)

    def contains(self, form: Form) -> bool:
        vector = form_to_vector(form, self.coordinates)
        if self.modulo is not None:
            vector = _project_off_line(vector, form_to_vector(self.modulo, self.coordinates))
        return linalg.in_row_space(self.rows, self.pivots(), vector)

    def basis_forms(self) -> tuple[Form, ...]:
        return tuple(vector_to_form(self.ambient_dim, row, self.coordinates) for row in self.rows)


def _project_off_line(vector: Sequence[Scalar], line: Sequence[Scalar]) -> tuple[Scalar, ...]:
    pivot = next((c for c, v in enumerate(line) if v != 0), None)
    if pivot is None:
        raise ValueError("cannot quotient by the zero form")
    factor = vector[pivot] / line[pivot]
    if factor == 0:
        return tuple(vector)
    return tuple(a - factor * b for a, b in zip(vector, line))


def span_of_forms(
    forms: Iterable[Form],
    n: int,
    total_degree: int,
    modulo: Form | None = None,
) -> SubspaceBasis:
    """Echelonized span of homogeneous degree-e one-forms.

    Every form must be homogeneous of the stated total degree (zero forms are
    allowed and ignored).  With ``modulo`` set, returns the canonical
    complement of that line, i.e. the concrete quotient representation.
    """
    coords = one_form_coordinates(n, total_degree)
    generators = tuple(forms)
    vectors = []
    for f in generators:
        if f.ambient_dim != n:
            raise ValueError("generator has wrong ambient dimension")
        if not f.is_homogeneous(total_degree) and not f.is_zero():
            raise ValueError(f"generator is not homogeneous of total degree {total_degree}")
        vectors.append(form_to_vector(f, coords))
    rows, _ = linalg.rref(vectors)
    if modulo is not None:
        line = form_to_vector(modulo, coords)
        rows = linalg.line_complement(rows, line)
    return SubspaceBasis(n, total_degree, coords, rows, generators, modulo)


def vectors_to_subspace(
    vectors: Sequence[Sequence[Scalar]],
    n: int,
    total_degree: int,
    modulo: Form | None = None,
) -> SubspaceBasis:
    """Echelonize raw coordinate vectors into a SubspaceBasis."""
    coords = one_form_coordinates(n, total_degree)
    rows, _ = linalg.rref(vectors)
    if modulo is not None:
        rows = linalg.line_complement(rows, form_to_vector(modulo, coords))
    generators = tuple(vector_to_form(n, row, coords) for row in rows)
    return SubspaceBasis(n, total_degree, coords, rows, generators, modulo)
