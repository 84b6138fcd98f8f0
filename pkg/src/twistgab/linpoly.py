"""Linearized polynomials c_0 x + c_1 x^q + ... + c_m x^(q^m) over F_{q^n}.

Multiplication is composition, which is F_q-bilinear but not commutative:
(a x^(q^i)) o (b x^(q^j)) = a b^(q^i) x^(q^(i+j)).
"""

from __future__ import annotations

from typing import Sequence

from .exceptions import RankError
from .gf import ExtensionField, FieldElement
from .linalg import determinant, nullspace_mod


class LinearizedPoly:
    """Immutable linearized polynomial.

    ``coeffs[i]`` is the coefficient of x^(q^i).  Trailing zeros are stripped,
    so the zero polynomial has empty ``coeffs`` and :attr:`qdeg` of None.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: ExtensionField, coeffs: Sequence[FieldElement] = ()):
        coeffs = list(coeffs)
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self.field = field
        self.coeffs = tuple(coeffs)

    @classmethod
    def zero(cls, field: ExtensionField) -> "LinearizedPoly":
        return cls(field)

    @classmethod
    def identity(cls, field: ExtensionField) -> "LinearizedPoly":
        return cls(field, [field.one])

    @classmethod
    def monomial(cls, field: ExtensionField, i: int, c: FieldElement | None = None) -> "LinearizedPoly":
        """c * x^(q^i)."""
        c = field.one if c is None else c
        return cls(field, [field.zero] * i + [c])

    @property
    def qdeg(self) -> int | None:
        return len(self.coeffs) - 1 if self.coeffs else None

    def coeff(self, i: int) -> FieldElement:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.field.zero

    def __bool__(self):
        return bool(self.coeffs)

    def __call__(self, x: FieldElement) -> FieldElement:
        acc = self.field.zero
        for i, c in enumerate(self.coeffs):
            if c:
                acc = acc + c * x.frobenius(i)
        return acc

    def __add__(self, other: "LinearizedPoly") -> "LinearizedPoly":
        if not isinstance(other, LinearizedPoly):
            return NotImplemented
        size = max(len(self.coeffs), len(other.coeffs))
        return LinearizedPoly(self.field, [self.coeff(i) + other.coeff(i) for i in range(size)])

    def __neg__(self) -> "LinearizedPoly":
        return LinearizedPoly(self.field, [-c for c in self.coeffs])

    def __sub__(self, other: "LinearizedPoly") -> "LinearizedPoly":
        if not isinstance(other, LinearizedPoly):
            return NotImplemented
        return self + (-other)

    def scale(self, c: FieldElement) -> "LinearizedPoly":
        """Left scalar multiple c * f (equal to (c x) o f)."""
        return LinearizedPoly(self.field, [c * a for a in self.coeffs])

    def __rmul__(self, c):
        if isinstance(c, (FieldElement, int)):
            return self.scale(self.field(c))
        return NotImplemented

    def compose(self, other: "LinearizedPoly") -> "LinearizedPoly":
        """self o other, i.e. x -> self(other(x))."""
        if not self or not other:
            return LinearizedPoly(self.field)
        out = [self.field.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = out[i + j] + a * b.frobenius(i)
        return LinearizedPoly(self.field, out)

    def __mul__(self, other):
        if isinstance(other, LinearizedPoly):
            return self.compose(other)
        return NotImplemented

    def divide_left(self, g: "LinearizedPoly") -> tuple["LinearizedPoly", "LinearizedPoly"]:
        """(quot, rem) with self = g o quot + rem and qdeg(rem) < qdeg(g)."""
        if not g:
            raise ZeroDivisionError("division by the zero linearized polynomial")
        field = self.field
        m = g.qdeg
        lead_inv = g.coeffs[-1].inverse()
        quot = [field.zero] * max(len(self.coeffs) - m, 0)
        rem = self
        while rem and rem.qdeg >= m:
            d = rem.qdeg - m
            # g_m u^(q^m) = lead(rem): undo the q^m power with x -> x^(q^(n-m))
            u = (rem.coeffs[-1] * lead_inv).frobenius(-m)
            quot[d] = quot[d] + u
            rem = rem - g.compose(LinearizedPoly.monomial(field, d, u))
        return LinearizedPoly(field, quot), rem

    def divide_right(self, g: "LinearizedPoly") -> tuple["LinearizedPoly", "LinearizedPoly"]:
        """(quot, rem) with self = quot o g + rem and qdeg(rem) < qdeg(g)."""
        if not g:
            raise ZeroDivisionError("division by the zero linearized polynomial")
        field = self.field
        m = g.qdeg
        lead = g.coeffs[-1]
        quot = [field.zero] * max(len(self.coeffs) - m, 0)
        rem = self
        while rem and rem.qdeg >= m:
            d = rem.qdeg - m
            u = rem.coeffs[-1] / lead.frobenius(d)
            quot[d] = quot[d] + u
            rem = rem - LinearizedPoly.monomial(field, d, u).compose(g)
        return LinearizedPoly(field, quot), rem

    def kernel(self) -> list[FieldElement]:
        """F_q-basis of the root space of ``self`` inside F_{q^n}."""
        if not self:
            raise ValueError("the zero polynomial vanishes on the whole field")
        field = self.field
        images = [self(b) for b in field.basis()]
        # column j holds the coordinates of f(beta^j)
        rows = [[img.coeffs[i] for img in images] for i in range(field.n)]
        return [field.element(v) for v in nullspace_mod(rows, field.q, field.n)]

    def __eq__(self, other):
        if not isinstance(other, LinearizedPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def to_json(self) -> list[list[int]]:
        return [c.to_list() for c in self.coeffs]

    @classmethod
    def from_json(cls, field: ExtensionField, data) -> "LinearizedPoly":
        return cls(field, [field.element(c) for c in data])

    def __repr__(self):
        if not self:
            return "LinearizedPoly(0)"
        terms = [f"({c!r})*x^[{i}]" for i, c in enumerate(self.coeffs) if c]
        return "LinearizedPoly(" + " + ".join(terms) + ")"


def moore_matrix(elements: Sequence[FieldElement], cols: int) -> list[list[FieldElement]]:
    """Row j is (x_j, x_j^q, ..., x_j^(q^(cols-1)))."""
    return [[x.frobenius(i) for i in range(cols)] for x in elements]


def moore_determinant(elements: Sequence[FieldElement], size: int | None = None) -> FieldElement:
    """Determinant of the square Moore matrix; zero iff the inputs are F_q-dependent."""
    elements = list(elements)
    if size is None:
        size = len(elements)
    if len(elements) != size:
        raise ValueError(f"need {size} elements for a {size}x{size} Moore matrix")
    if size == 0:
        raise ValueError("empty Moore matrix")
    field = elements[0].field
    return determinant(moore_matrix(elements, size), field)


def annihilator(basis: Sequence[FieldElement], field: ExtensionField | None = None) -> LinearizedPoly:
    """Subspace polynomial of q-degree k vanishing exactly on span(basis).

    Computed as the Moore determinant with a symbolic first row
    (x, x^q, ..., x^(q^k)), multiplied by (-1)^k so that the leading
    coefficient equals ``moore_determinant(basis)``.  With this scaling the
    constant-side coefficient is h_0 = (-1)^k h_k^q.
    """
    basis = list(basis)
    if field is None:
        if not basis:
            raise ValueError("field is required for an empty basis")
        field = basis[0].field
    k = len(basis)
    if k == 0:
        return LinearizedPoly.identity(field)
    if k > field.n:
        raise RankError(f"{k} elements cannot be independent in dimension {field.n}")
    rows = moore_matrix(basis, k + 1)
    sign = field.one if k % 2 == 0 else -field.one
    coeffs = []
    for i in range(k + 1):
        minor = [row[:i] + row[i + 1 :] for row in rows]
        cof = determinant(minor, field)
        # cofactor sign (-1)^i along the symbolic first row
        coeffs.append(sign * cof if i % 2 == 0 else -(sign * cof))
    if not coeffs[-1]:
        raise RankError("basis elements are linearly dependent over F_q")
    return LinearizedPoly(field, coeffs)
