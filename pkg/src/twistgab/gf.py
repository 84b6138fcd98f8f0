"""Exact arithmetic in F_q (q prime) and its degree-n extension F_{q^n}.

Elements of F_{q^n} are stored as little-endian coefficient tuples in the
power basis 1, beta, ..., beta^(n-1) where beta is the class of x modulo the
defining polynomial.  Each coefficient is a canonical residue in [0, q).
"""

from __future__ import annotations

import itertools
from typing import Iterator, Sequence

from .exceptions import SizeError

#: Refuse to enumerate fields larger than this unless ``force=True``.
ENUMERATION_LIMIT = 2**24


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    if q % 2 == 0:
        return q == 2
    d = 3
    while d * d <= q:
        if q % d == 0:
            return False
        d += 2
    return True


def _poly_rem(num: Sequence[int], den: Sequence[int], q: int) -> list[int]:
    """Remainder of ``num`` by monic ``den`` over F_q, both low degree first."""
    rem = list(num)
    dd = len(den) - 1
    for top in range(len(rem) - 1, dd - 1, -1):
        c = rem[top] % q
        if c:
            shift = top - dd
            for j, dj in enumerate(den):
                rem[shift + j] = (rem[shift + j] - c * dj) % q
    return [c % q for c in rem[:dd]]


def _trim(p: list[int]) -> list[int]:
    while len(p) > 1 and not p[-1]:
        p.pop()
    return p


def _poly_mul(a: Sequence[int], b: Sequence[int], q: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % q
    return out


def _poly_sub(a: Sequence[int], b: Sequence[int], q: int) -> list[int]:
    size = max(len(a), len(b))
    a = list(a) + [0] * (size - len(a))
    b = list(b) + [0] * (size - len(b))
    return [(x - y) % q for x, y in zip(a, b)]


def _monic_polys(q: int, degree: int) -> Iterator[list[int]]:
    # itertools.product varies the last slot fastest, so reverse to make the
    # constant term the fastest-moving digit (integer order of the digits).
    for digits in itertools.product(range(q), repeat=degree):
        yield list(reversed(digits)) + [1]


def is_irreducible(modulus: Sequence[int], q: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    n = len(modulus) - 1
    if n < 1 or modulus[-1] % q != 1:
        return False
    for d in range(1, n // 2 + 1):
        for cand in _monic_polys(q, d):
            if not any(_poly_rem(modulus, cand, q)):
                return False
    return True


def default_modulus(q: int, n: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree ``n``, ordered by sum(c_i q^i)."""
    for cand in _monic_polys(q, n):
        if is_irreducible(cand, q):
            return tuple(cand)
    raise AssertionError("irreducible polynomials exist in every degree")


class ExtensionField:
    """The field F_{q^n} = F_q[x] / (modulus).

    Parameters
    ----------
    q : int
        Prime size of the base field.
    n : int
        Extension degree, at least 2.
    modulus : sequence of int, optional
        Monic irreducible of degree ``n``, low degree first.  Defaults to the
        smallest one in the order used by :func:`default_modulus`.
    """

    def __init__(self, q: int, n: int, modulus: Sequence[int] | None = None):
        if not is_prime(q):
            raise ValueError(f"q={q} is not prime")
        if n < 2:
            raise ValueError(f"extension degree must be >= 2, got {n}")
        if modulus is None:
            modulus = default_modulus(q, n)
        else:
            modulus = tuple(int(c) for c in modulus)
            if len(modulus) != n + 1 or modulus[-1] != 1:
                raise ValueError(f"modulus must be monic of degree {n}")
            if any(not 0 <= c < q for c in modulus):
                raise ValueError(f"modulus coefficients must lie in [0, {q})")
            if not is_irreducible(modulus, q):
                raise ValueError(f"modulus {list(modulus)} is reducible over F_{q}")
        self.q = q
        self.n = n
        self.modulus = tuple(modulus)
        self.order = q**n
        self._zero_t = (0,) * n
        # beta^(n+j) expressed in the power basis, j = 0..n-2
        self._reductions = self._reduction_table()
        self.zero = FieldElement(self, self._zero_t)
        self.one = FieldElement(self, (1,) + (0,) * (n - 1))
        self._frobenius_images = self._frobenius_table()
        self._nonresidue: FieldElement | None = None

    def _reduction_table(self) -> list[tuple[int, ...]]:
        q, n = self.q, self.n
        cur = [(-c) % q for c in self.modulus[:n]]
        table = [tuple(cur)]
        for _ in range(n - 2):
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                cur = [(c - top * m) % q for c, m in zip(cur, self.modulus)]
            table.append(tuple(cur))
        return table

    def _frobenius_table(self) -> list[list[tuple[int, ...]]]:
        # table[i][j] = (beta^j)^(q^i); the map is F_q-linear so these
        # columns determine x -> x^(q^i) completely.
        basis = self.basis()
        first = [b**self.q for b in basis]
        table = [[b.coeffs for b in basis]]
        prev = first
        for _ in range(1, self.n):
            table.append([p.coeffs for p in prev])
            prev = [self._apply_linear(first, p.coeffs) for p in prev]
        return table

    def _apply_linear(self, images, coeffs):
        acc = [0] * self.n
        for c, img in zip(coeffs, images):
            if c:
                img = img.coeffs if isinstance(img, FieldElement) else img
                for l, v in enumerate(img):
                    acc[l] += c * v
        return FieldElement(self, tuple(x % self.q for x in acc))

    # -- construction -------------------------------------------------------

    def __call__(self, value) -> FieldElement:
        if isinstance(value, FieldElement):
            if value.field != self:
                raise ValueError("element belongs to a different field")
            return value
        if isinstance(value, int):
            return FieldElement(self, (value % self.q,) + (0,) * (self.n - 1))
        return self.element(value)

    def element(self, coeffs: Sequence[int]) -> FieldElement:
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != self.n:
            raise ValueError(f"expected {self.n} coefficients, got {len(coeffs)}")
        if any(not 0 <= c < self.q for c in coeffs):
            raise ValueError(f"coefficients must lie in [0, {self.q})")
        return FieldElement(self, coeffs)

    def from_int(self, index: int) -> FieldElement:
        """Element whose base-q digits (little-endian) are those of ``index``."""
        if not 0 <= index < self.order:
            raise ValueError(f"index {index} out of range for F_{self.q}^{self.n}")
        digits = []
        for _ in range(self.n):
            index, d = divmod(index, self.q)
            digits.append(d)
        return FieldElement(self, tuple(digits))

    @property
    def gen(self) -> FieldElement:
        """The class beta of x."""
        return FieldElement(self, (0, 1) + (0,) * (self.n - 2))

    def basis(self) -> list[FieldElement]:
        """Power basis 1, beta, ..., beta^(n-1)."""
        out = []
        for i in range(self.n):
            c = [0] * self.n
            c[i] = 1
            out.append(FieldElement(self, tuple(c)))
        return out

    def elements(self, force: bool = False) -> Iterator[FieldElement]:
        """All q^n elements in increasing order of :meth:`FieldElement.index`."""
        if self.order > ENUMERATION_LIMIT and not force:
            raise SizeError(
                f"refusing to enumerate {self.order} elements (limit {ENUMERATION_LIMIT})"
            )
        for digits in itertools.product(range(self.q), repeat=self.n):
            yield FieldElement(self, digits[::-1])

    def random_element(self, rng) -> FieldElement:
        """Uniform element drawn with ``rng`` (a :class:`random.Random`)."""
        return FieldElement(self, tuple(rng.randrange(self.q) for _ in range(self.n)))

    # -- maps ---------------------------------------------------------------

    def frobenius(self, a: FieldElement, i: int = 1) -> FieldElement:
        """a^(q^i)."""
        i %= self.n
        if i == 0:
            return a
        return self._apply_linear(self._frobenius_images[i], a.coeffs)

    def norm(self, a: FieldElement) -> FieldElement:
        """Field norm F_{q^n} -> F_q, the product of all Frobenius conjugates."""
        acc = a
        for i in range(1, self.n):
            acc = acc * self.frobenius(a, i)
        return acc

    def is_square(self, a: FieldElement) -> bool:
        if not a or self.q == 2:
            return True
        return a ** ((self.order - 1) // 2) == self.one

    def sqrt(self, a: FieldElement) -> FieldElement | None:
        """A square root of ``a``, or None when ``a`` is a non-square."""
        if not a:
            return self.zero
        if self.q == 2:
            # squaring is the Frobenius, so its inverse is x^(2^(n-1))
            return self.frobenius(a, self.n - 1)
        if not self.is_square(a):
            return None
        # Tonelli-Shanks
        m, s = self.order - 1, 0
        while m % 2 == 0:
            m //= 2
            s += 1
        z = self._quadratic_nonresidue()
        c = z**m
        x = a ** ((m + 1) // 2)
        t = a**m
        while t != self.one:
            i, t2 = 0, t
            while t2 != self.one:
                t2 = t2 * t2
                i += 1
            b = c ** (2 ** (s - i - 1))
            x = x * b
            c = b * b
            t = t * c
            s = i
        return x

    def _quadratic_nonresidue(self) -> FieldElement:
        if self._nonresidue is None:
            for idx in range(2, self.order):
                z = self.from_int(idx)
                if not self.is_square(z):
                    self._nonresidue = z
                    break
        return self._nonresidue

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        return {"q": self.q, "n": self.n, "modulus": list(self.modulus)}

    @classmethod
    def from_json(cls, data: dict) -> "ExtensionField":
        return cls(int(data["q"]), int(data["n"]), data.get("modulus"))

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, ExtensionField):
            return NotImplemented
        return (self.q, self.n, self.modulus) == (other.q, other.n, other.modulus)

    def __hash__(self):
        return hash((self.q, self.n, self.modulus))

    def __repr__(self):
        return f"ExtensionField(q={self.q}, n={self.n}, modulus={list(self.modulus)})"


class FieldElement:
    """An element of an :class:`ExtensionField`.  Immutable."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: ExtensionField, coeffs: tuple[int, ...]):
        self.field = field
        self.coeffs = coeffs

    def _coerce(self, other) -> FieldElement | None:
        if isinstance(other, FieldElement):
            if other.field is not self.field and other.field != self.field:
                raise ValueError("operands belong to different fields")
            return other
        if isinstance(other, int):
            return self.field(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        q = self.field.q
        return FieldElement(self.field, tuple((a + b) % q for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        q = self.field.q
        return FieldElement(self.field, tuple((a - b) % q for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        q = self.field.q
        return FieldElement(self.field, tuple(-a % q for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            q = self.field.q
            return FieldElement(self.field, tuple(a * other % q for a in self.coeffs))
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        field = self.field
        q, n = field.q, field.n
        prod = [0] * (2 * n - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        prod[i + j] += a * b
        for d in range(2 * n - 2, n - 1, -1):
            c = prod[d] % q
            if c:
                for j, r in enumerate(field._reductions[d - n]):
                    prod[j] += c * r
        return FieldElement(field, tuple(c % q for c in prod[:n]))

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = self.field.one
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def inverse(self) -> FieldElement:
        """Inverse by the extended Euclidean algorithm in F_q[x]."""
        if not self:
            raise ZeroDivisionError("zero has no inverse")
        field = self.field
        q = field.q
        # invariant: s * self = r (mod modulus); polynomials low degree first
        r0, r1 = list(field.modulus), _trim(list(self.coeffs))
        s0, s1 = [0], [1]
        while len(r1) > 1:
            inv_lead = pow(r1[-1], -1, q)
            quot = [0] * (len(r0) - len(r1) + 1)
            rem = r0[:]
            for d in range(len(rem) - len(r1), -1, -1):
                c = rem[d + len(r1) - 1] * inv_lead % q
                quot[d] = c
                if c:
                    for j, b in enumerate(r1):
                        rem[d + j] = (rem[d + j] - c * b) % q
            r0, r1 = r1, _trim(rem)
            s0, s1 = s1, _trim(_poly_sub(s0, _poly_mul(quot, s1, q), q))
        scale = pow(r1[0], -1, q)
        out = [c * scale % q for c in s1] + [0] * field.n
        return FieldElement(field, tuple(out[: field.n]))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def frobenius(self, i: int = 1) -> FieldElement:
        return self.field.frobenius(self, i)

    def norm(self) -> FieldElement:
        return self.field.norm(self)

    def __bool__(self):
        return any(self.coeffs)

    def in_base_field(self) -> bool:
        return not any(self.coeffs[1:])

    def __int__(self):
        """Value of an element of the prime subfield as an integer in [0, q)."""
        if not self.in_base_field():
            raise ValueError(f"{self!r} is not in the prime field")
        return self.coeffs[0]

    @property
    def index(self) -> int:
        """sum(coeffs[i] * q**i); the position in :meth:`ExtensionField.elements`."""
        q = self.field.q
        value = 0
        for c in reversed(self.coeffs):
            value = value * q + c
        return value

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.coeffs == other.coeffs and self.field == other.field
        if isinstance(other, int):
            return self.coeffs == self.field(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def to_list(self) -> list[int]:
        return list(self.coeffs)

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                mono = "" if i == 0 else ("b" if i == 1 else f"b^{i}")
                coef = str(c) if (c != 1 or i == 0) else ""
                terms.append(coef + ("*" if coef and mono else "") + mono)
        return " + ".join(terms) if terms else "0"
