"""Twisted Gabidulin codes G(eta, r) and their interpolation decoder.

A message (f_0, ..., f_{k-1}) is the linearized polynomial

    f = f_0 x + f_1 x^q + ... + f_{k-1} x^(q^(k-1)) + eta f_0^(q^r) x^(q^k)

evaluated at an F_q-basis alpha of F_{q^n}.  The code is F_q-linear and MRD
whenever N(eta) != (-1)^(nk).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from functools import cached_property
from typing import Iterator, Sequence

from .exceptions import NotMRDError, SizeError
from .gabidulin import GabidulinCode, interpolation_system, split_solution
from .gf import ExtensionField, FieldElement
from .linalg import nullspace, solve_mod
from .linpoly import LinearizedPoly, moore_determinant
from .rank_metric import rank_distance, rank_norm

#: Largest field the decoder will scan exhaustively for f_0.
DEFAULT_SCAN_LIMIT = 2**20


def norm_obstruction(field: ExtensionField, k: int) -> int:
    """(-1)^(nk) reduced into [0, q): the one norm value eta may not have."""
    return 1 if (field.n * k) % 2 == 0 else field.q - 1


def solve_quadratic(c2: FieldElement, c1: FieldElement, c0: FieldElement) -> list[FieldElement]:
    """Distinct roots of c2 z^2 + c1 z + c0 in F_{q^n}, sorted by index."""
    field = c0.field
    if not c2:
        if not c1:
            if not c0:
                raise ValueError("all coefficients are zero")
            return []
        return [-c0 / c1]
    b = c1 / c2
    c = c0 / c2
    if field.q == 2:
        if not b:
            roots = [field.sqrt(c)]
        else:
            # z = b y turns z^2 + b z + c into y^2 + y = c / b^2, an F_2-linear equation
            d = c / (b * b)
            images = [x * x + x for x in field.basis()]
            rows = [[img.coeffs[i] for img in images] for i in range(field.n)]
            sol = solve_mod(rows, d.coeffs, 2)
            if sol is None:
                return []
            y = field.element(sol)
            roots = [b * y, b * (y + 1)]
    else:
        s = field.sqrt(b * b - 4 * c)
        if s is None:
            return []
        half = field(2).inverse()
        roots = [(-b + s) * half, (-b - s) * half]
    return sorted(set(roots), key=lambda z: z.index)


@dataclass(frozen=True)
class TwistedCode:
    """The code G(eta, r) evaluated at ``alpha`` (power basis by default).

    Pass ``validate=False`` to skip the norm check, e.g. to build a
    deliberately non-MRD code for testing.
    """

    field: ExtensionField
    k: int
    eta: FieldElement
    r: int = 0
    alpha: tuple[FieldElement, ...] | None = None
    validate: bool = dc_field(default=True, compare=False, repr=False)

    def __post_init__(self):
        n = self.field.n
        if not 1 <= self.k < n:
            raise ValueError(f"dimension k={self.k} must satisfy 1 <= k < n={n}")
        if not 0 <= self.r < n:
            raise ValueError(f"twist exponent r={self.r} must lie in [0, {n})")
        object.__setattr__(self, "eta", self.field(self.eta))
        if self.alpha is None:
            object.__setattr__(self, "alpha", tuple(self.field.basis()))
        else:
            object.__setattr__(self, "alpha", tuple(self.field(a) for a in self.alpha))
        if len(self.alpha) != n:
            raise ValueError(f"need {n} evaluation points, got {len(self.alpha)}")
        if not moore_determinant(self.alpha):
            raise ValueError("evaluation points are not an F_q-basis")
        if self.validate and self.eta:
            bad = norm_obstruction(self.field, self.k)
            if int(self.eta.norm()) == bad:
                hint = ""
                if self.field.q == 2:
                    hint = " (over F_2 every nonzero eta has norm 1, so only eta = 0 is allowed)"
                raise NotMRDError(f"not MRD: N(eta) = {bad} = (-1)^(nk) mod q{hint}")

    @property
    def n(self) -> int:
        return self.field.n

    @property
    def minimum_distance(self) -> int:
        return self.n - self.k + 1

    @cached_property
    def _alpha_powers(self):
        return [[a.frobenius(i) for a in self.alpha] for i in range(self.n)]

    @cached_property
    def _inner_code(self) -> GabidulinCode | None:
        if self.k == 1:
            return None
        return GabidulinCode(self.field, self.k - 1, tuple(a.frobenius(1) for a in self.alpha))

    def message_poly(self, msg: Sequence[FieldElement]) -> LinearizedPoly:
        if len(msg) != self.k:
            raise ValueError(f"message must have {self.k} coefficients, got {len(msg)}")
        msg = [self.field(m) for m in msg]
        return LinearizedPoly(self.field, msg + [self.eta * msg[0].frobenius(self.r)])

    def evaluate(self, poly: LinearizedPoly) -> list[FieldElement]:
        word = [self.field.zero] * self.n
        for i, c in enumerate(poly.coeffs):
            if c:
                powers = self._alpha_powers[i % self.n]
                word = [w + c * p for w, p in zip(word, powers)]
        return word

    def encode(self, msg: Sequence[FieldElement]) -> list[FieldElement]:
        return self.evaluate(self.message_poly(msg))

    def interpolation_system(self, received, t: int):
        return interpolation_system(self.alpha, received, self.k, t)

    # -- decoding -------------------------------------------------------------

    def decode(self, received: Sequence[FieldElement], scan_limit: int = DEFAULT_SCAN_LIMIT):
        """Message whose codeword is within rank floor((n-k)/2) of ``received``.

        Returns None when no candidate verifies.  Each t from the decoding
        radius down to 0 is tried in turn: division P_1 / P_2 first, then
        recovery of f_0 from the extreme coefficients followed by a
        Gabidulin decode of the remaining k-1 coefficients.
        """
        received = list(received)
        if len(received) != self.n:
            raise ValueError(f"received word has length {len(received)}, expected {self.n}")
        for t in range((self.n - self.k) // 2, -1, -1):
            sols = self.interpolation_solutions(received, t)
            for p1, p2 in sols:
                msg = self.divide_candidate(p1, p2, received, t)
                if msg is not None:
                    return msg
            for f0 in self.f0_candidates(sols, t, scan_limit):
                msg = self.strip_and_decode(f0, received, t)
                if msg is not None:
                    return msg
        return None

    def interpolation_solutions(self, received, t: int) -> list[tuple[LinearizedPoly, LinearizedPoly]]:
        """Nullspace basis of the interpolation system as (P_1, P_2) pairs."""
        rows = self.interpolation_system(received, t)
        return [split_solution(v, self.n, self.k, t) for v in nullspace(rows, self.field)]

    def divide_candidate(self, p1, p2, received, t: int):
        """Message f with P_1 = P_2 o f and d(f(alpha), received) <= t, else None."""
        if not p2:
            return None
        quot, rem = p1.divide_left(p2)
        if rem or (quot and quot.qdeg > self.k):
            return None
        msg = [quot.coeff(i) for i in range(self.k)]
        if quot.coeff(self.k) != self.eta * msg[0].frobenius(self.r):
            return None
        if rank_distance(self.encode(msg), received) > t:
            return None
        return msg

    def f0_candidates(self, sols, t: int, scan_limit: int = DEFAULT_SCAN_LIMIT) -> Iterator[FieldElement]:
        """Values of f_0 consistent with every pair of interpolation solutions.

        For two solutions, (a_0 - b_0 z)(A' - B' z^(q^s)) = (a'_0 - b'_0 z)(A - B z^(q^s))
        with A = a_{n-t}, B = b_{n-t-k} eta^(q^(n-t-k)) and s = r + n - t - k mod n.
        For s = 0 this is a quadratic; otherwise the field is scanned.
        """
        field = self.field
        n, k = self.n, self.k
        s = (self.r + n - t - k) % n
        eta_pow = self.eta.frobenius(n - t - k)
        extremes = [
            (p1.coeff(0), p2.coeff(0), p1.coeff(n - t), p2.coeff(n - t - k) * eta_pow)
            for p1, p2 in sols
        ]
        seen: set[FieldElement] = set()
        nondegenerate = False
        for (a0, b0, A, B), (a0p, b0p, Ap, Bp) in itertools.combinations(extremes, 2):
            # D(z) = d0 + d1 z + d2 z^(q^s) + d3 z^(1 + q^s)
            d0 = a0 * Ap - a0p * A
            d1 = b0p * A - b0 * Ap
            d2 = a0p * B - a0 * Bp
            d3 = b0 * Bp - b0p * B
            if s == 0:
                if not (d3 or d1 + d2 or d0):
                    continue
                roots = solve_quadratic(d3, d1 + d2, d0)
            else:
                if not (d0 or d1 or d2 or d3):
                    continue
                roots = (
                    z
                    for z in _scan(field, scan_limit)
                    if not (d0 + d1 * z + (d2 + d3 * z) * z.frobenius(s))
                )
            nondegenerate = True
            for z in roots:
                if z not in seen:
                    seen.add(z)
                    yield z
        if not nondegenerate:
            for z in _scan(field, scan_limit):
                if z not in seen:
                    seen.add(z)
                    yield z

    def strip_and_decode(self, f0: FieldElement, received, t: int):
        """Remove f_0 x + eta f_0^(q^r) x^(q^k) and decode the rest as a Gabidulin word."""
        twist = self.eta * f0.frobenius(self.r)
        stripped = [
            y - f0 * a - twist * ak
            for y, a, ak in zip(received, self._alpha_powers[0], self._alpha_powers[self.k])
        ]
        if self._inner_code is None:
            if rank_norm(stripped) > t:
                return None
            msg = [f0]
        else:
            tail = self._inner_code.decode(stripped)
            if tail is None:
                return None
            msg = [f0] + tail
        if rank_distance(self.encode(msg), received) > t:
            return None
        return msg

    # -- serialization --------------------------------------------------------

    def to_json(self) -> dict:
        out = self.field.to_json()
        out.update(
            k=self.k,
            eta=self.eta.to_list(),
            r=self.r,
            alpha=[a.to_list() for a in self.alpha],
        )
        return out

    @classmethod
    def from_json(cls, data: dict, validate: bool = True) -> "TwistedCode":
        field = ExtensionField.from_json(data)
        eta = field.element(data["eta"]) if data.get("eta") is not None else field.zero
        alpha = data.get("alpha")
        if alpha is not None:
            alpha = tuple(field.element(a) for a in alpha)
        return cls(field, int(data["k"]), eta, int(data.get("r", 0)), alpha, validate=validate)


def load_code(data: dict) -> TwistedCode | GabidulinCode:
    """Parse a code spec; eta = 0 yields a :class:`GabidulinCode`."""
    code = TwistedCode.from_json(data)
    if not code.eta:
        return GabidulinCode(code.field, code.k, code.alpha)
    return code


def _scan(field: ExtensionField, limit: int) -> Iterator[FieldElement]:
    if field.order > limit:
        raise SizeError(f"f_0 scan over {field.order} elements exceeds limit {limit}")
    return field.elements()
