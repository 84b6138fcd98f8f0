"""Classical Gabidulin codes and the interpolation system shared with the
twisted decoder."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .gf import ExtensionField, FieldElement
from .linalg import nullspace
from .linpoly import LinearizedPoly, moore_determinant
from .rank_metric import rank_distance


def interpolation_system(alpha: Sequence[FieldElement], received: Sequence[FieldElement], k: int, t: int):
    """Coefficient matrix of P_1(alpha_i) - P_2(r_i) = 0, i = 1..n.

    Unknowns are ordered (a_0, ..., a_{n-t}, b_0, ..., b_{n-t-k}), the
    coefficients of P_1 and P_2.  Row i holds alpha_i^(q^j) in the a-block and
    -r_i^(q^j) in the b-block.
    """
    n = len(alpha)
    if len(received) != n:
        raise ValueError(f"received word has length {len(received)}, expected {n}")
    if t < 0 or 2 * n - 2 * t - k + 2 <= n:
        raise ValueError(f"t={t} leaves no underdetermined system for n={n}, k={k}")
    rows = []
    for a, r in zip(alpha, received):
        row = [a.frobenius(j) for j in range(n - t + 1)]
        row += [-r.frobenius(j) for j in range(n - t - k + 1)]
        rows.append(row)
    return rows


def split_solution(vec, n: int, k: int, t: int) -> tuple[LinearizedPoly, LinearizedPoly]:
    """Turn a solution vector of :func:`interpolation_system` into (P_1, P_2)."""
    field = vec[0].field
    na = n - t + 1
    return LinearizedPoly(field, vec[:na]), LinearizedPoly(field, vec[na:])


@dataclass(frozen=True)
class GabidulinCode:
    """Evaluation code {(f(alpha_1), ..., f(alpha_n)) : qdeg f < k}.

    ``alpha`` defaults to the power basis of the field and must be an
    F_q-basis of F_{q^n}.
    """

    field: ExtensionField
    k: int
    alpha: tuple[FieldElement, ...] | None = None

    def __post_init__(self):
        n = self.field.n
        if not 1 <= self.k < n:
            raise ValueError(f"dimension k={self.k} must satisfy 1 <= k < n={n}")
        if self.alpha is None:
            object.__setattr__(self, "alpha", tuple(self.field.basis()))
        else:
            object.__setattr__(self, "alpha", tuple(self.field(a) for a in self.alpha))
        if len(self.alpha) != n:
            raise ValueError(f"need {n} evaluation points, got {len(self.alpha)}")
        if not moore_determinant(self.alpha):
            raise ValueError("evaluation points are not an F_q-basis")

    @property
    def n(self) -> int:
        return self.field.n

    @property
    def minimum_distance(self) -> int:
        return self.n - self.k + 1

    @cached_property
    def _alpha_powers(self):
        return [[a.frobenius(i) for a in self.alpha] for i in range(self.n)]

    def evaluate(self, poly: LinearizedPoly) -> list[FieldElement]:
        """(poly(alpha_1), ..., poly(alpha_n))."""
        word = [self.field.zero] * self.n
        for i, c in enumerate(poly.coeffs):
            if c:
                powers = self._alpha_powers[i % self.n]
                word = [w + c * p for w, p in zip(word, powers)]
        return word

    def message_poly(self, msg: Sequence[FieldElement]) -> LinearizedPoly:
        if len(msg) != self.k:
            raise ValueError(f"message must have {self.k} coefficients, got {len(msg)}")
        return LinearizedPoly(self.field, [self.field(m) for m in msg])

    def encode(self, msg: Sequence[FieldElement]) -> list[FieldElement]:
        return self.evaluate(self.message_poly(msg))

    def interpolation_system(self, received, t: int):
        return interpolation_system(self.alpha, received, self.k, t)

    def decode(self, received: Sequence[FieldElement]) -> list[FieldElement] | None:
        """Message within rank distance floor((n-k)/2) of ``received``, or None.

        The error rank is unknown, so t runs downward from the decoding
        radius.  The top coefficient a_{n-t} is pinned to zero: P_2 o f has
        q-degree at most n-t-1, so on that subspace every solution satisfies
        P_1 = P_2 o f whenever t is at least the true error rank.
        """
        received = list(received)
        n, k = self.n, self.k
        if len(received) != n:
            raise ValueError(f"received word has length {len(received)}, expected {n}")
        for t in range((n - k) // 2, -1, -1):
            rows = self.interpolation_system(received, t)
            pin = [self.field.zero] * len(rows[0])
            pin[n - t] = self.field.one
            for vec in nullspace(rows + [pin], self.field):
                p1, p2 = split_solution(vec, n, k, t)
                if not p2:
                    continue
                quot, rem = p1.divide_left(p2)
                if rem or (quot and quot.qdeg >= k):
                    continue
                msg = [quot.coeff(i) for i in range(k)]
                if rank_distance(self.encode(msg), received) <= t:
                    return msg
        return None

    def to_json(self) -> dict:
        out = self.field.to_json()
        out.update(
            k=self.k,
            eta=self.field.zero.to_list(),
            r=0,
            alpha=[a.to_list() for a in self.alpha],
        )
        return out
