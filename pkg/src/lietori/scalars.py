"""Exact scalars, the degree lattice Z^n, quantum matrices and the twist cocycle.

Scalars are :class:`fractions.Fraction` throughout.  Degrees are plain tuples
of ints; every function that combines two degrees checks that their lengths
agree.

Monomials of a quantum torus are normal-ordered as
``x^lam = x_1^lam_1 x_2^lam_2 ... x_n^lam_n``.  Reordering
``x^lam * x^mu`` into that form only ever moves a power of ``x_j`` leftwards
past a power of ``x_i`` with ``i > j``, which gives

    x^lam * x^mu = twist(lam, mu) * x^(lam + mu),
    twist(lam, mu) = prod_{i > j} q_ij ** (lam_i * mu_j).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import ConstraintViolation, RankMismatch

Rational = Fraction
Degree = tuple  # tuple[int, ...]


def to_rational(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a :class:`Fraction`.

    Floats are refused: a float has usually already lost the exact value.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


def format_rational(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


# ---------------------------------------------------------------------------
# Degrees

def degree(*coords: int) -> tuple[int, ...]:
    return tuple(int(c) for c in coords)


def zero_degree(n: int) -> tuple[int, ...]:
    return (0,) * n


def unit_degree(n: int, i: int) -> tuple[int, ...]:
    """The basis vector eps_i of Z^n (1-based ``i``)."""
    if not 1 <= i <= n:
        raise ValueError(f"index {i} out of range 1..{n}")
    return tuple(1 if k == i - 1 else 0 for k in range(n))


def _check_ranks(lam: Sequence[int], mu: Sequence[int]) -> None:
    if len(lam) != len(mu):
        raise RankMismatch(f"degrees of rank {len(lam)} and {len(mu)}")


def deg_add(lam: Sequence[int], mu: Sequence[int]) -> tuple[int, ...]:
    _check_ranks(lam, mu)
    return tuple(a + b for a, b in zip(lam, mu))


def deg_sub(lam: Sequence[int], mu: Sequence[int]) -> tuple[int, ...]:
    _check_ranks(lam, mu)
    return tuple(a - b for a, b in zip(lam, mu))


def deg_neg(lam: Sequence[int]) -> tuple[int, ...]:
    return tuple(-a for a in lam)


def degree_window(n: int, w: int) -> Iterator[tuple[int, ...]]:
    """All degrees of rank ``n`` with coordinates in ``[-w, w]``, in lexicographic order."""
    return itertools.product(range(-w, w + 1), repeat=n)


# ---------------------------------------------------------------------------
# Quantum matrices

@dataclass(frozen=True)
class QuantumMatrix:
    """An ``n x n`` matrix with ``q_ii = 1`` and ``q_ij * q_ji = 1``.

    Build instances through :func:`make_quantum_matrix` (or the classmethods),
    which validate the two constraints.  ``entries`` is 0-indexed; the
    :meth:`__call__` accessor uses the 1-based indices of the mathematics.
    """

    entries: tuple[tuple[Fraction, ...], ...]

    @property
    def n(self) -> int:
        return len(self.entries)

    def __call__(self, i: int, j: int) -> Fraction:
        return self.entries[i - 1][j - 1]

    @classmethod
    def identity(cls, n: int) -> "QuantumMatrix":
        return make_quantum_matrix([[1] * n for _ in range(n)])

    @classmethod
    def from_upper(cls, n: int, values: Mapping[tuple[int, int], object]) -> "QuantumMatrix":
        """Build from ``{(i, j): q_ij}`` with ``i < j``; the rest is forced.

        >>> QuantumMatrix.from_upper(2, {(1, 2): -1})(2, 1)
        Fraction(-1, 1)
        """
        rows = [[Fraction(1)] * n for _ in range(n)]
        for (i, j), v in values.items():
            if not 1 <= i < j <= n:
                raise ValueError(f"expected 1 <= i < j <= {n}, got {(i, j)}")
            v = to_rational(v)
            if v == 0:
                raise ConstraintViolation(f"q_{i}{j} must be nonzero")
            rows[i - 1][j - 1] = v
            rows[j - 1][i - 1] = 1 / v
        return make_quantum_matrix(rows)

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(format_rational(x) for x in row) + "]" for row in self.entries)
        return f"QuantumMatrix([{body}])"


def make_quantum_matrix(entries: Iterable[Iterable[object]]) -> QuantumMatrix:
    rows = tuple(tuple(to_rational(x) for x in row) for row in entries)
    n = len(rows)
    if n == 0:
        raise ConstraintViolation("a quantum matrix needs n >= 1")
    for r, row in enumerate(rows):
        if len(row) != n:
            raise ConstraintViolation(f"row {r + 1} has length {len(row)}, expected {n}")
    for i in range(n):
        for j in range(n):
            if rows[i][j] == 0:
                raise ConstraintViolation(f"q_{i + 1}{j + 1} is zero")
        if rows[i][i] != 1:
            raise ConstraintViolation(f"q_{i + 1}{i + 1} = {format_rational(rows[i][i])}, expected 1")
    for i in range(n):
        for j in range(i + 1, n):
            if rows[i][j] * rows[j][i] != 1:
                raise ConstraintViolation(
                    f"q_{i + 1}{j + 1} * q_{j + 1}{i + 1} = "
                    f"{format_rational(rows[i][j] * rows[j][i])}, expected 1"
                )
    return QuantumMatrix(rows)


def is_elementary(q: QuantumMatrix) -> bool:
    return all(x in (1, -1) for row in q.entries for x in row)


def non_elementary_entries(q: QuantumMatrix) -> list[tuple[int, int, Fraction]]:
    """1-based ``(i, j, q_ij)`` for every ``i < j`` with ``q_ij`` not in {1, -1}."""
    return [
        (i + 1, j + 1, q.entries[i][j])
        for i in range(q.n)
        for j in range(i + 1, q.n)
        if q.entries[i][j] not in (1, -1)
    ]


@lru_cache(maxsize=1 << 16)
def _twist(q: QuantumMatrix, lam: tuple[int, ...], mu: tuple[int, ...]) -> Fraction:
    t = Fraction(1)
    e = q.entries
    for i in range(1, len(lam)):
        if lam[i] == 0:
            continue
        for j in range(i):
            k = lam[i] * mu[j]
            if k:
                t *= e[i][j] ** k
    return t


def twist(q: QuantumMatrix, lam: Sequence[int], mu: Sequence[int]) -> Fraction:
    """Scalar ``t`` with ``x^lam * x^mu = t * x^(lam+mu)`` in the quantum torus of ``q``."""
    if len(lam) != q.n or len(mu) != q.n:
        raise RankMismatch(f"quantum matrix has rank {q.n}, degrees have {len(lam)} and {len(mu)}")
    return _twist(q, tuple(lam), tuple(mu))


def twist_ratio(q: QuantumMatrix, lam: Sequence[int], mu: Sequence[int]) -> Fraction:
    """``twist(lam, mu) / twist(mu, lam)``: the commutation scalar of two monomials."""
    return twist(q, lam, mu) / twist(q, mu, lam)
