"""The quantum torus K_q: sparse Z^n-graded elements and their multiplication."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import NotMonomial, RankMismatch
from .scalars import (
    QuantumMatrix,
    deg_neg,
    deg_sub,
    degree_window,
    format_rational,
    to_rational,
    twist,
    unit_degree,
    zero_degree,
)


class QTElement:
    """A finite sum ``sum_lam c_lam x^lam`` with no zero coefficients stored.

    The element does not carry a quantum matrix: addition and scaling are
    independent of ``q``, and multiplication goes through :func:`qt_mul`.
    Instances are treated as immutable.
    """

    __slots__ = ("rank", "terms", "_hash")

    def __init__(self, rank: int, terms: Mapping[Sequence[int], object] | None = None):
        self.rank = rank
        clean = {}
        for deg, c in (terms or {}).items():
            deg = tuple(deg)
            if len(deg) != rank:
                raise RankMismatch(f"degree {deg} in an element of rank {rank}")
            c = to_rational(c)
            if c != 0:
                clean[deg] = clean.get(deg, 0) + c
        self.terms = {d: c for d, c in clean.items() if c != 0}
        self._hash = None

    # constructors ---------------------------------------------------------
    @classmethod
    def zero(cls, rank: int) -> "QTElement":
        return cls(rank)

    @classmethod
    def one(cls, rank: int) -> "QTElement":
        return cls(rank, {zero_degree(rank): 1})

    @classmethod
    def monomial(cls, lam: Sequence[int], coef=1) -> "QTElement":
        return cls(len(lam), {tuple(lam): coef})

    @classmethod
    def generator(cls, rank: int, i: int, power: int = 1) -> "QTElement":
        """``x_i ** power`` (1-based ``i``)."""
        return cls(rank, {tuple(power * x for x in unit_degree(rank, i)): 1})

    # queries --------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def degrees(self) -> list[tuple[int, ...]]:
        return sorted(self.terms)

    def coefficient(self, lam: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(lam), Fraction(0))

    def component(self, lam: Sequence[int]) -> "QTElement":
        lam = tuple(lam)
        return type(self)(self.rank, {lam: self.terms[lam]} if lam in self.terms else {})

    def leading(self) -> tuple[tuple[int, ...], Fraction]:
        """The single ``(degree, coefficient)`` of a monomial."""
        if len(self.terms) != 1:
            raise NotMonomial(f"element has {len(self.terms)} terms")
        return next(iter(self.terms.items()))

    # linear structure -----------------------------------------------------
    def _check(self, other: "QTElement") -> None:
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")
        if other.rank != self.rank:
            raise RankMismatch(f"ranks {self.rank} and {other.rank}")

    def __add__(self, other: "QTElement") -> "QTElement":
        self._check(other)
        out = dict(self.terms)
        for d, c in other.terms.items():
            out[d] = out.get(d, 0) + c
        return type(self)(self.rank, out)

    def __neg__(self) -> "QTElement":
        return type(self)(self.rank, {d: -c for d, c in self.terms.items()})

    def __sub__(self, other: "QTElement") -> "QTElement":
        return self + (-other)

    def scale(self, c) -> "QTElement":
        c = to_rational(c)
        return type(self)(self.rank, {d: c * v for d, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, QTElement):
            return NotImplemented
        return type(self) is type(other) and self.rank == other.rank and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.rank, frozenset(self.terms.items())))
        return self._hash

    def __iter__(self) -> Iterator[tuple[tuple[int, ...], Fraction]]:
        return iter(sorted(self.terms.items()))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for d, c in sorted(self.terms.items()):
            mono = "*".join(
                f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}" for i, e in enumerate(d) if e
            )
            if not mono:
                parts.append(format_rational(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{format_rational(c)}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def qt_mul(q: QuantumMatrix, a: QTElement, b: QTElement) -> QTElement:
    """Product in K_q, extending ``x^lam x^mu = twist(lam, mu) x^(lam+mu)`` bilinearly."""
    if a.rank != q.n or b.rank != q.n:
        raise RankMismatch(f"quantum matrix has rank {q.n}, elements have {a.rank} and {b.rank}")
    out: dict = {}
    for lam, c in a.terms.items():
        for mu, d in b.terms.items():
            nu = tuple(x + y for x, y in zip(lam, mu))
            out[nu] = out.get(nu, 0) + c * d * twist(q, lam, mu)
    return QTElement(q.n, out)


def qt_commutator(q: QuantumMatrix, a: QTElement, b: QTElement) -> QTElement:
    return qt_mul(q, a, b) - qt_mul(q, b, a)


def qt_invert_monomial(q: QuantumMatrix, lam) -> QTElement:
    """Two-sided inverse of ``x^lam`` (or of a nonzero one-term element).

    ``(c x^lam)^-1 = c^-1 twist(lam, -lam)^-1 x^-lam``.
    """
    c = Fraction(1)
    if isinstance(lam, QTElement):
        lam, c = lam.leading()
    lam = tuple(lam)
    if len(lam) != q.n:
        raise RankMismatch(f"degree of rank {len(lam)} for a rank-{q.n} torus")
    neg = deg_neg(lam)
    return QTElement.monomial(neg, 1 / (c * twist(q, lam, neg)))


def commutator_witness(q: QuantumMatrix, lam: Sequence[int], window: int) -> tuple[int, ...] | None:
    """A degree ``mu`` in the window with ``[x^mu, x^(lam-mu)] != 0``, if any."""
    lam = tuple(lam)
    for mu in degree_window(q.n, window):
        nu = deg_sub(lam, mu)
        if twist(q, mu, nu) != twist(q, nu, mu):
            return mu
    return None


def qt_commutator_component_full(q: QuantumMatrix, lam: Sequence[int], window: int) -> bool:
    """Whether ``[K_q, K_q]`` is witnessed to contain ``x^lam`` by a degree in the window.

    Every graded piece is one-dimensional, so ``[A, A]^lam`` is either 0 or
    all of ``A^lam``; it is the latter as soon as one pair of monomials of
    total degree ``lam`` fails to commute.
    """
    if window < 1:
        raise ValueError("window must be >= 1")
    return commutator_witness(q, lam, window) is not None


def qt_opposite(q: QuantumMatrix) -> QuantumMatrix:
    """Quantum matrix of the opposite algebra: ``K_{q^T}`` is graded-isomorphic to ``K_q^op``."""
    return QuantumMatrix(tuple(tuple(row) for row in zip(*q.entries)))


def qt_is_central_degree(q: QuantumMatrix, lam: Sequence[int]) -> bool:
    """Whether ``x^lam`` commutes with every generator."""
    return all(
        twist(q, lam, unit_degree(q.n, i)) == twist(q, unit_degree(q.n, i), lam)
        for i in range(1, q.n + 1)
    )


class QuantumTorus:
    """Convenience wrapper bundling a quantum matrix with the element operations.

    It also serves as the torus descriptor accepted by the axiom suites.
    """

    kind = "quantum"

    def __init__(self, q: QuantumMatrix):
        self.q = q
        self.rank = q.n

    def __repr__(self) -> str:
        return f"QuantumTorus({self.q!r})"

    def one(self) -> QTElement:
        return QTElement.one(self.rank)

    def zero(self) -> QTElement:
        return QTElement.zero(self.rank)

    def monomial(self, lam, coef=1) -> QTElement:
        return QTElement.monomial(lam, coef)

    def x(self, i: int, power: int = 1) -> QTElement:
        return QTElement.generator(self.rank, i, power)

    def mul(self, a: QTElement, b: QTElement) -> QTElement:
        return qt_mul(self.q, a, b)

    def inverse_monomial(self, a) -> QTElement:
        return qt_invert_monomial(self.q, a)

    def in_support(self, lam) -> bool:
        return len(lam) == self.rank

    def prod(self, factors: Iterable[QTElement]) -> QTElement:
        out = self.one()
        for f in factors:
            out = self.mul(out, f)
        return out

    def commutator_full(self, lam, window: int) -> bool:
        return qt_commutator_component_full(self.q, lam, window)
