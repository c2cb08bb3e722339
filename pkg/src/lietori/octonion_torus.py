"""The octonion n-torus (n >= 3) through a Cayley-Dickson model.

Internally the algebra is three Cayley-Dickson doublings of the commutative
Laurent ring ``R = K[u_1^+-1, u_2^+-1, u_3^+-1, x_4^+-1, ..., x_n^+-1]`` with
parameters ``u_1, u_2, u_3``:

    (a, b)(c, d) = (a c + u_k conj(d) b,  d a + b conj(c)),
    conj(a, b)   = (conj(a), -b).

The k-th doubling generator ``v_k`` plays the role of ``x_k`` and squares to
``u_k``.  The 8 basis units ``e_S`` are indexed by subsets ``S`` of
``{1, 2, 3}`` (bit ``k - 1`` for ``v_k``), and the canonical monomial of
degree ``lam`` is

    x^lam = u^floor(lam/2) e_S(lam) x_4^lam_4 ... x_n^lam_n,   S(lam) = {i <= 3 : lam_i odd}.

Each graded piece is spanned by one such monomial, so multiplication is
``x^lam x^mu = f(lam, mu) x^(lam+mu)`` with a sign ``f`` read off the table
of unit products.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import OctonionRankBelow3, RankMismatch
from .quantum_torus import QTElement
from .scalars import deg_neg, zero_degree


class OctElement(QTElement):
    """Element of the octonion torus: sparse ``{degree: coefficient}`` on canonical monomials."""

    __slots__ = ()

    def __init__(self, rank: int, terms=None):
        if rank < 3:
            raise OctonionRankBelow3(f"the octonion torus needs n >= 3, got {rank}")
        super().__init__(rank, terms)


# ---------------------------------------------------------------------------
# Cayley-Dickson arithmetic on the 8 units over Laurent monomials in u_1..u_3.
# A ring element is {exponent triple: Fraction}; a level-k element is a list of
# 2**k ring elements.

def _ring_add(a: dict, b: dict, sign: int = 1) -> dict:
    out = dict(a)
    for e, c in b.items():
        out[e] = out.get(e, 0) + sign * c
    return {e: c for e, c in out.items() if c != 0}


def _ring_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            out[e] = out.get(e, 0) + c1 * c2
    return {e: c for e, c in out.items() if c != 0}


def _u(k: int) -> dict:
    return {tuple(1 if i == k - 1 else 0 for i in range(3)): Fraction(1)}


def _cd_conj(x: list, level: int) -> list:
    if level == 0:
        return x
    h = len(x) // 2
    return _cd_conj(x[:h], level - 1) + [{e: -c for e, c in r.items()} for r in x[h:]]


def _cd_add(x: list, y: list, sign: int = 1) -> list:
    return [_ring_add(a, b, sign) for a, b in zip(x, y)]


def _cd_mul(x: list, y: list, level: int) -> list:
    if level == 0:
        return [_ring_mul(x[0], y[0])]
    h = len(x) // 2
    a, b, c, d = x[:h], x[h:], y[:h], y[h:]
    gamma = [_u(level)] + [{} for _ in range(h - 1)]
    first = _cd_add(_cd_mul(a, c, level - 1),
                    _cd_mul(gamma, _cd_mul(_cd_conj(d, level - 1), b, level - 1), level - 1))
    second = _cd_add(_cd_mul(d, a, level - 1), _cd_mul(b, _cd_conj(c, level - 1), level - 1))
    return first + second


def _unit(m: int) -> list:
    return [{(0, 0, 0): Fraction(1)} if k == m else {} for k in range(8)]


@lru_cache(maxsize=None)
def unit_product(a: int, b: int) -> tuple[int, tuple[int, int, int]]:
    """``e_a e_b = sign * u^k * e_(a xor b)``; returns ``(sign, k)``."""
    prod = _cd_mul(_unit(a), _unit(b), 3)
    nonzero = [(m, r) for m, r in enumerate(prod) if r]
    assert len(nonzero) == 1 and nonzero[0][0] == a ^ b, nonzero
    ring = nonzero[0][1]
    assert len(ring) == 1
    (k, c), = ring.items()
    assert c in (1, -1)
    return int(c), k


def _split(lam: Sequence[int]) -> tuple[int, tuple[int, int, int]]:
    mask = sum(1 << i for i in range(3) if lam[i] % 2)
    return mask, (lam[0] // 2, lam[1] // 2, lam[2] // 2)


@lru_cache(maxsize=1 << 16)
def _sign(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    a, fl_lam = _split(lam)
    b, fl_mu = _split(mu)
    s, k = unit_product(a, b)
    _, fl_sum = _split(tuple(x + y for x, y in zip(lam, mu)))
    assert all(fl_lam[i] + fl_mu[i] + k[i] == fl_sum[i] for i in range(3))
    return s


def oct_sign(lam: Sequence[int], mu: Sequence[int]) -> int:
    """The sign ``f(lam, mu)`` with ``x^lam x^mu = f(lam, mu) x^(lam+mu)``."""
    if len(lam) != len(mu):
        raise RankMismatch(f"degrees of rank {len(lam)} and {len(mu)}")
    if len(lam) < 3:
        raise OctonionRankBelow3(f"the octonion torus needs n >= 3, got {len(lam)}")
    return _sign(tuple(lam), tuple(mu))


def _odd_part(lam) -> bool:
    return any(lam[i] % 2 for i in range(3))


# ---------------------------------------------------------------------------
# Public operations

def oct_mul(a: OctElement, b: OctElement) -> OctElement:
    if a.rank != b.rank:
        raise RankMismatch(f"ranks {a.rank} and {b.rank}")
    out: dict = {}
    for lam, c in a.terms.items():
        for mu, d in b.terms.items():
            nu = tuple(x + y for x, y in zip(lam, mu))
            out[nu] = out.get(nu, 0) + c * d * _sign(lam, mu)
    return OctElement(a.rank, out)


def oct_associator(a: OctElement, b: OctElement, c: OctElement) -> OctElement:
    return oct_mul(oct_mul(a, b), c) - oct_mul(a, oct_mul(b, c))


def oct_conjugation(a: OctElement) -> OctElement:
    """The anti-involution fixing ``x_j`` (j >= 4) and negating ``x_1, x_2, x_3``.

    On the Cayley-Dickson units this is ordinary octonion conjugation:
    ``e_0`` is fixed, every other unit is negated.
    """
    return OctElement(a.rank, {lam: (-c if _odd_part(lam) else c) for lam, c in a.terms.items()})


def oct_degree_inversion(a: OctElement) -> OctElement:
    """The automorphism with ``x_i -> x_i^-1`` for every i.

    It sends ``u_k -> u_k^-1`` and ``e_S -> (prod_{k in S} u_k)^-1 e_S``,
    which on canonical monomials is exactly ``x^lam -> x^-lam``.
    """
    return OctElement(a.rank, {deg_neg(lam): c for lam, c in a.terms.items()})


def oct_pre_chevalley(a: OctElement) -> OctElement:
    """``conj o inv``: an anti-involution mapping degree ``lam`` to ``-lam``."""
    return oct_conjugation(oct_degree_inversion(a))


def oct_check_alternative(a: OctElement, b: OctElement) -> bool:
    """Left and right alternative laws: ``(a, a, b) = 0`` and ``(b, a, a) = 0``."""
    return oct_associator(a, a, b).is_zero() and oct_associator(b, a, a).is_zero()


def oct_invert_monomial(a) -> OctElement:
    """Inverse of ``c x^lam``: ``c^-1 f(lam, -lam)^-1 x^-lam``."""
    if isinstance(a, QTElement):
        lam, c = a.leading()
    else:
        lam, c = tuple(a), Fraction(1)
    neg = deg_neg(lam)
    return OctElement(len(lam), {neg: 1 / (c * oct_sign(lam, neg))})


class OctonionTorus:
    """Descriptor of the octonion n-torus, usable wherever a torus is expected."""

    kind = "octonion"

    def __init__(self, n: int):
        if n < 3:
            raise OctonionRankBelow3(f"the octonion torus needs n >= 3, got {n}")
        self.rank = n

    def __repr__(self) -> str:
        return f"OctonionTorus({self.rank})"

    def one(self) -> OctElement:
        return OctElement(self.rank, {zero_degree(self.rank): 1})

    def zero(self) -> OctElement:
        return OctElement(self.rank)

    def monomial(self, lam, coef=1) -> OctElement:
        return OctElement(self.rank, {tuple(lam): coef})

    def x(self, i: int, power: int = 1) -> OctElement:
        lam = [0] * self.rank
        lam[i - 1] = 1
        # x_i^power is a genuine power; for i <= 3 this differs from the
        # canonical monomial only by a sign, fixed by repeated multiplication
        base = self.monomial(lam)
        if power < 0:
            base = oct_invert_monomial(base)
        out = self.one()
        for _ in range(abs(power)):
            out = oct_mul(out, base)
        return out

    def mul(self, a: OctElement, b: OctElement) -> OctElement:
        return oct_mul(a, b)

    def inverse_monomial(self, a) -> OctElement:
        return oct_invert_monomial(a)

    def in_support(self, lam) -> bool:
        return len(lam) == self.rank
