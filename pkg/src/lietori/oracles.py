"""Brute-force reference computations used to cross-check the closed forms.

Nothing here calls the closed-form code it is meant to check.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .scalars import QuantumMatrix


def monomial_word(lam: Sequence[int]) -> list[tuple[int, int]]:
    """Letters ``(i, +-1)`` spelling ``x_1^lam_1 ... x_n^lam_n`` (1-based generators)."""
    word = []
    for i, e in enumerate(lam, start=1):
        s = 1 if e > 0 else -1
        word.extend([(i, s)] * abs(e))
    return word


def normal_order_word(q: QuantumMatrix, word: Sequence[tuple[int, int]]) -> tuple[Fraction, tuple[int, ...]]:
    """Rewrite a generator word into normal order using only the defining relations.

    The allowed moves are ``x_i^s x_j^t -> q_ij^(s t) x_j^t x_i^s`` for
    adjacent letters with ``i > j`` and cancellation of adjacent
    ``x_i x_i^-1``.  Returns the accumulated scalar and the exponent vector.
    """
    w = list(word)
    scalar = Fraction(1)
    changed = True
    while changed:
        changed = False
        k = 0
        while k < len(w) - 1:
            (i, s), (j, t) = w[k], w[k + 1]
            if i == j and s == -t:
                del w[k:k + 2]
                changed = True
                k = max(k - 1, 0)
                continue
            if i > j:
                scalar *= q(i, j) ** (s * t)
                w[k], w[k + 1] = w[k + 1], w[k]
                changed = True
            k += 1
    exps = [0] * q.n
    for i, s in w:
        exps[i - 1] += s
    return scalar, tuple(exps)


def twist_by_rewriting(q: QuantumMatrix, lam: Sequence[int], mu: Sequence[int]) -> Fraction:
    scalar, exps = normal_order_word(q, monomial_word(lam) + monomial_word(mu))
    assert exps == tuple(a + b for a, b in zip(lam, mu))
    return scalar
