"""The root system A_ell, its Weyl group Sym(ell+1), and the Chevalley basis of sl_{ell+1}.

Indices are 1-based throughout: the root ``Root(i, j)`` is ``eps_i - eps_j``
and its Chevalley basis vector is the matrix unit ``E_ij``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from .errors import ZeroCoroot


@dataclass(frozen=True, order=True)
class Root:
    """``eps_i - eps_j`` for ``i != j``; ``Root(0, 0)`` is the zero root."""

    i: int
    j: int

    def __post_init__(self):
        if (self.i == 0) != (self.j == 0) or (self.i != 0 and self.i == self.j):
            raise ValueError(f"not a root of type A: ({self.i}, {self.j})")

    @classmethod
    def zero(cls) -> "Root":
        return cls(0, 0)

    @property
    def is_zero(self) -> bool:
        return self.i == 0

    def __neg__(self) -> "Root":
        return Root(self.j, self.i)

    def vector(self, size: int) -> tuple[int, ...]:
        """Coordinates in the eps-basis of Z^size."""
        v = [0] * size
        if not self.is_zero:
            v[self.i - 1] += 1
            v[self.j - 1] -= 1
        return tuple(v)

    def __str__(self) -> str:
        return "0" if self.is_zero else f"e{self.i}-e{self.j}"


ZERO = Root.zero()


def simple_root(k: int) -> Root:
    return Root(k, k + 1)


def cartan_integer(beta: Root, alpha: Root) -> int:
    """``<beta, alpha^vee>``; all roots of A_ell have squared length 2."""
    if alpha.is_zero:
        raise ZeroCoroot("the zero root has no coroot")
    if beta.is_zero:
        return 0
    # (eps_a - eps_b, eps_c - eps_d) = [a=c] - [a=d] - [b=c] + [b=d]
    a, b, c, d = beta.i, beta.j, alpha.i, alpha.j
    return (a == c) - (a == d) - (b == c) + (b == d)


@dataclass(frozen=True)
class WeylElement:
    """A permutation of ``{1..ell+1}`` with a simple-reflection word realizing it.

    ``perm[k - 1]`` is the image of ``k``.  The word ``[a, b, ...]`` stands for
    the product ``s_a s_b ...``, so its last letter acts first.
    """

    perm: tuple[int, ...]
    word: tuple[int, ...]

    def __call__(self, root: Root) -> Root:
        if root.is_zero:
            return root
        return Root(self.perm[root.i - 1], self.perm[root.j - 1])


def word_to_perm(word, size: int) -> tuple[int, ...]:
    perm = list(range(1, size + 1))
    for k in reversed(word):
        # apply s_k after what is already there
        perm = [k + 1 if p == k else k if p == k + 1 else p for p in perm]
    return tuple(perm)


class RootSystemA:
    """The root system of type A_ell (ell >= 1; the Lie tori here need ell >= 2)."""

    def __init__(self, ell: int):
        if ell < 1:
            raise ValueError("ell must be positive")
        self.ell = ell
        self.size = ell + 1

    def __repr__(self) -> str:
        return f"RootSystemA({self.ell})"

    def nonzero_roots(self) -> list[Root]:
        return [Root(i, j) for i in range(1, self.size + 1) for j in range(1, self.size + 1) if i != j]

    def roots(self) -> list[Root]:
        return [ZERO] + self.nonzero_roots()

    def simple_roots(self) -> list[Root]:
        return [simple_root(k) for k in range(1, self.ell + 1)]

    def __contains__(self, root: Root) -> bool:
        return root.is_zero or (root.i <= self.size and root.j <= self.size)

    def root_from_vector(self, v) -> Root | None:
        """The root with eps-coordinates ``v``, or None if ``v`` is not a root."""
        if all(x == 0 for x in v):
            return ZERO
        if sorted(v) != [-1] + [0] * (len(v) - 2) + [1]:
            return None
        return Root(v.index(1) + 1, v.index(-1) + 1)

    def is_a2_pair(self, beta: Root, gamma: Root) -> bool:
        """Whether ``(beta, gamma)`` is an A_2-pair oriented so that ``beta + gamma`` is a root.

        For type A this is exactly: distinct nonzero roots with
        ``<beta, gamma^vee> = -1``.  The integer span then meets R in the six
        roots ``+-beta, +-gamma, +-(beta + gamma)``.
        """
        if beta.is_zero or gamma.is_zero or beta == gamma or beta == -gamma:
            return False
        return cartan_integer(beta, gamma) == -1

    def reflection(self, alpha: Root) -> WeylElement:
        """The reflection ``w_alpha``: the transposition of ``alpha.i`` and ``alpha.j``."""
        if alpha.is_zero:
            raise ZeroCoroot("cannot reflect in the zero root")
        return self.weyl_word(alpha, -alpha)

    def weyl_word(self, alpha: Root, beta: Root) -> WeylElement:
        """A shortest Weyl element sending ``alpha`` to ``beta``, by breadth-first search."""
        if alpha.is_zero or beta.is_zero:
            raise ZeroCoroot("weyl_word needs nonzero roots")
        return _weyl_bfs(self.size, (alpha.i, alpha.j), (beta.i, beta.j))

    def weyl_elements(self) -> Iterator[WeylElement]:
        """Every Weyl group element once, each with a shortest word."""
        seen = {}
        start = tuple(range(1, self.size + 1))
        seen[start] = ()
        queue = deque([start])
        while queue:
            p = queue.popleft()
            yield WeylElement(p, seen[p])
            for k in range(1, self.size):
                # left-multiply by s_k: new word (k,) + old
                img = tuple(k + 1 if x == k else k if x == k + 1 else x for x in p)
                if img not in seen:
                    seen[img] = (k,) + seen[p]
                    queue.append(img)


@lru_cache(maxsize=None)
def _weyl_bfs(size: int, src: tuple[int, int], dst: tuple[int, int]) -> WeylElement:
    start = tuple(range(1, size + 1))
    seen = {start: ()}
    queue = deque([start])
    while queue:
        p = queue.popleft()
        if (p[src[0] - 1], p[src[1] - 1]) == dst:
            return WeylElement(p, seen[p])
        for k in range(1, size):
            img = tuple(k + 1 if x == k else k if x == k + 1 else x for x in p)
            if img not in seen:
                seen[img] = (k,) + seen[p]
                queue.append(img)
    raise AssertionError("Sym(n) acts transitively on ordered pairs; unreachable")


# ---------------------------------------------------------------------------
# Chevalley basis of sl_{ell+1}(Q) as sparse matrices {(row, col): scalar}

SparseMatrix = dict


def matrix_unit(i: int, j: int) -> SparseMatrix:
    return {(i, j): Fraction(1)}


def _matmul(a: SparseMatrix, b: SparseMatrix) -> SparseMatrix:
    out: dict = {}
    for (i, k), x in a.items():
        for (k2, j), y in b.items():
            if k == k2:
                out[(i, j)] = out.get((i, j), 0) + x * y
    return {key: v for key, v in out.items() if v != 0}


def matrix_bracket(a: SparseMatrix, b: SparseMatrix) -> SparseMatrix:
    ab, ba = _matmul(a, b), _matmul(b, a)
    out = dict(ab)
    for key, v in ba.items():
        out[key] = out.get(key, 0) - v
    return {key: v for key, v in out.items() if v != 0}


@dataclass(frozen=True)
class ChevalleyBasis:
    """Basis ``{e_alpha, h_k}`` of sl_{ell+1}(Q) with its structure constants.

    ``labels`` lists ``Root`` objects for the ``e_alpha`` followed by ints
    ``k`` for ``h_k = E_kk - E_{k+1,k+1}``.  ``structure_constants[(x, y)]``
    maps labels to coefficients of ``[x, y]``.
    """

    ell: int
    matrices: dict
    structure_constants: dict

    @property
    def labels(self) -> list:
        return list(self.matrices)

    def e(self, root: Root) -> SparseMatrix:
        return self.matrices[root]

    def h(self, k: int) -> SparseMatrix:
        return self.matrices[k]

    def coordinates(self, m: SparseMatrix) -> dict:
        """Expand a traceless sparse matrix in the basis."""
        coords = {}
        for (i, j), v in m.items():
            if i != j:
                coords[Root(i, j)] = v
        # diagonal d_1..d_n with sum 0 equals sum_k c_k h_k, c_k = d_1 + ... + d_k
        running = Fraction(0)
        for k in range(1, self.ell + 1):
            running += m.get((k, k), 0)
            if running != 0:
                coords[k] = running
        if running + m.get((self.ell + 1, self.ell + 1), 0) != 0:
            raise ValueError("matrix is not traceless")
        return coords


def chevalley_basis(ell: int) -> ChevalleyBasis:
    if ell < 1:
        raise ValueError("ell must be positive")
    rs = RootSystemA(ell)
    mats: dict = {}
    for r in rs.nonzero_roots():
        mats[r] = matrix_unit(r.i, r.j)
    for k in range(1, ell + 1):
        mats[k] = {(k, k): Fraction(1), (k + 1, k + 1): Fraction(-1)}
    basis = ChevalleyBasis(ell, mats, {})
    for x, mx in mats.items():
        for y, my in mats.items():
            c = basis.coordinates(matrix_bracket(mx, my))
            if c:
                basis.structure_constants[(x, y)] = c
    return basis
