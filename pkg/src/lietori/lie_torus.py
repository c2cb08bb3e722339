"""The matrix Lie torus sl_{ell+1}(K_q).

Elements are sparse ``(ell+1) x (ell+1)`` matrices with quantum-torus
entries.  The Lie torus is graded by pairs ``(root, degree)``: the entry
``E_ij a`` with ``a`` of degree ``lam`` lies in ``L_{eps_i - eps_j}^lam``,
diagonal entries of degree ``lam`` lie in ``L_0^lam``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .errors import NoWitness, NotA2Pair, NotAdNilpotent, NotHomogeneous, RankMismatch
from .quantum_torus import QTElement, commutator_witness, qt_mul
from .roots import ZERO, Root, RootSystemA, cartan_integer, simple_root
from .scalars import QuantumMatrix, deg_neg, degree_window, to_rational, unit_degree, zero_degree


@dataclass(frozen=True, order=True)
class GradedComponentKey:
    root: Root
    degree: tuple[int, ...]

    def __neg__(self) -> "GradedComponentKey":
        return GradedComponentKey(-self.root, deg_neg(self.degree))

    def __str__(self) -> str:
        return f"({self.root}, {self.degree})"


class LieElement:
    """Sparse matrix ``{(i, j): QTElement}`` over a fixed quantum matrix (1-based indices)."""

    __slots__ = ("ell", "q", "entries")

    def __init__(self, ell: int, q: QuantumMatrix, entries=None):
        self.ell = ell
        self.q = q
        out = {}
        for (i, j), a in (entries or {}).items():
            if not (1 <= i <= ell + 1 and 1 <= j <= ell + 1):
                raise IndexError(f"entry ({i}, {j}) outside a {ell + 1}x{ell + 1} matrix")
            if a.rank != q.n:
                raise RankMismatch(f"entry of rank {a.rank} over a rank-{q.n} torus")
            if not a.is_zero():
                out[(i, j)] = out[(i, j)] + a if (i, j) in out else a
        self.entries = {k: v for k, v in out.items() if not v.is_zero()}

    @property
    def size(self) -> int:
        return self.ell + 1

    # constructors ---------------------------------------------------------
    @classmethod
    def zero(cls, ell: int, q: QuantumMatrix) -> "LieElement":
        return cls(ell, q)

    @classmethod
    def unit(cls, ell: int, q: QuantumMatrix, i: int, j: int, a: QTElement | None = None) -> "LieElement":
        """``E_ij a``; ``a`` defaults to 1."""
        if a is None:
            a = QTElement.one(q.n)
        return cls(ell, q, {(i, j): a})

    @classmethod
    def from_rows(cls, ell: int, q: QuantumMatrix, rows: Sequence[Sequence[QTElement]]) -> "LieElement":
        return cls(ell, q, {(i + 1, j + 1): a for i, row in enumerate(rows) for j, a in enumerate(row)})

    def dense(self) -> list[list[QTElement]]:
        z = QTElement.zero(self.q.n)
        return [[self.entries.get((i, j), z) for j in range(1, self.size + 1)] for i in range(1, self.size + 1)]

    def entry(self, i: int, j: int) -> QTElement:
        return self.entries.get((i, j), QTElement.zero(self.q.n))

    # linear structure -----------------------------------------------------
    def _check(self, other: "LieElement") -> None:
        if other.ell != self.ell or other.q != self.q:
            raise RankMismatch("Lie elements over different tori or of different sizes")

    def __add__(self, other: "LieElement") -> "LieElement":
        self._check(other)
        out = dict(self.entries)
        for k, v in other.entries.items():
            out[k] = out[k] + v if k in out else v
        return LieElement(self.ell, self.q, out)

    def __neg__(self) -> "LieElement":
        return LieElement(self.ell, self.q, {k: -v for k, v in self.entries.items()})

    def __sub__(self, other: "LieElement") -> "LieElement":
        return self + (-other)

    def scale(self, c) -> "LieElement":
        c = to_rational(c)
        return LieElement(self.ell, self.q, {k: v.scale(c) for k, v in self.entries.items()})

    def __matmul__(self, other: "LieElement") -> "LieElement":
        """Associative matrix product."""
        self._check(other)
        out: dict = {}
        for (i, k), a in self.entries.items():
            for (k2, j), b in other.entries.items():
                if k == k2:
                    p = qt_mul(self.q, a, b)
                    out[(i, j)] = out[(i, j)] + p if (i, j) in out else p
        return LieElement(self.ell, self.q, out)

    def transpose(self) -> "LieElement":
        return LieElement(self.ell, self.q, {(j, i): v for (i, j), v in self.entries.items()})

    def map_entries(self, f) -> "LieElement":
        return LieElement(self.ell, self.q, {k: f(v) for k, v in self.entries.items()})

    def trace(self) -> QTElement:
        out = QTElement.zero(self.q.n)
        for i in range(1, self.size + 1):
            if (i, i) in self.entries:
                out = out + self.entries[(i, i)]
        return out

    def is_zero(self) -> bool:
        return not self.entries

    def __eq__(self, other) -> bool:
        if not isinstance(other, LieElement):
            return NotImplemented
        return self.ell == other.ell and self.q == other.q and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.ell, frozenset(self.entries.items())))

    # grading --------------------------------------------------------------
    def keys(self) -> set[GradedComponentKey]:
        """The ``(root, degree)`` pairs on which the element has a nonzero component."""
        out = set()
        for (i, j), a in self.entries.items():
            root = ZERO if i == j else Root(i, j)
            for lam in a.terms:
                out.add(GradedComponentKey(root, lam))
        return out

    def homogeneous_key(self) -> GradedComponentKey:
        ks = self.keys()
        if len(ks) != 1:
            raise NotHomogeneous(f"element has {len(ks)} graded components")
        return next(iter(ks))

    def __repr__(self) -> str:
        if not self.entries:
            return "0"
        return " + ".join(f"E{i}{j}*({a!r})" for (i, j), a in sorted(self.entries.items()))


def bracket(x: LieElement, y: LieElement) -> LieElement:
    return (x @ y) - (y @ x)


def component(x: LieElement, key: GradedComponentKey) -> LieElement:
    """Projection onto ``L_root^degree``."""
    lam = tuple(key.degree)
    if key.root.is_zero:
        cells = [(i, i) for i in range(1, x.size + 1)]
    else:
        cells = [(key.root.i, key.root.j)]
    return LieElement(x.ell, x.q, {c: x.entries[c].component(lam) for c in cells if c in x.entries})


def ad_exp(e: LieElement, x: LieElement) -> LieElement:
    """``exp(ad e)(x) = x + [e, x] + [e, [e, x]] / 2`` for square-zero ``e``."""
    if not (e @ e).is_zero():
        raise NotAdNilpotent("exp(ad e) is only implemented for e with e*e = 0")
    ex = bracket(e, x)
    return x + ex + bracket(e, ex).scale(Fraction(1, 2))


def chevalley_e(ell: int, q: QuantumMatrix, root: Root) -> LieElement:
    return LieElement.unit(ell, q, root.i, root.j)


def chevalley_h(ell: int, q: QuantumMatrix, k: int) -> LieElement:
    one = QTElement.one(q.n)
    return LieElement(ell, q, {(k, k): one, (k + 1, k + 1): -one})


def coroot_h(ell: int, q: QuantumMatrix, alpha: Root) -> LieElement:
    """``h_alpha = [e_alpha, e_-alpha] = E_ii - E_jj``."""
    one = QTElement.one(q.n)
    return LieElement(ell, q, {(alpha.i, alpha.i): one, (alpha.j, alpha.j): -one})


def ad_eta(alpha: Root, x: LieElement) -> LieElement:
    """``Ad eta_alpha(1)``: ``exp ad e_alpha . exp ad(-e_-alpha) . exp ad e_alpha`` applied to ``x``."""
    if alpha.is_zero:
        raise ValueError("ad_eta needs a nonzero root")
    e = chevalley_e(x.ell, x.q, alpha)
    f = -chevalley_e(x.ell, x.q, -alpha)
    return ad_exp(e, ad_exp(f, ad_exp(e, x)))


def apply_weyl_word(word: Sequence[int], x: LieElement) -> LieElement:
    """``Ad(eta_{a_1} ... eta_{a_k})`` for the word ``[a_1, ..., a_k]`` (last letter first)."""
    for k in reversed(word):
        x = ad_eta(simple_root(k), x)
    return x


def theta(beta: Root, alpha: Root, x: LieElement) -> LieElement:
    """The normalized isomorphism ``L_alpha -> L_beta`` induced by the Weyl group.

    The raw map is ``Ad(eta)`` for a Weyl word sending ``alpha`` to ``beta``;
    it is divided by the scalar ``eps`` with ``Ad(eta)(e_alpha) = eps e_beta``.
    """
    if alpha.is_zero or beta.is_zero:
        raise ValueError("theta needs nonzero roots")
    for key in x.keys():
        if key.root != alpha:
            raise NotHomogeneous(f"element has a component in root {key.root}, expected {alpha}")
    w = RootSystemA(x.ell).weyl_word(alpha, beta)
    image_e = apply_weyl_word(w.word, chevalley_e(x.ell, x.q, alpha))
    eps = image_e.entry(beta.i, beta.j).coefficient(zero_degree(x.q.n))
    assert eps != 0 and image_e == chevalley_e(x.ell, x.q, beta).scale(eps)
    return apply_weyl_word(w.word, x).scale(1 / eps)


class MatrixLieTorus:
    """``sl_{ell+1}(K_q)`` together with its generating set and graded bases."""

    def __init__(self, ell: int, q: QuantumMatrix):
        if ell < 2:
            raise ValueError("Lie tori of type A_ell are built here for ell >= 2")
        self.ell = ell
        self.q = q
        self.n = q.n
        self.roots = RootSystemA(ell)

    def __repr__(self) -> str:
        return f"MatrixLieTorus(ell={self.ell}, q={self.q!r})"

    # elements ------------------------------------------------------------
    def zero(self) -> LieElement:
        return LieElement.zero(self.ell, self.q)

    def unit(self, i: int, j: int, a: QTElement | None = None) -> LieElement:
        return LieElement.unit(self.ell, self.q, i, j, a)

    def e(self, root: Root, a: QTElement | None = None) -> LieElement:
        return LieElement.unit(self.ell, self.q, root.i, root.j, a)

    def h(self, k: int) -> LieElement:
        return chevalley_h(self.ell, self.q, k)

    def monomial(self, lam, coef=1) -> QTElement:
        return QTElement.monomial(lam, coef)

    def chevalley_elements(self) -> list[LieElement]:
        """The Chevalley basis of ``g = sl_{ell+1}(Q) (x) 1``."""
        return [self.e(r) for r in self.roots.nonzero_roots()] + [self.h(k) for k in range(1, self.ell + 1)]

    def generators(self) -> list[LieElement]:
        """``E_ij``, ``E_ij x_k`` and ``E_ij x_k^-1`` for all ``i != j`` and ``k``.

        These generate the Lie torus as a Lie algebra.
        """
        out = []
        for r in self.roots.nonzero_roots():
            out.append(self.e(r))
            for k in range(1, self.n + 1):
                for p in (1, -1):
                    out.append(self.e(r, QTElement.generator(self.n, k, p)))
        return out

    def zero_root_basis(self, lam) -> list[LieElement]:
        """A basis of ``L_0^lam``: ``h_k x^lam``, plus ``E_11 x^lam`` when ``[A, A]^lam = A^lam``.

        ``mu -> twist(mu, lam - mu) / twist(lam - mu, mu)`` is a character of
        Z^n, so a commutator witness exists iff one exists among the unit
        vectors; a window of 1 therefore decides fullness exactly.
        """
        lam = tuple(lam)
        xl = QTElement.monomial(lam)
        out = [LieElement(self.ell, self.q, {(k, k): xl, (k + 1, k + 1): -xl}) for k in range(1, self.ell + 1)]
        if commutator_witness(self.q, lam, 1) is not None:
            out.append(self.unit(1, 1, xl))
        return out

    def homogeneous_basis(self, window: int) -> Iterator[tuple[GradedComponentKey, LieElement]]:
        """Basis vectors of every ``L_alpha^lam`` with ``lam`` in the window."""
        for lam in degree_window(self.n, window):
            xl = QTElement.monomial(lam)
            for r in self.roots.nonzero_roots():
                yield GradedComponentKey(r, lam), self.e(r, xl)
            for b in self.zero_root_basis(lam):
                yield GradedComponentKey(ZERO, lam), b

    # predicates ------------------------------------------------------------
    def is_sl_member(self, x: LieElement, window: int = 2) -> bool:
        """Whether ``trace(x)`` lies in ``[A, A]``, each nonzero degree piece witnessed in the window."""
        tr = x.trace()
        for lam in tr.terms:
            if commutator_witness(self.q, lam, window) is None:
                return False
        return True

    def is_central(self, x: LieElement, generators: Iterable[LieElement] | None = None) -> bool:
        gens = self.generators() if generators is None else generators
        return all(bracket(x, g).is_zero() for g in gens)

    def central_counterexample(self, x: LieElement, generators=None) -> LieElement | None:
        gens = self.generators() if generators is None else generators
        for g in gens:
            if not bracket(x, g).is_zero():
                return g
        return None

    # coordinates -----------------------------------------------------------
    base_root = Root(1, 2)

    def coordinate_embed(self, beta: Root, a: QTElement) -> LieElement:
        """``e_beta(a) = theta_{beta, alpha}(E_12 a)`` for the base root ``alpha = eps_1 - eps_2``."""
        return theta(beta, self.base_root, self.e(self.base_root, a))

    def coordinate_read(self, x: LieElement) -> QTElement:
        """Inverse of :meth:`coordinate_embed`: map an element of some ``L_beta`` back to A."""
        roots = {k.root for k in x.keys()}
        if not roots:
            return QTElement.zero(self.n)
        if len(roots) != 1 or ZERO in roots:
            raise NotHomogeneous("element is not supported in a single nonzero root space")
        (beta,) = roots
        y = theta(self.base_root, beta, x)
        return y.entry(self.base_root.i, self.base_root.j)

    def extract_coordinate_mul(self, pair: tuple[Root, Root], a: QTElement, b: QTElement) -> QTElement:
        """Read ``m_(beta, gamma)(a, b)`` off ``[e_beta(a), e_gamma(b)] = [e_beta, e_gamma](m)``."""
        beta, gamma = pair
        if not self.roots.is_a2_pair(beta, gamma):
            raise NotA2Pair(f"({beta}, {gamma}) is not an A2-pair with a root sum")
        one = QTElement.one(self.n)
        top = bracket(self.coordinate_embed(beta, a), self.coordinate_embed(gamma, b))
        unit_top = bracket(self.coordinate_embed(beta, one), self.coordinate_embed(gamma, one))
        # unit_top = c e_{beta+gamma}(1); recover c, then m = read(top) / c
        c = self.coordinate_read(unit_top).coefficient(zero_degree(self.n))
        assert c != 0
        return self.coordinate_read(top).scale(1 / c)

    # division --------------------------------------------------------------
    def division_test_vectors(self, window: int = 1) -> list[tuple[Root, LieElement]]:
        """Homogeneous ``x_beta`` used to test ``[[e, f], x_beta] = <beta, alpha^vee> x_beta``."""
        out = []
        for lam in degree_window(self.n, window):
            xl = QTElement.monomial(lam)
            for r in self.roots.nonzero_roots():
                out.append((r, self.e(r, xl)))
            for b in self.zero_root_basis(lam):
                out.append((ZERO, b))
        return out

    def division_witness(self, key: GradedComponentKey, window: int = 1) -> tuple[LieElement, LieElement]:
        """For the basis vector ``e`` of ``L_alpha^lam`` find ``f`` in ``L_-alpha^-lam``.

        ``f = c E_ji x^-lam`` and the scalar ``c`` is solved from the
        condition on the test vectors of the window.  Returns ``(e, f)``.
        """
        alpha, lam = key.root, tuple(key.degree)
        if alpha.is_zero:
            raise ValueError("division is defined for nonzero roots")
        e = self.e(alpha, QTElement.monomial(lam))
        f0 = self.e(-alpha, QTElement.monomial(deg_neg(lam)))
        h = bracket(e, f0)
        c = None
        checks = []
        for beta, xb in self.division_test_vectors(window):
            lhs = bracket(h, xb)
            rhs = xb.scale(cartan_integer(beta, alpha))
            checks.append((lhs, rhs))
            if c is None and not rhs.is_zero():
                (cell, target), = list(rhs.entries.items())[:1]
                got = lhs.entry(*cell)
                d = next(iter(target.terms))
                if got.coefficient(d) == 0:
                    raise NoWitness(f"no scalar multiple of {f0!r} works for key {key}")
                c = target.coefficient(d) / got.coefficient(d)
        if c is None:
            raise NoWitness(f"no test vector constrains key {key}")
        for lhs, rhs in checks:
            if lhs.scale(c) != rhs:
                raise NoWitness(f"key {key}: condition fails for test vector {rhs!r}")
        return e, f0.scale(c)
