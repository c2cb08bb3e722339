"""Axiom suites for matrix Lie tori and coordinate tori.

Each suite returns a :class:`~lietori.report.CheckReport`; a failing check
carries a JSON counterexample that can be fed back through the library.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from .errors import LieToriError, NoWitness
from .jsonio import element_to_json, lie_element_to_json, quantum_matrix_to_json
from .lie_torus import GradedComponentKey, LieElement, MatrixLieTorus, bracket, component
from .linalg import nullspace, rank
from .octonion_torus import oct_associator
from .quantum_torus import QTElement
from .report import CheckReport
from .roots import ZERO, Root, cartan_integer, chevalley_basis, simple_root
from .scalars import QuantumMatrix, deg_add, degree_window, unit_degree, zero_degree


# ---------------------------------------------------------------------------
# Root grading

def _eigen_ok(L: MatrixLieTorus, key: GradedComponentKey, x: LieElement, br=bracket) -> bool:
    """``[h_k, x] = alpha(h_k) x`` for every simple coroot, ``alpha = key.root``."""
    for k in range(1, L.ell + 1):
        expect = 0 if key.root.is_zero else cartan_integer(key.root, simple_root(k))
        if br(L.h(k), x) != x.scale(expect):
            return False
    return True


def _diag_vector(x: LieElement, lam) -> list[Fraction]:
    return [x.entry(i, i).coefficient(lam) for i in range(1, x.size + 1)]


def verify_root_grading(ell: int, q: QuantumMatrix, window: int = 1, seed: int = 0,
                        bracket_fn=bracket, samples: int = 20) -> CheckReport:
    """RG1-RG3 for ``sl_{ell+1}(K_q)`` on a degree window, plus centerlessness.

    ``bracket_fn`` can be replaced to test the suite itself.
    """
    L = MatrixLieTorus(ell, q)
    n = q.n
    zero = zero_degree(n)
    report = CheckReport("root_grading", window=window)
    rng = random.Random(seed)
    with report.timed():
        # RG1: g = sl_{ell+1}(Q) (x) 1 is a subalgebra with the expected structure constants
        cb = chevalley_basis(ell)
        gens = {label: (L.e(label) if isinstance(label, Root) else L.h(label)) for label in cb.labels}
        bad = None
        for (a, xa) in gens.items():
            for (b, xb) in gens.items():
                got = bracket_fn(xa, xb)
                want = L.zero()
                for label, c in cb.structure_constants.get((a, b), {}).items():
                    want = want + gens[label].scale(c)
                if got != want:
                    bad = [lie_element_to_json(xa), lie_element_to_json(xb)]
                    break
            if bad:
                break
        report.add("RG1_g_subalgebra", bad is None, bad)

        basis = list(L.homogeneous_basis(window))
        bad = None
        for key, x in basis:
            if not _eigen_ok(L, key, x, bracket_fn):
                bad = lie_element_to_json(x)
                break
        report.add("RG1_root_space_decomposition", bad is None, bad)

        # RG2: projections onto (root, degree) keys recover the element
        bad = None
        for _ in range(samples):
            picks = rng.sample(basis, min(4, len(basis)))
            x = L.zero()
            for _, b in picks:
                x = x + b.scale(rng.randint(-5, 5) or 1)
            total = L.zero()
            for key in x.keys():
                part = component(x, key)
                if not _eigen_ok(L, key, part, bracket_fn):
                    bad = lie_element_to_json(x)
                total = total + part
            if total != x:
                bad = lie_element_to_json(x)
            if bad:
                break
        report.add("RG2_component_decomposition", bad is None, bad)

        # RG3: L_0^lam is spanned by [L_alpha, L_-alpha] in degree lam
        bad = None
        for lam in sorted(degree_window(n, window), key=lambda d: sum(map(abs, d))):
            vectors = []
            for mu in degree_window(n, window):
                nu = tuple(a - b for a, b in zip(lam, mu))
                for r in L.roots.nonzero_roots():
                    br = bracket_fn(L.e(r, QTElement.monomial(mu)), L.e(-r, QTElement.monomial(nu)))
                    if not br.is_zero():
                        vectors.append(_diag_vector(br, lam))
            expected = len(L.zero_root_basis(lam))
            got = rank(vectors) if vectors else 0
            if got != expected:
                bad = {"lam": list(lam), "rank": got, "expected": expected}
                break
        report.add("RG3_zero_space_spanned", bad is None, bad)

        # centerless: no nonzero element of L_0^lam commutes with the generators
        gens_lt = L.generators()
        bad = None
        for lam in degree_window(n, window):
            zb = L.zero_root_basis(lam)
            coords: dict = {}
            for k, b in enumerate(zb):
                for gi, g in enumerate(gens_lt):
                    for cell, a in bracket_fn(b, g).entries.items():
                        for d, c in a.terms.items():
                            coords.setdefault((gi, cell, d), [Fraction(0)] * len(zb))[k] += c
            if nullspace(list(coords.values()), len(zb)):
                bad = {"lam": list(lam)}
                break
        report.add("centerless", bad is None, bad)
    report.extra["q"] = quantum_matrix_to_json(q)
    report.extra["ell"] = ell
    return report


# ---------------------------------------------------------------------------
# Division

def _division_key(args):
    ell, q, root, lam = args
    L = MatrixLieTorus(ell, q)
    key = GradedComponentKey(root, lam)
    try:
        e, f = L.division_witness(key)
    except NoWitness as exc:
        return key, None, str(exc)
    if f.keys() != {-key}:
        return key, None, "partner is not in L_-alpha^-lam"
    return key, f, ""


def verify_division(ell: int, q: QuantumMatrix, window: int = 2, support=None,
                    workers: int = 1) -> CheckReport:
    """A division partner exists for every nonzero ``L_alpha^lam`` in the window.

    ``support(lam) -> bool`` restricts the degrees treated as nonzero; the
    others are counted as vacuous.
    """
    L = MatrixLieTorus(ell, q)
    report = CheckReport("division", window=window)
    with report.timed():
        jobs, vacuous = [], 0
        for lam in degree_window(q.n, window):
            if support is not None and not support(lam):
                vacuous += L.roots.ell * (L.roots.ell + 1)
                continue
            for r in L.roots.nonzero_roots():
                jobs.append((ell, q, r, lam))
        if workers > 1:
            with ProcessPoolExecutor(workers) as pool:
                results = list(pool.map(_division_key, jobs, chunksize=16))
        else:
            results = [_division_key(j) for j in jobs]
        failures = [(k, msg) for k, f, msg in results if f is None]
        ce = None
        if failures:
            k, msg = failures[0]
            ce = {"root": [k.root.i, k.root.j], "lam": list(k.degree), "error": msg}
        report.add("division_witness", not failures, ce, f"{len(results)} keys, {vacuous} vacuous")
    report.extra.update(keys_checked=len(jobs), vacuous=vacuous)
    return report


# ---------------------------------------------------------------------------
# Coordinate tori

_EXHAUSTIVE_PAIRS = 20000


def _degree_pairs(degrees, n, rng, samples):
    """All pairs when affordable; otherwise all pairs in window 1 plus seeded samples."""
    if len(degrees) ** 2 <= _EXHAUSTIVE_PAIRS:
        return [(a, b) for a in degrees for b in degrees]
    small = list(degree_window(n, 1))
    return [(a, b) for a in small for b in small] + [
        (rng.choice(degrees), rng.choice(degrees)) for _ in range(samples)
    ]


def verify_torus_axioms(torus, window: int = 2, seed: int = 0, samples: int = 200) -> CheckReport:
    """n-torus axioms on a window for a quantum or octonion torus descriptor.

    Checks invertibility of monomials, one-dimensional homogeneous products,
    that the support generates Z^n, and associativity (quantum) or the
    alternative laws and defining relations (octonion).
    """
    n = torus.rank
    report = CheckReport(f"torus_{torus.kind}", window=window)
    rng = random.Random(seed)
    one = torus.one()
    window_degrees = [lam for lam in degree_window(n, window) if torus.in_support(lam)]
    with report.timed():
        bad = None
        for lam in window_degrees:
            x = torus.monomial(lam)
            try:
                inv = torus.inverse_monomial(x)
                ok = torus.mul(x, inv) == one and torus.mul(inv, x) == one
            except LieToriError:
                ok = False
            if not ok:
                bad = {"lam": list(lam)}
                break
        report.add("monomials_invertible", bad is None, bad)

        pairs = _degree_pairs(window_degrees, n, rng, samples)
        bad = None
        for lam, mu in pairs:
            p = torus.mul(torus.monomial(lam), torus.monomial(mu))
            if list(p.terms) != [deg_add(lam, mu)]:
                bad = {"lam": list(lam), "mu": list(mu)}
                break
        report.add("graded_products", bad is None, bad)

        units = [unit_degree(n, i) for i in range(1, n + 1)]
        missing = [list(e) for e in units if not torus.in_support(e)]
        report.add("support_generates", not missing, {"missing": missing} if missing else None)

        if torus.kind == "quantum":
            bad = None
            triples = [(a, b, c) for a in degree_window(n, 1) for b in degree_window(n, 1) for c in degree_window(n, 1)]
            triples += [tuple(rng.choice(window_degrees) for _ in range(3)) for _ in range(samples)]
            for a, b, c in triples:
                xa, xb, xc = (torus.monomial(d) for d in (a, b, c))
                if torus.mul(torus.mul(xa, xb), xc) != torus.mul(xa, torus.mul(xb, xc)):
                    bad = {"a": list(a), "b": list(b), "c": list(c)}
                    break
            report.add("associative", bad is None, bad)
        else:
            bad = None
            for lam, mu in pairs:
                a, b = torus.monomial(lam), torus.monomial(mu)
                if not oct_associator(a, a, b).is_zero() or not oct_associator(b, a, a).is_zero():
                    bad = {"a": list(lam), "b": list(mu)}
                    break
            report.add("alternative", bad is None, bad)
            x1, x2, x3 = (torus.x(i) for i in (1, 2, 3))
            rel = all(
                torus.mul(torus.x(i), torus.x(j)) == -torus.mul(torus.x(j), torus.x(i))
                for i in (1, 2, 3) for j in (1, 2, 3) if i != j
            ) and torus.mul(torus.mul(x1, x2), x3) == -torus.mul(x1, torus.mul(x2, x3))
            report.add("octonion_relations", rel)
    return report


# ---------------------------------------------------------------------------
# Coordinate recovery

def verify_coordinate_recovery(ell: int, q: QuantumMatrix, pairs: int = 50, window: int = 2,
                               seed: int = 0) -> CheckReport:
    """The canonical A2-pair recovers ``qt_mul``; the reversed pair recovers the opposite product."""
    from .quantum_torus import qt_mul

    L = MatrixLieTorus(ell, q)
    rng = random.Random(seed)
    degrees = list(degree_window(q.n, window))
    canonical = (Root(1, 2), Root(2, 3))
    reversed_pair = (Root(2, 3), Root(1, 2))
    report = CheckReport("coordinate_recovery", window=window)
    with report.timed():
        bad_c = bad_r = None
        for _ in range(pairs):
            a = QTElement.monomial(rng.choice(degrees), rng.choice([1, -1, 2, Fraction(1, 3)]))
            b = QTElement.monomial(rng.choice(degrees), rng.choice([1, -1, 3, Fraction(-1, 2)]))
            if bad_c is None and L.extract_coordinate_mul(canonical, a, b) != qt_mul(q, a, b):
                bad_c = [element_to_json(a), element_to_json(b)]
            if bad_r is None and L.extract_coordinate_mul(reversed_pair, a, b) != qt_mul(q, b, a):
                bad_r = [element_to_json(a), element_to_json(b)]
        report.add("canonical_pair_is_torus_product", bad_c is None, bad_c)
        report.add("reversed_pair_is_opposite_product", bad_r is None, bad_r)
    return report
