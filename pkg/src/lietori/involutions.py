"""Chevalley involutions of sl_{ell+1}(K_q) and pre-Chevalley anti-involutions of tori.

A pre-Chevalley anti-involution of a torus sends each monomial ``x^lam`` to
``s(lam) x^-lam``; it is recorded as the sign table ``s``.  The Chevalley
involution synthesized from it is ``X -> -(bar X)^T``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping, Union

from .errors import CoordinateMismatch, NotElementary, NotHomogeneousImage, RankMismatch
from .lie_torus import (
    GradedComponentKey,
    LieElement,
    MatrixLieTorus,
    ad_eta,
    bracket,
    theta,
)
from .octonion_torus import OctElement, OctonionTorus, oct_pre_chevalley
from .quantum_torus import QTElement, qt_mul
from .report import CheckReport
from .roots import Root
from .scalars import (
    QuantumMatrix,
    deg_add,
    deg_neg,
    degree_window,
    format_rational,
    is_elementary,
    non_elementary_entries,
    twist,
    unit_degree,
    zero_degree,
)

_SUBSCRIPTS = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")


@dataclass
class AntiInvolutionTable:
    """``bar(x^lam) = sign(lam) x^-lam`` on monomials.

    ``signs`` holds explicit values (from the oracle, or a cache); when a
    degree is missing the value is computed by ``rule`` if one is set.
    """

    kind: str
    rank: int
    q: QuantumMatrix | None = None
    signs: dict = field(default_factory=dict)
    rule: Callable | None = field(default=None, repr=False, compare=False)

    def sign(self, lam) -> Fraction:
        lam = tuple(lam)
        if lam not in self.signs:
            if self.rule is None:
                raise KeyError(f"sign table has no entry for {lam}")
            self.signs[lam] = Fraction(self.rule(lam))
        return self.signs[lam]

    def apply(self, a: QTElement) -> QTElement:
        if a.rank != self.rank:
            raise RankMismatch(f"table of rank {self.rank}, element of rank {a.rank}")
        cls = OctElement if self.kind == "octonion" else QTElement
        return cls(a.rank, {deg_neg(lam): c * self.sign(lam) for lam, c in a.terms.items()})

    __call__ = apply

    def on_window(self, window: int) -> dict:
        return {lam: self.sign(lam) for lam in degree_window(self.rank, window)}

    def to_json(self, window: int = 2) -> dict:
        return {
            "kind": self.kind,
            "rank": self.rank,
            "window": window,
            "signs": [{"deg": list(lam), "sign": format_rational(s)} for lam, s in sorted(self.on_window(window).items())],
        }


# ---------------------------------------------------------------------------
# Coordinate anti-involutions

def synthesize_pre_chevalley_qt(q: QuantumMatrix) -> AntiInvolutionTable:
    """``bar(x_i) = x_i^-1`` extended anti-multiplicatively; exists iff ``q`` is elementary.

    ``bar(x_1^a_1 ... x_n^a_n) = x_n^-a_n ... x_1^-a_1``, multiplied out in K_q.
    """
    if not is_elementary(q):
        bad = non_elementary_entries(q)
        raise NotElementary(_reason_for(bad))

    def rule(lam):
        out = QTElement.one(q.n)
        for i in reversed(range(1, q.n + 1)):
            if lam[i - 1]:
                out = qt_mul(q, out, QTElement.generator(q.n, i, -lam[i - 1]))
        (deg, c), = out.terms.items()
        assert deg == deg_neg(lam)
        return c

    return AntiInvolutionTable("quantum", q.n, q, rule=rule)


def table_from_generators(q: QuantumMatrix, gen_signs, signs: Mapping | None = None) -> AntiInvolutionTable:
    """Sign table of the anti-multiplicative extension of ``bar(x_i) = k_i x_i^-1``.

    Nothing checks that the extension is well defined; a non-elementary ``q``
    yields a map that the verification suite rejects.  Explicit ``signs``
    take precedence over the extension.
    """
    ks = [Fraction(k) for k in gen_signs]
    if len(ks) != q.n or any(k == 0 for k in ks):
        raise ValueError("need one nonzero generator sign per variable")
    bars = [QTElement.monomial(deg_neg(unit_degree(q.n, i)), ks[i - 1]) for i in range(1, q.n + 1)]
    inv_bars = [QTElement.monomial(unit_degree(q.n, i), 1 / ks[i - 1]) for i in range(1, q.n + 1)]

    def rule(lam):
        out = QTElement.one(q.n)
        for i in reversed(range(1, q.n + 1)):
            f = bars[i - 1] if lam[i - 1] > 0 else inv_bars[i - 1]
            for _ in range(abs(lam[i - 1])):
                out = qt_mul(q, out, f)
        (deg, c), = out.terms.items()
        return c

    return AntiInvolutionTable("quantum", q.n, q, signs=dict(signs or {}), rule=rule)


def pre_chevalley_octonion(n: int) -> AntiInvolutionTable:
    """The anti-involution conj o inv of the octonion n-torus as a sign table."""
    torus = OctonionTorus(n)

    def rule(lam):
        img = oct_pre_chevalley(torus.monomial(lam))
        (deg, c), = img.terms.items()
        return c

    return AntiInvolutionTable("octonion", n, None, rule=rule)


@dataclass
class OracleResult:
    """Outcome of the brute-force search: a table, or the violated constraint."""

    found: bool
    table: AntiInvolutionTable | None = None
    violation: tuple | None = None
    window: int = 2
    free_parameters: int = 0

    def to_json(self) -> dict:
        out = {"found": self.found, "window": self.window}
        if self.found:
            out["free_parameters"] = self.free_parameters
            out["table"] = self.table.to_json(self.window)
        else:
            lam, mu = self.violation
            out["violation"] = {"lam": list(lam), "mu": list(mu)}
        return out


def oracle_search_pre_chevalley(q: QuantumMatrix, window: int = 2) -> OracleResult:
    """Solve ``twist(lam, mu) s(lam+mu) = s(lam) s(mu) twist(mu, lam)`` on the window.

    The values ``k_i = s(eps_i)`` are free symbols.  Every ``s(lam)`` is
    propagated from them as ``r(lam) * k^e(lam)`` along unit steps, and then
    every constraint with ``lam``, ``mu``, ``lam + mu`` in the window is
    checked, together with ``s(lam) s(-lam) = 1``.
    """
    if window < 2:
        raise ValueError("window must be >= 2")
    n = q.n
    zero = zero_degree(n)
    inside = lambda lam: all(-window <= c <= window for c in lam)  # noqa: E731

    # s(lam) as (rational, exponent tuple of the k's)
    s: dict = {zero: (Fraction(1), zero)}
    steps = []
    for i in range(1, n + 1):
        e = unit_degree(n, i)
        s[e] = (Fraction(1), e)
        ne = deg_neg(e)
        # lam = e, mu = -e: twist(e, -e) s(0) = s(e) s(-e) twist(-e, e)
        s[ne] = (twist(q, e, ne) / twist(q, ne, e), ne)
        steps += [e, ne]

    queue = deque([zero] + steps)
    while queue:
        lam = queue.popleft()
        r_l, e_l = s[lam]
        for mu in steps:
            nu = deg_add(lam, mu)
            if not inside(nu) or nu in s:
                continue
            r_m, e_m = s[mu]
            s[nu] = (r_l * r_m * twist(q, mu, lam) / twist(q, lam, mu), deg_add(e_l, e_m))
            queue.append(nu)

    # smallest degrees first, so a failure is reported at the most local constraint
    size = lambda lam: sum(map(abs, lam))  # noqa: E731
    window_degs = sorted(degree_window(n, window), key=size)
    pairs = sorted(((lam, mu) for lam in window_degs for mu in window_degs if inside(deg_add(lam, mu))),
                   key=lambda p: (size(p[0]) + size(p[1]), tuple(-c for c in p[0] + p[1])))
    for lam, mu in pairs:
        (r_l, e_l), (r_m, e_m) = s[lam], s[mu]
        r_nu, e_nu = s[deg_add(lam, mu)]
        if e_nu != deg_add(e_l, e_m) or twist(q, lam, mu) * r_nu != r_l * r_m * twist(q, mu, lam):
            return OracleResult(False, violation=(lam, mu), window=window)
    for lam in window_degs:
        (r_l, e_l), (r_n, e_n) = s[lam], s[deg_neg(lam)]
        if r_l * r_n != 1 or deg_add(e_l, e_n) != zero:
            return OracleResult(False, violation=(lam, deg_neg(lam)), window=window)

    signs = {lam: r for lam, (r, _) in s.items()}
    table = AntiInvolutionTable("quantum", n, q, signs=signs)
    return OracleResult(True, table=table, window=window, free_parameters=n)


# ---------------------------------------------------------------------------
# Chevalley involutions of sl_{ell+1}(K_q)

@dataclass
class ChevalleyInvolutionDescriptor:
    """``tau(X) = -(bar X)^T`` for a coordinate anti-involution ``bar``."""

    ell: int
    q: QuantumMatrix
    table: AntiInvolutionTable
    action: str = "neg_bar_transpose"

    def __call__(self, x: LieElement) -> LieElement:
        return apply_chevalley(self, x)

    @property
    def torus(self) -> MatrixLieTorus:
        return MatrixLieTorus(self.ell, self.q)

    def to_json(self, window: int = 2) -> dict:
        from .jsonio import quantum_matrix_to_json

        return {
            "ell": self.ell,
            "q": quantum_matrix_to_json(self.q),
            "action": self.action,
            "anti_involution": self.table.to_json(window),
        }


def synthesize_chevalley(ell: int, q: QuantumMatrix) -> ChevalleyInvolutionDescriptor:
    if ell < 2:
        raise ValueError("ell must be >= 2")
    return ChevalleyInvolutionDescriptor(ell, q, synthesize_pre_chevalley_qt(q))


def apply_chevalley(desc: ChevalleyInvolutionDescriptor, x: LieElement) -> LieElement:
    if x.ell != desc.ell or x.q != desc.q:
        raise RankMismatch("descriptor and element belong to different Lie tori")
    return -(x.map_entries(desc.table.apply).transpose())


def extract_anti_involution(tau: Callable[[LieElement], LieElement], a: QTElement,
                            torus: MatrixLieTorus) -> QTElement:
    """``bar a = -theta_{alpha, -alpha}(tau(e_alpha(a)))`` with ``alpha = eps_1 - eps_2``.

    ``tau`` is used only as a black box on Lie elements.
    """
    alpha = torus.base_root
    image = tau(torus.e(alpha, a))
    for key in image.keys():
        if key.root != -alpha:
            raise NotHomogeneousImage(f"tau(e_alpha(a)) has a component in root {key.root}")
    back = theta(alpha, -alpha, image)
    return -back.entry(alpha.i, alpha.j)


@dataclass
class Decision:
    exists: bool
    reason: str

    def __bool__(self) -> bool:
        return self.exists

    def to_json(self) -> dict:
        return {"exists": self.exists, "reason": self.reason}


def _reason_for(bad) -> str:
    return "; ".join(
        f"q{str(i).translate(_SUBSCRIPTS)}{str(j).translate(_SUBSCRIPTS)}={format_rational(v)}∉{{±1}}"
        for i, j, v in bad
    )


def decide_chevalley_existence(coords: Union[QuantumMatrix, OctonionTorus], ell: int | None = None) -> Decision:
    """Whether the Lie torus coordinatized by ``coords`` admits a Chevalley involution.

    Octonion coordinates only occur for ``ell = 2``.  For quantum
    coordinates the answer is whether ``q`` is elementary.
    """
    if isinstance(coords, OctonionTorus):
        if ell is not None and ell != 2:
            raise CoordinateMismatch(f"octonion coordinates need ell = 2, got ell = {ell}")
        return Decision(True, f"octonion {coords.rank}-torus: conj o inv is a pre-Chevalley anti-involution")
    if not isinstance(coords, QuantumMatrix):
        raise TypeError(f"expected QuantumMatrix or OctonionTorus, got {type(coords).__name__}")
    if ell is not None and ell < 2:
        raise ValueError("ell must be >= 2")
    bad = non_elementary_entries(coords)
    if bad:
        return Decision(False, _reason_for(bad))
    return Decision(True, "q is elementary: x_i -> x_i^-1 extends to a pre-Chevalley anti-involution")


# ---------------------------------------------------------------------------
# Verification

def _as_map(tau):
    return tau if callable(tau) else (lambda x: apply_chevalley(tau, x))


def _payload(*xs):
    from .jsonio import lie_element_to_json

    return [lie_element_to_json(x) for x in xs]


def verify_chevalley(tau, ell: int, q: QuantumMatrix, window: int = 2,
                     pair_window: int | None = None) -> CheckReport:
    """Check the Chevalley-involution axioms for ``tau`` on homogeneous basis elements.

    Checks: ``tau^2 = id``; ``tau[X, Y] = [tau X, tau Y]``; ``tau`` maps
    ``L_alpha^lam`` onto ``L_-alpha^-lam``; ``tau = -id`` on ``L_0^0``;
    ``tau(g) = g``; ``tau`` commutes with ``Ad eta_alpha(1)`` for simple
    ``alpha``.  Bracket preservation is checked on all pairs from the
    ``pair_window`` basis (default: the full window).
    """
    f = _as_map(tau)
    L = MatrixLieTorus(ell, q)
    report = CheckReport("chevalley", window=window)
    with report.timed():
        basis = list(L.homogeneous_basis(window))
        images = {}
        bad = None
        for key, x in basis:
            images[x] = f(x)
        for key, x in basis:
            if f(images[x]) != x:
                bad = _payload(x)
                break
        report.add("involution", bad is None, bad)

        pw = window if pair_window is None else pair_window
        pair_basis = [x for key, x in basis if all(abs(c) <= pw for c in key.degree)]
        bad = None
        for i, x in enumerate(pair_basis):
            tx = images[x]
            for y in pair_basis[i + 1:]:
                lhs = f(bracket(x, y))
                if lhs != bracket(tx, images[y]):
                    bad = _payload(x, y)
                    break
            if bad:
                break
        report.add("bracket", bad is None, bad)

        bad = None
        for key, x in basis:
            img = images[x]
            if img.is_zero() or img.keys() != {GradedComponentKey(-key.root, deg_neg(key.degree))}:
                bad = _payload(x)
                break
        report.add("degree_flip", bad is None, bad)

        bad = None
        for h in L.zero_root_basis(zero_degree(q.n)):
            if images.get(h, f(h)) != -h:
                bad = _payload(h)
                break
        report.add("minus_id_on_L00", bad is None, bad)

        bad = None
        for x in L.chevalley_elements():
            y = f(x)
            if any(k.degree != zero_degree(q.n) for k in y.keys()) or not y.trace().is_zero():
                bad = _payload(x)
                break
        report.add("preserves_g", bad is None, bad)

        bad = None
        for alpha in L.roots.simple_roots():
            for key, x in basis:
                if f(ad_eta(alpha, x)) != ad_eta(alpha, images[x]):
                    bad = _payload(x)
                    break
            if bad:
                break
        report.add("commutes_with_ad_eta", bad is None, bad)
    return report


def extraction_round_trip(ell: int, q: QuantumMatrix, window: int = 2) -> CheckReport:
    """Compare the anti-involution read back from ``tau`` with the synthesized one."""
    desc = synthesize_chevalley(ell, q)
    L = desc.torus
    report = CheckReport("extract_coordinates", window=window)
    with report.timed():
        bad = None
        for lam in degree_window(q.n, window):
            a = QTElement.monomial(lam)
            got = extract_anti_involution(desc, a, L)
            if got != desc.table.apply(a):
                from .jsonio import element_to_json

                bad = element_to_json(a)
                break
        report.add("anti_involution_round_trip", bad is None, bad)
    return report
