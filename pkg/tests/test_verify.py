from fractions import Fraction

import pytest

from lietori.errors import NotMonomial
from lietori.jsonio import (
    element_from_json,
    element_to_json,
    lie_element_from_json,
    lie_element_to_json,
    quantum_matrix_from_json,
    quantum_matrix_to_json,
)
from lietori.lie_torus import MatrixLieTorus, bracket
from lietori.octonion_torus import OctonionTorus
from lietori.quantum_torus import QTElement, QuantumTorus
from lietori.report import CheckReport, exit_code
from lietori.scalars import QuantumMatrix
from lietori.verify import (
    verify_coordinate_recovery,
    verify_division,
    verify_root_grading,
    verify_torus_axioms,
)

Q_MINUS = QuantumMatrix.from_upper(2, {(1, 2): -1})
Q_TWO = QuantumMatrix.from_upper(2, {(1, 2): 2})
Q_ID = QuantumMatrix.identity(2)


def test_root_grading_examples():
    assert verify_root_grading(2, Q_ID, 1).passed
    assert verify_root_grading(3, Q_TWO, 1).passed


def test_root_grading_detects_zeroed_brackets():
    def no_zero_space(x, y):
        out = bracket(x, y)
        return out if all(not k.root.is_zero for k in out.keys()) else out.scale(0)

    report = verify_root_grading(2, Q_MINUS, 1, bracket_fn=no_zero_space)
    rg3 = report.check("RG3_zero_space_spanned")
    assert not rg3.passed
    assert rg3.counterexample["lam"] == [0, 0]
    assert rg3.counterexample["rank"] == 0
    assert not report.passed


def test_division_examples():
    assert verify_division(2, Q_MINUS, 2).passed
    assert verify_division(2, Q_ID, 2).passed


def test_division_vacuous_outside_support():
    report = verify_division(2, Q_ID, 1, support=lambda lam: lam[1] == 0)
    assert report.passed
    assert report.extra["vacuous"] == 6 * 6
    assert report.extra["keys_checked"] == 6 * 3


def test_division_parallel_matches_serial():
    a = verify_division(2, Q_MINUS, 1)
    b = verify_division(2, Q_MINUS, 1, workers=2)
    assert a.passed and b.passed and a.extra == b.extra


def test_torus_examples():
    report = verify_torus_axioms(OctonionTorus(3), 2)
    assert report.passed
    assert report.check("octonion_relations").passed
    assert verify_torus_axioms(QuantumTorus(Q_TWO), 2).passed


class HoleyTorus(QuantumTorus):
    """x^(1,0) has no inverse in this mock."""

    def inverse_monomial(self, a):
        lam, _ = a.leading()
        if lam == (1, 0):
            raise NotMonomial("mock: no inverse")
        return super().inverse_monomial(a)


def test_torus_detects_non_invertible_degree():
    report = verify_torus_axioms(HoleyTorus(Q_MINUS), 1)
    check = report.check("monomials_invertible")
    assert not check.passed and check.counterexample == {"lam": [1, 0]}


class SubTorus(QuantumTorus):
    """Support restricted to the x2-axis: it no longer generates Z^2."""

    def in_support(self, lam):
        return lam[0] == 0


def test_torus_detects_small_support():
    report = verify_torus_axioms(SubTorus(Q_MINUS), 1)
    assert report.check("monomials_invertible").passed
    assert report.check("support_generates").counterexample == {"missing": [[1, 0]]}


def test_coordinate_recovery_report():
    report = verify_coordinate_recovery(3, Q_MINUS, pairs=10)
    assert report.passed
    assert {c.name for c in report.checks} == {"canonical_pair_is_torus_product", "reversed_pair_is_opposite_product"}


def test_reports_are_deterministic():
    a = verify_root_grading(2, Q_TWO, 1, seed=4).to_json()
    b = verify_root_grading(2, Q_TWO, 1, seed=4).to_json()
    a.pop("wall_time"), b.pop("wall_time")
    assert a == b


def test_report_json_and_exit_codes():
    r = CheckReport("demo")
    r.add("ok", True)
    assert exit_code(r) == 0
    r.add("bad", False, {"lam": [1]}, "why")
    data = r.to_json()
    assert data["pass"] is False
    assert data["checks"][1] == {"name": "bad", "pass": False, "counterexample": {"lam": [1]}, "detail": "why"}
    assert exit_code([CheckReport("a"), r]) == 1
    with pytest.raises(KeyError):
        r.check("missing")


def test_json_round_trips():
    q = QuantumMatrix.from_upper(3, {(1, 2): Fraction(-2, 3), (1, 3): 5})
    assert quantum_matrix_from_json(quantum_matrix_to_json(q)) == q
    a = QTElement(3, {(1, 0, -2): Fraction(3, 4), (0, 0, 0): -1})
    assert element_from_json(element_to_json(a)) == a
    o = OctonionTorus(3).x(1, -1)
    assert type(element_from_json(element_to_json(o))) is type(o)
    L = MatrixLieTorus(2, Q_MINUS)
    x = L.unit(1, 3, a.__class__(2, {(1, 1): 2})) + L.h(2)
    assert lie_element_from_json(lie_element_to_json(x)) == x
