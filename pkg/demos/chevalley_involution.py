"""
Chevalley involutions and when they exist
=========================================

An elementary quantum torus has bar(x_i) = x_i^-1, and X -> -(bar X)^T is then
a Chevalley involution of sl_3 over it.  A non-elementary torus has none.
"""

from lietori import (
    MatrixLieTorus,
    QTElement,
    QuantumMatrix,
    Root,
    decide_chevalley_existence,
    extract_anti_involution,
    oracle_search_pre_chevalley,
    synthesize_chevalley,
    verify_chevalley,
)

q = QuantumMatrix.from_upper(2, {(1, 2): -1})
tau = synthesize_chevalley(2, q)
L = MatrixLieTorus(2, q)

x = L.e(Root(1, 2), QTElement.monomial((1, 1)))
print("x       =", x)
print("tau(x)  =", tau(x))
print("tau^2 x =", tau(tau(x)))

report = verify_chevalley(tau, 2, q, window=1)
for check in report.checks:
    print(f"  {check.name:24s} {'pass' if check.passed else 'FAIL'}")

# the coordinate anti-involution can be read back from tau alone
a = QTElement.monomial((1, 1))
print("bar(x1 x2) read from tau:", extract_anti_involution(tau, a, L))

# a torus with q12 = 2 is a fine torus but has no Chevalley involution
bad = QuantumMatrix.from_upper(2, {(1, 2): 2})
print("decide(q12=-1):", decide_chevalley_existence(q).to_json())
print("decide(q12=2): ", decide_chevalley_existence(bad).to_json())
print("oracle(q12=2): ", oracle_search_pre_chevalley(bad, 2).to_json())
