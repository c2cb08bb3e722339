"""
Quantum tori and their twist cocycle
====================================

Monomials multiply by a scalar twist; elementary matrices give signs only.
"""

from fractions import Fraction

from lietori import QTElement, QuantumMatrix, qt_commutator, qt_invert_monomial, qt_mul, twist
from lietori.oracles import twist_by_rewriting

# x1 x2 = q12 x2 x1 with q12 = 2/3
q = QuantumMatrix.from_upper(2, {(1, 2): Fraction(2, 3)})
x1, x2 = QTElement.generator(2, 1), QTElement.generator(2, 2)
print("x1*x2 =", qt_mul(q, x1, x2))
print("x2*x1 =", qt_mul(q, x2, x1))

# the scalar in front of a product of monomials, two ways
lam, mu = (2, -1), (-1, 3)
print("twist:", twist(q, lam, mu), "by rewriting words:", twist_by_rewriting(q, lam, mu))

# every monomial is invertible
a = QTElement.monomial((1, 1), 5)
inv = qt_invert_monomial(q, a)
print("inverse of", a, "is", inv, "check:", qt_mul(q, a, inv))

# commutators of monomials vanish exactly when the twist is symmetric
for v in (1, -1, 2):
    qv = QuantumMatrix.from_upper(2, {(1, 2): v})
    print(f"q12={v}: [x1, x2] =", qt_commutator(qv, x1, x2))
