"""
Recovering the coordinate algebra from brackets
===============================================

The bracket of two root vectors whose roots sum to a root encodes the product
of their coordinates.  Reversing the pair gives the opposite product.
"""

from lietori import MatrixLieTorus, QTElement, QuantumMatrix, Root, qt_mul
from lietori.verify import verify_coordinate_recovery

q = QuantumMatrix.from_upper(2, {(1, 2): 3})
L = MatrixLieTorus(3, q)
a, b = QTElement.monomial((1, 0)), QTElement.monomial((0, 1))

pair = (Root(1, 2), Root(2, 3))
print("from brackets:", L.extract_coordinate_mul(pair, a, b), " direct:", qt_mul(q, a, b))
print("reversed pair:", L.extract_coordinate_mul(pair[::-1], a, b), " opposite:", qt_mul(q, b, a))

# the same pair read through the Weyl group: e_beta(a) for every root beta
for beta in (Root(1, 3), Root(3, 1), Root(4, 2)):
    print(f"e_{beta}(x1) =", L.coordinate_embed(beta, a))

report = verify_coordinate_recovery(3, q, pairs=20, seed=1)
print("recovery on 20 random pairs:", "pass" if report.passed else "fail")
