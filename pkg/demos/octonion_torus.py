"""
The octonion torus
==================

Three anticommuting generators that fail to associate, plus central Laurent variables.
"""

from lietori import OctonionTorus, oct_associator, oct_conjugation, oct_mul, oct_pre_chevalley
from lietori.verify import verify_torus_axioms

O = OctonionTorus(4)
x1, x2, x3, x4 = (O.x(i) for i in range(1, 5))

print("x1 x2 =", oct_mul(x1, x2), " x2 x1 =", oct_mul(x2, x1))
print("(x1 x2) x3 =", oct_mul(oct_mul(x1, x2), x3))
print("x1 (x2 x3) =", oct_mul(x1, oct_mul(x2, x3)))
print("associator (x1, x2, x3) =", oct_associator(x1, x2, x3))

# squares land in the central Laurent ring
print("x1 x1 =", oct_mul(x1, x1))
print("x4 commutes with x1:", oct_mul(x4, x1) == oct_mul(x1, x4))

# alternativity: (a, a, b) = 0 even though the algebra is not associative
a, b = x1 + x2, x3
print("(a, a, b) =", oct_associator(a, a, b), " (b, a, a) =", oct_associator(b, a, a))

# conjugation fixes x4 and negates x1..x3; bar additionally inverts degrees
print("conj(x1) =", oct_conjugation(x1), " conj(x4) =", oct_conjugation(x4))
print("bar(x1 x2) =", oct_pre_chevalley(oct_mul(x1, x2)))

report = verify_torus_axioms(OctonionTorus(3), window=1)
print("torus axioms:", "pass" if report.passed else "fail", [c.name for c in report.checks])
