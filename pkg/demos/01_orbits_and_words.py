"""
Simple-root orbits and their reflection words
=============================================

Walk the positive half-orbits of the two simple roots for a few (p, q)
pairs and watch the quadratic q*x^2 - pq*x*y + p*y^2 stay constant.
"""

from rank2verma import CartanData, RootVector, apply_word, orbit

# the rank-2 algebra with a12 = -2, a21 = -3
cartan = CartanData(2, 3)

for seed in (RootVector(1, 0), RootVector(0, 1)):
    print(f"orbit of {seed.as_pair()} at (p, q) = (2, 3):")
    for op in orbit(seed, 6, cartan):
        pt = op.point
        print(
            f"  ({pt.k1:3d}, {pt.k2:3d})  family {op.case} n={op.n}"
            f"  curve={pt.curve_value(cartan)}  word: {op.word}"
        )
    print()

# every word reflects its own root to the negative
for op in orbit(RootVector(1, 0), 6, cartan):
    image = apply_word(op.word, op.point, cartan)
    assert image.as_pair() == (-op.point.k1, -op.point.k2)
print("each reflection word negates its own root, as it should")

# the finite-type pairs are rejected up front
try:
    CartanData(1, 3)
except ValueError as exc:
    print(f"(1, 3) rejected: {exc}")
