"""
Quadratic-factor products vs projected singular vectors
=======================================================

Project the brute-force singular vector into the Heisenberg and sl2-like
targets and compare it, exactly, with the closed-form product of
quadratic factors X_u evaluated at xi(m, t).
"""

from fractions import Fraction

from rank2verma import (
    CartanData,
    build_product,
    end_to_end,
    full_ladder,
    sandwich_falling,
    shift_left,
)

cartan = CartanData(2, 3)

# the factor identities behind the factorization
assert shift_left(Fraction(5, 7), 3, "H")
assert sandwich_falling(2, 4, "L")
assert full_ladder(5, "H")
print("shift, sandwich and ladder identities check out")

# the symbolic product for one family: subscripts affine in xi
spec = build_product(2, 2, 1, cartan)
print(f"\nfamily (case 2, n = 2), m = 1: {spec.factor_count()} factors, "
      f"tail f{spec.tail_letter}^{spec.tail_power}")
for block in spec.blocks:
    subs = ", ".join(str(s) for s in block.subscripts)
    print(f"    block w={block.w} ({block.family}): X at [{subs}]")

# compare against the oracle at five generic t samples, both targets
print("\nend-to-end at (p, q) = (2, 3):")
for case, n, m in ((1, 1, 2), (2, 1, 1), (4, 1, 1), (1, 2, 1)):
    for rec in end_to_end(case, n, m, cartan):
        assert rec.status == "ok", rec
    last = rec
    print(f"    case {case}, n = {n}, m = {m}: grade {last.grade} ok in H and L "
          f"(last scalar {last.scalar})")
