"""
Gamma coefficient tables, two ways
==================================

The Gamma columns come from alternating binomial sums in pq, but they
also satisfy a two-term recurrence and identify with the root sequence
a_n.  Compute them both ways and line them up.
"""

from rank2verma import CartanData, GammaTable, SequenceTable, gamma

cartan = CartanData(2, 3)
table = GammaTable(cartan)
seqs = SequenceTable(cartan)

print("k   recurrence      binomial sums")
for k in range(9):
    rec = table.entry(k)
    binom = gamma(k, cartan)
    assert rec == binom
    print(f"{k}   {str(rec):14s}  {binom}")

# odd entries are (c_n, e_n), even entries are (d_{n+1}, c_n)
print("\nidentification with the parity-split sequences:")
for n in range(4):
    print(
        f"  Gamma^{2 * n + 1} = (c_{n}, e_{n}) = {(seqs.c(n), seqs.e(n))}"
        f"   Gamma^{2 * n + 2} = (d_{n + 1}, c_{n}) = {(seqs.d(n + 1), seqs.c(n))}"
    )
    assert table.entry(2 * n + 1) == (seqs.c(n), seqs.e(n))
    assert table.entry(2 * n + 2) == (seqs.d(n + 1), seqs.c(n))

# and the columns talk to each other across parities
for n in range(8):
    assert cartan.q * table.g2(2 * n + 1) == cartan.p * table.g1(2 * n)
print("\nq*Gamma_2^(2n+1) = p*Gamma_1^(2n) holds through n = 7")
