"""
Closed-form exponent words vs the weight trajectory
===================================================

Each orbit family carries a word of generators with affine exponents in
(m, t).  The closed-form display must equal what you get by dragging the
highest weight through the reflection word one letter at a time.
"""

from fractions import Fraction

from rank2verma import (
    CartanData,
    case_weight,
    change_of_variable,
    ffm_exponents,
    kac_kazhdan,
    trajectory_exponent_word,
    xi_of_mt,
)

cartan = CartanData(2, 2)

for case in (1, 2, 3, 4):
    data = ffm_exponents(case, 2, cartan)
    traj = trajectory_exponent_word(case, 2, cartan)
    assert data.exponents.exponents == traj.exponents
    print(f"case {case}, n = 2: root {data.root.as_pair()}, word {data.word}")
    for letter, form in zip(data.exponents.letters, data.exponents.exponents):
        print(f"    f{letter}^({form})")
print("displays match the trajectory symbolically for all four cases")

# evaluate one word at a concrete (m, t) and check the reducibility line
m, t = 2, Fraction(1, 3)
data = ffm_exponents(2, 1, cartan)
weight = case_weight(2, 1, cartan).at(m, t)
print(f"\ncase 2, n = 1 at m = {m}, t = {t}: weight (shifted) = ({weight.x}, {weight.y})")
for letter, value in data.exponents.at(m, t):
    print(f"    f{letter}^{value}")
assert kac_kazhdan(weight, data.root, m, cartan)
print("the weight sits on the reducibility line for this (root, m)")

# the same word in the product variable xi
word_xi, xi_form = change_of_variable(data.exponents, cartan)
xi_val = xi_of_mt(2, 1, cartan).at(m, t)
print(f"\nrewritten in xi = {xi_form} (value {xi_val}):")
for letter, value in word_xi.at(m, xi_val):
    print(f"    f{letter}^{value}")
