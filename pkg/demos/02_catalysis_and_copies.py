"""
A catalyst versus several copies
================================

Borrowing the state (0.6, 0.4) makes the conversion certain; so does
working on three copies at once. For the second pair of states the same
catalyst needs eleven copies of itself, while no number of copies of the
source is ever converted with certainty.
"""

from elocc import from_coefficients, multicopy_radicand, p_catalyzed, p_max, tensor_power

s1 = from_coefficients(["0.4", "0.4", "0.1", "0.1"])
t1 = from_coefficients(["0.5", "0.25", "0.25"])
phi = from_coefficients(["0.6", "0.4"])

print("without catalyst:", p_max(s1, t1).p_max)
print("with catalyst:   ", p_catalyzed(s1, t1, phi))
for m in (1, 2, 3):
    print(f"{m} copies: p_max = {multicopy_radicand(s1, t1, m)}")

# both states scaled by 1/1.01; exact mode rescales on input
s2 = from_coefficients(["0.40", "0.40", "0.10", "0.1", "0.01"])
t2 = from_coefficients(["0.50", "0.25", "0.20", "0.05", "0.01"])
for copies in (1, 5, 10, 11):
    p = p_catalyzed(s2, t2, tensor_power(phi, copies))
    print(f"catalyst^{copies:<2}: {float(p):.6f}")
for m in range(1, 9):
    print(f"{m} source copies: p_max = {float(multicopy_radicand(s2, t2, m)):.6f}")
