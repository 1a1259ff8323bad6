"""
Building a catalyst from the multi-copy problem, and back
=========================================================

Any m-copy average p_m is matched by a finite catalyst assembled from
mixed tensor powers of the two states. Conversely, any catalyst can be
imitated on m copies up to a factor k * gamma_k that fades as m grows.
"""

from elocc import (
    construct_catalyst,
    from_coefficients,
    multicopy_radicand,
    p_catalyzed,
    simulate_protocol,
)

# unnormalized integer weights are rescaled exactly
source = from_coefficients(["9", "3", "2"])
target = from_coefficients(["6", "5", "2"])

for m in (2, 3, 4):
    cat = construct_catalyst(source, target, m)
    r = multicopy_radicand(source, target, m)
    p = p_catalyzed(source, target, cat)
    print(f"m={m}: p_m = {float(r) ** (1 / m):.6f}, catalyst dim {cat.dim}, "
          f"p_catalyzed = {float(p):.6f}, exact weights: {cat.exact}")

phi = from_coefficients(["0.6", "0.4"])
for m in (1, 2, 4, 8):
    rep = simulate_protocol(source, target, phi, m)
    print(f"m={m}: p1*p2*p3 = {float(rep.product_bound):.6f} <= "
          f"p_max(m copies) = {float(rep.m_copy_p_max):.6f}  (flat state inert: {rep.inert})")
