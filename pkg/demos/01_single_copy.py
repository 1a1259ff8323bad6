"""
Single-copy conversion and majorization
=======================================

How likely is it that two parties turn one shared pure state into another
using only local operations and classical communication? Only the Schmidt
coefficients matter.
"""

from elocc import from_coefficients, is_deterministic, p_max, suffix_sums

source = from_coefficients(["0.4", "0.4", "0.1", "0.1"])
target = from_coefficients(["0.5", "0.25", "0.25"])

# tail sums E_l, the quantities compared position by position
print("source tails:", [(l, str(e)) for l, e in suffix_sums(source)])
print("target tails:", [(l, str(e)) for l, e in suffix_sums(target)])

report = p_max(source, target)
print(f"p_max = {report.p_max} (bottleneck at l = {report.argmin})")

# certainty holds exactly when the source is majorized by the target
print("deterministic:", is_deterministic(source, target))
print("maximally entangled -> target deterministic:",
      is_deterministic(from_coefficients(["1", "1", "1"]), target))
