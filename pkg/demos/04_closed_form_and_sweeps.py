"""
Bracketing the multi-copy optimum
=================================

The supremum over copy numbers, and over catalysts, is min{1, alpha_n/beta_n}.
A finite sweep gives a certified lower bound; the closed form is the upper
bound. The per-copy average need not grow monotonically in m (look at
m = 3 and m = 4 below). Float mode is available for longer sweeps.
"""

from elocc import (
    closed_form_pe,
    estimate_pm,
    find_finite_m,
    from_coefficients,
    numeric_mode,
    search_catalyst,
)

source = from_coefficients(["8", "4", "4"])
target = from_coefficients(["8", "8", "6"])
print("closed form:", closed_form_pe(source, target))

trace = estimate_pm(source, target, 8)
for e in trace.entries:
    print(f"m={e.m}: p_avg = {float(e.p_avg):.6f}  blocks {e.blocks_source}/{e.blocks_target}")
print(f"best so far m={trace.best_m}: {float(trace.best_p_avg):.6f}")

for p in ("0.83", "0.9", "11/12", "0.95"):
    res = find_finite_m(source, target, p, cap=12)
    print(f"threshold {p}: {res.status}", f"m={res.m}" if res.m else "")

best = search_catalyst(source, target, 3, 8)
print("best 3-level catalyst on the grid:", best.best_catalyst, float(best.best_p))

with numeric_mode("float"):
    s = from_coefficients(["0.5", "0.25", "0.25"])
    t = from_coefficients([str(4 / 11), str(4 / 11), str(3 / 11)])
trace = estimate_pm(s, t, 40, early_stop_gap=0.05)
print(f"float sweep: m={trace.best_m}, {trace.best_p_avg:.6f} "
      f"(bound {trace.closed_form_bound:.6f}, stopped early: {trace.stopped_early})")
