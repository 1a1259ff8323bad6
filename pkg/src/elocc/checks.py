"""Reference claims about the two worked examples, as executable checks.

Example 1 converts (0.4, 0.4, 0.1, 0.1) into (0.5, 0.25, 0.25), helped by
the catalyst (0.6, 0.4). Example 2 uses five-level states, both scaled by
1/1.01, where the same catalyst needs eleven copies.

The second example's claim that m copies never convert with certainty
covers every m; it can only be checked up to a finite m here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .catalysis import (
    p_catalyzed,
    p_max_from_max_entangled,
    p_max_to_max_entangled,
    search_catalyst,
    simulate_protocol,
)
from .multicopy import estimate_pm, find_finite_m, multicopy_radicand
from .spectra import from_coefficients, maximally_entangled, tensor_power
from .vidal import closed_form_pe, is_deterministic, p_max

EX1_SOURCE = ("0.4", "0.4", "0.1", "0.1")
EX1_TARGET = ("0.5", "0.25", "0.25")
EX2_SOURCE = ("0.40", "0.40", "0.10", "0.1", "0.01")
EX2_TARGET = ("0.50", "0.25", "0.20", "0.05", "0.01")
CATALYST = ("0.6", "0.4")

EX2_COPIES_CHECKED = 8


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def example_states():
    """Exact spectra (source1, target1, source2, target2, catalyst)."""
    return tuple(
        from_coefficients(list(c), "exact")
        for c in (EX1_SOURCE, EX1_TARGET, EX2_SOURCE, EX2_TARGET, CATALYST)
    )


def reference_checks(ex2_copies: int = EX2_COPIES_CHECKED) -> list:
    s1, t1, s2, t2, phi = example_states()
    out = []

    def check(name, passed, detail=""):
        out.append(CheckResult(name, bool(passed), detail))

    rep = p_max(s1, t1)
    check("ex1: single-copy p_max = 0.8", rep.p_max == Fraction(4, 5), f"p_max={rep.p_max} at l={rep.argmin}")
    check("ex1: not convertible with certainty", not is_deterministic(s1, t1))
    p = p_catalyzed(s1, t1, phi)
    check("ex1: catalyst (0.6, 0.4) makes it certain", p == 1, f"p={p}")
    r3 = multicopy_radicand(s1, t1, 3)
    check("ex1: three copies convert with certainty", r3 == 1, f"p_max(3 copies)={r3}")
    trace = estimate_pm(s1, t1, 3)
    check(
        "ex1: multi-copy average reaches the closed-form bound by m=3",
        trace.best_p_avg == 1 == trace.closed_form_bound and trace.best_m == 3,
        f"best m={trace.best_m}",
    )
    fm = find_finite_m(s1, t1, 1, cap=5)
    check("ex1: smallest copy number for certainty is 3", fm.status == "found" and fm.m == 3, f"{fm.status} m={fm.m}")

    p11 = p_catalyzed(s2, t2, tensor_power(phi, 11))
    check("ex2: eleven catalyst copies make it certain", p11 == 1, f"p={p11}")
    radicands = [multicopy_radicand(s2, t2, m) for m in range(1, ex2_copies + 1)]
    check(
        f"ex2: m copies never certain (checked m=1..{ex2_copies})",
        all(r < 1 for r in radicands),
        "max p_max=" + f"{float(max(radicands)):.6f}",
    )
    check("ex2: least coefficients are equal, closed form is 1", closed_form_pe(s2, t2) == 1)
    fm2 = find_finite_m(s2, t2, 1, cap=ex2_copies)
    check("ex2: certainty threshold is the undecided boundary case", fm2.status == "boundary", fm2.status)

    check("generating the catalyst from a maximally entangled pair succeeds", p_max_from_max_entangled(2, phi) == 1)
    p3 = p_max_to_max_entangled(phi, 2)
    check("returning the maximally entangled pair has probability k*gamma_k = 0.8", p3 == Fraction(4, 5), f"{p3}")
    for src, tgt, label in ((s1, t1, "ex1"), (s2, t2, "ex2")):
        for k in (2, 3):
            base = p_max(src, tgt).p_max
            cat = p_catalyzed(src, tgt, maximally_entangled(k))
            check(f"{label}: maximally entangled Phi_{k} is not a catalyst", cat == base, f"{cat} vs {base}")
    proto = simulate_protocol(s1, t1, phi, 3)
    check(
        "ex1: three-step protocol bound holds at m=3",
        proto.bound_holds and proto.inert and proto.product_bound == Fraction(4, 5),
        f"bound={proto.product_bound} m-copy={proto.m_copy_p_max}",
    )
    found = search_catalyst(s1, t1, 2, 10)
    check(
        "ex1: grid search over 2-level catalysts finds (0.6, 0.4)",
        found.best_p == 1 and found.best_catalyst == phi,
        str(found.best_catalyst),
    )
    for m in (2, 5, 10):
        n = tensor_power(s1, m).n_blocks
        check(f"distinct coefficients of ex1 source^{m} <= C({m + 1}, 1)", n <= math.comb(m + 1, 1), f"{n} blocks")
    return out
