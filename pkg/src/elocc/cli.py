"""Command-line front end.

    elocc pmax 0.4,0.4,0.1,0.1 0.5,0.25,0.25
    elocc multicopy SRC TGT --mmax 6 --json
    elocc verify-paper

States are given inline (``0.4,0.4,0.1,0.1`` or ``2/5,2/5,1/10,1/10``) or
as a path to a file with one coefficient per line (``#`` starts a comment),
or a JSON array of strings. Exit status: 0 success, 1 failed verification
or oracle mismatch, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import oracle, serialize
from ._numeric import EXACT, FLOAT, fmt, to_scalar
from .catalysis import (
    construct_catalyst,
    p_catalyzed,
    search_catalyst,
    simulate_protocol,
)
from .checks import reference_checks
from .errors import CrossCheckError, SpectrumError
from .multicopy import DEFAULT_CAP, estimate_pm, find_finite_m
from .spectra import CompressedSpectrum, expand, from_coefficients, tensor_power, tensor_product
from .vidal import closed_form_pe, p_max

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _read_coefficients(arg: str) -> list:
    if os.path.isfile(arg):
        with open(arg) as fh:
            text = fh.read()
        stripped = text.lstrip()
        if stripped.startswith("[") or stripped.startswith("{"):
            data = json.loads(text)
            if isinstance(data, dict):
                data = data.get("coefficients")
            if not isinstance(data, list):
                raise InputError(f"{arg}: expected a JSON array of coefficients")
            return [str(x) for x in data]
        out = []
        for line in text.splitlines():
            line = line.split("#", 1)[0].strip()
            if line:
                out.append(line)
        return out
    return [tok for tok in arg.split(",") if tok.strip()]


def parse_state(arg: str, mode: str, label: str = "state") -> CompressedSpectrum:
    """Parse a command-line state, naming the offending coefficient on error."""
    raw = _read_coefficients(arg)
    for i, tok in enumerate(raw):
        try:
            to_scalar(tok, mode)
        except (ValueError, TypeError):
            raise InputError(f"{label}: coefficient {i + 1} ({tok!r}) is not a number") from None
    try:
        return from_coefficients(raw, mode)
    except SpectrumError as exc:
        raise InputError(f"{label}: {exc}") from None


class Oracle:
    """Brute-force cross-checks, skipped when the instance is too large."""

    def __init__(self, enabled: bool):
        self.enabled = enabled
        self.notes: list = []
        self.mismatch = False

    def pmax(self, label, src, tgt, value):
        if not self.enabled:
            return
        if max(src.dim, tgt.dim) > oracle.MAX_PMAX_DIM:
            self.notes.append(f"oracle {label}: skipped (dimension {max(src.dim, tgt.dim)})")
            return
        ref = oracle.brute_p_max(list(expand(src)), list(expand(tgt)))
        self._compare(label, value, ref)

    def power_pmax(self, label, src, tgt, m, value):
        if not self.enabled:
            return
        if max(src.dim, tgt.dim) ** m > oracle.MAX_PMAX_DIM:
            self.notes.append(f"oracle {label}: skipped (dimension {max(src.dim, tgt.dim)}^{m})")
            return
        ps = oracle.brute_tensor_power(list(expand(src)), m)
        pt = oracle.brute_tensor_power(list(expand(tgt)), m)
        self._compare(label, value, oracle.brute_p_max(ps, pt))

    def catalyzed(self, label, src, tgt, cat, value):
        if not self.enabled:
            return
        if max(src.dim, tgt.dim) * cat.dim > oracle.MAX_PMAX_DIM:
            self.notes.append(f"oracle {label}: skipped (dimension)")
            return
        c = list(expand(cat))
        ref = oracle.brute_p_max(
            oracle.brute_tensor_product(list(expand(src)), c),
            oracle.brute_tensor_product(list(expand(tgt)), c),
        )
        self._compare(label, value, ref)

    def _compare(self, label, value, ref):
        if isinstance(value, Fraction) and isinstance(ref, Fraction):
            ok = value == ref
        else:
            ok = abs(float(value) - float(ref)) <= 1e-9
        self.notes.append(f"oracle {label}: {'ok' if ok else 'MISMATCH'} (brute force {fmt(ref)})")
        if not ok:
            self.mismatch = True


def _emit(args, command, report, lines, extra=None):
    if args.json:
        print(serialize.dumps(command, report, **(extra or {})))
    else:
        for line in lines:
            print(line)


def cmd_pmax(args, mode, orc):
    src = parse_state(args.source, mode, "source")
    tgt = parse_state(args.target, mode, "target")
    rep = p_max(src, tgt)
    orc.pmax("p_max", src, tgt, rep.p_max)
    _emit(args, "pmax", rep, [
        f"p_max = {fmt(rep.p_max)}",
        f"argmin l = {rep.argmin}",
        f"E_l(source) = {fmt(rep.source_tail)}",
        f"E_l(target) = {fmt(rep.target_tail)}",
    ])


def cmd_multicopy(args, mode, orc):
    src = parse_state(args.source, mode, "source")
    tgt = parse_state(args.target, mode, "target")
    trace = estimate_pm(src, tgt, args.mmax, args.early_stop_gap, args.workers)
    for e in trace.entries:
        orc.power_pmax(f"m={e.m}", src, tgt, e.m, e.radicand)
    lines = [f"{'m':>3}  {'p_avg':>14}  {'p_max(m copies)':>16}  blocks"]
    for e in trace.entries:
        lines.append(
            f"{e.m:>3}  {float(e.p_avg):>14.10f}  {float(e.radicand):>16.10f}  {e.blocks_source}/{e.blocks_target}"
        )
    lines.append(f"best m = {trace.best_m}, best p_avg = {fmt(trace.best_p_avg)}")
    lines.append(f"closed-form bound = {fmt(trace.closed_form_bound)}")
    _emit(args, "multicopy", trace, lines)


def cmd_catalyzed(args, mode, orc):
    src = parse_state(args.source, mode, "source")
    tgt = parse_state(args.target, mode, "target")
    cat = parse_state(args.catalyst, mode, "catalyst")
    if args.copies < 1:
        raise InputError("--copies must be at least 1")
    cat = tensor_power(cat, args.copies)
    p = p_catalyzed(src, tgt, cat)
    orc.catalyzed("p_catalyzed", src, tgt, cat, p)
    _emit(args, "catalyzed", {"p_catalyzed": p, "catalyst": cat, "baseline": p_max(src, tgt).p_max}, [
        f"p_catalyzed = {fmt(p)}",
        f"without catalyst = {fmt(p_max(src, tgt).p_max)}",
        f"catalyst dimension = {cat.dim}",
    ])


def cmd_pe_bound(args, mode, orc):
    src = parse_state(args.source, mode, "source")
    tgt = parse_state(args.target, mode, "target")
    bound = closed_form_pe(src, tgt)
    if orc.enabled and max(src.dim, tgt.dim) <= oracle.MAX_PMAX_DIM:
        ref = oracle.brute_p_max(list(expand(src)), list(expand(tgt)))
        ok = ref <= bound
        orc.notes.append(f"oracle single-copy p_max {fmt(ref)} <= bound: {'ok' if ok else 'MISMATCH'}")
        orc.mismatch |= not ok
    _emit(args, "pe-bound", {"closed_form_pe": bound}, [f"P_E = P_M = {fmt(bound)}"])


def cmd_make_catalyst(args, mode, orc):
    src = parse_state(args.source, mode, "source")
    tgt = parse_state(args.target, mode, "target")
    try:
        cat = construct_catalyst(src, tgt, args.m)
    except SpectrumError as exc:
        raise InputError(str(exc)) from None
    p = p_catalyzed(src, tgt, cat)
    trace_radicand = p_max(tensor_power(src, args.m), tensor_power(tgt, args.m)).p_max
    if cat.exact:
        holds = Fraction(p) ** args.m >= trace_radicand
    else:
        holds = float(p) ** args.m >= float(trace_radicand) - 1e-9
    orc.catalyzed("p_catalyzed", src, tgt, cat, p)
    lines = [
        f"catalyst ({'exact' if cat.exact else 'float weights'}): {cat.n_blocks} distinct values, dimension {cat.dim}",
        f"p_catalyzed = {fmt(p)}",
        f"p_max({args.m} copies) = {fmt(trace_radicand)}",
        f"p_catalyzed^{args.m} >= p_max({args.m} copies): {'yes' if holds else 'NO'}",
    ]
    if args.show:
        lines.insert(1, str(cat))
    _emit(args, "make-catalyst", {"catalyst": cat, "p_catalyzed": p, "m_copy_p_max": trace_radicand,
                                  "guarantee_holds": holds}, lines)
    return EXIT_OK if holds else EXIT_FAIL


def cmd_simulate(args, mode, orc):
    src = parse_state(args.source, mode, "source")
    tgt = parse_state(args.target, mode, "target")
    cat = parse_state(args.catalyst, mode, "catalyst")
    try:
        rep = simulate_protocol(src, tgt, cat, args.m)
    except SpectrumError as exc:
        raise InputError(str(exc)) from None
    orc.power_pmax(f"m={args.m}", src, tgt, args.m, rep.m_copy_p_max)
    _emit(args, "simulate-protocol", rep, [
        f"p1 (make catalyst) = {fmt(rep.p1)}",
        f"p2 >= p_catalyzed^m = {fmt(rep.p2_lower_bound)}",
        f"p3 (return Phi_{rep.k}) = k*gamma_k = {fmt(rep.p3)}",
        f"p1*p2*p3 = {fmt(rep.product_bound)}",
        f"p_max({rep.m} copies) = {fmt(rep.m_copy_p_max)}",
        f"bound holds: {rep.bound_holds}; Phi_{rep.k} inert: {rep.inert}",
    ])
    return EXIT_OK if rep.bound_holds and rep.inert else EXIT_FAIL


def cmd_find_m(args, mode, orc):
    src = parse_state(args.source, mode, "source")
    tgt = parse_state(args.target, mode, "target")
    try:
        res = find_finite_m(src, tgt, args.p, args.cap)
    except (SpectrumError, ValueError) as exc:
        raise InputError(str(exc)) from None
    if res.status == "found":
        orc.power_pmax(f"m={res.m}", src, tgt, res.m, res.scanned[-1][1])
    lines = [f"status = {res.status}"]
    if res.m is not None:
        lines.append(f"m = {res.m}")
    if res.impossible:
        lines.append(f"threshold exceeds the closed-form bound {fmt(res.closed_form_bound)}: no m works")
    elif res.status == "not-found":
        lines.append(f"no m <= {res.cap} reaches the threshold")
    elif res.status == "boundary":
        lines.append(f"threshold equals the closed-form bound; no m <= {res.cap} reaches it; undecided")
    _emit(args, "find-m", res, lines)


def cmd_search(args, mode, orc):
    src = parse_state(args.source, mode, "source")
    tgt = parse_state(args.target, mode, "target")
    try:
        res = search_catalyst(src, tgt, args.k, args.grid)
    except (SpectrumError, ValueError) as exc:
        raise InputError(str(exc)) from None
    orc.catalyzed("best", src, tgt, res.best_catalyst, res.best_p)
    _emit(args, "search-catalyst", res, [
        f"best catalyst = {', '.join(str(v) for v in expand(res.best_catalyst))}",
        f"best p = {fmt(res.best_p)}",
        f"baseline = {fmt(res.baseline)}",
    ])


def cmd_verify(args, mode, orc):
    results = reference_checks()
    if args.json:
        print(json.dumps({
            "schema": serialize.SCHEMA_VERSION,
            "command": "verify-paper",
            "checks": [{"name": r.name, "passed": r.passed, "detail": r.detail} for r in results],
        }, indent=2))
    else:
        for r in results:
            tail = f"  ({r.detail})" if r.detail else ""
            print(f"{'PASS' if r.passed else 'FAIL'}  {r.name}{tail}")
        print(f"{sum(r.passed for r in results)}/{len(results)} claims passed")
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--float", dest="float_mode", action="store_true", default=argparse.SUPPRESS,
                        help="floating-point arithmetic (default: exact rationals)")
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")
    common.add_argument("--oracle", action="store_true", default=argparse.SUPPRESS,
                        help="cross-check against brute force; exit 1 on mismatch")

    parser = argparse.ArgumentParser(
        prog="elocc",
        description="Optimal LOCC conversion probabilities from Schmidt spectra.",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, pair=True):
        p = sub.add_parser(name, help=help_text, parents=[common])
        if pair:
            p.add_argument("source")
            p.add_argument("target")
        p.set_defaults(func=func)
        return p

    add("pmax", cmd_pmax, "single-copy optimal conversion probability")
    p = add("multicopy", cmd_multicopy, "geometric-average m-copy probabilities")
    p.add_argument("--mmax", type=int, default=6)
    p.add_argument("--early-stop-gap", type=float, default=None)
    p.add_argument("--workers", type=int, default=None)
    p = add("catalyzed", cmd_catalyzed, "conversion probability with a catalyst")
    p.add_argument("--catalyst", required=True)
    p.add_argument("--copies", type=int, default=1)
    add("pe-bound", cmd_pe_bound, "closed-form supremum over catalysts and copies")
    p = add("make-catalyst", cmd_make_catalyst, "build a catalyst from the m-copy problem")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--show", action="store_true", help="print the catalyst blocks")
    p = add("simulate-protocol", cmd_simulate, "three-step catalyst simulation bound")
    p.add_argument("--catalyst", required=True)
    p.add_argument("--m", type=int, required=True)
    p = add("find-m", cmd_find_m, "smallest copy number reaching a threshold")
    p.add_argument("--p", required=True)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p = add("search-catalyst", cmd_search, "grid search over small catalysts")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--grid", type=int, required=True)
    add("verify-paper", cmd_verify, "check the worked-example claims", pair=False)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    args.json = getattr(args, "json", False)
    args.oracle = getattr(args, "oracle", False)
    mode = FLOAT if getattr(args, "float_mode", False) else EXACT
    orc = Oracle(args.oracle)
    try:
        code = args.func(args, mode, orc) or EXIT_OK
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CrossCheckError as exc:
        print(f"internal cross-check failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    for note in orc.notes:
        print(note, file=sys.stderr if args.json else sys.stdout)
    if orc.mismatch:
        return EXIT_FAIL
    return code


if __name__ == "__main__":
    sys.exit(main())
