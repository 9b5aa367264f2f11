"""``semisym`` command line.

Every subcommand builds a structured report (a dict) first; the human text
and the exit status are both computed from it.  Exit codes: 0 everything
holds, 1 a property failed (witness printed), 2 usage or input error,
3 inconclusive within the budget.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import finite
from .closure import DEFAULT_CAP
from .constructions import builtin
from .elementarize import (LEMMAS, HypothesisError, elementarize, frobenius_segment_times_elementary,
                           lemma_transcript, theorem_suite_linear, theorem_suite_upper_bound,
                           verify_elementarization)
from .enumeration import MAX_ORDER, enumerate_semirings
from .poly import DEFAULT_BUDGET, NotSymmetric, segment_times_elementary
from .polyparse import PolyParseError, parse_polynomial
from .semiring import AxiomError, FiniteSemiring, Semiring
from .tablefile import TableFileError, dumps, load
from .verdict import FAILS, HOLDS, INCONCLUSIVE, Verdict, fails, holds, inconclusive

OK, FAILED, USAGE, UNDECIDED = 0, 1, 2, 3


class InputError(Exception):
    pass


def status_code(statuses) -> int:
    """Exit code from a collection of verdict status strings."""
    statuses = list(statuses)
    if FAILS in statuses:
        return FAILED
    if INCONCLUSIVE in statuses:
        return UNDECIDED
    return OK


def load_semiring(arg: str) -> Semiring:
    """A table-file path or ``@<builtin-id>`` such as ``@sat:3``."""
    if arg.startswith("@"):
        try:
            return builtin(arg[1:])
        except (KeyError, ValueError, AxiomError) as e:
            raise InputError(str(e).strip('"')) from None
    if not Path(arg).exists():
        raise InputError(f"{arg}: no such file (use @<id> for built-ins)")
    return load(arg)


def _finite(sr: Semiring, what: str) -> FiniteSemiring:
    if not isinstance(sr, FiniteSemiring):
        raise InputError(f"{what} needs a finite semiring, {sr.name} is infinite")
    return sr


def _sampled_verify(p, r, sr: Semiring, samples: int, seed: int) -> Verdict:
    import numpy as np
    from .poly import elementary, evaluate
    rng = np.random.default_rng(seed)
    pool = list(sr.elements(16))
    es = [elementary(p.n, k, sr) for k in range(1, p.n + 1)]
    tried = 0
    for _ in range(samples):
        pt = tuple(pool[int(i)] for i in rng.integers(len(pool), size=p.n))
        try:
            ys = tuple(evaluate(e, pt) for e in es)
            lhs, rhs = evaluate(p, pt), evaluate(r.r, ys)
        except OverflowError:
            continue
        tried += 1
        if lhs != rhs:
            return fails((pt, lhs, rhs), ("point", "p", "r(e)"), "sampled mismatch")
    return inconclusive(f"no mismatch in {tried} sampled points (seed {seed})")


# --- subcommands: each returns (report dict, text) -------------------------

def cmd_check(args):
    sr = load_semiring(args.semiring)
    if isinstance(sr, FiniteSemiring):
        rep = finite.property_report(sr, args.nmax)
    else:
        rep = finite.sampled_property_report(sr, args.samples, args.seed, args.nmax or 8)
    data = rep.to_dict()
    data["exit"] = status_code(v["status"] for v in data["properties"].values())
    text = rep.to_text()
    if "ghost_ideal" in rep.extra:
        text += "\n  ghost ideal: {" + ", ".join(rep.extra["ghost_ideal"]) + "}"
    return data, text


def cmd_elementarize(args):
    sr = load_semiring(args.semiring)
    p = parse_polynomial(args.poly, sr, args.nvars)
    data = {"semiring": sr.name, "polynomial": str(p), "n": p.n}
    try:
        r = elementarize(p)
    except NotSymmetric as e:
        data["symmetric"] = fails((e.profile, e.exps[0], e.exps[1]), ("profile", "at", "differs_at"),
                                  str(e)).to_dict()
        data["exit"] = FAILED
        return data, f"{p}\n  not symmetric: {e}"
    data["symmetric"] = holds().to_dict()
    data["segments"] = str(r.combination)
    data["elementary"] = str(r)
    if isinstance(sr, FiniteSemiring):
        v = verify_elementarization(p, r, sr, args.budget)
    else:
        v = _sampled_verify(p, r, sr, args.samples, args.seed)
    data["verification"] = v.to_dict(sr)
    data["exit"] = status_code([v.status])
    lines = [f"p = {p}", f"  segments: {r.combination}", f"  r(e) = {r}",
             f"  verification: {v.describe(sr)}"]
    if v.fails:
        lines.append("  (the segment-to-word rewriting is exact only over symhomomorphic semirings)")
    return data, "\n".join(lines)


def _parse_profile(text: str) -> tuple[int, ...]:
    try:
        d = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise InputError(f"bad exponent profile {text!r}; expected e.g. 3,2,0,0") from None
    if any(x < 0 for x in d):
        raise InputError("exponents must be natural numbers")
    return d


def cmd_expand(args):
    sr = load_semiring(args.semiring)
    d = _parse_profile(args.d)
    try:
        ex = segment_times_elementary(d, args.k, sr)
    except ValueError as e:
        raise InputError(str(e)) from None
    data = {
        "semiring": sr.name, "d": list(ex.d), "k": ex.k,
        "raw_products": ex.raw_products,
        "terms": [{"j": t.j, "alpha": list(t.alpha), "multiplicity": t.multiplicity,
                   "profile": list(t.profile)} for t in ex.terms],
        "combination": str(ex.combination),
    }
    lines = [f"sigma({','.join(map(str, ex.d))}) * e{ex.k}: {ex.raw_products} monomial products"]
    for t in ex.terms:
        lines.append(f"  j={t.j} alpha={''.join(map(str, t.alpha))} multiplicity={t.multiplicity}"
                     f" -> sigma({','.join(map(str, t.profile))})")
    lines.append(f"  = {ex.combination}")
    statuses = []
    if isinstance(sr, FiniteSemiring) and finite.is_symhomomorphic(sr).holds:
        fp = frobenius_segment_times_elementary(ex.d, ex.k, sr, True, args.budget)
        data["frobenius_collapse"] = {"combination": str(fp.combination),
                                      "check": fp.check.to_dict(sr)}
        lines.append(f"  symhomomorphic collapse: {fp.combination} ({fp.check.describe(sr)})")
        statuses.append(fp.check.status)
    data["exit"] = status_code(statuses)
    return data, "\n".join(lines)


def cmd_verify(args):
    sr = _finite(load_semiring(args.semiring), "verify")
    lemmas = [args.lemma] if args.lemma else list(LEMMAS)
    ts = [lemma_transcript(sr, lem, args.nmax or 6, args.budget) for lem in lemmas]
    data = {"semiring": sr.name, "transcripts": [t.to_dict() for t in ts]}
    data["exit"] = status_code(t.statement.status for t in ts)
    return data, "\n".join(t.to_text() for t in ts)


def cmd_suite(args):
    sr = _finite(load_semiring(args.semiring), "suite")
    s = theorem_suite_linear(sr) if args.linear else theorem_suite_upper_bound(sr, args.cap)
    data = s.to_dict()
    if not all(v.holds for v in s.hypotheses.values()):
        data["exit"] = FAILED
    else:
        data["exit"] = status_code([s.verdict.status])
    return data, s.to_text()


_COLUMNS = ("upper_bound", "linearly_ordered", "idempotent", "quasiidempotent",
            "supertropical", "frobenius", "two_eq_three", "symhomomorphic")
_SHORT = ("UB", "LO", "ID", "QI", "ST", "FR", "2=3", "SH")
_MARK = {HOLDS: "+", FAILS: "-", INCONCLUSIVE: "?"}


def cmd_enumerate(args):
    if not 1 <= args.order <= MAX_ORDER:
        raise InputError(f"order must be between 1 and {MAX_ORDER}")
    classes = list(enumerate_semirings(args.order))
    data = {"order": args.order, "classes": len(classes)}
    lines = [f"{len(classes)} uc-semiring(s) of order {args.order} up to isomorphism"]
    if args.classify:
        rows = []
        lines.append("  " + "  ".join(f"{a}={b}" for a, b in zip(_SHORT, _COLUMNS)))
        lines.append(("  name     " + " ".join(c.ljust(4) for c in _SHORT)).rstrip())
        for sr in classes:
            rep = finite.property_report(sr)
            rows.append({"name": sr.name, "add": sr.add_table.tolist(), "mul": sr.mul_table.tolist(),
                         **{c: rep[c].status for c in _COLUMNS}})
            lines.append(f"  {sr.name.ljust(8)} " + " ".join(_MARK[rep[c].status].ljust(4) for c in _COLUMNS).rstrip())
        data["table"] = rows
    data["exit"] = OK
    return data, "\n".join(lines)


def cmd_quotient(args):
    sr = _finite(load_semiring(args.semiring), "quotient")
    q = finite.make_quotient_by_approx(sr)
    text = dumps(q)
    if args.output:
        Path(args.output).write_text(text)
        text = f"wrote {q.name} (order {q.order}) to {args.output}"
    return {"semiring": sr.name, "quotient": q.name, "order": q.order,
            "elements": list(q.tokens), "exit": OK}, text.rstrip("\n")


# --- wiring ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print the structured report as JSON")
    common.add_argument("--report", metavar="FILE", help="also write the JSON report to FILE")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                        help="max evaluation points for exhaustive checks")
    common.add_argument("--cap", type=int, default=DEFAULT_CAP, help="closure size cap")
    common.add_argument("--seed", type=int, default=0, help="seed for sampling on infinite carriers")
    common.add_argument("--samples", type=int, default=200, help="random samples on infinite carriers")
    common.add_argument("--nmax", type=int, default=None, help="bound exponent scans at this n")

    p = argparse.ArgumentParser(prog="semisym", description="Symmetric polynomials over semirings.")
    sub = p.add_subparsers(dest="command", required=True)
    sr_help = "table file path or @builtin-id (e.g. @sat:3, @super:2, @nq:2:4)"

    s = sub.add_parser("check", parents=[common], help="property report")
    s.add_argument("semiring", help=sr_help)
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("elementarize", parents=[common], help="rewrite a symmetric polynomial in e1..en")
    s.add_argument("semiring", help=sr_help)
    s.add_argument("poly")
    s.add_argument("--nvars", type=int, default=None)
    s.set_defaults(func=cmd_elementarize)

    s = sub.add_parser("expand", parents=[common], help="expand sigma(d) * e_k")
    s.add_argument("semiring", help=sr_help)
    s.add_argument("d", help="comma-separated decreasing profile, e.g. 3,2,0,0")
    s.add_argument("k", type=int)
    s.set_defaults(func=cmd_expand)

    s = sub.add_parser("verify", parents=[common], help="lemma transcripts")
    s.add_argument("semiring", help=sr_help)
    s.add_argument("--lemma", choices=LEMMAS)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("suite", parents=[common], help="theorem suites")
    s.add_argument("semiring", help=sr_help)
    s.add_argument("--linear", action="store_true", help="linearly ordered suite")
    s.set_defaults(func=cmd_suite)

    s = sub.add_parser("enumerate", parents=[common], help="small semirings up to isomorphism")
    s.add_argument("order", type=int)
    s.add_argument("--classify", action="store_true")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("quotient", parents=[common], help="emit X/~ as a table file")
    s.add_argument("semiring", help=sr_help)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_quotient)
    return p


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        data, text = args.func(args)
    except (InputError, TableFileError, PolyParseError, AxiomError, HypothesisError) as e:
        print(f"semisym: error: {e}", file=err)
        return USAGE
    except ValueError as e:
        print(f"semisym: error: {e}", file=err)
        return USAGE
    if args.report:
        Path(args.report).write_text(json.dumps(data, indent=2, default=str) + "\n")
    print(json.dumps(data, indent=2, default=str) if args.json else text, file=out)
    return data["exit"]


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
