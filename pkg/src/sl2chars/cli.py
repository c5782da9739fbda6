"""Command-line interface.

Subcommands: eval (character values), verify (exhaustive suites), field
(analyze number fields), reproduce (embedded table datasets), split
(prime splitting).  Exit codes: 0 success / all match, 1 domain failure
or mismatch, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import groups
from .characters import char_eval, character_spec
from .datasets import TABLES
from .matrices import Mat2
from .numberfield import (
    IntPoly,
    NumberFieldError,
    character_group,
    prime_splitting,
)
from .rings import DUAL_F2, RingError, Zmod, dual_element, element
from .suites import SUITE_NAMES, run_suite


class UsageError(Exception):
    pass


_DUAL_TOKENS = {"0": (0, 0), "1": (1, 0), "a": (0, 1), "1+a": (1, 1)}


def _parse_matrix(text: str, ring):
    parts = [t.strip() for t in text.split(",")]
    if len(parts) != 4:
        raise UsageError("--matrix needs four comma-separated entries")
    entries = []
    for t in parts:
        if isinstance(ring, Zmod):
            try:
                entries.append(element(ring, int(t)))
            except ValueError:
                raise UsageError(f"bad integer entry {t!r}")
        else:
            if t not in _DUAL_TOKENS:
                raise UsageError(f"dual-ring entries must be 0, 1, a or 1+a, got {t!r}")
            entries.append(dual_element(*_DUAL_TOKENS[t]))
    return Mat2(*entries)


def _parse_coeffs(text: str):
    try:
        return [int(t.strip()) for t in text.split(",")]
    except ValueError:
        raise UsageError(f"bad coefficient list {text!r}")


def cmd_eval(args) -> int:
    kind = args.kind
    if kind == "eps4p":
        kind = "eps4prime"
    if kind == "eps4prime":
        if not args.dual:
            raise UsageError("eps4p needs --dual")
        ring = DUAL_F2
    else:
        if args.mod is None:
            raise UsageError(f"{args.kind} needs --mod N")
        ring = Zmod(args.mod)
    m = _parse_matrix(args.matrix, ring)
    if not m.is_sl2():
        print(f"error: determinant is {m.det()}, not 1", file=sys.stderr)
        return 1
    spec = character_spec(ring, kind)
    print(char_eval(spec, m))
    return 0


def cmd_verify(args) -> int:
    if args.max_group_size is not None:
        kwargs_cap = args.max_group_size
    else:
        kwargs_cap = None
    ns = (args.n,) if args.n is not None else None
    if kwargs_cap is not None:
        groups.DEFAULT_SIZE_CAP = kwargs_cap
    results = run_suite(args.suite, ns=ns)
    failed = sum(1 for r in results if not r.passed)
    if args.json:
        print(json.dumps([{"name": r.name, "passed": r.passed, "detail": r.detail}
                          for r in results], indent=2))
    else:
        for r in results:
            status = "PASS" if r.passed else "FAIL"
            detail = f"  ({r.detail})" if r.detail else ""
            print(f"{status} {r.name}{detail}")
        print(f"{len(results) - failed}/{len(results)} checks passed")
    return 0 if failed == 0 else 1


def _field_record(coeffs, expected=None, flagged=False, label=None,
                  trust_irreducible=False):
    poly = IntPoly.from_coeffs(coeffs)
    rec = {"poly": str(poly)}
    if label:
        rec["label"] = label
    try:
        desc = character_group(poly, trust_irreducible=trust_irreducible)
    except NumberFieldError as err:
        rec.update(status="error", error=str(err))
        return rec
    rec.update(
        a=desc.a, q4=desc.q4, r4=desc.r4,
        order=desc.order,
        structure=list(desc.structure),
        split2=[list(p) for p in desc.split2.parts],
        split3=[list(p) for p in desc.split3.parts],
    )
    if expected is None:
        rec["status"] = "computed"
    elif flagged:
        rec["status"] = "flagged-unknown"
        rec["expected"] = expected
    else:
        rec["status"] = "match" if desc.order == expected else "mismatch"
        rec["expected"] = expected
    return rec


_FIELD_COLUMNS = ("poly", "a", "q4", "r4", "order", "structure",
                  "split2", "split3", "status")


def _emit_records(records, args) -> None:
    if args.json:
        print(json.dumps(records, indent=2))
        return
    cols = list(_FIELD_COLUMNS)
    if any("expected" in r for r in records):
        cols.insert(-1, "expected")
    rows = [[str(r.get(c, "")) for c in cols] for r in records]
    if args.tsv:
        print("\t".join(cols))
        for row in rows:
            print("\t".join(row))
        return
    widths = [max(len(c), *(len(row[i]) for row in rows)) if rows else len(c)
              for i, c in enumerate(cols)]
    print("  ".join(c.ljust(w) for c, w in zip(cols, widths)))
    for row in rows:
        print("  ".join(v.ljust(w) for v, w in zip(row, widths)))


def cmd_field(args) -> int:
    inputs = []
    if args.coeffs:
        inputs.append(_parse_coeffs(args.coeffs))
    if args.file:
        try:
            with open(args.file) as fh:
                for line in fh:
                    line = line.split("#", 1)[0].strip()
                    if line:
                        inputs.append(_parse_coeffs(line))
        except OSError as err:
            print(f"error: cannot read {args.file}: {err}", file=sys.stderr)
            return 2
    if not inputs:
        raise UsageError("field needs --coeffs or --file")
    records = []
    for coeffs in inputs:
        if len(coeffs) < 3:
            print(f"error: degree must be at least 2: {coeffs}", file=sys.stderr)
            return 1
        records.append(_field_record(coeffs,
                                     trust_irreducible=args.trust_irreducible))
    _emit_records(records, args)
    return 1 if any(r["status"] == "error" for r in records) else 0


def cmd_reproduce(args) -> int:
    table = TABLES.get(args.table)
    if table is None:
        raise UsageError(f"unknown table {args.table}; choose 1, 2 or 3")
    records = [
        _field_record(list(row.coeffs), expected=row.expected_order,
                      flagged=row.flagged_unknown, label=row.label)
        for row in table
    ]
    _emit_records(records, args)
    matches = sum(1 for r in records if r["status"] == "match")
    flagged = sum(1 for r in records if r["status"] == "flagged-unknown")
    bad = len(records) - matches - flagged
    if not args.json:
        summary = f"{matches}/{len(records)} match"
        if flagged:
            summary += f", {flagged} flagged-unknown"
        if bad:
            summary += f", {bad} MISMATCH"
        print(summary)
    return 0 if bad == 0 else 1


def cmd_split(args) -> int:
    coeffs = _parse_coeffs(args.coeffs)
    poly = IntPoly.from_coeffs(coeffs)
    try:
        sp = prime_splitting(poly, args.prime,
                             trust_irreducible=args.trust_irreducible)
    except NumberFieldError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    if args.json:
        print(json.dumps({"poly": str(poly), "p": sp.p,
                          "parts": [list(part) for part in sp.parts]}))
    else:
        parts = ", ".join(f"e={e} f={f}" for e, f in sp.parts)
        print(f"{poly} at p={sp.p}: {parts}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sl2chars",
        description="Linear characters of SL2 over finite rings and "
                    "rings of integers of number fields, exactly.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate a character on a matrix")
    p_eval.add_argument("kind", choices=["eps2", "eps3", "eps4", "eps4p", "trivial"])
    p_eval.add_argument("--mod", type=int, help="modulus of the base ring")
    p_eval.add_argument("--dual", action="store_true",
                        help="use the dual numbers F2[t]/(t^2)")
    p_eval.add_argument("--matrix", required=True,
                        help="entries a,b,c,d (row-major)")
    p_eval.set_defaults(func=cmd_eval)

    p_verify = sub.add_parser("verify", help="run an exhaustive verification suite")
    p_verify.add_argument("suite", choices=list(SUITE_NAMES))
    p_verify.add_argument("--n", type=int,
                          help="restrict oracle-equivalence to one modulus")
    p_verify.add_argument("--json", action="store_true")
    p_verify.add_argument("--max-group-size", type=int,
                          help="cap on brute-force group sizes")
    p_verify.set_defaults(func=cmd_verify)

    p_field = sub.add_parser("field", help="congruence character group of SL2(O_K)")
    p_field.add_argument("--coeffs", help="ascending coefficients c0,c1,...")
    p_field.add_argument("--file", help="one polynomial per line; # comments")
    p_field.add_argument("--json", action="store_true")
    p_field.add_argument("--tsv", action="store_true")
    p_field.add_argument("--trust-irreducible", action="store_true")
    p_field.set_defaults(func=cmd_field)

    p_rep = sub.add_parser("reproduce", help="recompute an embedded table")
    p_rep.add_argument("table", type=int, choices=[1, 2, 3])
    p_rep.add_argument("--json", action="store_true")
    p_rep.add_argument("--tsv", action="store_true")
    p_rep.set_defaults(func=cmd_reproduce)

    p_split = sub.add_parser("split", help="splitting type of a prime")
    p_split.add_argument("--coeffs", required=True)
    p_split.add_argument("--prime", type=int, required=True)
    p_split.add_argument("--json", action="store_true")
    p_split.add_argument("--trust-irreducible", action="store_true")
    p_split.set_defaults(func=cmd_split)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as err:
        print(f"usage error: {err}", file=sys.stderr)
        return 2
    except (RingError, NumberFieldError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
