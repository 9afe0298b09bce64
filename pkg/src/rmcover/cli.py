"""Command-line front end.

Exit codes: 0 success (or verification pass), 1 check/witness failure,
2 usage error.  All output is UTF-8 and line-buffered; ``--json`` swaps
the human format for a schema-stable JSON document on stdout.
"""

from __future__ import annotations

import argparse
import json
import sys

from .core import AnfTermSet, TruthTable, from_anf, fwht, nonlinearity, to_anf
from . import secondorder as so
from .verify import (
    REPORT_SCHEMA,
    VerifyConfig,
    GROUP_ORDER,
    propagate_bounds,
    run_full_verification,
    search_witness,
)
from .verify.fixtures import REPRESENTATIVES

CLI_SCHEMA_VERSION = "rmcover-cli/1"

VERB_OUTPUT_SCHEMAS = {
    "nl": {"type": "integer"},
    "nl2": {"type": "integer"},
    "anf": {"type": "string"},
    "spectrum": {"type": "array", "items": {"type": "integer"}},
    "nfh": {"type": "object", "additionalProperties": {"type": "integer"}},
    "fh": {
        "type": "object",
        "required": ["r", "count", "members"],
        "properties": {
            "r": {"type": "integer"},
            "count": {"type": "integer"},
            "members": {"type": "array", "items": {"type": "string"}},
        },
    },
    "s16": {
        "type": "object",
        "required": ["count"],
        "properties": {
            "count": {"type": "integer"},
            "shift": {"type": "string"},
            "observed": {"type": "object", "additionalProperties": {"type": "integer"}},
        },
    },
    "witness": {
        "type": "object",
        "required": ["found", "best_value"],
        "properties": {
            "found": {"type": "boolean"},
            "anf": {"type": ["string", "null"]},
            "hex": {"type": ["string", "null"]},
            "value": {"type": ["integer", "null"]},
            "best_value": {"type": "integer"},
            "candidates_tried": {"type": "integer"},
            "full_evaluations": {"type": "integer"},
            "source": {"type": "string"},
        },
    },
    "bounds": {
        "type": "object",
        "required": ["rows", "rm1_upper_bounds"],
        "properties": {
            "rows": {"type": "array"},
            "rm1_upper_bounds": {"type": "object"},
        },
    },
    "explain-layout": {
        "type": "object",
        "additionalProperties": {"type": "string"},
    },
}

CLI_OUTPUT_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "title": "rmcover CLI value output",
    "type": "object",
    "required": ["schema_version", "verb", "input", "output"],
    "properties": {
        "schema_version": {"const": CLI_SCHEMA_VERSION},
        "verb": {"enum": sorted(VERB_OUTPUT_SCHEMAS)},
        "input": {"type": "object"},
        "output": {},
    },
    "additionalProperties": False,
}


class UsageError(Exception):
    pass


def parse_function(spec: str, fmt: str, n: int | None = None) -> TruthTable:
    """Resolve a function spec in one of the three input formats.

    ``fmt`` is ``anf``, ``hex`` or ``fun``.  ANF specs infer n from the
    largest variable index when it is at least 3; hex specs require n.
    """
    if fmt == "fun":
        if spec not in REPRESENTATIVES:
            known = ", ".join(sorted(REPRESENTATIVES))
            raise UsageError(f"unknown fixture {spec!r}; known: {known}")
        return REPRESENTATIVES[spec].table()
    if fmt == "hex":
        if n is None:
            raise UsageError("--hex requires -n")
        try:
            return TruthTable.from_hex(n, spec)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    if fmt == "anf":
        try:
            return from_anf(AnfTermSet.parse(spec, n=n))
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    raise UsageError(f"unknown input format {fmt!r}")


def _input_args(p: argparse.ArgumentParser) -> None:
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--anf", help="ANF text, e.g. 126+135+234 (0 = zero, c = constant term)")
    grp.add_argument("--hex", help="truth table as 2^n/4 hex digits")
    grp.add_argument("--fun", help="built-in fixture name (fun1..fun12, g0)")
    p.add_argument("-n", type=int, default=None, help="variable count (3..7)")


def _resolve(args) -> tuple[TruthTable, dict]:
    if args.fun is not None:
        f = parse_function(args.fun, "fun")
        desc = {"fun": args.fun, "n": f.n}
    elif args.hex is not None:
        f = parse_function(args.hex, "hex", args.n)
        desc = {"hex": args.hex, "n": f.n}
    else:
        f = parse_function(args.anf, "anf", args.n)
        desc = {"anf": args.anf, "n": f.n}
    return f, desc


def _emit(args, verb: str, desc: dict, output, text: str) -> None:
    if getattr(args, "json", False):
        doc = {
            "schema_version": CLI_SCHEMA_VERSION,
            "verb": verb,
            "input": desc,
            "output": output,
        }
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        print(text)


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="rmcover",
        description="Boolean-function analytics and verification for the covering radius of RM(2,7)",
    )
    sub = p.add_subparsers(dest="verb", required=True)

    def add(verb: str, help_: str, inputs: bool = True) -> argparse.ArgumentParser:
        q = sub.add_parser(verb, help=help_)
        if inputs:
            _input_args(q)
        q.add_argument("--json", action="store_true", help="emit JSON on stdout")
        return q

    add("nl", "first-order nonlinearity")
    q = add("nl2", "second-order nonlinearity (exhaustive)")
    q.add_argument("--threads", type=int, default=1)
    add("anf", "canonical algebraic normal form")
    add("spectrum", "Walsh spectrum")
    q = add("nfh", "coset nonlinearity histogram over all quadratic forms")
    q.add_argument("--threads", type=int, default=1)
    q = add("fh", "quadratic forms g with nl(f+g) = r")
    q.add_argument("-r", type=int, required=True)
    q = add("s16", "members of Fh(f, r) with own nonlinearity 16")
    q.add_argument("-r", type=int, required=True)
    q.add_argument("--shift", help="count |(g + Fh) ∩ S16| for this form (pair list or 0x hex)")
    q.add_argument("--shift-all", action="store_true",
                   help="shifted counts for every g in the set itself")

    q = sub.add_parser("verify", help="run verification checks (default: all groups)")
    q.add_argument("groups", nargs="*", choices=GROUP_ORDER, default=[],
                   help=f"subset of: {', '.join(GROUP_ORDER)}")
    q.add_argument("--seed", type=int, default=1)
    q.add_argument("--trials", type=int, default=10)
    q.add_argument("--budget", type=int, default=16)
    q.add_argument("--threads", type=int, default=1)
    q.add_argument("--json", action="store_true")
    q.add_argument("--canonical", action="store_true",
                   help="deterministic JSON: zero timings, omit worker count")

    q = sub.add_parser("witness", help="search for an nl2 = 40 witness in B7")
    q.add_argument("--budget", type=int, default=16)
    q.add_argument("--seed", type=int, default=1)
    q.add_argument("--threads", type=int, default=1)
    q.add_argument("--json", action="store_true")

    q = sub.add_parser("bounds", help="propagated covering-radius bound table")
    q.add_argument("--json", action="store_true")

    q = sub.add_parser("explain-layout", help="quadratic-form coefficient bit layout")
    q.add_argument("-n", type=int, default=6)
    q.add_argument("--json", action="store_true")

    return p


def _cmd_function_verbs(args) -> int:
    f, desc = _resolve(args)
    verb = args.verb
    if verb == "nl":
        v = nonlinearity(f)
        _emit(args, verb, desc, v, str(v))
    elif verb == "nl2":
        v = so.nl2(f, threads=args.threads)
        _emit(args, verb, desc, v, str(v))
    elif verb == "anf":
        text = to_anf(f).format()
        _emit(args, verb, desc, text, text)
    elif verb == "spectrum":
        values = [int(x) for x in fwht(f).values]
        _emit(args, verb, desc, values, " ".join(str(v) for v in values))
    elif verb == "nfh":
        spec = so.nfh_spectrum(f, threads=args.threads)
        counts = spec.as_dict()
        _emit(args, verb, desc, {str(k): v for k, v in counts.items()},
              "\n".join(f"{r:3d}  {c}" for r, c in counts.items()))
    elif verb == "fh":
        s = so.fh_set(f, args.r)
        members = [g.format() for g in s.members]
        out = {"r": args.r, "count": len(members), "members": members}
        _emit(args, verb, desc, out,
              f"count {len(members)}" + ("\n" + "\n".join(members) if members else ""))
    elif verb == "s16":
        s = so.fh_set(f, args.r)
        if args.shift_all:
            obs: dict[str, int] = {}
            for g in s.members:
                c = so.shifted_s16_count(g, s)
                obs[str(c)] = obs.get(str(c), 0) + 1
            out = {"count": len(s), "observed": dict(sorted(obs.items(), key=lambda kv: int(kv[0])))}
            text = f"set size {len(s)}; shifted counts: " + ", ".join(
                f"{k} (x{v})" for k, v in out["observed"].items()
            )
            _emit(args, verb, desc, out, text)
        elif args.shift is not None:
            try:
                g = so.QuadraticForm.parse(args.shift, n=f.n)
            except ValueError as exc:
                raise UsageError(str(exc)) from exc
            c = so.shifted_s16_count(g, s)
            _emit(args, verb, desc, {"count": c, "shift": g.format()}, str(c))
        else:
            c = so.s16_count(s)
            _emit(args, verb, desc, {"count": c}, str(c))
    return 0


def _cmd_verify(args) -> int:
    config = VerifyConfig(
        seed=args.seed,
        trials=args.trials,
        budget=args.budget,
        threads=args.threads,
        groups=tuple(args.groups) or None,
    )
    report = run_full_verification(config)
    if args.json:
        if args.canonical:
            print(report.canonical_json())
        else:
            print(report.to_json())
    else:
        print(report.to_text())
    return 0 if report.verdict == "pass" else 1


def _cmd_witness(args) -> int:
    result = search_witness(budget=args.budget, seed=args.seed, threads=args.threads)
    out = {
        "found": result.found,
        "anf": result.anf_text,
        "hex": result.table.to_hex() if result.table else None,
        "value": result.value,
        "best_value": result.best_value,
        "candidates_tried": result.candidates_tried,
        "full_evaluations": result.evaluations,
        "source": result.source,
    }
    if result.found:
        text = (
            f"witness: {result.anf_text}\n"
            f"nl2 = {result.value} (certified by fresh full enumeration)\n"
            f"source {result.source}; {result.evaluations} full evaluation(s)"
        )
    else:
        text = f"no witness found; best certified value {result.best_value}"
    _emit(args, "witness", {"budget": args.budget, "seed": args.seed}, out, text)
    return 0 if result.found else 1


def _cmd_bounds(args) -> int:
    table = propagate_bounds(40)
    rows = "\n".join(
        f"  n={r.n}:  {r.lower} <= covering radius <= {r.upper}  ({r.source})"
        for r in table.rows
    )
    _emit(args, "bounds", {}, table.to_dict(), "covering radius of RM(2,n):\n" + rows)
    return 0


def _cmd_explain_layout(args) -> int:
    n = args.n
    if not 3 <= n <= 7:
        raise UsageError(f"variable count must be in 3..7, got {n}")
    pairs = so._pairs(n)
    mapping = {f"bit {k}": f"x{i}x{j}" for k, (i, j) in enumerate(pairs)}
    lines = [
        f"quadratic-form coefficient layout for n={n} ({len(pairs)} bits, "
        f"mask bit k set = monomial present):"
    ] + [f"  bit {k:2d}  (value {1 << k:#7x})  ->  x{i}x{j}" for k, (i, j) in enumerate(pairs)]
    lines.append("pair-list text uses the same order, e.g. " +
                 "+".join(f"{i}{j}" for i, j in pairs[:3]) + " = mask 0x7")
    _emit(args, "explain-layout", {"n": n}, mapping, "\n".join(lines))
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.verb in ("nl", "nl2", "anf", "spectrum", "nfh", "fh", "s16"):
            return _cmd_function_verbs(args)
        if args.verb == "verify":
            return _cmd_verify(args)
        if args.verb == "witness":
            return _cmd_witness(args)
        if args.verb == "bounds":
            return _cmd_bounds(args)
        if args.verb == "explain-layout":
            return _cmd_explain_layout(args)
        raise UsageError(f"unknown verb {args.verb!r}")
    except UsageError as exc:
        print(f"rmcover: error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"rmcover: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
