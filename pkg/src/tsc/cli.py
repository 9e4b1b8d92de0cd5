"""Command-line front end.

Usage examples::

    tsc normalize "<0^1><1^1>(<0^w^w*2>T /\\ <2^1>T)"
    tsc normalize --inf-form --trace "<1^1><2^1>T"
    tsc inf "<1^w*2>T /\\ <2^1>T"
    tsc decide "<2^1>T |- <0^w^w>T" --witness
    tsc equiv "<1^1>T" "<0^w>T" --level 0
    tsc fragment "<0^w>T /\\ <2^1>T" --level 1
    tsc ord "e^2(1)"            tsc ord "cmp(w+1, 1+w)"
    tsc --batch < commands.txt

Exit status: 0 on success (or an affirmative answer), 1 when ``decide``
or ``equiv`` answers no, 2 on malformed input.  ``--json`` switches every
command to one JSON document per command on stdout.
"""

import argparse
import json
import shlex
import sys

from ._scan import Scanner
from .calculus import check_derivation, derive_witness, format_derivation
from .decision import decide, equiv_level, equivalent, level_bounds, pi_fragment
from .errors import ParseError, TSCError
from .jsonio import derivation_to_json, mnf_to_json, verdict_to_json
from .normalform import mnf_to_inf, normalize, normalize_traced
from .ordinal import ord_compare, ord_format, parse_ordinal_from
from .syntax import format_formula, parse_formula, parse_sequent

__all__ = ["main", "run", "build_parser"]

EXIT_OK, EXIT_NO, EXIT_INPUT = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser():
    p = _Parser(prog="tsc", description="Normal forms and derivability for the "
                "Turing-Schmerl calculus of ordinal modalities.")
    p.add_argument("--json", action="store_true", help="emit JSON")
    p.add_argument("--batch", action="store_true",
                   help="read one command per line from stdin")
    sub = p.add_subparsers(dest="command", metavar="COMMAND")

    c = sub.add_parser("normalize", help="monomial normal form of a formula")
    c.add_argument("formula")
    c.add_argument("--inf-form", action="store_true", help="also print the INF")
    c.add_argument("--trace", action="store_true", help="also print the rewrite trace")

    c = sub.add_parser("inf", help="increasing normal form (a worm) of a formula")
    c.add_argument("formula")

    c = sub.add_parser("decide", help="decide a sequent 'PHI |- PSI'")
    c.add_argument("sequent")
    c.add_argument("--witness", action="store_true", help="print a checked derivation")

    c = sub.add_parser("equiv", help="equivalence, or level-n equivalence with --level")
    c.add_argument("left")
    c.add_argument("right")
    c.add_argument("--level", type=_natural)

    c = sub.add_parser("fragment", help="the part of a formula's MNF seen at a level")
    c.add_argument("formula")
    c.add_argument("--level", type=_natural, required=True)

    c = sub.add_parser("ord", help="evaluate an ordinal expression or cmp(a, b)")
    c.add_argument("expr")
    return p


def _natural(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a natural number") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"{text!r} is negative")
    return value


# commands; each returns (exit code, text, json payload)


def _cmd_normalize(a):
    f = parse_formula(a.formula)
    if a.trace:
        psi, trace = normalize_traced(f)
    else:
        psi, trace = normalize(f), None
    lines = [format_formula(psi.formula())]
    payload = mnf_to_json(psi, with_inf=a.inf_form)
    if a.inf_form:
        lines.append("INF: " + format_formula(mnf_to_inf(psi).formula()))
    if trace is not None:
        lines.append(f"trace ({len(trace)} steps):")
        for i, st in enumerate(trace, 1):
            where = "".join(st.path) or "root"
            lines.append(f"  {i}. {st.kind} at {where}: "
                         f"{format_formula(st.local_before)}  ~>  "
                         f"{format_formula(st.local_after)}")
        payload["trace"] = [
            {"kind": st.kind.tag,
             "params": {k: ord_format(v) if not isinstance(v, (int, str)) else v
                        for k, v in st.kind.params},
             "path": "".join(st.path),
             "before": format_formula(st.before),
             "after": format_formula(st.after)}
            for st in trace
        ]
    return EXIT_OK, "\n".join(lines), payload


def _cmd_inf(a):
    worm = mnf_to_inf(normalize(parse_formula(a.formula)))
    text = format_formula(worm.formula())
    return EXIT_OK, text, {"formula": text,
                           "modalities": [{"base": n, "exponent": ord_format(x)}
                                          for n, x in worm.modalities]}


def _cmd_decide(a):
    s = parse_sequent(a.sequent)
    verdict = decide(s.antecedent, s.succedent)
    lines = ["yes" if verdict else "no", verdict.describe()]
    payload = verdict_to_json(verdict)
    if a.witness and verdict:
        d = derive_witness(s.antecedent, s.succedent)
        result = check_derivation(d)
        if not result:
            raise AssertionError(f"witness failed its own check: {result.reason}")
        lines.append("witness (checked):")
        lines.append(format_derivation(d))
        payload["witness"] = derivation_to_json(d)
    return (EXIT_OK if verdict else EXIT_NO), "\n".join(lines), payload


def _cmd_equiv(a):
    left, right = parse_formula(a.left), parse_formula(a.right)
    if a.level is None:
        same = equivalent(left, right)
        payload = {"equivalent": same, "level": None}
    else:
        same = equiv_level(left, right, a.level)
        payload = {
            "equivalent": same, "level": a.level,
            "left_bounds": [ord_format(b) for b in level_bounds(normalize(left), a.level)],
            "right_bounds": [ord_format(b) for b in level_bounds(normalize(right), a.level)],
        }
    return (EXIT_OK if same else EXIT_NO), "true" if same else "false", payload


def _cmd_fragment(a):
    psi = pi_fragment(normalize(parse_formula(a.formula)), a.level)
    return EXIT_OK, format_formula(psi.formula()), mnf_to_json(psi)


_SYMBOL = {-1: "<", 0: "=", 1: ">"}


def _cmd_ord(a):
    sc = Scanner(a.expr)
    if sc.accept("cmp"):
        sc.expect("(")
        x = parse_ordinal_from(sc)
        sc.expect(",")
        y = parse_ordinal_from(sc)
        sc.expect(")")
        sc.finish()
        order = int(ord_compare(x, y))
        text = f"{ord_format(x)} {_SYMBOL[order]} {ord_format(y)}"
        return EXIT_OK, text, {"left": ord_format(x), "right": ord_format(y),
                               "order": order}
    value = parse_ordinal_from(sc)
    sc.finish()
    return EXIT_OK, ord_format(value), {"value": ord_format(value)}


COMMANDS = {
    "normalize": _cmd_normalize, "inf": _cmd_inf, "decide": _cmd_decide,
    "equiv": _cmd_equiv, "fragment": _cmd_fragment, "ord": _cmd_ord,
}


def _input_error(message, out, err, as_json):
    if as_json:
        print(json.dumps({"error": message}), file=out)
    print(f"error: {message}", file=err)
    return EXIT_INPUT


def _run_one(args, out, err):
    if args.command is None:
        return _input_error("no command given", out, err, args.json)
    try:
        code, text, payload = COMMANDS[args.command](args)
    except ParseError as exc:
        if not args.json:
            print(f"error: {exc}", file=err)
            print("  " + exc.text.splitlines()[exc.line - 1] if exc.text else "", file=err)
            print("  " + " " * (exc.column - 1) + "^", file=err)
            return EXIT_INPUT
        print(json.dumps({"error": str(exc), "line": exc.line, "column": exc.column}),
              file=out)
        return EXIT_INPUT
    except (TSCError, RecursionError) as exc:
        reason = "input is nested too deeply" if isinstance(exc, RecursionError) else str(exc)
        return _input_error(reason, out, err, args.json)
    if args.json:
        print(json.dumps(payload), file=out)
    else:
        print(text, file=out)
    return code


def run(argv, stdin=None, out=None, err=None):
    """Run one invocation; returns the exit status."""
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INPUT
    if not args.batch:
        return _run_one(args, out, err)
    stdin = sys.stdin if stdin is None else stdin
    worst = EXIT_OK
    for lineno, line in enumerate(stdin, 1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        try:
            words = shlex.split(line)
            sub = parser.parse_args((["--json"] if args.json else []) + words)
        except (UsageError, ValueError) as exc:
            code = _input_error(f"line {lineno}: {exc}", out, err, args.json)
        else:
            code = _run_one(sub, out, err)
        worst = max(worst, code)
    return worst


def main(argv=None):
    sys.exit(run(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()
