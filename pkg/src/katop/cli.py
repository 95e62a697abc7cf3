"""Command-line front end.

Exit status: 0 when the equation holds (or the query is true), 1 when it
fails (or the query is false), 2 on errors and inconclusive runs.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import closure, graphs
from .decide import Limits, ResourceLimit, Theory, Verdict, decide, leq, member
from .gstring import format_gstring, parse_gstring
from .relmodel import eval_expr, sample_models
from .syntax import Alphabet, Dot, KatSyntaxError, Top, elaborate_test, infer_letters, parse, parse_test

EXIT_TRUE, EXIT_FALSE, EXIT_ERROR = 0, 1, 2


def _text_arg(value: str) -> str:
    if value.startswith("@") and os.path.isfile(value[1:]):
        with open(value[1:]) as fh:
            return fh.read().strip()
    return value


def _split(value: str | None) -> tuple[str, ...] | None:
    if value is None:
        return None
    return tuple(x for x in value.replace(" ", "").split(",") if x)


def make_alphabet(args, *texts: str) -> Alphabet:
    letters = _split(args.letters)
    if letters is None:
        letters = infer_letters(*texts)
    if args.tests is not None:
        return Alphabet.from_tests(letters, _split(args.tests))
    atoms = _split(args.atoms)
    return Alphabet(letters, atoms) if atoms else Alphabet(letters)


def _emit(args, payload: dict, text: str):
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _report(args, verdict: Verdict, kind: str, alphabet: Alphabet) -> int:
    holds_word, fails_word = ("equal", "not_equal") if kind == "eq" else ("holds", "fails")
    payload = {
        "verdict": holds_word if verdict.equal else fails_word,
        "theory": verdict.theory.value,
        "stats": {"visited": verdict.visited, "millis": round(verdict.millis, 3)},
    }
    lines = [f"{payload['verdict'].replace('_', ' ')} (theory {verdict.theory.value})"]
    if not verdict.equal:
        payload["witness"] = format_gstring(verdict.witness)
        payload["holder"] = verdict.holder.value
        lines.append(f"witness: {payload['witness']} (accepted on the {verdict.holder.value} only)")
        if verdict.countermodel is not None:
            payload["countermodel"] = verdict.countermodel.to_dict()
            cm = verdict.countermodel
            lines.append("countermodel:")
            lines.append(cm.model.dump())
            lines.append(f"pair {cm.pair}: left {cm.left}, right {cm.right}")
    elif args.fuzz:
        lines.append(f"agreed on {args.fuzz} sampled models (seed {args.seed})")
    lines.append(f"visited {verdict.visited} configurations in {verdict.millis:.1f} ms")
    _emit(args, payload, "\n".join(lines))
    return EXIT_TRUE if verdict.equal else EXIT_FALSE


def _fuzz(args, e, f, alphabet):
    for model in sample_models(alphabet, 4, args.fuzz, args.seed):
        if eval_expr(e, model) != eval_expr(f, model):
            raise AssertionError(f"equal verdict contradicted by sampled model:\n{model.dump()}")


def cmd_eq(args) -> int:
    left, right = _text_arg(args.left), _text_arg(args.right)
    alphabet = make_alphabet(args, left, right)
    e, f = parse(left, alphabet), parse(right, alphabet)
    th = Theory(args.theory)
    run = decide if args.command == "eq" else leq
    verdict = run(e, f, th, alphabet, Limits(args.cap))
    if verdict.equal and args.fuzz and th is Theory.KAT_F:
        _fuzz(args, e if args.command == "eq" else e + f, f, alphabet)
    return _report(args, verdict, args.command, alphabet)


def cmd_triple(args) -> int:
    body = _text_arg(args.expr)
    alphabet = make_alphabet(args, body)
    pre = elaborate_test(parse_test(args.pre.strip("[] "), alphabet), alphabet)
    post = elaborate_test(parse_test(args.post.strip("[] "), alphabet), alphabet)
    e = parse(body, alphabet)
    verdict = leq(post, Dot(Dot(Top(), pre), e), Theory(args.theory), alphabet, Limits(args.cap))
    return _report(args, verdict, "triple", alphabet)


def cmd_member(args) -> int:
    text = _text_arg(args.expr)
    alphabet = make_alphabet(args, text)
    e = parse(text, alphabet)
    u = parse_gstring(args.string, alphabet)
    th = Theory(args.theory)
    t0 = time.perf_counter()
    result = member(e, u, th, alphabet)
    _emit(
        args,
        {"member": result, "theory": th.value, "string": format_gstring(u),
         "stats": {"millis": round((time.perf_counter() - t0) * 1000, 3)}},
        f"{str(result).lower()} (theory {th.value})",
    )
    return EXIT_TRUE if result else EXIT_FALSE


def _string_alphabet(args):
    if args.atoms is None and args.tests is None:
        return None
    return make_alphabet(args)


def cmd_closure(args) -> int:
    u = parse_gstring(args.string, _string_alphabet(args))
    maxlen = args.maxlen if args.maxlen is not None else 2 * len(u) + 2
    layers = closure.closure_steps(u, args.steps, maxlen, full=args.rule == "F")
    if args.json:
        print(json.dumps({"string": format_gstring(u), "rule": args.rule,
                          "layers": [[format_gstring(v) for v in sorted(layer)] for layer in layers]}, indent=2))
    else:
        for depth, layer in enumerate(layers, 1):
            for v in sorted(layer):
                print(f"{depth}\t{format_gstring(v)}")
    return EXIT_TRUE


def cmd_hom(args) -> int:
    alphabet = _string_alphabet(args)
    u, v = parse_gstring(args.u, alphabet), parse_gstring(args.v, alphabet)
    result = graphs.dominated(u, v)
    _emit(args, {"dominated": result, "u": format_gstring(u), "v": format_gstring(v)}, str(result).lower())
    return EXIT_TRUE if result else EXIT_FALSE


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--letters", help="comma-separated letters (default: inferred, one character each)")
    group = common.add_mutually_exclusive_group()
    group.add_argument("--atoms", help="comma-separated atom names (default: alpha)")
    group.add_argument("--tests", help="comma-separated test variables; atoms are their valuations")
    common.add_argument("--theory", choices=[t.value for t in Theory], default=Theory.KAT_F.value)
    common.add_argument("--json", action="store_true")
    common.add_argument("--cap", type=int, default=Limits().visited_cap, help="visited-configuration cap")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--fuzz", type=int, default=0, metavar="N",
                        help="cross-check equal KAT_F verdicts on N sampled models")

    parser = argparse.ArgumentParser(prog="katop", description="Decide KAT with top over languages and relations.")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, help_ in (("eq", "is LEFT = RIGHT?"), ("leq", "is LEFT <= RIGHT?")):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("left")
        p.add_argument("right")
        p.set_defaults(func=cmd_eq)

    p = sub.add_parser("triple", parents=[common], help="incorrectness triple [PRE] EXPR [POST]")
    p.add_argument("pre")
    p.add_argument("expr")
    p.add_argument("post")
    p.set_defaults(func=cmd_triple)

    p = sub.add_parser("member", parents=[common], help="is STRING in the closed language of EXPR?")
    p.add_argument("expr")
    p.add_argument("string")
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("closure", parents=[common], help="strings reachable from STRING by rewriting")
    p.add_argument("string")
    p.add_argument("--steps", type=int, default=1)
    p.add_argument("--maxlen", type=int)
    p.add_argument("--rule", choices=["T", "F"], default="F")
    p.set_defaults(func=cmd_closure)

    p = sub.add_parser("hom", parents=[common], help="is g(U) <| g(V)?")
    p.add_argument("u")
    p.add_argument("v")
    p.set_defaults(func=cmd_hom)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ResourceLimit as exc:
        print(exc, file=sys.stderr)
        if args.json:
            print(json.dumps({"verdict": "inconclusive", "theory": args.theory,
                              "stats": {"visited": exc.visited, "cap": exc.cap}}))
        return EXIT_ERROR
    except (KatSyntaxError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
