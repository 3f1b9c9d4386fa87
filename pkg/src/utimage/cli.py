"""Command-line interface: ``utimage <command> [options] EXPR``.

Exit codes: 0 success, 2 syntax error, 3 not multilinear, 4 unsupported
size, 5 target outside the image, 6 witness search exhausted, 7 corpus
disagreement, 8 degree cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from .cring import fmt_rat
from .errors import (DegreeCapExceeded, NotMultilinear, PolySyntaxError,
                     TargetOutsideImage, WitnessSearchExhausted)
from .imageclass import (DEFAULT_BUDGET, DEFAULT_SAMPLES, classify, conjecture_predict,
                         sample_image, sampling_evidence, witness_for_target)
from .mpoly import parse, expand, to_text
from .pitest import is_identity, is_identity_randomized
from .relfree import normal_form
from .utalg import UTMatrix

EXIT_SYNTAX, EXIT_NOT_MULTILINEAR, EXIT_UNSUPPORTED = 2, 3, 4
EXIT_OUTSIDE, EXIT_EXHAUSTED, EXIT_DISAGREE, EXIT_DEGREE_CAP = 5, 6, 7, 8


class _Fail(Exception):
    def __init__(self, code, kind, message, extra=None):
        super().__init__(message)
        self.code, self.kind, self.extra = code, kind, extra or {}


def _dump(obj):
    return json.dumps(obj, sort_keys=True)


def _poly(args):
    try:
        return expand(parse(args.expr))
    except PolySyntaxError as e:
        raise _Fail(EXIT_SYNTAX, "SyntaxError", str(e), {"position": e.pos})
    except NotMultilinear as e:
        raise _Fail(EXIT_NOT_MULTILINEAR, "NotMultilinear", str(e))


def _sizes(args):
    if args.n in (2, 3):
        return
    if args.conjecture and args.n >= 4:
        return
    raise _Fail(EXIT_UNSUPPORTED, "UnsupportedSize",
                f"n={args.n} is supported only as n>=4 with --conjecture"
                if args.n >= 4 else f"n={args.n} is not supported")


def cmd_classify(args, out):
    f = _poly(args)
    _sizes(args)
    if args.n >= 4:
        cls = conjecture_predict(f, args.n, args.trials, args.seed)
        ev = dict(cls.evidence)
    else:
        cls = classify(f, args.n)
        ev = sampling_evidence(f, args.n, cls.level, args.trials, args.seed)
    res = cls.to_json()
    res["evidence"] = ev
    res["seed"] = args.seed
    res["polynomial"] = to_text(f)
    if args.pretty:
        tag = " (conjectural)" if cls.conjectural else ""
        out.write(f"Im(f) on UT{args.n} = {cls.label}{tag}\n"
                  f"  f = {to_text(f)}\n"
                  f"  criterion: {cls.criterion}\n"
                  f"  sum of coefficients: {fmt_rat(cls.sum_of_coefficients)}; "
                  f"identity level: {cls.identity_level}\n"
                  f"  sampling (seed {args.seed}): {ev['count']} samples, "
                  f"min radical level {ev['min_radical_level']}, "
                  f"span rank {ev['span_rank']}/{ev['expected_dim']}\n")
    else:
        out.write(_dump(res) + "\n")
    return 0


def cmd_nf(args, out):
    f = _poly(args)
    if args.n < 2:
        raise _Fail(EXIT_UNSUPPORTED, "UnsupportedSize", "normal forms need n >= 2")
    nf = normal_form(f, args.n)
    if args.pretty:
        out.write(f"{to_text(f)}  ==  {nf}  (mod T(UT{args.n}))\n")
    else:
        res = nf.to_json()
        res["text"] = str(nf)
        res["seed"] = args.seed
        out.write(_dump(res) + "\n")
    return 0


def _target(args):
    try:
        obj = json.loads(args.target)
        t = UTMatrix.from_json(obj, args.n)
    except (ValueError, TypeError, AttributeError, IndexError, KeyError) as e:
        raise _Fail(EXIT_SYNTAX, "SyntaxError", f"bad target matrix: {e}")
    if t.n != args.n:
        raise _Fail(EXIT_SYNTAX, "SyntaxError", f"target must be {args.n}x{args.n}")
    return t


def cmd_witness(args, out):
    f = _poly(args)
    if args.n not in (2, 3):
        raise _Fail(EXIT_UNSUPPORTED, "UnsupportedSize", "witnesses are built for n = 2, 3")
    if args.target is None:
        raise _Fail(EXIT_SYNTAX, "SyntaxError", "--target is required")
    target = _target(args)
    try:
        w = witness_for_target(f, args.n, target, seed=args.seed, budget=args.budget)
    except TargetOutsideImage as e:
        raise _Fail(EXIT_OUTSIDE, "TargetOutsideImage", str(e))
    except WitnessSearchExhausted as e:
        raise _Fail(EXIT_EXHAUSTED, "WitnessSearchExhausted", str(e),
                    {"attempts": e.attempts, "evidence": e.evidence})
    res = w.to_json()
    res["seed"] = args.seed
    if args.pretty:
        out.write(f"f = {to_text(f)}\n")
        for i, m in sorted(w.assignment.items()):
            out.write(f"  x{i} -> {m!r}\n")
        out.write(f"  f(...) = {w.achieved!r}\n")
    else:
        out.write(_dump(res) + "\n")
    return 0


def cmd_sample(args, out):
    f = _poly(args)
    rep = sample_image(f, args.n, args.trials, args.seed)
    res = rep.to_json(include_samples=True)
    res["algebra"] = f"UT{args.n}"
    if args.pretty:
        out.write(f"{rep.to_json()}\n")
    else:
        out.write(_dump(res) + "\n")
    return 0


def cmd_identity(args, out):
    f = _poly(args)
    res = is_identity(f, args.n)
    rnd = is_identity_randomized(f, args.n, args.trials, args.seed)
    obj = {"algebra": f"UT{args.n}", "identity": res.holds,
           "entry": f"{res.entry[0]},{res.entry[1]}" if res.entry else None,
           "certificate": str(res.certificate) if res.certificate is not None else None,
           "randomized": {"trials": args.trials, "identity": rnd},
           "seed": args.seed}
    if args.pretty:
        msg = "is" if res.holds else "is not"
        out.write(f"{to_text(f)} {msg} an identity of UT{args.n}\n")
        if not res.holds:
            out.write(f"  entry ({obj['entry']}) = {obj['certificate']}\n")
    else:
        out.write(_dump(obj) + "\n")
    return 0


def _deg_range(text):
    try:
        if ".." in text:
            lo, hi = (int(s) for s in text.split(".."))
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad degree range {text!r}")
    if not 1 <= lo <= hi:
        raise argparse.ArgumentTypeError(f"bad degree range {text!r}")
    return lo, hi


def cmd_corpus(args, out):
    from .corpus import run_corpus
    if args.n < 2:
        raise _Fail(EXIT_UNSUPPORTED, "UnsupportedSize", "corpus needs n = 2 or 3")
    rep = run_corpus(args.count, args.deg, args.seed, args.n,
                     samples=args.trials, targets=args.targets, budget=args.budget)
    if args.json:
        out.write(_dump({"algebra": f"UT{args.n}", "seed": args.seed,
                         "count": len(rep.records),
                         "agree": len(rep.records) - len(rep.disagreements),
                         "disagreements": [r.poly for r in rep.disagreements]}) + "\n")
    else:
        out.write(rep.text() + "\n")
    return EXIT_DISAGREE if rep.disagreements else 0


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, default=3, help="matrix size (default 3)")
    common.add_argument("--seed", type=int, default=0)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="JSON output (default)")
    fmt.add_argument("--pretty", action="store_true", help="human-readable output")
    common.add_argument("--trials", type=int, default=DEFAULT_SAMPLES,
                        help="samples / random trials (default 50)")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                        help="witness attempts per search rung (default 64)")
    common.add_argument("--conjecture", action="store_true",
                        help="allow n >= 4 (predicted, labeled conjectural)")

    parser = argparse.ArgumentParser(prog="utimage", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, fn, hlp in [("classify", cmd_classify, "image of f on UT_n"),
                          ("nf", cmd_nf, "normal form modulo T(UT_n)"),
                          ("witness", cmd_witness, "assignment hitting a target"),
                          ("sample", cmd_sample, "random evaluations of f"),
                          ("identity", cmd_identity, "is f an identity of UT_n")]:
        p = sub.add_parser(name, parents=[common], help=hlp)
        p.add_argument("expr")
        p.set_defaults(func=fn)
        if name == "witness":
            p.add_argument("--target", help='JSON matrix, e.g. \'{"1,2":"1"}\'')
    p = sub.add_parser("corpus", parents=[common], help="seeded cross-check harness")
    p.add_argument("--count", type=int, default=200)
    p.add_argument("--deg", type=_deg_range, default=(2, 6), help="degree range, e.g. 2..6")
    p.add_argument("--targets", type=int, default=0, help="witness targets per polynomial")
    p.set_defaults(func=cmd_corpus)
    return parser


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except _Fail as e:
        payload = {"error": e.kind, "message": str(e), "seed": args.seed}
        payload.update(e.extra)
        (out if e.code == EXIT_EXHAUSTED else err).write(_dump(payload) + "\n")
        return e.code
    except DegreeCapExceeded as e:
        err.write(_dump({"error": "DegreeCapExceeded", "message": str(e)}) + "\n")
        return EXIT_DEGREE_CAP


if __name__ == "__main__":
    sys.exit(main())
