"""Command-line front end.

Reports go to stdout as JSON with sorted keys; rationals are rendered as
"p/q" strings and integers in full.  Exit status: 0 for success or a positive
verdict, 1 for a negative verdict, 2 for usage and input errors.
"""

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import paper_sequences as ps
from .realizability import check_exact, check_relative, coefficients, decompose
from .realize import build_realization, dump_triple, load_triple, triple_to_dict, verify_factor
from .transforms import fix, orb


class InputError(Exception):
    pass


def render(x):
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def render_csv(values):
    return ",".join(str(render(x)) for x in values)


def parse_terms(text, rational=False):
    if text == "-":
        text = sys.stdin.read()
    items = [t.strip() for t in text.replace("\n", ",").split(",") if t.strip()]
    if not items:
        raise InputError("no terms given")
    out = []
    for i, item in enumerate(items, start=1):
        try:
            value = Fraction(item) if rational else int(item)
        except ValueError:
            raise InputError(f"term {i}: cannot parse {item!r}") from None
        if rational and value.denominator == 1:
            value = value.numerator
        out.append(value)
    return tuple(out)


def read_bfile_terms(path, align="first"):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    try:
        return ps.normalize(ps.parse_bfile(text), align=align)
    except ps.BFileError as exc:
        raise InputError(f"{path}: {exc}") from None


def truncate(seq, horizon):
    if horizon is None:
        return seq
    if horizon < 1:
        raise InputError("horizon must be positive")
    if horizon > len(seq):
        raise InputError(f"horizon {horizon} exceeds the {len(seq)} terms given")
    return seq[:horizon]


def input_sequence(args, rational=False):
    if getattr(args, "bfile", None):
        return read_bfile_terms(args.bfile, getattr(args, "offset_align", "first"))
    return parse_terms(args.terms, rational=rational)


def violation_dict(v):
    if v is None:
        return None
    n, value, reason = v
    return {"index": n, "value": render(value), "reason": reason}


def report_dict(rep):
    return {
        "mode": rep.mode,
        "horizon": rep.horizon,
        "verdict": rep.verdict,
        "first_violation": violation_dict(rep.first_violation),
        "orbit_counts": [render(x) for x in rep.orbit_counts],
    }


def decomposition_dict(dec):
    return {
        "horizon": dec.horizon,
        "b": [[n, v] for n, v in sorted(dec.b.items())],
        "a": [[d, n, v] for (d, n), v in sorted(dec.a.items())],
    }


def verification_dict(ver):
    return {
        "ok": ver.ok,
        "equivariant": ver.equivariant,
        "surjective": ver.surjective,
        "counts_match": ver.counts_match,
        "equivariance_witness": ver.equivariance_witness,
        "missing_point": ver.missing_point,
        "count_witness": list(ver.count_witness) if ver.count_witness else None,
    }


def emit(obj):
    print(json.dumps(obj, sort_keys=True, indent=2))


def cmd_transform(args):
    seq = input_sequence(args, rational=True)
    out = fix(seq) if args.dir == "fix" else orb(seq)
    print(render_csv(out))
    return 0


def cmd_check(args):
    seq = truncate(input_sequence(args), args.horizon)
    rep = check_exact(seq) if args.mode == "exact" else check_relative(seq)
    emit({"command": "check", "input": list(seq), **report_dict(rep)})
    return 0 if rep.realizable else 1


def _orbit_input(args):
    """Orbit counts from --orb, or orb(h) after a relative check for --terms."""
    if args.orb is not None:
        eta = truncate(parse_terms(args.orb, rational=True), args.horizon)
        bad = next((n for n, x in enumerate(eta, 1) if Fraction(x).denominator != 1), None)
        if bad is not None:
            return eta, None, {"first_violation": {"index": bad, "value": render(eta[bad - 1]),
                                                   "reason": "non-integer"}}
        return tuple(int(x) for x in eta), None, None
    h = truncate(input_sequence(args), args.horizon)
    rep = check_relative(h)
    if not rep.realizable:
        return None, h, report_dict(rep)
    return tuple(int(x) for x in rep.orbit_counts), h, None


def cmd_decompose(args):
    eta, h, rejection = _orbit_input(args)
    if rejection is not None:
        emit({"command": "decompose", "verdict": "rejected", **rejection})
        return 1
    dec = decompose(eta)
    emit({
        "command": "decompose",
        "input": list(h) if h is not None else None,
        "orbit_counts": list(eta),
        "verdict": "decomposed",
        "decomposition": decomposition_dict(dec),
        "reconstructed": list(coefficients(dec)),
    })
    return 0


def cmd_realize(args):
    eta, h, rejection = _orbit_input(args)
    if rejection is not None:
        emit({"command": "realize", "verdict": "rejected", **rejection})
        return 1
    if args.horizon is None:
        raise InputError("realize needs --horizon")
    triple = build_realization(decompose(eta), args.horizon)
    result = {
        "command": "realize",
        "horizon": triple.horizon,
        "target": list(triple.target),
        "x_points": triple.X.size,
        "y_points": triple.Y.size,
    }
    if args.emit:
        Path(args.emit).write_text(dump_triple(triple) + "\n")
        result["emitted"] = args.emit
    status = 0
    if args.verify:
        ver = verify_factor(triple)
        result["verification"] = verification_dict(ver)
        status = 0 if ver.ok else 1
    if args.print_triple:
        result["triple"] = triple_to_dict(triple)
    emit(result)
    return status


def cmd_verify(args):
    try:
        triple = load_triple(Path(args.load).read_text())
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise InputError(f"cannot load {args.load}: {exc}") from None
    ver = verify_factor(triple)
    emit({"command": "verify", "source": args.load, "verification": verification_dict(ver)})
    return 0 if ver.ok else 1


def cmd_gen(args):
    try:
        seq = ps.gen(args.name, args.terms)
    except (KeyError, ValueError) as exc:
        raise InputError(str(exc).strip("'\"")) from None
    print(render_csv(seq))
    return 0


def cmd_classify(args):
    seq = truncate(read_bfile_terms(args.bfile, args.offset_align), args.horizon)
    cls = ps.classify(seq)
    neg = cls.first_negative_orbit
    emit({
        "command": "classify",
        "source": args.bfile,
        "horizon": cls.horizon,
        "verdict": cls.verdict,
        "witness": violation_dict(cls.witness),
        "first_negative_orbit": {"index": neg[0], "value": render(neg[1])} if neg else None,
        "exact": report_dict(cls.exact),
        "relative": report_dict(cls.relative),
    })
    return 1 if cls.verdict == ps.NOT_RELATIVE else 0


def _add_source(p, bfile=True):
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--terms", help="comma-separated terms, '-' reads stdin")
    if bfile:
        group.add_argument("--bfile", help="OEIS b-file path")
    return group


def build_parser():
    parser = argparse.ArgumentParser(prog="fixorb", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("transform", help="apply fix or orb")
    p.add_argument("--dir", choices=("fix", "orb"), required=True)
    _add_source(p)
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("check", help="exact or relative realizability of a prefix")
    p.add_argument("--mode", choices=("exact", "relative"), required=True)
    _add_source(p)
    p.add_argument("--horizon", type=int)
    p.set_defaults(func=cmd_check)

    for name, func, helptext in (
        ("decompose", cmd_decompose, "orbit decomposition of a relatively realizable prefix"),
        ("realize", cmd_realize, "build (and optionally verify) a realizing permutation triple"),
    ):
        p = sub.add_parser(name, help=helptext)
        g = _add_source(p, bfile=False)
        g.add_argument("--orb", help="orbit counts eta given directly")
        p.add_argument("--horizon", type=int)
        p.set_defaults(func=func)
        if name == "realize":
            p.add_argument("--emit", help="write the triple as JSON to this path")
            p.add_argument("--verify", action="store_true")
            p.add_argument("--print-triple", action="store_true", help="include the triple in the report")

    p = sub.add_parser("verify", help="re-verify a serialized triple")
    p.add_argument("--load", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="print a named sequence")
    p.add_argument("--name", required=True, help=", ".join(ps.NAMES))
    p.add_argument("--terms", type=int, required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("classify", help="classify a b-file")
    p.add_argument("--bfile", required=True)
    p.add_argument("--horizon", type=int)
    p.add_argument("--offset-align", choices=("first", "index1"), default="first")
    p.set_defaults(func=cmd_classify)
    return parser


_VALUE_FLAGS = ("--terms", "--orb")


def _glue_negative_values(argv):
    # "--terms -1,2" would otherwise be read as an unknown option
    out, it = [], iter(argv)
    for tok in it:
        if tok in _VALUE_FLAGS:
            nxt = next(it, None)
            if nxt is not None and nxt.startswith("-") and nxt != "-":
                out.append(f"{tok}={nxt}")
                continue
            out.append(tok)
            if nxt is not None:
                out.append(nxt)
        else:
            out.append(tok)
    return out


def main(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(_glue_negative_values(argv))
    try:
        return args.func(args)
    except InputError as exc:
        print(f"fixorb {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
