"""Command-line front end.

Exit codes: 0 success or all claims pass, 1 a claim fails or graphs are not
isomorphic, 2 bad input.  Every flag can also be set through an environment
variable named SYMDIG_<FLAG> (e.g. SYMDIG_Q=7, SYMDIG_CAP_ENUM=1000).
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from symdig import constructions as cons
from symdig import verify
from symdig.digraph import Digraph, is_isomorphic, normal_quotient
from symdig.errors import CapExceededError, InvalidParameterError
from symdig.finfield import field_of_order
from symdig.formats import WRITERS, format_label, read_graph, to_edgelist

FAMILIES = ("xq", "xqn", "hamming", "hamming-complement", "paley")
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _env(name: str, cast=str, default=None):
    raw = os.environ.get(f"SYMDIG_{name.upper().replace('-', '_')}")
    if raw is None:
        return default
    try:
        return cast(raw)
    except ValueError:
        raise UsageError(f"environment variable SYMDIG_{name.upper()} has invalid value {raw!r}")


def _add_family_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", choices=FAMILIES)
    p.add_argument("--q", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--out", help="output path (default: stdout)")


def _add_caps(p: argparse.ArgumentParser) -> None:
    p.add_argument("--seed", type=int)
    p.add_argument("--cap-enum", type=int, help="group enumeration cap")
    p.add_argument("--cap-iso", type=int, help="isomorphism search vertex cap")
    p.add_argument("--cap-pairs", type=int, help="full pair-scan cap for sampled checks")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="symdig", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("construct", help="build a digraph and write it out")
    _add_family_args(p)
    p.add_argument("--format", choices=sorted(WRITERS))

    p = sub.add_parser("verify", help="run a claim suite and write a JSON report")
    _add_family_args(p)
    _add_caps(p)
    p.add_argument("--suite", choices=("default", "proposition"),
                   help="for family xq: the X_q suite (default) or the local-structure suite")
    p.add_argument("--timings", action="store_true",
                   help="record wall time per claim (makes the report non-reproducible)")

    p = sub.add_parser("quotient", help="normal quotient by a named subgroup")
    _add_family_args(p)
    p.add_argument("--subgroup")
    p.add_argument("--blocks-out", help="block map path (default: <out>.blocks)")

    p = sub.add_parser("iso", help="test two digraph files for isomorphism")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--cap-iso", type=int)
    p.add_argument("--witness", help="write the vertex map here when isomorphic")
    return parser


def _resolve(args: argparse.Namespace) -> argparse.Namespace:
    """Fill unset flags from SYMDIG_* environment variables, then defaults."""
    ints = {"q", "m", "n", "seed", "cap_enum", "cap_iso", "cap_pairs"}
    defaults = {"seed": verify.DEFAULT_SEED, "cap_enum": verify.ENUM_CAP, "cap_iso": 512,
                "cap_pairs": verify.PAIR_SCAN_CAP, "format": "edgelist", "suite": "default"}
    for name in ("family", "q", "m", "n", "out", "format", "seed", "cap_enum", "cap_iso",
                 "cap_pairs", "subgroup", "suite"):
        if not hasattr(args, name) or getattr(args, name) is not None:
            continue
        value = _env(name, int if name in ints else str, defaults.get(name))
        setattr(args, name, value)
    if getattr(args, "format", None) is not None and args.format not in WRITERS:
        raise UsageError(f"unknown format {args.format!r}")
    return args


def _check_family(args) -> None:
    fam = args.family
    if fam is None:
        raise UsageError("--family is required")
    if fam not in FAMILIES:
        raise UsageError(f"unknown family {fam!r}")
    if fam in ("xq", "xqn", "paley"):
        if args.q is None:
            raise UsageError(f"family {fam} needs --q")
        if args.m is not None:
            raise UsageError(f"--m does not apply to family {fam}")
        if fam in ("xq", "paley") and args.n is not None:
            raise UsageError(f"--n does not apply to family {fam}")
        if fam == "xqn" and args.n is None:
            raise UsageError("family xqn needs --n")
    else:
        if args.m is None or args.n is None:
            raise UsageError(f"family {fam} needs --m and --n")
        if args.q is not None:
            raise UsageError(f"--q does not apply to family {fam}")


def build_family(args) -> Digraph:
    _check_family(args)
    fam = args.family
    if fam == "xq":
        return cons.build_xq(field_of_order(args.q))
    if fam == "xqn":
        return cons.build_xqn(field_of_order(args.q), args.n)[0]
    if fam == "paley":
        return cons.build_paley(field_of_order(args.q))[0]
    return cons.build_hamming(args.m, args.n, complement=fam == "hamming-complement")


def _write(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def cmd_construct(args) -> int:
    g = build_family(args)
    _write(WRITERS[args.format](g), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    _check_family(args)
    fam = args.family
    if args.suite == "proposition" and fam != "xq":
        raise UsageError("--suite proposition applies only to family xq")
    if fam == "xq":
        F = field_of_order(args.q)
        if args.suite == "proposition":
            report = verify.check_proposition_claims(F, seed=args.seed, enum_cap=args.cap_enum,
                                                     pair_cap=args.cap_pairs)
        else:
            report = verify.check_xq_claims(F, seed=args.seed)
    elif fam == "xqn":
        report = verify.check_xqn_claims(field_of_order(args.q), args.n, seed=args.seed)
    elif fam == "paley":
        report = verify.check_paley_claims(field_of_order(args.q), seed=args.seed,
                                           enum_cap=args.cap_enum)
    else:
        report = verify.check_hamming_claims(args.m, args.n, fam == "hamming-complement",
                                             seed=args.seed)
    _write(report.to_json(timings=args.timings), args.out)
    for line in report.summary_lines():
        print(line, file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_quotient(args) -> int:
    if args.subgroup != "center":
        raise UsageError(f"unsupported subgroup selector {args.subgroup!r} (supported: center)")
    if args.family != "xq":
        raise UsageError("--subgroup center is supported only for family xq")
    _check_family(args)
    F = field_of_order(args.q)
    X = cons.build_xq(F)
    Q, blocks = normal_quotient(X, cons.center_action(F))
    block_text = "".join(
        f"{i}: {', '.join(format_label(X.labels[v]) for v in blk)}\n"
        for i, blk in enumerate(blocks))
    if args.out is None or args.out == "-":
        sys.stdout.write(to_edgelist(Q))
        sys.stdout.write("\n" + block_text)
    else:
        _write(to_edgelist(Q), args.out)
        _write(block_text, args.blocks_out or args.out + ".blocks")
    return EXIT_OK


def cmd_iso(args) -> int:
    try:
        g1 = read_graph(Path(args.first).read_text(encoding="utf-8"))
        g2 = read_graph(Path(args.second).read_text(encoding="utf-8"))
    except OSError as exc:
        raise UsageError(str(exc))
    witness = is_isomorphic(g1, g2, cap=args.cap_iso)
    if witness is None:
        print("not isomorphic", file=sys.stderr)
        return EXIT_FAIL
    if args.witness:
        _write("".join(f"{u} {v}\n" for u, v in enumerate(witness)), args.witness)
    print("isomorphic", file=sys.stderr)
    return EXIT_OK


COMMANDS = {"construct": cmd_construct, "verify": cmd_verify,
            "quotient": cmd_quotient, "iso": cmd_iso}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _resolve(args)
        return COMMANDS[args.command](args)
    except (UsageError, InvalidParameterError, CapExceededError) as exc:
        print(f"symdig {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
