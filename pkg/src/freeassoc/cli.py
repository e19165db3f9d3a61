"""Command-line front end.

Every subcommand prints a deterministic plain-text report (canonical deglex
polynomial forms, stable field order) and encodes its outcome in the exit
code:

* 0 -- success / positive verdict,
* 1 -- negative verdict (non-member, NEITHER, violation found, ...),
* 2 -- usage, syntax, or file-format error,
* 3 -- internal invariant violation.

Randomized subcommands take ``--seed`` (default 0); identical invocations
produce byte-identical output.
"""

import argparse
import sys

from . import fileio
from .centrality import (
    CentralCandidate,
    assert_linear_bijection,
    centrality_scan,
    derive_univariate,
)
from .classify import Verdict, classify_map, factor_semilinear, verify_conjugation_family
from .errors import InputError, NotBijectiveError, NotCentralError, VerdictError
from .morphisms import in_commutator_ideal, kernel_probe, kernel_probe_exhaustive
from .parsing import parse_field_spec, parse_poly
from .poly import FreeAlgebra

__all__ = ["main", "run"]


def _algebra(args):
    return FreeAlgebra(parse_field_spec(args.field), args.arity)


def _read(path):
    try:
        with open(path, encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc


def _word_text(word, algebra):
    if not word:
        return "1"
    names = algebra.var_names()
    return "*".join(names[i - 1] for i in word)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_simplify(args):
    print(parse_poly(args.poly, _algebra(args)))
    return 0


def cmd_mirror(args):
    print(parse_poly(args.poly, _algebra(args)).mirror())
    return 0


def cmd_abelianize(args):
    print(parse_poly(args.poly, _algebra(args)).abelianize())
    return 0


def cmd_member_comm(args):
    member = in_commutator_ideal(parse_poly(args.poly, _algebra(args)))
    print(f"member: {'true' if member else 'false'}")
    return 0 if member else 1


def cmd_apply(args):
    morphism = fileio.load_morphism(_read(args.map))
    image = morphism(parse_poly(args.poly, morphism.dom))
    print(image)
    return 0


def cmd_compose(args):
    outer = fileio.load_morphism(_read(args.outer))
    inner = fileio.load_morphism(_read(args.inner))
    print(fileio.dump_morphism(outer.compose(inner)), end="")
    return 0


def cmd_classify(args):
    tm = fileio.load_wordmap(_read(args.map))
    result = classify_map(tm)
    if result.verdict is Verdict.NEITHER:
        cert = result.certificate
        u = _word_text(cert.u, tm.algebra)
        v = _word_text(cert.v, tm.algebra)
        print(f"verdict: NEITHER certificate: ({u}, {v})")
        print(f"defect: {cert.defect}")
        return 1
    print(f"verdict: {result.verdict} coeffs: {result.coeffs}")
    return 0


def cmd_factor(args):
    family = [fileio.load_wordmap(_read(path)) for path in args.map]
    family.sort(key=lambda tm: tm.algebra.arity)
    factorization = factor_semilinear(family)
    for line in factorization.report_lines():
        print(line)
    return 0 if factorization.verified else 1


def cmd_central(args):
    algebra = _algebra(args)
    if len(args.images) != algebra.arity:
        raise InputError(
            f"expected {algebra.arity} generator images, got {len(args.images)}"
        )
    images = tuple(parse_poly(text, algebra) for text in args.images)
    candidate = CentralCandidate(algebra, images)
    r = derive_univariate(candidate)
    print(f"r: {r}")
    a, b = assert_linear_bijection(r)
    print(f"linear: a={a} b={b}")
    return 0


def cmd_scan_central(args):
    field = parse_field_spec(args.field)
    report = centrality_scan(field, args.max_degree, seed=args.seed)
    print(f"candidates: {report.candidates}")
    print(f"survivors: {', '.join(report.survivor_strings())}")
    print(f"status: {'pass' if report.passed else 'fail'}")
    return 0 if report.passed else 1


def cmd_verify_cat(args):
    family = {}
    for path in args.map:
        mu = fileio.load_semilinear(_read(path))
        arity = mu.algebra.arity
        if arity in family:
            raise InputError(f"two maps of arity {arity} in the family")
        family[arity] = mu
    report = verify_conjugation_family(
        family, samples=args.samples, max_deg=args.max_degree, seed=args.seed
    )
    for violation in report.violations:
        print(f"violation: {violation}")
    print(f"checks: {report.checks}")
    print(f"violations: {len(report.violations)}")
    print(f"status: {'pass' if report.passed else 'fail'}")
    return 0 if report.passed else 1


def cmd_probe_kernel(args):
    poly = parse_poly(args.poly, _algebra(args))
    if args.exhaustive:
        result = kernel_probe_exhaustive(poly, args.max_degree)
    else:
        result = kernel_probe(poly, args.trials, args.max_degree, seed=args.seed)
    if result.all_killed:
        print(f"all killed: {result.trials} morphisms tried")
        return 0
    print(f"witness found: {result.trials} morphisms tried")
    for line in result.witness.lines():
        print(line)
    print(f"image: {result.witness_image}")
    return 1


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _add_poly_command(sub, name, handler, help_text):
    cmd = sub.add_parser(name, help=help_text)
    cmd.add_argument("--field", default="Q", help="field spec (default: Q)")
    cmd.add_argument("--arity", type=int, default=2, help="number of generators")
    cmd.add_argument("poly", help="polynomial text")
    cmd.set_defaults(handler=handler)
    return cmd


def build_parser():
    parser = argparse.ArgumentParser(
        prog="freeassoc",
        description="exact computation in free associative algebras",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    _add_poly_command(sub, "simplify", cmd_simplify, "parse and print canonical form")
    _add_poly_command(sub, "mirror", cmd_mirror, "reverse every word")
    _add_poly_command(sub, "abelianize", cmd_abelianize, "image in the commutative ring")
    _add_poly_command(
        sub, "member-comm", cmd_member_comm, "membership in the commutator ideal"
    )

    cmd = sub.add_parser("apply", help="apply a morphism file to a polynomial")
    cmd.add_argument("--map", required=True, help="morphism file")
    cmd.add_argument("poly", help="polynomial over the domain algebra")
    cmd.set_defaults(handler=cmd_apply)

    cmd = sub.add_parser("compose", help="compose two morphism files (outer inner)")
    cmd.add_argument("outer", help="morphism applied second")
    cmd.add_argument("inner", help="morphism applied first")
    cmd.set_defaults(handler=cmd_compose)

    cmd = sub.add_parser("classify", help="classify a word-table file")
    cmd.add_argument("--map", required=True, help="word-table file")
    cmd.set_defaults(handler=cmd_classify)

    cmd = sub.add_parser("factor", help="factor a family of word-table files")
    cmd.add_argument(
        "--map", action="append", required=True, help="word-table file (repeatable)"
    )
    cmd.set_defaults(handler=cmd_factor)

    cmd = sub.add_parser("central", help="derive the univariate form of a candidate")
    cmd.add_argument("--field", default="Q", help="field spec (default: Q)")
    cmd.add_argument("--arity", type=int, default=2, help="number of generators")
    cmd.add_argument("images", nargs="+", help="one generator image per generator")
    cmd.set_defaults(handler=cmd_central)

    cmd = sub.add_parser("scan-central", help="exhaustive univariate scan over GF(q)")
    cmd.add_argument("--field", required=True, help="finite field spec")
    cmd.add_argument("--max-degree", type=int, default=2, help="degree cap for r")
    cmd.add_argument("--seed", type=int, default=0)
    cmd.set_defaults(handler=cmd_scan_central)

    cmd = sub.add_parser("verify-cat", help="check a conjugation family")
    cmd.add_argument(
        "--map", action="append", required=True, help="semilinear map file (repeatable)"
    )
    cmd.add_argument("--samples", type=int, default=20)
    cmd.add_argument("--max-degree", type=int, default=2)
    cmd.add_argument("--seed", type=int, default=0)
    cmd.set_defaults(handler=cmd_verify_cat)

    cmd = sub.add_parser("probe-kernel", help="probe kernels of maps into W(t)")
    cmd.add_argument("--field", default="Q", help="field spec (default: Q)")
    cmd.add_argument("--arity", type=int, default=2, help="number of generators")
    cmd.add_argument("--trials", type=int, default=50)
    cmd.add_argument("--max-degree", type=int, default=3, help="image degree cap")
    cmd.add_argument("--seed", type=int, default=0)
    cmd.add_argument(
        "--exhaustive", action="store_true", help="try all morphisms (finite fields)"
    )
    cmd.add_argument("poly", help="polynomial text")
    cmd.set_defaults(handler=cmd_probe_kernel)

    return parser


def run(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NotCentralError as exc:
        print(f"rejected: {exc}")
        print(f"s: {'; '.join(exc.endomorphism.lines())}")
        print(f"defect: {exc.defect}")
        return 1
    except NotBijectiveError as exc:
        print(f"rejected: {exc}")
        return 1
    except VerdictError as exc:
        print(f"rejected: {exc}")
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # pragma: no cover - invariant violations
        print(f"internal error: {exc}", file=sys.stderr)
        return 3


def main(argv=None):
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
