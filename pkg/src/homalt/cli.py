"""Command-line interface.

Subcommands:

* ``check``   -- verify one identity (registry tag or a structural check:
  right-alt, left-alt, multiplicative, morphism) on an algebra file.
* ``lemmas``  -- run the whole identity registry on an algebra.
* ``twist``   -- twist an algebra file along a morphism file.
* ``mikheev`` -- write the built-in 13-dimensional algebra or its twisted
  family (rational or symbolic parameters) to a file.
* ``power``   -- Hom-power of an element of an algebra file.
* ``noniso``  -- non-isomorphism certificate for two parameter pairs.

Exit codes: 0 when every check holds (or random-passes), 1 when some check
fails (a witness is printed), 2 on usage or input errors, including identity
preconditions the input algebra does not satisfy.  With ``--format json``
output is byte-deterministic for fixed inputs; the random strategy then
requires an explicit ``--seed``.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from .algfile import (
    AlgebraFormatError,
    encode_element,
    parse_document,
    parse_element_expr,
    parse_morphism,
    serialize_algebra,
)
from .catalog import (
    FamilyParams,
    family_nonisomorphism_condition,
    mikheev_algebra,
    mikheev_family,
)
from .homalgebra import (
    CheckReport,
    HomAlgebra,
    element_str,
    is_left_hom_alternative,
    is_morphism,
    is_multiplicative,
    is_right_hom_alternative,
    yau_twist,
)
from .proof_replay import PreconditionError, identity_tags, verify, verify_all
from .scalars import parse_rational

STRUCTURAL_IDS = ("right-alt", "left-alt", "multiplicative", "morphism")


class CliInputError(ValueError):
    pass


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise CliInputError(f"cannot read {path}: {exc.strerror or exc}")


def _load_algebra(path: str):
    return parse_document(_read_text(path))


def _algebra_for_run(args) -> tuple[HomAlgebra, list[str]]:
    """Resolve --algebra / --mikheev / --lambda / --xi / --symbolic flags."""
    if getattr(args, "algebra", None):
        doc = _load_algebra(args.algebra)
        return doc.algebra, doc.basis_names
    if not getattr(args, "mikheev", False):
        raise CliInputError("an algebra is required (use --algebra FILE or --mikheev)")
    names = [f"e{i + 1}" for i in range(13)]
    return _mikheev_variant(args), names


def _mikheev_variant(args) -> HomAlgebra:
    symbolic = getattr(args, "symbolic", False)
    lam, xi = getattr(args, "lam", None), getattr(args, "xi", None)
    if symbolic and (lam or xi):
        raise CliInputError("--symbolic cannot be combined with --lambda/--xi")
    if symbolic:
        return mikheev_family(FamilyParams.symbolic())
    if lam is None and xi is None:
        return mikheev_algebra()
    if lam is None or xi is None:
        raise CliInputError("--lambda and --xi must be given together")
    return mikheev_family(FamilyParams.rational(parse_rational(lam), parse_rational(xi)))


def _resolve_seed(args) -> int:
    if args.seed is not None:
        return args.seed
    if args.format == "json" and args.strategy == "random":
        raise CliInputError("--seed is required for the random strategy with --format json")
    return 0


def _print_reports(reports: list[dict], fmt: str, names: list[str]) -> None:
    if fmt == "json":
        sys.stdout.write(json.dumps(reports, indent=2, sort_keys=True) + "\n")
        return
    for rec in reports:
        line = f"{rec['id']:<20} {rec['status']:<12} strategy={rec['strategy']}"
        if rec.get("points") is not None:
            line += f" points={rec['points']}"
        if rec.get("seed") is not None:
            line += f" seed={rec['seed']}"
        if rec.get("error"):
            line = f"{rec['id']:<20} error        {rec['error']}"
        print(line)
        witness = rec.get("witness")
        if witness:
            if "basis" in witness:
                tup = ", ".join(names[i] for i in witness["basis"])
                print(f"    witness basis: ({tup})")
            if "point" in witness:
                point = ", ".join(f"{k}={v}" for k, v in witness["point"].items())
                print(f"    witness point: {point}")
            if "probe" in witness:
                print(f"    witness probe: {names[witness['probe']]}")
            print(f"    witness value: {witness['pretty']}")


def _report_record(report: CheckReport, names: list[str]) -> dict:
    rec = report.to_dict()
    if report.witness is not None:
        rec["witness"]["pretty"] = element_str(report.witness.element, names)
    return rec


def _exit_code(records: list[dict]) -> int:
    if any(rec.get("error") for rec in records):
        return 2
    if any(rec["status"] == "fails" for rec in records):
        return 1
    return 0


def _cmd_check(args) -> int:
    A, names = _algebra_for_run(args)
    identity = args.identity
    if identity in STRUCTURAL_IDS:
        if identity == "right-alt":
            report = is_right_hom_alternative(A)
        elif identity == "left-alt":
            report = is_left_hom_alternative(A)
        elif identity == "multiplicative":
            report = is_multiplicative(A)
        else:
            rows = parse_morphism(_read_text(args.morphism))[0] if args.morphism else A.alpha
            report = is_morphism(A, A, rows)
    else:
        if args.strategy == "basis":
            raise CliInputError(
                "the basis strategy applies to structural checks only "
                f"({', '.join(STRUCTURAL_IDS)})"
            )
        seed = _resolve_seed(args)
        report = verify(
            A, identity, args.strategy, seed=seed, points=args.points,
            subset_max=args.subset_max,
        )
    records = [_report_record(report, names)]
    _print_reports(records, args.format, names)
    return _exit_code(records)


def _cmd_lemmas(args) -> int:
    A, names = _algebra_for_run(args)
    if args.strategy == "basis":
        raise CliInputError("the basis strategy applies to structural checks only")
    seed = _resolve_seed(args)
    results = verify_all(A, args.strategy, seed=seed, points=args.points, subset_max=args.subset_max)
    records = []
    for result in results:
        if result.report is not None:
            records.append(_report_record(result.report, names))
        else:
            records.append({"id": result.tag, "status": "error", "strategy": args.strategy,
                            "error": result.error})
    _print_reports(records, args.format, names)
    return _exit_code(records)


def _cmd_twist(args) -> int:
    doc = _load_algebra(args.algebra)
    rows, dim, params = parse_morphism(_read_text(args.morphism))
    if dim != doc.algebra.dim:
        raise CliInputError(
            f"morphism dimension {dim} does not match algebra dimension {doc.algebra.dim}"
        )
    base = doc.algebra
    extra = [p for p in params if p not in base.params]
    if extra:
        base = base.with_params(extra)
    twisted = yau_twist(base, rows)
    Path(args.out).write_text(serialize_algebra(twisted, doc.basis_names))
    print(f"wrote {args.out}")
    return 0


def _cmd_mikheev(args) -> int:
    A = _mikheev_variant(args)
    Path(args.out).write_text(serialize_algebra(A))
    print(f"wrote {args.out}")
    return 0


def _cmd_power(args) -> int:
    doc = _load_algebra(args.algebra)
    if args.n < 1:
        raise CliInputError("--n must be at least 1")
    x = parse_element_expr(args.element, doc.basis_names)
    result = doc.algebra.hom_power(x, args.n)
    if args.format == "json":
        sys.stdout.write(json.dumps({"power": encode_element(result)}, indent=2, sort_keys=True) + "\n")
    else:
        print(element_str(result, doc.basis_names))
    return 0


def _cmd_noniso(args) -> int:
    values = [parse_rational(v) for v in args.params]
    certified = family_nonisomorphism_condition(*values)
    print("non-isomorphic: certified" if certified else "non-isomorphic: not certified")
    return 0 if certified else 1


def _add_algebra_source(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--algebra", metavar="FILE", help="algebra document to load")
    sub.add_argument("--mikheev", action="store_true",
                     help="use the built-in 13-dimensional algebra (or its family)")
    sub.add_argument("--lambda", dest="lam", metavar="P/Q",
                     help="first family parameter (with --mikheev)")
    sub.add_argument("--xi", metavar="P/Q", help="second family parameter (with --mikheev)")
    sub.add_argument("--symbolic", action="store_true",
                     help="symbolic family parameters (with --mikheev)")


def _add_strategy_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--strategy", choices=("basis", "generic", "subset", "random"),
                     default="random", help="verification strategy (default: random)")
    sub.add_argument("--points", type=int, default=50,
                     help="sample count for the random strategy (default: 50)")
    sub.add_argument("--seed", type=int, default=None,
                     help="random seed (required for random strategy with --format json)")
    sub.add_argument("--subset-max", type=int, default=3,
                     help="support size cap for the subset strategy (default: 3)")
    sub.add_argument("--format", choices=("text", "json"), default="text",
                     help="output format (default: text)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="homalt",
        description="Exact verifier for identities in right Hom-alternative algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="verify one identity on an algebra")
    _add_algebra_source(check)
    check.add_argument("--identity", required=True,
                       choices=tuple(identity_tags()) + STRUCTURAL_IDS,
                       help="registry tag or structural check")
    check.add_argument("--morphism", metavar="FILE",
                       help="morphism to check (identity 'morphism'; default: the twisting map)")
    _add_strategy_flags(check)
    check.set_defaults(func=_cmd_check)

    lemmas = sub.add_parser("lemmas", help="run the whole identity registry")
    _add_algebra_source(lemmas)
    _add_strategy_flags(lemmas)
    lemmas.set_defaults(func=_cmd_lemmas)

    twist = sub.add_parser("twist", help="twist an algebra along a weak morphism")
    twist.add_argument("--algebra", metavar="FILE", required=True)
    twist.add_argument("--morphism", metavar="FILE", required=True)
    twist.add_argument("--out", metavar="FILE", required=True)
    twist.set_defaults(func=_cmd_twist)

    mikheev = sub.add_parser("mikheev", help="write the built-in algebra or its family")
    mikheev.add_argument("--out", metavar="FILE", required=True)
    mikheev.add_argument("--lambda", dest="lam", metavar="P/Q")
    mikheev.add_argument("--xi", metavar="P/Q")
    mikheev.add_argument("--symbolic", action="store_true")
    mikheev.set_defaults(func=_cmd_mikheev)

    power = sub.add_parser("power", help="Hom-power of an element")
    power.add_argument("--algebra", metavar="FILE", required=True)
    power.add_argument("--element", metavar="EXPR", required=True,
                       help="linear combination of basis names, e.g. 'e7 - e8'")
    power.add_argument("--n", type=int, required=True)
    power.add_argument("--format", choices=("text", "json"), default="text")
    power.set_defaults(func=_cmd_power)

    noniso = sub.add_parser("noniso", help="non-isomorphism certificate for two parameter pairs")
    noniso.add_argument("--params", nargs=4, metavar=("L", "XI", "L2", "XI2"), required=True,
                        help="two parameter pairs as rationals")
    noniso.set_defaults(func=_cmd_noniso)

    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (CliInputError, AlgebraFormatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    raise SystemExit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
