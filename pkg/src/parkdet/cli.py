"""Command-line interface.

Subcommands: gen (write instance graphs), ideal (dump generators),
dim (standard-monomial count), det (exact determinants), formulas
(closed-form values) and verify (named suites producing structured
reports). Exit codes: 0 success / all trials passed, 2 at least one
failing trial, 1 usage or I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import suites as suites_mod
from .exact_linalg import det, matrix_from_json
from .formulas import (
    FormulaDomainError,
    flat_parking_count,
    parking_dim_complete,
    root_deleted_signless_det,
    skeleton1_dim_complete,
    steck_count,
    step_weight_dim,
    step_weight_identity_holds,
)
from .monomial_ideals import (
    ideal_to_json,
    ideal_to_text,
    lambda_ideal,
    matrix_skeleton_ideal,
    parking_ideal,
    skeleton_ideal,
    step_weight_ideal,
)
from .multigraph import (
    GraphFormatError,
    complete_minus_root_edges,
    complete_multigraph,
    format_graph,
    graph_to_json,
    laplacians,
    random_multigraph,
    random_root_deletion,
    read_graph_file,
)
from .standard_count import count_standard


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit(2); the contract wants 1
        raise UsageError(message)


def _ints(text: str, expect: int | None = None) -> tuple[int, ...]:
    try:
        values = tuple(int(x) for x in text.replace(",", " ").split())
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}")
    if expect is not None and len(values) != expect:
        raise UsageError(f"expected {expect} integers, got {len(values)} in {text!r}")
    return values


def _write_out(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def build_parser() -> _Parser:
    parser = _Parser(prog="parkdet", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out", default=None, help="write output to this path instead of stdout")
    common.add_argument("--graph-file", default=None, help="graph in text or JSON format")

    p = sub.add_parser("gen", parents=[common], help="generate an instance graph")
    p.add_argument("--kind", choices=["complete", "complete-minus", "random", "root-deletion"],
                   required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", type=int, default=1)
    p.add_argument("--b", type=int, default=1)
    p.add_argument("--r", type=int, default=0)
    p.add_argument("--max-mult", type=int, default=2)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("ideal", parents=[common], help="dump minimal generators of an ideal")
    _add_ideal_source(p)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=_cmd_ideal)

    p = sub.add_parser("dim", parents=[common], help="count standard monomials")
    _add_ideal_source(p)
    p.set_defaults(func=_cmd_dim)

    p = sub.add_parser("det", parents=[common], help="exact determinant")
    p.add_argument("--matrix", choices=["l", "q", "ltilde", "qtilde"], default="qtilde")
    p.add_argument("--matrix-file", default=None, help="JSON matrix (rows of decimal strings)")
    p.set_defaults(func=_cmd_det)

    p = sub.add_parser("formulas", parents=[common], help="evaluate closed forms")
    p.add_argument("--parking", metavar="n,a,b", default=None)
    p.add_argument("--skel1", metavar="n,a,b", default=None)
    p.add_argument("--qdet", metavar="n,r", default=None)
    p.add_argument("--step-dim", metavar="n,r,a", default=None)
    p.add_argument("--steck", metavar="l1,l2,...", default=None)
    p.add_argument("--flat", metavar="l,x", default=None)
    p.add_argument("--identity", metavar="n,a", default=None)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=_cmd_formulas)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", choices=sorted(suites_mod.SUITES) + ["all"])
    p.add_argument("--n", "--n-max", dest="n_max", type=int, default=None)
    p.add_argument("--a-max", type=int, default=None)
    p.add_argument("--b-max", type=int, default=None)
    p.add_argument("--mult-max", type=int, default=None)
    p.add_argument("--entry-max", type=int, default=None)
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--format", choices=["json", "csv", "text"], default="json")
    p.set_defaults(func=_cmd_verify)

    return parser


def _add_ideal_source(p: argparse.ArgumentParser):
    p.add_argument("--skeleton", type=int, default=None, help="skeleton order k (with --graph-file)")
    p.add_argument("--parking", action="store_true", help="full parking ideal (default with --graph-file)")
    p.add_argument("--lambda-seq", metavar="l1,l2,...", default=None)
    p.add_argument("--step", metavar="n,r,a", default=None)
    p.add_argument("--matrix-file", default=None, help="dominant-class matrix (JSON rows)")


def _resolve_ideal(args):
    sources = [s for s in (args.graph_file, args.lambda_seq, args.step, args.matrix_file) if s]
    if len(sources) != 1:
        raise UsageError("give exactly one of --graph-file, --lambda-seq, --step, --matrix-file")
    if args.graph_file:
        g = read_graph_file(args.graph_file)
        if args.skeleton is not None:
            return skeleton_ideal(g, args.skeleton)
        return parking_ideal(g)
    if args.lambda_seq:
        return lambda_ideal(_ints(args.lambda_seq))
    if args.step:
        n, r, a = _ints(args.step, 3)
        return step_weight_ideal(n, r, a)
    with open(args.matrix_file, "r", encoding="utf-8") as fh:
        return matrix_skeleton_ideal(matrix_from_json(fh.read()))


def _cmd_gen(args) -> int:
    if args.kind == "complete":
        g = complete_multigraph(args.n, args.a, args.b)
    elif args.kind == "complete-minus":
        g = complete_minus_root_edges(args.n, args.r)
    elif args.kind == "random":
        g = random_multigraph(args.n, args.max_mult, args.seed)
    else:
        g = random_root_deletion(args.n, args.a, args.b, args.seed)
    text = graph_to_json(g) + "\n" if args.format == "json" else format_graph(g)
    _write_out(text, args.out)
    return 0


def _cmd_ideal(args) -> int:
    ideal = _resolve_ideal(args)
    text = ideal_to_json(ideal) + "\n" if args.format == "json" else ideal_to_text(ideal)
    _write_out(text, args.out)
    return 0


def _cmd_dim(args) -> int:
    _write_out(str(count_standard(_resolve_ideal(args))) + "\n", args.out)
    return 0


def _cmd_det(args) -> int:
    if args.matrix_file:
        with open(args.matrix_file, "r", encoding="utf-8") as fh:
            m = matrix_from_json(fh.read())
    elif args.graph_file:
        g = read_graph_file(args.graph_file)
        m = getattr(laplacians(g), args.matrix)
    else:
        raise UsageError("give --graph-file or --matrix-file")
    _write_out(str(det(m)) + "\n", args.out)
    return 0


def _cmd_formulas(args) -> int:
    values: dict[str, str] = {}
    if args.parking:
        n, a, b = _ints(args.parking, 3)
        values["parking_dim_complete"] = str(parking_dim_complete(n, a, b))
    if args.skel1:
        n, a, b = _ints(args.skel1, 3)
        values["skeleton1_dim_complete"] = str(skeleton1_dim_complete(n, a, b))
    if args.qdet:
        n, r = _ints(args.qdet, 2)
        values["root_deleted_signless_det"] = str(root_deleted_signless_det(n, r))
    if args.step_dim:
        n, r, a = _ints(args.step_dim, 3)
        values["step_weight_dim"] = str(step_weight_dim(n, r, a))
    if args.steck:
        values["steck_count"] = str(steck_count(_ints(args.steck)))
    if args.flat:
        l, x = _ints(args.flat, 2)
        values["flat_parking_count"] = str(flat_parking_count(l, x))
    if args.identity:
        n, a = _ints(args.identity, 2)
        values["step_weight_identity_holds"] = str(step_weight_identity_holds(n, a)).lower()
    if not values:
        raise UsageError("no formula selected")
    if args.format == "json":
        _write_out(json.dumps(values) + "\n", args.out)
    else:
        _write_out("".join(f"{k} = {v}\n" for k, v in values.items()), args.out)
    return 0


_SUITE_PARAM_NAMES = {
    "matrix-tree": ("seed",),
    "rc": ("n_max", "a_max", "b_max", "trials", "seed"),
    "ineq": ("n_max", "mult_max", "trials", "seed"),
    "mt": ("n_max", "entry_max", "trials", "seed"),
    "recurrence": ("n_max", "a_max"),
    "decomp": ("trials", "seed"),
    "properties": ("seed",),
}


def _suite_kwargs(name: str, args) -> dict:
    kwargs = {}
    for param in _SUITE_PARAM_NAMES[name]:
        value = getattr(args, param, None)
        if value is not None:
            kwargs[param] = value
    return kwargs


def _cmd_verify(args) -> int:
    names = sorted(suites_mod.SUITES) if args.suite == "all" else [args.suite]
    reports = [suites_mod.SUITES[name](**_suite_kwargs(name, args)) for name in names]
    if args.format == "json":
        if len(reports) == 1:
            text = reports[0].to_json() + "\n"
        else:
            text = json.dumps([r.to_dict() for r in reports], indent=2) + "\n"
    elif args.format == "csv":
        chunks = [reports[0].to_csv()]
        for r in reports[1:]:
            chunks.append("".join(r.to_csv().splitlines(keepends=True)[1:]))  # drop repeated header
        text = "".join(chunks)
    else:
        text = "\n".join(r.to_text() for r in reports)
    _write_out(text, args.out)
    failed = sum(len(r.failed) for r in reports)
    return 0 if failed == 0 else 2


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except (GraphFormatError, FormulaDomainError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
