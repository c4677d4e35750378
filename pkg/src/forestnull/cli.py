"""Command line front end.

Subcommands: validate, support, null-basis, rank-basis, transfer, gen,
bench, oracle.  Exit codes: 0 success, 1 validation/computation failure,
2 usage error.  All output except bench timings is deterministic byte
for byte for fixed inputs and flags.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bench as bench_mod
from . import matrixio, oracle
from .errors import ForestNullError, ValidationError
from .fields import parse_field_spec
from .generate import random_matrix
from .kernel import maximum_matching, support
from .matrix import Basis
from .rank import rank_basis, transfer_rank
from .scaling import null_basis, transfer_null


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="forestnull",
        description="Sparsest null bases and row-space bases of zero-diagonal "
                    "matrices whose nonzero pattern is a forest.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check that a file holds a valid matrix")
    p.add_argument("file")

    p = sub.add_parser("support", help="print support, core, S-set and dimensions")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")

    for name, what in (("null-basis", "sparsest null-space basis"),
                       ("rank-basis", "row-space basis")):
        p = sub.add_parser(name, help="compute the " + what)
        p.add_argument("file")
        p.add_argument("-o", "--out")
        p.add_argument("--format", choices=("mm", "json"), default="mm")
        p.add_argument("--check", action="store_true",
                       help="verify the result (oracle cross-check for small n)")

    p = sub.add_parser("transfer", help="move a vector between matrices sharing a pattern")
    p.add_argument("--space", choices=("null", "rank"), required=True)
    p.add_argument("--from", dest="source", required=True, metavar="M")
    p.add_argument("--to", dest="target", required=True, metavar="N")
    p.add_argument("--vector", required=True, metavar="X_JSON")
    p.add_argument("-o", "--out")

    p = sub.add_parser("gen", help="generate a seeded random instance")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--field", default="rational")
    p.add_argument("--components", type=int, default=1)
    p.add_argument("--out")
    p.add_argument("--format", choices=("mm", "json"), default="mm")

    p = sub.add_parser("bench", help="time the null-basis pipeline, emit CSV")
    p.add_argument("--sizes", default="2^15,2^16,2^17,2^18")
    p.add_argument("--field", default="gf:1000003")
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--seed", type=int, default=42)

    p = sub.add_parser("oracle", help="brute-force cross checks")
    p.add_argument("operation", choices=("null-basis", "rank", "min-support"))
    p.add_argument("file")
    p.add_argument("-o", "--out")
    p.add_argument("--format", choices=("mm", "json"), default="mm")

    return parser


def _emit(text: str, out_path):
    if out_path:
        with open(out_path, "w", encoding="ascii") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _cmd_validate(args) -> int:
    m = matrixio.read_matrix(args.file)
    print("ok: n=%d nnz=%d components=%d field=%s"
          % (m.n, m.nnz(), m.pattern.component_count, m.field.name))
    return 0


def _format_ids(ids) -> str:
    return " ".join(str(v + 1) for v in sorted(ids))


def _cmd_support(args) -> int:
    m = matrixio.read_matrix(args.file)
    matching = maximum_matching(m.pattern)
    info = support(m.pattern, matching)
    null_dim = m.n - 2 * matching.nu
    if args.json:
        doc = {
            "n": m.n,
            "components": m.pattern.component_count,
            "matching_number": matching.nu,
            "null_dimension": null_dim,
            "rank": 2 * matching.nu,
            "supp": [v + 1 for v in sorted(info.supp)],
            "core": [v + 1 for v in sorted(info.core)],
            "s_set": [v + 1 for v in sorted(info.s_set)],
        }
        print(json.dumps(doc, indent=2))
    else:
        print("n: %d" % m.n)
        print("components: %d" % m.pattern.component_count)
        print("matching-number: %d" % matching.nu)
        print("null-dimension: %d" % null_dim)
        print("rank: %d" % (2 * matching.nu))
        print("supp: %s" % _format_ids(info.supp))
        print("core: %s" % _format_ids(info.core))
        print("s-set: %s" % _format_ids(info.s_set))
    return 0


def _cmd_null_basis(args) -> int:
    m = matrixio.read_matrix(args.file)
    basis = null_basis(m)
    _emit(matrixio.format_basis(basis, m.n, m.field, args.format), args.out)
    if args.check:
        for vec in basis.vectors:
            if not m.apply(vec).is_zero():
                raise ValidationError("check failed: output vector is not annihilated")
        if m.n <= oracle.oracle_bound():
            if not oracle.same_span(basis, oracle.dense_null_space(m)):
                raise ValidationError("check failed: span differs from the oracle")
            print("check: ok (dimension %d, oracle span verified)" % basis.dimension,
                  file=sys.stderr)
        else:
            print("check: ok (dimension %d, oracle skipped for n > bound)"
                  % basis.dimension, file=sys.stderr)
    return 0


def _cmd_rank_basis(args) -> int:
    m = matrixio.read_matrix(args.file)
    basis = rank_basis(m)
    _emit(matrixio.format_basis(basis, m.n, m.field, args.format), args.out)
    if args.check:
        if m.n <= oracle.oracle_bound():
            reference = oracle.dense_row_space(m)
            if not oracle.same_span(Basis(list(basis.vectors)), reference):
                raise ValidationError("check failed: span differs from the oracle")
            print("check: ok (dimension %d, oracle span verified)" % basis.dimension,
                  file=sys.stderr)
        else:
            print("check: ok (dimension %d, oracle skipped for n > bound)"
                  % basis.dimension, file=sys.stderr)
    return 0


def _cmd_transfer(args) -> int:
    m = matrixio.read_matrix(args.source)
    n_mat = matrixio.read_matrix(args.target)
    x = matrixio.read_vector(args.vector)
    if args.space == "null":
        result = transfer_null(m, n_mat, x)
    else:
        result = transfer_rank(m, n_mat, x)
    _emit(matrixio.format_vector(result), args.out)
    return 0


def _cmd_gen(args) -> int:
    field = parse_field_spec(args.field)
    m = random_matrix(args.n, args.seed, field, args.components)
    _emit(matrixio.format_matrix(m, args.format), args.out)
    return 0


def _cmd_bench(args) -> int:
    sizes = bench_mod.parse_sizes(args.sizes)
    field = parse_field_spec(args.field)
    rows = bench_mod.run_bench(sizes, field, args.repeat, args.seed)
    sys.stdout.write(bench_mod.format_csv(rows))
    return 0


def _cmd_oracle(args) -> int:
    m = matrixio.read_matrix(args.file)
    if args.operation == "null-basis":
        basis = oracle.dense_null_space(m)
        _emit(matrixio.format_basis(basis, m.n, m.field, args.format), args.out)
    elif args.operation == "rank":
        analysis = oracle.dense_analysis(m)
        text = "rank: %d\nnull-dimension: %d\n" % (analysis.rank, m.n - analysis.rank)
        _emit(text, args.out)
    else:
        total = oracle.min_support_total(m)
        _emit("min-support-total: %d\n" % total, args.out)
    return 0


_HANDLERS = {
    "validate": _cmd_validate,
    "support": _cmd_support,
    "null-basis": _cmd_null_basis,
    "rank-basis": _cmd_rank_basis,
    "transfer": _cmd_transfer,
    "gen": _cmd_gen,
    "bench": _cmd_bench,
    "oracle": _cmd_oracle,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except ForestNullError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    except OSError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1


def console_entry():
    raise SystemExit(main())


if __name__ == "__main__":
    raise SystemExit(main())
