"""Command line interface: checks, presentations, D-maps, dimodules, census."""

import argparse
import os
import sys

import numpy as np

from . import catalog, classify, fileio
from .dimodule import GradedModule, dimodule_from_grading, group_bialgebra, r_from_dimodule
from .dmap import convolution_inverse_of_sigma, sigma_from_r
from .fields import MathError, FunctionField, QQ, UsageError
from .frt import d_bialgebra, relation_strings
from .linalg import matrix_inverse
from .tensor_ops import (check_equivalent_forms, check_hopf, check_pentagon,
                         check_qybe, identity_pair)


def _bool_text(value) -> str:
    return "true" if value else "false"


def _emit(args, lines, kv) -> None:
    text = "\n".join(lines) + "\n"
    if getattr(args, "out", None):
        fileio.write_report(args.out, text, kv)
    else:
        sys.stdout.write(text)


def cmd_check(args) -> int:
    R = fileio.read_matrix(args.matrix)
    forms = check_equivalent_forms(R)
    verdicts = [
        ("d", forms.d),
        ("qybe", check_qybe(R)),
        ("hopf", check_hopf(R)),
        ("pentagon", check_pentagon(R)),
        ("form_t", forms.form_t),
        ("form_u", forms.form_u),
        ("form_w", forms.form_w),
    ]
    lines = ["deq check", "field: %s" % R.field.header(), "n: %d" % R.n]
    kv = [("field", R.field.header()), ("n", str(R.n))]
    for name, value in verdicts:
        lines.append("%s: %s" % (name, _bool_text(value)))
        kv.append((name, _bool_text(value)))
    _emit(args, lines, kv)
    return 0 if forms.d else 1


def cmd_frt(args) -> int:
    R = fileio.read_matrix(args.matrix)
    pres = d_bialgebra(R)
    regen = r_from_dimodule(pres.canonical_dimodule())
    round_trip = regen.matrix() == R.matrix()
    lines = ["deq frt", "field: %s" % R.field.header(), "n: %d" % R.n,
             "ideal dimension: %d" % pres.ideal.dim,
             "quotient dimension: %d" % pres.quotient.dim]
    for rel in pres.relations:
        lines.append("relation: %s" % rel)
    lines.append("generators: %s" % " ".join(pres.generators))
    lines.extend(pres.generator_lines())
    lines.append("round trip: %s" % _bool_text(round_trip))
    kv = [("field", R.field.header()), ("n", str(R.n)),
          ("ideal_dim", str(pres.ideal.dim)),
          ("quotient_dim", str(pres.quotient.dim)),
          ("relations", str(len(pres.relations))),
          ("round_trip", _bool_text(round_trip))]
    _emit(args, lines, kv)
    return 0 if round_trip else 1


def cmd_dmap(args) -> int:
    R = fileio.read_matrix(args.matrix)
    dm = sigma_from_r(R)
    k = R.field
    C, Q = dm.coalgebra, dm.sigma.right
    lines = ["deq dmap", "field: %s" % k.header(), "n: %d" % R.n,
             "quotient dimension: %d" % Q.dim,
             "strong: %s" % _bool_text(dm.is_strong)]
    for rel in relation_strings(dm.ideal):
        lines.append("relation: %s" % rel)
    entries = 0
    for a in range(C.dim):
        for b in range(Q.dim):
            v = dm.sigma.table[a][b]
            if not k.is_zero(v):
                lines.append("sigma(%s, %s) = %s" % (C.labels[a], Q.labels[b], k.show(v)))
                entries += 1
    try:
        convolution_inverse_of_sigma(R)
        inverse_status = "found"
    except MathError:
        inverse_status = "not bijective"
    lines.append("convolution inverse: %s" % inverse_status)
    kv = [("field", k.header()), ("n", str(R.n)),
          ("quotient_dim", str(Q.dim)),
          ("strong", _bool_text(dm.is_strong)),
          ("sigma_entries", str(entries)),
          ("convolution_inverse", inverse_status)]
    _emit(args, lines, kv)
    return 0


def cmd_dimodule(args) -> int:
    labels, table = fileio.read_cayley(args.group)
    field, action, projectors = fileio.read_graded_module(args.module, labels)
    H = group_bialgebra(field, labels, table)
    graded = GradedModule(H, [action[l] for l in labels],
                          [projectors[l] for l in labels])
    dim = dimodule_from_grading(graded)
    lines = ["deq dimodule", "field: %s" % field.header(),
             "group order: %d" % len(labels),
             "module dimension: %d" % graded.dim]
    for i, label in enumerate(labels):
        lines.append("action %s:" % label)
        for row in graded.act[i].rows:
            lines.append("  " + " ".join(field.show(v) for v in row))
    for l in range(dim.dim):
        terms = []
        for w in range(dim.dim):
            for a in range(len(labels)):
                v = dim.rho[l][w][a]
                if not field.is_zero(v):
                    coeff = "" if v == field.one else field.show(v) + "*"
                    terms.append("%sm%d (x) %s" % (coeff, w + 1, labels[a]))
        lines.append("rho(m%d) = %s" % (l + 1, " + ".join(terms) if terms else "0"))
    compatible = True
    for a in range(len(labels)):
        for l in range(dim.dim):
            ok = dim.pair_compatible(a, l)
            compatible = compatible and ok
            lines.append("compat %s m%d: %s" % (labels[a], l + 1, _bool_text(ok)))
    regen = r_from_dimodule(dim)
    forms = check_equivalent_forms(regen)
    lines.append("compatible: %s" % _bool_text(compatible))
    lines.append("regenerated operator n: %d" % regen.n)
    lines.append("regenerated d: %s" % _bool_text(forms.d))
    kv = [("field", field.header()), ("group_order", str(len(labels))),
          ("module_dim", str(graded.dim)),
          ("compatible", _bool_text(compatible)),
          ("regenerated_n", str(regen.n)),
          ("regenerated_d", _bool_text(forms.d))]
    _emit(args, lines, kv)
    return 0 if compatible else 1


def cmd_classify(args) -> int:
    report = classify.enumerate_solutions(args.n, args.p, limit=args.budget,
                                          seed=args.seed, workers=args.workers)
    if args.orbits:
        report.orbits = classify.orbit_reduce(report.solutions, args.n, args.p)
    listed = report.solutions
    if args.filter != "all" and report.solutions:
        if args.filter == "bijective":
            keep = [matrix_inverse(
                        classify.endo_from_digits(args.n, args.p, sol).matrix())
                    is not None for sol in report.solutions]
        else:
            xs = np.array([list(sol) for sol in report.solutions], dtype=np.int64)
            xs = xs.reshape(len(report.solutions), args.n, args.n, args.n,
                            args.n).transpose(0, 4, 3, 2, 1)
            if args.filter == "symmetric":
                keep = classify.symmetric_mask(xs).tolist()
            else:
                keep = classify.qybe_mask(xs, args.p).tolist()
        listed = [sol for sol, flag in zip(report.solutions, keep) if flag]
    text = report.to_text(listed=listed, filter_name=args.filter)
    if args.out:
        fileio.write_report(args.out, text, report.to_kv())
    else:
        sys.stdout.write(text)
    return 0


def cmd_examples(args) -> int:
    os.makedirs(args.dir, exist_ok=True)
    fabc = FunctionField(["a", "b", "c"])
    a, b, c = fabc.gens
    fq = FunctionField(["q"])
    (q,) = fq.gens
    operators = [
        ("triangular-symbolic.txt", catalog.triangular_solution(fabc, a, b, c)),
        ("triangular-111.txt", catalog.triangular_solution(QQ, 1, 1, 1)),
        ("rq-symbolic.txt", catalog.rq(fq, q)),
        ("rq-q3.txt", catalog.rq(QQ, 3)),
        ("rq-q2.txt", catalog.rq(QQ, 2)),
        ("projection.txt", catalog.projection_solution(QQ)),
        ("yb-operator-symbolic.txt", catalog.yang_baxter_operator(fq, q)),
        ("yb-operator-q2.txt", catalog.yang_baxter_operator(QQ, 2)),
        ("s3-graded.txt", catalog.s3_graded_solution(QQ)),
        ("identity-n2.txt", identity_pair(QQ, 2)),
    ]
    written = []
    for name, R in operators:
        path = os.path.join(args.dir, name)
        fileio.write_matrix(path, R)
        written.append(path)
    labels, table = catalog.s3_cayley()
    path = os.path.join(args.dir, "s3-cayley.txt")
    fileio.write_cayley(path, labels, table)
    written.append(path)
    graded = catalog.s3_graded_module(QQ)
    path = os.path.join(args.dir, "s3-graded-module.txt")
    fileio.write_graded_module(
        path, labels, QQ,
        {label: graded.act[i] for i, label in enumerate(labels)},
        {label: graded.projectors[i] for i, label in enumerate(labels)})
    written.append(path)
    for path in written:
        print("wrote %s" % path)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="deq",
        description="Exact checks and constructions for operators R with "
                    "R12 R23 = R23 R12.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="equation verdicts for an operator file")
    p.add_argument("matrix", help="operator file")
    p.add_argument("--out", help="write the report here plus a .kv sidecar")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("frt", help="universal bialgebra presentation")
    p.add_argument("matrix", help="operator file (must satisfy the equation)")
    p.add_argument("--out", help="write the report here plus a .kv sidecar")
    p.set_defaults(func=cmd_frt)

    p = sub.add_parser("dmap", help="the D-map induced by a solution")
    p.add_argument("matrix", help="operator file (must satisfy the equation)")
    p.add_argument("--out", help="write the report here plus a .kv sidecar")
    p.set_defaults(func=cmd_dmap)

    p = sub.add_parser("dimodule", help="compatibility report for a graded module")
    p.add_argument("group", help="Cayley table file")
    p.add_argument("module", help="graded module file")
    p.add_argument("--out", help="write the report here plus a .kv sidecar")
    p.set_defaults(func=cmd_dimodule)

    p = sub.add_parser("classify", help="census of solutions over a prime field")
    p.add_argument("--n", type=int, default=2, help="matrix size (default 2)")
    p.add_argument("--p", type=int, default=2, help="field prime (default 2)")
    p.add_argument("--filter", choices=["all", "bijective", "symmetric", "qybe"],
                   default="all", help="which solutions to list")
    p.add_argument("--orbits", action="store_true",
                   help="also list conjugation orbit representatives")
    p.add_argument("--budget", type=int, default=None,
                   help="candidate budget override (default %d or DEQ_BUDGET)"
                        % classify.DEFAULT_BUDGET)
    p.add_argument("--seed", type=int, default=0,
                   help="seed for the sample re-verification")
    p.add_argument("--workers", type=int, default=1,
                   help="number of scan ranges (result is independent of it)")
    p.add_argument("--out", help="write the report here plus a .kv sidecar")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("examples", help="write the bundled example files")
    p.add_argument("--dir", default="deq-examples", help="target directory")
    p.set_defaults(func=cmd_examples)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except MathError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    except UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except OSError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
