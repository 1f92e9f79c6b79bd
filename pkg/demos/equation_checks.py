"""Verdict tour: one operator per family, all four equations plus the three
transformed forms, in exact arithmetic."""

from deq import catalog
from deq.fields import FunctionField, QQ
from deq.tensor_ops import (check_d, check_equivalent_forms, check_hopf,
                            check_pentagon, check_qybe, identity_pair)


def verdict_row(name, R):
    forms = check_equivalent_forms(R)
    cols = [check_d(R), check_qybe(R), check_hopf(R), check_pentagon(R),
            forms.form_t, forms.form_u, forms.form_w]
    flags = " ".join("%-5s" % ("true" if v else "false") for v in cols)
    print("%-22s %s" % (name, flags))


def main():
    fabc = FunctionField(["a", "b", "c"])
    a, b, c = fabc.gens
    fq = FunctionField(["q"])
    (q,) = fq.gens

    print("operator               d     qybe  hopf  pent  formT formU formW")
    verdict_row("identity", identity_pair(QQ, 2))
    verdict_row("triangular(a,b,c)", catalog.triangular_solution(fabc, a, b, c))
    verdict_row("rank-one R_q", catalog.rq(fq, q))
    verdict_row("projection (x) diag", catalog.projection_solution(QQ))
    verdict_row("yang-baxter(q)", catalog.yang_baxter_operator(fq, q))
    verdict_row("block(c=d=0)", catalog.block_family(QQ, 1, 1, 0, 0, 1, 1))
    verdict_row("block(c=1)", catalog.block_family(QQ, 1, 1, 1, 0, 1, 1))
    verdict_row("s3 graded", catalog.s3_graded_solution(QQ))

    print()
    print("the three transformed forms agree with the original equation on")
    print("every operator; hopf and pentagon single out different families.")


if __name__ == "__main__":
    main()
