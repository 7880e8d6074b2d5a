from typing import ClassVar, Optional

from .. import command, module, util
from ..algebra import analysis, contraction, nlie, serial


class FilippovModule(module.Module):
    name: ClassVar[str] = "Filippov"

    def load_verified(
        self, path: str, basis_map: Optional[str] = None
    ) -> nlie.NLieAlgebra:
        """Loads an algebra file, checks the FI and applies an optional basis map."""

        alg = nlie.require_fi(serial.load_algebra(path))
        if basis_map:
            alg = nlie.change_basis_fa(alg, serial.load_matrix(basis_map))
            self.log.debug(f"Changed basis of '{path}' with '{basis_map}'")

        return alg

    @command.desc("Check the Filippov identity on every basis tuple")
    @command.usage("verify-fi a4.json")
    @command.alias("fi")
    @command.argument("path", help="algebra file")
    @command.argument(
        "--antisymmetrized",
        action="store_true",
        help="check the antisymmetrized form of the identity",
    )
    @command.argument("--json", action="store_true", help="print the result as JSON")
    def cmd_verify_fi(self, ctx: command.Context) -> str:
        alg = serial.load_algebra(ctx.args.path)
        if ctx.args.antisymmetrized:
            report = nlie.verify_fi_antisymmetrized(alg)
        else:
            report = nlie.verify_fi(alg)

        if not report.holds:
            ctx.fail()

        if ctx.wants_json:
            return serial.dumps(serial.fi_report_to_doc(report), ctx.json_indent)

        subject = f"{alg.arity}-Lie algebra of dimension {alg.dim}"
        if report.holds:
            return f"FI holds for the {subject} ({report.equations} equations)"

        return util.text.join_list(
            (
                f"FI fails for the {subject} in {len(report.violations)} of "
                f"{report.equations} equations:",
                *map(str, report.violations),
            )
        )

    @command.desc("Write the simple Euclidean n-Lie algebra A_{n+1}")
    @command.usage("simple 3 --out a4.json")
    @command.argument("n", type=util.misc.parse_positive_int, help="arity, at least 2")
    @command.argument("--out", metavar="PATH", help="output file (default: stdout)")
    def cmd_simple(self, ctx: command.Context) -> None:
        ctx.write_document(serial.algebra_to_doc(nlie.simple_a(ctx.args.n)))

    @command.desc("Contract an algebra with respect to the subalgebra on i0")
    @command.usage("contract a4.json --i0 1,2 --out a4c.json")
    @command.argument("path", help="algebra file")
    @command.argument(
        "--i0",
        required=True,
        type=util.misc.parse_int_list,
        metavar="LIST",
        help="1-based indices kept uncontracted, e.g. 1,2",
    )
    @command.argument(
        "--basis-map", metavar="PATH", help="basis change applied before contracting"
    )
    @command.argument("--out", metavar="PATH", help="output file (default: stdout)")
    def cmd_contract(self, ctx: command.Context) -> None:
        alg = self.load_verified(ctx.args.path, ctx.args.basis_map)
        s = nlie.Splitting(alg.dim, ctx.args.i0)
        ctx.write_document(serial.algebra_to_doc(contraction.contract_fa(alg, s)))

    @command.desc("Report the semidirect structure of an algebra split at i0")
    @command.usage("report a4c.json --i0 1,2 --graded")
    @command.argument("path", help="algebra file")
    @command.argument(
        "--i0",
        required=True,
        type=util.misc.parse_int_list,
        metavar="LIST",
        help="1-based indices of the subalgebra part",
    )
    @command.argument(
        "--graded", action="store_true", help="also check the graded induced algebra"
    )
    @command.argument("--json", action="store_true", help="print the report as JSON")
    def cmd_report(self, ctx: command.Context) -> None:
        alg = self.load_verified(ctx.args.path)
        s = nlie.Splitting(alg.dim, ctx.args.i0)

        reports = [analysis.semidirect_report_fa(alg, s)]
        if ctx.args.graded:
            reports.append(analysis.graded_structure_report(alg, s))

        ctx.report(*reports)
