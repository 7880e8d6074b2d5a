from typing import ClassVar

from .. import command, module, util
from ..algebra import analysis, serial
from ..algebra.linalg import Matrix
from .lie import load_ideal, load_verified_lie


class AnalysisModule(module.Module):
    name: ClassVar[str] = "Analysis"

    @command.desc("Compare the invariant fingerprints of two Lie algebras")
    @command.usage("compare iw.json e3.json")
    @command.argument("left", metavar="PATH", help="first Lie algebra file")
    @command.argument("right", metavar="PATH", help="second Lie algebra file")
    @command.argument("--json", action="store_true", help="print the report as JSON")
    def cmd_compare(self, ctx: command.Context) -> None:
        left = load_verified_lie(ctx.args.left)
        right = load_verified_lie(ctx.args.right)
        ctx.report(analysis.compare_report(left, right))

    @command.desc("Certify a Lie algebra as a central extension of another")
    @command.usage("certify-extension ww.json liea4c.json --indices 6")
    @command.alias("certify")
    @command.argument("big", metavar="PATH", help="extended Lie algebra file")
    @command.argument("target", metavar="PATH", help="quotient Lie algebra file")
    @command.argument(
        "--indices",
        type=util.misc.parse_int_list,
        metavar="LIST",
        help="1-based indices spanning the central ideal",
    )
    @command.argument(
        "--vectors", metavar="PATH", help="matrix file whose rows span the ideal"
    )
    @command.argument(
        "--basis-map",
        metavar="PATH",
        help="map from the quotient basis to the target basis (default: identity)",
    )
    @command.argument("--json", action="store_true", help="print the report as JSON")
    def cmd_certify_extension(self, ctx: command.Context) -> None:
        big = load_verified_lie(ctx.args.big)
        target = load_verified_lie(ctx.args.target)
        ideal = load_ideal(big.dim, ctx.args.indices, ctx.args.vectors)

        if ctx.args.basis_map:
            basis_map = serial.load_matrix(ctx.args.basis_map)
        else:
            basis_map = Matrix.identity(target.dim)

        ctx.report(analysis.certify_central_extension(big, ideal, target, basis_map))
