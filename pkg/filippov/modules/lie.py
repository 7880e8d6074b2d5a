from typing import Any, ClassVar, Optional, Sequence

from .. import command, module, util
from ..algebra import analysis, contraction, lie, nlie, serial
from ..algebra.errors import (
    IdentityViolated,
    IndexOutOfRange,
    InputError,
    InvalidGrading,
)
from ..algebra.linalg import Subspace

INT_LIST = util.misc.parse_int_list


def verified_lie(doc: Any, basis_map: Optional[str] = None) -> lie.LieAlgebra:
    """Builds a Lie algebra from a document, checks the JI and changes basis."""

    result, report = lie.verify_lie(serial.lie_from_doc(doc))
    if not report.holds:
        raise IdentityViolated("Jacobi identity", report.first)

    if basis_map:
        result = lie.change_basis_lie(result, serial.load_matrix(basis_map))

    return result


def load_verified_lie(path: str, basis_map: Optional[str] = None) -> lie.LieAlgebra:
    return verified_lie(serial.load(path), basis_map)


def load_ideal(
    dim: int, indices: Optional[Sequence[int]], vectors: Optional[str]
) -> Subspace:
    """Returns the subspace given by 1-based basis indices or a file of vectors."""

    if (indices is None) == (vectors is None):
        raise InputError("Give exactly one of --indices and --vectors")

    if vectors is not None:
        return Subspace.span(dim, serial.load_matrix(vectors).to_rows())

    for index in indices or ():
        if not 1 <= index <= dim:
            raise IndexOutOfRange(index, dim)

    return Subspace.coordinate(dim, (i - 1 for i in indices or ()))


class LieModule(module.Module):
    name: ClassVar[str] = "Lie"

    @command.desc("Compute the Lie algebra of inner derivations")
    @command.usage("induce a4.json --out liea4.json")
    @command.argument("path", help="algebra file")
    @command.argument("--out", metavar="PATH", help="output file (default: stdout)")
    def cmd_induce(self, ctx: command.Context) -> None:
        alg = nlie.require_fi(serial.load_algebra(ctx.args.path))
        ctx.write_document(serial.lie_to_doc(lie.induce(alg)))

    @command.desc("Derive the grading of an induced algebra from a splitting")
    @command.usage("grade liea4.json --i0 1,2 --out weights.json")
    @command.argument("path", help="algebra file, or induced algebra with basis words")
    @command.argument(
        "--i0",
        required=True,
        type=INT_LIST,
        metavar="LIST",
        help="1-based indices of the subalgebra part of the source algebra",
    )
    @command.argument("--out", metavar="PATH", help="output file (default: stdout)")
    def cmd_grade(self, ctx: command.Context) -> None:
        doc = serial.load(ctx.args.path)
        source = serial.induced_source_from_doc(doc)

        if source is None:
            # Plain n-Lie algebra: induce it first
            alg = nlie.require_fi(serial.algebra_from_doc(doc))
            il = lie.induce(alg)
            source_dim, words, target = alg.dim, il.basis_words, il.lie
        else:
            source_dim, words = source
            target = verified_lie(doc)

        s = nlie.Splitting(source_dim, ctx.args.i0)
        g = contraction.grading_from_words(words, s)
        check = contraction.check_ww_grading(target, g)
        if not check.valid:
            i, j, k = check.violations[0]
            self.log.warning(
                f"Weights violate the contraction condition at [e{i},e{j}] -> e{k}"
            )

        ctx.write_document(serial.grading_to_doc(g))

    @command.desc("Inönü-Wigner contraction with respect to a coordinate subalgebra")
    @command.usage("iw liea4.json --indices 1,2,4 --out iw.json")
    @command.argument("path", help="Lie algebra file")
    @command.argument(
        "--indices",
        required=True,
        type=INT_LIST,
        metavar="LIST",
        help="1-based indices spanning the subalgebra",
    )
    @command.argument(
        "--basis-map", metavar="PATH", help="basis change applied before contracting"
    )
    @command.argument("--out", metavar="PATH", help="output file (default: stdout)")
    def cmd_iw(self, ctx: command.Context) -> None:
        target = load_verified_lie(ctx.args.path, ctx.args.basis_map)
        result = contraction.iw_contract_lie(target, ctx.args.indices)
        ctx.write_document(serial.lie_to_doc(result))

    @command.desc("Graded (Weimar-Woods) contraction by basis weights")
    @command.usage("ww liea4.json --i0 1,2 --out ww.json")
    @command.argument("path", help="Lie algebra file")
    @command.argument(
        "--weights", type=INT_LIST, metavar="LIST", help="one weight per basis element"
    )
    @command.argument(
        "--i0",
        type=INT_LIST,
        metavar="LIST",
        help="derive the weights from a splitting of the source algebra",
    )
    @command.argument(
        "--basis-map", metavar="PATH", help="basis change applied before contracting"
    )
    @command.argument("--out", metavar="PATH", help="output file (default: stdout)")
    def cmd_ww(self, ctx: command.Context) -> None:
        args = ctx.args
        if (args.weights is None) == (args.i0 is None):
            raise InvalidGrading("Give exactly one of --weights and --i0")
        if args.i0 is not None and args.basis_map:
            raise InvalidGrading("--i0 cannot be combined with --basis-map")

        doc = serial.load(args.path)
        target = verified_lie(doc, args.basis_map)

        if args.weights is not None:
            g = contraction.Grading(args.weights)
        else:
            source = serial.induced_source_from_doc(doc)
            if source is None:
                raise InvalidGrading("--i0 needs an induced algebra with basis words")

            source_dim, words = source
            s = nlie.Splitting(source_dim, args.i0)
            g = contraction.grading_from_words(words, s)

        ctx.write_document(serial.lie_to_doc(contraction.ww_contract_lie(target, g)))

    @command.desc("Quotient of a Lie algebra by an ideal")
    @command.usage("quotient ww.json --indices 6 --out quotient.json")
    @command.argument("path", help="Lie algebra file")
    @command.argument(
        "--indices",
        type=INT_LIST,
        metavar="LIST",
        help="1-based indices spanning the ideal",
    )
    @command.argument(
        "--vectors", metavar="PATH", help="matrix file whose rows span the ideal"
    )
    @command.argument("--out", metavar="PATH", help="output file (default: stdout)")
    def cmd_quotient(self, ctx: command.Context) -> None:
        target = load_verified_lie(ctx.args.path)
        ideal = load_ideal(target.dim, ctx.args.indices, ctx.args.vectors)
        ctx.write_document(serial.lie_to_doc(analysis.quotient_lie(target, ideal)))
