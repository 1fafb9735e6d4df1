"""
Beauville command
Certificate checks, the built-in examples and the (Z/n)² search
"""
import re

from commands import Command, Result
from schemas.beauville import BeauvilleFailure
from services.beauville import (
    GeneratingPair,
    fermat_pair,
    get_beauville_service,
    is_beauville,
    linear_image,
    nonconjugate_lemma_pair,
    orders_triple,
    symmetric_group,
    symmetric_group_example,
    witness_report,
)
from services.permgroup import OutOfRange, abelian_regular_group, format_cycles, from_model, parse_cycles
from utils.logger import setup_logger

logger = setup_logger("commands.beauville")

_GROUP_RE = re.compile(r"^s(\d+)$")


def _verdict(result) -> Result:
    if isinstance(result, BeauvilleFailure):
        return Result(result, text=f"not a Beauville structure: {result.reason} ({result.detail})")
    return Result(result, text=(
        f"Beauville structure in a group of order {result.group_order}: "
        f"|Σ1| = {result.sigma1_size}, |Σ2| = {result.sigma2_size}"
    ))


class BeauvilleCommand(Command):
    """beauville check | example | fermat | search | witness"""

    name = "beauville"
    help = "unmixed Beauville structures"

    def add_actions(self, actions) -> None:
        p = self.action(actions, "check", self.check, "verify two generating pairs of S_n")
        p.add_argument("--group", required=True, help="sN, the symmetric group on N points")
        for name in ("a", "c", "a2", "c2"):
            p.add_argument(f"--{name}", required=True)

        p = self.action(actions, "example", self.example, "the S_n structure for n >= 8, n ≡ 2 mod 3")
        p.add_argument("--n", type=int, default=8)

        p = self.action(actions, "fermat", self.fermat, "(e1, e1+e2) against its image under a linear map of (Z/n)²")
        p.add_argument("--n", type=int, default=5)
        p.add_argument("--matrix", type=int, nargs=4, default=[1, 3, 2, 4], metavar=("M11", "M12", "M21", "M22"))

        p = self.action(actions, "search", self.search, "all structures on (Z/n)² up to equivalence")
        p.add_argument("n", type=int)
        p.add_argument("--workers", type=int, default=None)

        p = self.action(actions, "witness", self.witness, "inner automorphism inverting a and c")
        p.add_argument("--degree", type=int, required=True)
        p.add_argument("--a", default=None)
        p.add_argument("--c", default=None)
        p.add_argument("--lemma", action="store_true", help="use the non-conjugacy lemma pair of this degree")

    def check(self, args) -> Result:
        match = _GROUP_RE.match(args.group)
        if not match:
            raise OutOfRange(f"unsupported group {args.group!r}; expected sN")
        n = int(match.group(1))
        pair1 = GeneratingPair(parse_cycles(args.a, n), parse_cycles(args.c, n))
        pair2 = GeneratingPair(parse_cycles(args.a2, n), parse_cycles(args.c2, n))
        return _verdict(is_beauville(pair1, pair2, symmetric_group(n)))

    def example(self, args) -> Result:
        pair1, pair2 = symmetric_group_example(args.n)
        return _verdict(is_beauville(pair1, pair2, symmetric_group(args.n)))

    def fermat(self, args) -> Result:
        m = args.matrix
        pair = fermat_pair(args.n)
        image = linear_image(pair, [m[:2], m[2:]], args.n)
        return _verdict(is_beauville(pair, image, abelian_regular_group(args.n)))

    def search(self, args) -> Result:
        service = get_beauville_service()
        if args.workers:
            service = type(service)(workers=args.workers)
        report = service.search_abelian(args.n)
        rows = [{"n": report.n, "matrix": m} for m in report.second_pair_matrices]
        return Result(report, text=f"(Z/{report.n})^2: {report.count} structures", rows=rows)

    def witness(self, args) -> Result:
        if args.lemma:
            pair = nonconjugate_lemma_pair(args.degree)
        else:
            if args.a is None or args.c is None:
                raise OutOfRange("witness needs --a and --c, or --lemma")
            pair = GeneratingPair(parse_cycles(args.a, args.degree), parse_cycles(args.c, args.degree))
        report = witness_report(pair)
        text = f"orders {orders_triple(pair)}: "
        text += f"witness {format_cycles(from_model(report.witness))}" if report.found else "no inverting conjugator"
        if report.outer_automorphism_caveat:
            text += " (S6 has outer automorphisms)"
        return Result(report, text=text)


def setup(app):
    app.add_command(BeauvilleCommand(app))
    logger.debug("beauville command registered")
