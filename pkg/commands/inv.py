"""
Inv command
Surface invariants, comparisons and the box-principle family
"""
from typing import List

from commands import Command, Result
from schemas.surface import SurfaceInvariants
from services.invariants import (
    BidoubleType,
    InvariantsService,
    OutOfRange,
    abc_invariants,
    bidouble_invariants,
    diffeo_obstruction,
    get_invariants_service,
    hilbert_5canonical,
    homeo_test,
    manetti_invariants,
    nondef_hypotheses,
    plurigenus,
    recover_abc,
    to_csv,
    to_markdown,
)
from utils.logger import setup_logger

logger = setup_logger("commands.inv")

_ARITY = {"bidouble": 4, "abc": 3, "manetti": 3}


def surface_from_text(text: str) -> SurfaceInvariants:
    """"abc 2 3 2" / "bidouble 2 3 2 3" / "manetti 4 5 10" -> invariants"""
    parts = text.split()
    if not parts:
        raise OutOfRange("empty surface description; expected one of bidouble a b c d, abc a b c, manetti a b n")
    kind, *rest = parts
    if kind not in _ARITY or len(rest) != _ARITY[kind]:
        raise OutOfRange(f"cannot read surface {text!r}; expected one of bidouble a b c d, abc a b c, manetti a b n")
    try:
        params = [int(x) for x in rest]
    except ValueError:
        raise OutOfRange(f"non-integer parameter in {text!r}")
    if kind == "bidouble":
        return bidouble_invariants(BidoubleType(*params))
    if kind == "abc":
        return abc_invariants(*params)
    return manetti_invariants(*params)


def _table(rows: List[SurfaceInvariants]) -> Result:
    return Result(rows if len(rows) > 1 else rows[0], text=to_markdown(rows), csv=to_csv(rows))


class InvCommand(Command):
    """inv bidouble | abc | manetti | compare | box | plurigenus | hilbert | nondef | recover"""

    name = "inv"
    help = "invariants of bidouble, (a,b,c) and Manetti surfaces"

    def add_actions(self, actions) -> None:
        p = self.action(actions, "bidouble", self.bidouble, "bidouble cover of type (2a,2b),(2c,2d)")
        for name in ("a", "b", "c", "d"):
            p.add_argument(name, type=int)

        p = self.action(actions, "abc", self.abc, "(a,b,c)-surface with moduli dimension")
        for name in ("a", "b", "c"):
            p.add_argument(name, type=int)

        p = self.action(actions, "manetti", self.manetti, "Manetti surface with n triple points")
        for name in ("a", "b", "n"):
            p.add_argument(name, type=int)

        p = self.action(actions, "compare", self.compare, "homeomorphism test and diffeomorphism obstruction")
        p.add_argument("first", help='e.g. "abc 2 3 3"')
        p.add_argument("second", help='e.g. "abc 3 3 2"')

        p = self.action(actions, "box", self.box, "h homeomorphic, pairwise non-diffeomorphic bidouble covers")
        p.add_argument("--h", dest="family_size", type=int, required=True)
        p.add_argument("--max-exponent", type=int, default=None)
        p.add_argument("--max-scale", type=int, default=None)

        p = self.action(actions, "plurigenus", self.plurigenus, "P_m = χ + m(m-1)/2 K²")
        for name in ("chi", "K2", "m"):
            p.add_argument(name, type=int)

        p = self.action(actions, "hilbert", self.hilbert, "h⁰(5mK)")
        for name in ("chi", "K2", "m"):
            p.add_argument(name, type=int)

        p = self.action(actions, "nondef", self.nondef, "numerical hypotheses of the non-deformation theorem")
        for name in ("a", "b", "c", "k"):
            p.add_argument(name, type=int)

        p = self.action(actions, "recover", self.recover, "(a,b,c) with the given χ, K² and moduli dimension")
        p.add_argument("chi", type=int)
        p.add_argument("K2", type=int)
        p.add_argument("--moduli", type=int, default=None)

    def bidouble(self, args) -> Result:
        return _table([bidouble_invariants(BidoubleType(args.a, args.b, args.c, args.d))])

    def abc(self, args) -> Result:
        return _table([abc_invariants(args.a, args.b, args.c)])

    def manetti(self, args) -> Result:
        return _table([manetti_invariants(args.a, args.b, args.n)])

    def compare(self, args) -> Result:
        s1, s2 = surface_from_text(args.first), surface_from_text(args.second)
        obstruction = diffeo_obstruction(s1, s2)
        data = {"homeomorphic": homeo_test(s1, s2), "diffeo_obstruction": obstruction.value}
        text = ("homeomorphic" if data["homeomorphic"] else "not homeomorphic") + f", {obstruction.value}"
        return Result(data, text=text)

    def box(self, args) -> Result:
        service = get_invariants_service()
        if args.max_exponent is not None or args.max_scale is not None:
            service = InvariantsService(args.max_exponent, args.max_scale)
        report = service.box_family(args.family_size)
        types = " ".join(f"({t.a},{t.b})({t.c},{t.d})" for t in report.types)
        text = f"6^{report.exponent}, scale {report.scale}: {types}\n" + to_markdown(report.invariants)
        return Result(report, text=text, csv=to_csv(report.invariants))

    def plurigenus(self, args) -> Result:
        value = plurigenus(args.chi, args.K2, args.m)
        return Result({"P": value}, text=str(value))

    def hilbert(self, args) -> Result:
        value = hilbert_5canonical(args.chi, args.K2, args.m)
        return Result({"P": value}, text=str(value))

    def nondef(self, args) -> Result:
        report = nondef_hypotheses(args.a, args.b, args.c, args.k)
        text = "hypotheses hold" if report.holds else f"fails: {', '.join(report.failed)}"
        return Result(report, text=text, rows=[{"holds": report.holds, **report.clauses}])

    def recover(self, args) -> Result:
        solutions = recover_abc(args.chi, args.K2, args.moduli)
        rows = [{"a": a, "b": b, "c": c} for a, b, c in solutions]
        text = "\n".join(f"{a} {b} {c}" for a, b, c in solutions) or "no solutions"
        return Result(rows, text=text, rows=rows)


def setup(app):
    app.add_command(InvCommand(app))
    logger.debug("inv command registered")
