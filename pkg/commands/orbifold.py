"""
Orbifold command
Triangle-group trichotomy and Riemann-Hurwitz numerics
"""
from commands import Command, Result
from services.orbifold import (
    GroupType,
    OrbifoldSignature,
    classify_signature,
    classify_triangle,
    cover_genus,
    elliptic_order,
    format_signature,
    isogenous_invariants,
    orbifold_euler,
    parse_signature,
    triangle_quotient_group,
)
from utils.logger import setup_logger

logger = setup_logger("commands.orbifold")


class OrbifoldCommand(Command):
    """orbifold classify | euler | genus | isogenous"""

    name = "orbifold"
    help = "orbifold signatures and triangle groups"

    def add_actions(self, actions) -> None:
        p = self.action(actions, "classify", self.classify, "type of the triangle group (m1, m2, m3)")
        p.add_argument("orders", type=int, nargs=3)

        p = self.action(actions, "euler", self.euler, "orbifold Euler number of (b; m1,...)")
        p.add_argument("signature")

        p = self.action(actions, "genus", self.genus, "genus of a Galois cover with the given group order")
        p.add_argument("signature")
        p.add_argument("--order", type=int, required=True)

        p = self.action(actions, "isogenous", self.isogenous, "e, χ, K² of (C1 × C2)/G")
        p.add_argument("g1", type=int)
        p.add_argument("g2", type=int)
        p.add_argument("order", type=int)

    def classify(self, args) -> Result:
        kind = classify_triangle(*args.orders)
        data = {"orders": list(args.orders), "type": kind.value}
        text = kind.value.capitalize()
        if kind == GroupType.ELLIPTIC:
            data["order"] = elliptic_order(*args.orders)
            data["group"] = triangle_quotient_group(*args.orders)
            text += f", order {data['order']}"
        return Result(data, text=text)

    def euler(self, args) -> Result:
        sig: OrbifoldSignature = parse_signature(args.signature)
        value = orbifold_euler(sig)
        kind = classify_signature(sig)
        data = {"signature": format_signature(sig), "euler": str(value), "type": kind.value}
        return Result(data, text=f"{format_signature(sig)}: euler {value}, {kind.value}")

    def genus(self, args) -> Result:
        sig = parse_signature(args.signature)
        g = cover_genus(sig, args.order)
        return Result({"signature": format_signature(sig), "order": args.order, "genus": g}, text=f"genus {g}")

    def isogenous(self, args) -> Result:
        e, chi, K2 = isogenous_invariants(args.g1, args.g2, args.order)
        return Result({"e": e, "chi": chi, "K2": K2}, text=f"e={e} chi={chi} K2={K2}")


def setup(app):
    app.add_command(OrbifoldCommand(app))
    logger.debug("orbifold command registered")
