"""
Perm command
Permutation arithmetic, closures and conjugator scans
"""
from commands import Command, Result
from services.permgroup import (
    closure,
    compose,
    cycle_type,
    format_cycles,
    order,
    pair_conjugator,
    parse_cycles,
    set_to_model,
    to_model,
)
from utils.logger import setup_logger

logger = setup_logger("commands.perm")


class PermCommand(Command):
    """perm compose | order | closure | conjugator"""

    name = "perm"
    help = "permutation arithmetic in cycle notation"

    def add_actions(self, actions) -> None:
        p = self.action(actions, "compose", self.compose, "p∘q (q applied first)")
        p.add_argument("p")
        p.add_argument("q")
        p.add_argument("--degree", type=int, required=True)

        p = self.action(actions, "order", self.order, "order and cycle type")
        p.add_argument("p")
        p.add_argument("--degree", type=int, required=True)

        p = self.action(actions, "closure", self.closure, "generated subgroup")
        p.add_argument("generators", nargs="+")
        p.add_argument("--degree", type=int, required=True)
        p.add_argument("--cap", type=int, default=None)
        p.add_argument("--members", action="store_true", help="list every member")

        p = self.action(actions, "conjugator", self.conjugator, "g with g a g⁻¹ = a2 and g c g⁻¹ = c2")
        for name in ("a", "c", "a2", "c2"):
            p.add_argument(name)
        p.add_argument("--degree", type=int, required=True)

    def compose(self, args) -> Result:
        result = compose(parse_cycles(args.p, args.degree), parse_cycles(args.q, args.degree))
        return Result(to_model(result), text=format_cycles(result))

    def order(self, args) -> Result:
        p = parse_cycles(args.p, args.degree)
        data = {"perm": to_model(p), "order": order(p), "cycle_type": list(cycle_type(p))}
        return Result(data, text=f"{format_cycles(p)}: order {order(p)}, cycle type {list(cycle_type(p))}")

    def closure(self, args) -> Result:
        group = closure([parse_cycles(g, args.degree) for g in args.generators], cap=args.cap)
        if args.members:
            model = set_to_model(group)
            return Result(model, text="\n".join(format_cycles(p) for p in group), rows=[
                {"member": format_cycles(p)} for p in group
            ])
        return Result({"degree": group.degree, "size": len(group)}, text=f"order {len(group)}")

    def conjugator(self, args) -> Result:
        a, c, a2, c2 = (parse_cycles(x, args.degree) for x in (args.a, args.c, args.a2, args.c2))
        witness = pair_conjugator(a, c, a2, c2)
        data = {"found": witness is not None, "witness": to_model(witness) if witness else None}
        return Result(data, text=format_cycles(witness) if witness else "not found")


def setup(app):
    app.add_command(PermCommand(app))
    logger.debug("perm command registered")
