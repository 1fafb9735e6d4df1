"""
Braid command
Word problem, Artin action, full twists and chain elements
"""
from commands import Command, Result
from services.braid import (
    artin_apply,
    braid_equal,
    braid_to_perm,
    coxeter_chain,
    format_word,
    full_twist,
    parse_braid,
    parse_free_word,
)
from services.permgroup import format_cycles, to_model
from utils.logger import setup_logger

logger = setup_logger("commands.braid")


def _word_data(b) -> dict:
    return {"strands": b.strands, "word": format_word(b.letters, "s"), "letters": list(b.letters)}


class BraidCommand(Command):
    """braid equal | apply | twist | chain | perm"""

    name = "braid"
    help = "braid words acting on a geometric basis"

    def add_actions(self, actions) -> None:
        p = self.action(actions, "equal", self.equal, "decide b1 = b2 in B_n")
        p.add_argument("b1")
        p.add_argument("b2")
        p.add_argument("--strands", type=int, required=True)

        p = self.action(actions, "apply", self.apply, "image of a free word under a braid")
        p.add_argument("braid")
        p.add_argument("word")
        p.add_argument("--strands", type=int, required=True)

        p = self.action(actions, "twist", self.twist, "full twist on d strands")
        p.add_argument("d", type=int)

        p = self.action(actions, "chain", self.chain, "Coxeter chain word of length n")
        p.add_argument("n", type=int)

        p = self.action(actions, "perm", self.perm, "image in the symmetric group")
        p.add_argument("braid")
        p.add_argument("--strands", type=int, required=True)

    def equal(self, args) -> Result:
        same = braid_equal(parse_braid(args.b1, args.strands), parse_braid(args.b2, args.strands))
        return Result({"equal": same}, text="equal" if same else "different")

    def apply(self, args) -> Result:
        image = artin_apply(parse_braid(args.braid, args.strands), parse_free_word(args.word, args.strands))
        return Result({"rank": image.rank, "word": str(image), "letters": list(image.letters)}, text=str(image))

    def twist(self, args) -> Result:
        b = full_twist(args.d)
        return Result(_word_data(b), text=str(b))

    def chain(self, args) -> Result:
        b = coxeter_chain(args.n)
        return Result(_word_data(b), text=str(b))

    def perm(self, args) -> Result:
        p = braid_to_perm(parse_braid(args.braid, args.strands))
        return Result(to_model(p), text=format_cycles(p))


def setup(app):
    app.add_command(BraidCommand(app))
    logger.debug("braid command registered")
