"""
Hurwitz command
Orbits, equivalence, Auroux paths and path replay for factorizations read as JSON
"""
from commands import Command, Result
from schemas.hurwitz import FactorizationModel, ReplayRequest
from services.braid import parse_braid
from services.hurwitz import (
    ReplayFailed,
    apply_braid,
    auroux_path,
    corollary_path,
    from_model,
    get_hurwitz_service,
    path_from_models,
    path_to_models,
    replay,
    to_model,
)
from services.permgroup import format_cycles
from utils.logger import setup_logger

logger = setup_logger("commands.hurwitz")


def _factors_text(F) -> str:
    return " ".join(format_cycles(t) for t in F.factors)


def _path_text(path) -> str:
    return " ".join(f"{m.i}{m.direction.value}" for m in path) or "(empty path)"


class HurwitzCommand(Command):
    """hurwitz orbit | equivalent | auroux | replay | braid"""

    name = "hurwitz"
    help = "Hurwitz moves on factorizations"

    def add_actions(self, actions) -> None:
        p = self.action(actions, "orbit", self.orbit, "enumerate the Hurwitz orbit")
        p.add_argument("--file", default=None, help="factorization JSON (default: stdin)")
        p.add_argument("--cap", type=int, default=None)
        p.add_argument("--mod-conjugation", action="store_true")

        p = self.action(actions, "equivalent", self.equivalent, "search a move path between two factorizations")
        p.add_argument("--first", required=True, help="factorization JSON file ('-' for stdin)")
        p.add_argument("--second", required=True, help="factorization JSON file")
        p.add_argument("--cap", type=int, default=None)

        p = self.action(actions, "auroux", self.auroux, "path from the conjugate by t_h (or by a product of factors) back to F")
        p.add_argument("--file", default=None)
        p.add_argument("--index", type=int, action="append", required=True, dest="indices",
                       help="factor index; repeat for a product of factors")

        p = self.action(actions, "replay", self.replay, "re-execute a stored path and check its endpoint")
        p.add_argument("--file", default=None, help="JSON with start, path and optional end")

        p = self.action(actions, "braid", self.braid, "act on a factorization by a braid word")
        p.add_argument("word")
        p.add_argument("--file", default=None)

    def _load(self, path):
        return from_model(FactorizationModel.model_validate(self.app.read_input(path)))

    def orbit(self, args) -> Result:
        F = self._load(args.file)
        report = get_hurwitz_service().orbit(F, cap=args.cap, mod_conjugation=args.mod_conjugation)
        status = "exhausted" if report.exhausted else "cap reached"
        return Result(report, text=f"orbit size {report.size} ({status})", rows=[
            {"size": report.size, "exhausted": report.exhausted, "mod_conjugation": report.mod_conjugation}
        ])

    def equivalent(self, args) -> Result:
        report = get_hurwitz_service().equivalent(self._load(args.first), self._load(args.second), cap=args.cap)
        text = report.verdict.value
        if report.path is not None:
            text += ": " + (" ".join(f"{m.i}{m.dir.value}" for m in report.path) or "(empty path)")
        elif report.reason:
            text += f" ({report.reason})"
        return Result(report, text=text)

    def auroux(self, args) -> Result:
        F = self._load(args.file)
        if len(args.indices) == 1:
            path = auroux_path(F, args.indices[0])
        else:
            path = corollary_path(F, args.indices)
        return Result([m.model_dump(mode="json") for m in path_to_models(path)], text=_path_text(path))

    def replay(self, args) -> Result:
        request = ReplayRequest.model_validate(self.app.read_input(args.file))
        end = replay(from_model(request.start), path_from_models(request.path))
        if request.end is not None and from_model(request.end) != end:
            raise ReplayFailed(f"path ends at {_factors_text(end)}")
        return Result(to_model(end), text=_factors_text(end))

    def braid(self, args) -> Result:
        F = self._load(args.file)
        end = apply_braid(F, parse_braid(args.word, len(F)))
        return Result(to_model(end), text=_factors_text(end))


def setup(app):
    app.add_command(HurwitzCommand(app))
    logger.debug("hurwitz command registered")
