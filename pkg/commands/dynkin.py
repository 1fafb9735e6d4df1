"""
Dynkin command
Classify curve configurations and look up rational double points
"""
from commands import Command, Result
from schemas.dynkin import CurveConfigModel
from services.dynkin import ade_config, analyze, extended_config, from_model, rdp_data, to_model
from utils.logger import setup_logger

logger = setup_logger("commands.dynkin")


class DynkinCommand(Command):
    """dynkin classify | shape | rdp"""

    name = "dynkin"
    help = "(-2)-curve configurations and rational double points"

    def add_actions(self, actions) -> None:
        p = self.action(actions, "classify", self.classify, "ADE / extended ADE type with its cycle")
        p.add_argument("--file", default=None, help='config JSON {"count": k, "edges": [[i, j, mult], ...]} (default: stdin)')

        p = self.action(actions, "shape", self.shape, "reference configuration for a label such as D5 or ~E8")
        p.add_argument("label")

        p = self.action(actions, "rdp", self.rdp, "Klein equation, Milnor number and automorphisms")
        p.add_argument("label")

    def classify(self, args) -> Result:
        cfg = from_model(CurveConfigModel.model_validate(self.app.read_input(args.file)))
        report = analyze(cfg)
        if report.label:
            text = f"{report.label}, fundamental cycle {report.fundamental_cycle}"
        elif report.extended_label:
            text = f"{report.extended_label}, elliptic divisor {report.elliptic_divisor}"
        else:
            text = f"not ADE: {report.reason}"
        return Result(report, text=text)

    def shape(self, args) -> Result:
        label = args.label.strip()
        cfg = extended_config(label) if label.startswith("~") else ade_config(label)
        model = to_model(cfg)
        return Result(model, text=model.model_dump_json())

    def rdp(self, args) -> Result:
        entry = rdp_data(args.label)
        text = (
            f"{entry.label}: {entry.equation}, mu = {entry.milnor_number}, Aut = {entry.aut_group}, "
            f"G = {entry.binary_group} of order {entry.binary_group_order}"
        )
        return Result(entry, text=text)


def setup(app):
    app.add_command(DynkinCommand(app))
    logger.debug("dynkin command registered")
