"""
Commands Package
每個子指令一個模組，模組需提供 setup(app)
"""
import argparse
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional


@dataclass
class Result:
    """
    Command output

    data is what --format json prints; text and rows override the generic
    text and CSV renderings when set.
    """
    data: Any
    text: Optional[str] = None
    rows: Optional[List[Dict[str, Any]]] = field(default=None)
    csv: Optional[str] = None


class Command:
    """子指令基底類別，各自註冊自己的 actions"""

    name = ""
    help = ""

    def __init__(self, app):
        self.app = app

    def register(self, subparsers) -> None:
        parser = subparsers.add_parser(self.name, help=self.help, description=self.help)
        actions = parser.add_subparsers(dest="action", required=True, metavar="action")
        self.add_actions(actions)

    def add_actions(self, actions) -> None:
        raise NotImplementedError

    def action(self, actions, name: str, handler: Callable[[argparse.Namespace], Result], help: str):
        parser = actions.add_parser(name, help=help, description=help, parents=[self.app.common])
        parser.set_defaults(handler=handler)
        return parser
