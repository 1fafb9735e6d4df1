"""
SurfaceAtlas application
命令列前端：載入所有指令模組，並將執行結果對應到結束碼
"""
import argparse
import csv
import importlib
import io
import json
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, TextIO

from pydantic import BaseModel, ValidationError

from commands import Result
from config import AUTO_LOAD_COMMANDS, COMMANDS_DIR, DEFAULT_FORMAT
from services import ServiceError
from utils.logger import setup_logger

logger = setup_logger("app")

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2

FORMATS = ("json", "csv", "text")


class UsageError(Exception):
    """Command line could not be parsed"""


class AtlasParser(argparse.ArgumentParser):
    """ArgumentParser that raises instead of exiting on bad usage"""

    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


def _plain(value: Any) -> Any:
    if isinstance(value, BaseModel):
        return value.model_dump(mode="json")
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if hasattr(value, "value") and not isinstance(value, (int, str)):
        return value.value
    return value


class SurfaceAtlas:
    """主程式類別，持有 parser、已載入的指令與錯誤處理"""

    def __init__(
        self,
        stdin: Optional[TextIO] = None,
        stdout: Optional[TextIO] = None,
        stderr: Optional[TextIO] = None,
        auto_load: bool = AUTO_LOAD_COMMANDS,
    ):
        self.stdin = stdin or sys.stdin
        self.stdout = stdout or sys.stdout
        self.stderr = stderr or sys.stderr

        self.common = AtlasParser(add_help=False)
        self.common.add_argument("--format", choices=FORMATS, default=DEFAULT_FORMAT, help="output format")

        self.parser = AtlasParser(
            prog="surface-atlas",
            description="Braids, Hurwitz moves, Beauville structures, Dynkin configurations and surface invariants",
        )
        self.subparsers = self.parser.add_subparsers(dest="command", required=True, metavar="command")
        self.commands: Dict[str, Any] = {}

        if auto_load:
            self.load_commands()

    def load_commands(self) -> None:
        """自動載入 commands 資料夾中的所有指令模組並呼叫 setup()"""
        commands_path = Path(__file__).parent / COMMANDS_DIR
        if not commands_path.exists():
            logger.warning(f"Commands directory {COMMANDS_DIR} not found")
            return

        for file in sorted(commands_path.glob("*.py")):
            if file.name == "__init__.py":
                continue
            module_name = f"{COMMANDS_DIR}.{file.stem}"
            module = importlib.import_module(module_name)
            module.setup(self)
            logger.debug(f"Loaded command module: {module_name}")

    def add_command(self, command) -> None:
        command.register(self.subparsers)
        self.commands[command.name] = command

    def read_input(self, path: Optional[str]) -> Any:
        """從檔案讀取 JSON；路徑為 None 或 "-" 時改讀標準輸入"""
        if path in (None, "-"):
            return json.loads(self.stdin.read())
        with open(path, "r", encoding="utf-8") as f:
            return json.load(f)

    def run(self, argv: Optional[Sequence[str]] = None) -> int:
        """
        解析並執行一次指令呼叫

        Returns:
            成功為 0，用法錯誤為 1，領域錯誤為 2
        """
        try:
            args = self.parser.parse_args(argv)
        except UsageError as e:
            self.stderr.write(f"usage error: {e}\n")
            return EXIT_USAGE
        except SystemExit as e:
            # --help 會觸發 SystemExit
            return e.code if isinstance(e.code, int) else EXIT_OK

        try:
            result = args.handler(args)
        except ServiceError as e:
            logger.error(f"{args.command} {args.action}: {e.name}: {e.message}")
            self.stderr.write(f"error: {e.name}: {e.message}\n")
            return EXIT_DOMAIN
        except (ValidationError, json.JSONDecodeError) as e:
            self.stderr.write(f"error: {type(e).__name__}: {e}\n")
            return EXIT_DOMAIN
        except OSError as e:
            self.stderr.write(f"usage error: {e}\n")
            return EXIT_USAGE

        self.stdout.write(self.render(result, args.format))
        return EXIT_OK

    def render(self, result: Result, fmt: str) -> str:
        if fmt == "json":
            return json.dumps(_plain(result.data), sort_keys=True, indent=2, ensure_ascii=False) + "\n"
        if fmt == "csv":
            if result.csv is not None:
                return result.csv
            return self._csv(result.rows if result.rows is not None else _plain(result.data))
        if result.text is not None:
            return result.text if result.text.endswith("\n") else result.text + "\n"
        return json.dumps(_plain(result.data), sort_keys=True, indent=2, ensure_ascii=False) + "\n"

    def _csv(self, data: Any) -> str:
        rows: List[Dict[str, Any]] = data if isinstance(data, list) else [data]
        rows = [r if isinstance(r, dict) else {"value": r} for r in _plain(rows)]
        fields = sorted({k for r in rows for k in r})
        buffer = io.StringIO()
        writer = csv.DictWriter(buffer, fieldnames=fields, lineterminator="\n")
        writer.writeheader()
        for r in rows:
            writer.writerow({
                k: json.dumps(v, sort_keys=True) if isinstance(v, (list, dict)) else v
                for k, v in r.items()
            })
        return buffer.getvalue()
