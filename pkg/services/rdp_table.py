"""
RDP Table Service
載入有理二重點資料表（Klein 方程式、Milnor 數、分次自同構群、二元多面體群）
"""
import re
from pathlib import Path
from typing import Any, Dict, Optional

import yaml

import config
from schemas.dynkin import RdpEntry
from utils.logger import setup_logger

logger = setup_logger("services.rdp_table", config.LOG_LEVEL)

_LABEL_RE = re.compile(r"^([ADE])(\d+)$")


class RdpTableService:
    """有理二重點 (RDP) 資料表查詢服務"""

    def __init__(self, table_path: Optional[str] = None):
        """
        初始化 RDP 資料表服務

        Args:
            table_path: rdp_table.yaml 路徑，預設使用 config.RDP_TABLE_PATH
        """
        self.table_path = Path(table_path or config.RDP_TABLE_PATH)
        self.series: Dict[str, Dict[str, Any]] = {}
        self.exceptional: Dict[str, Dict[str, Any]] = {}
        self._load()

    def _load(self) -> None:
        """載入 YAML 資料表；檔案不存在時保留空表"""
        if not self.table_path.exists():
            logger.warning(f"RDP table not found: {self.table_path}")
            return

        with open(self.table_path, "r", encoding="utf-8") as f:
            data = yaml.safe_load(f) or {}
        self.series = data.get("series", {})
        self.exceptional = data.get("exceptional", {})
        logger.debug(f"Loaded RDP table: {len(self.series)} series, {len(self.exceptional)} exceptional rows")

    def get(self, label: str) -> Optional[RdpEntry]:
        """
        Table row for an ADE label such as "A3", "D5" or "E8"

        Returns:
            RdpEntry, or None for labels outside the table
        """
        match = _LABEL_RE.match(label.strip())
        if not match:
            return None
        letter, n = match.group(1), int(match.group(2))

        if label in self.exceptional:
            row = self.exceptional[label]
            return RdpEntry(
                label=label,
                equation=row["equation"],
                milnor_number=n,
                aut_group=row["aut_group"],
                binary_group=row["binary_group"],
                binary_group_order=row["binary_group_order"],
                rotation_group=row["rotation_group"],
                triangle_signature=row.get("triangle_signature"),
            )

        row = self.series.get(letter)
        if row is None or n < row["min_index"]:
            return None
        e = n + row["exponent_offset"]
        k = n + row["group_offset"]
        signature = row.get("triangle_signature")
        if signature is not None:
            signature = [int(str(x).format(k=k)) for x in signature]
        return RdpEntry(
            label=label,
            equation=row["equation"].format(e=e),
            milnor_number=n,
            aut_group=row.get("aut_overrides", {}).get(n, row["aut_group"]),
            binary_group=row["binary_group"],
            binary_group_order=row["order_scale"] * k,
            rotation_group=row["rotation_group"].format(k=k),
            triangle_signature=signature,
        )


# Singleton instance
_rdp_table_service: Optional[RdpTableService] = None


def get_rdp_table_service() -> RdpTableService:
    """Get the RDP table service instance (singleton)"""
    global _rdp_table_service
    if _rdp_table_service is None:
        _rdp_table_service = RdpTableService()
    return _rdp_table_service
