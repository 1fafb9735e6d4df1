"""
surface-atlas 設定檔
從本模組旁的 .env 檔案讀取設定
"""
import os
from pathlib import Path
from dotenv import load_dotenv

# 載入 .env 檔案
env_path = Path(__file__).parent / ".env"
load_dotenv(dotenv_path=env_path)

# 日誌設定
LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO")
LOG_DIR = os.getenv("LOG_DIR", "")
LOG_BACKUP_COUNT = int(os.getenv("LOG_BACKUP_COUNT", "14"))

# 指令模組設定
COMMANDS_DIR = os.getenv("COMMANDS_DIR", "commands")
AUTO_LOAD_COMMANDS = os.getenv("AUTO_LOAD_COMMANDS", "True").lower() == "true"
DEFAULT_FORMAT = os.getenv("DEFAULT_FORMAT", "text")

# 置換群計算上限
CLOSURE_CAP = int(os.getenv("CLOSURE_CAP", "200000"))
CONJUGATOR_MAX_DEGREE = int(os.getenv("CONJUGATOR_MAX_DEGREE", "9"))

# Hurwitz 軌道搜尋上限
ORBIT_CAP = int(os.getenv("ORBIT_CAP", "1000000"))

# Beauville 搜尋設定
ABELIAN_SEARCH_BOUND = int(os.getenv("ABELIAN_SEARCH_BOUND", "13"))
SEARCH_WORKERS = max(1, int(os.getenv("SEARCH_WORKERS", "1")))

# 鴿籠原理族搜尋設定
BOX_MAX_EXPONENT = int(os.getenv("BOX_MAX_EXPONENT", "6"))
BOX_MAX_SCALE = int(os.getenv("BOX_MAX_SCALE", "24"))

# 靜態資料表
RDP_TABLE_PATH = os.getenv(
    "RDP_TABLE_PATH", str(Path(__file__).parent / "rdp_table.yaml")
)
