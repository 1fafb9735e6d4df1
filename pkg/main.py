"""
surface-atlas 程式進入點
"""
import sys

from app import SurfaceAtlas
from config import LOG_LEVEL
from utils.logger import setup_logger

# 初始化日誌
logger = setup_logger("main", LOG_LEVEL)


def main() -> int:
    """主函數"""
    atlas = SurfaceAtlas()
    try:
        return atlas.run(sys.argv[1:])
    except KeyboardInterrupt:
        logger.info("Interrupted")
        return 130


if __name__ == "__main__":
    sys.exit(main())
