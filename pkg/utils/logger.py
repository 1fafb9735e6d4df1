"""
日誌系統設定
主控台輸出寫到 stderr；可選用 TimedRotatingFileHandler 每日輪轉日誌檔
"""
import logging
from logging.handlers import TimedRotatingFileHandler
from pathlib import Path
from typing import Optional


def setup_logger(
    name: str = "atlas",
    log_level: str = "INFO",
    log_dir: Optional[str] = None,
    backup_count: Optional[int] = None,
) -> logging.Logger:
    """
    設定並返回 logger 實例

    Args:
        name: Logger 名稱，使用模組路徑（例如 "services.hurwitz"）
        log_level: 日誌級別 (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        log_dir: 輪轉日誌檔的資料夾；空字串表示不寫檔
        backup_count: 保留的日誌檔案數量（天數）

    Returns:
        logging.Logger: 設定好的 logger 實例
    """
    # 延遲載入 config，讓 utils 可以先被 import
    import config

    if log_dir is None:
        log_dir = config.LOG_DIR
    if backup_count is None:
        backup_count = config.LOG_BACKUP_COUNT

    # 設定日誌格式
    log_format = logging.Formatter(
        '%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        datefmt='%Y-%m-%d %H:%M:%S'
    )

    logger = logging.getLogger(name)
    logger.setLevel(getattr(logging, log_level.upper(), logging.INFO))

    # 避免重複添加 handler
    if logger.handlers:
        return logger

    if log_dir:
        path = Path(log_dir)
        path.mkdir(parents=True, exist_ok=True)
        # 檔案 handler，每日輪轉
        file_handler = TimedRotatingFileHandler(
            filename=str(path / f"{name}.log"),
            when='D',
            interval=1,
            backupCount=backup_count,
            encoding='utf-8',
            delay=True
        )
        file_handler.setLevel(logging.DEBUG)
        file_handler.setFormatter(log_format)
        file_handler.suffix = "%Y%m%d"
        logger.addHandler(file_handler)

    # stdout 保留給指令輸出，主控台 handler 寫到 stderr
    console_handler = logging.StreamHandler()
    console_handler.setLevel(logging.INFO)
    console_handler.setFormatter(log_format)
    logger.addHandler(console_handler)

    return logger
