"""
logging_utils.py - ログ関連のユーティリティ

ringsums 配下のロガーは標準エラーにだけ出力する（標準出力はレポート専用）。
"""

import logging
import sys
import time
from typing import Any, Optional

from pythonjsonlogger.json import JsonFormatter

ROOT_LOGGER_NAME = "ringsums"
LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


class Logger:
    """キーワード引数を k=v 形式で付け足すロガー"""

    def __init__(self, name: str):
        if not name.startswith(ROOT_LOGGER_NAME):
            name = f"{ROOT_LOGGER_NAME}.{name}"
        self.logger = logging.getLogger(name)

    def debug(self, message: str, **kwargs: Any) -> None:
        """デバッグログ"""
        self._log(logging.DEBUG, message, **kwargs)

    def info(self, message: str, **kwargs: Any) -> None:
        """情報ログ"""
        self._log(logging.INFO, message, **kwargs)

    def warning(self, message: str, **kwargs: Any) -> None:
        """警告ログ"""
        self._log(logging.WARNING, message, **kwargs)

    def error(self, message: str, **kwargs: Any) -> None:
        """エラーログ"""
        self._log(logging.ERROR, message, **kwargs)

    def _log(self, level: int, message: str, **kwargs: Any) -> None:
        if not self.logger.isEnabledFor(level):
            return
        if kwargs:
            extra_info = " | ".join(f"{k}={v}" for k, v in kwargs.items())
            message = f"{message} | {extra_info}"
        # JSON 出力時はコンテキストを個別フィールドにも載せる
        self.logger.log(level, message, extra={"context": kwargs} if kwargs else None)

    def log_performance(self, operation: str, duration: float, **kwargs: Any) -> None:
        """処理時間をログに記録"""
        self.info(f"Performance: {operation} completed in {duration:.4f}s", **kwargs)


class PerformanceLogger:
    """処理時間測定用のコンテキストマネージャー"""

    def __init__(self, logger: Logger, operation: str, **kwargs: Any):
        self.logger = logger
        self.operation = operation
        self.kwargs = kwargs
        self.start_time: Optional[float] = None
        self.duration: float = 0.0

    def __enter__(self) -> "PerformanceLogger":
        self.start_time = time.perf_counter()
        self.logger.debug(f"Starting operation: {self.operation}", **self.kwargs)
        return self

    def __exit__(self, exc_type, exc_val, exc_tb) -> bool:
        if self.start_time is not None:
            self.duration = time.perf_counter() - self.start_time
            if exc_type is None:
                self.logger.log_performance(self.operation, self.duration, **self.kwargs)
            else:
                self.logger.error(
                    f"Operation failed: {self.operation} (duration: {self.duration:.4f}s)",
                    **self.kwargs,
                )
        return False


def setup_logging(level: str = "WARNING", json_format: bool = False) -> logging.Logger:
    """ringsums ロガーを設定する（何度呼んでもハンドラは一つ）"""
    root = logging.getLogger(ROOT_LOGGER_NAME)
    root.setLevel(level)
    root.handlers.clear()

    handler = logging.StreamHandler(sys.stderr)
    if json_format:
        handler.setFormatter(JsonFormatter("%(asctime)s %(name)s %(levelname)s %(message)s"))
    else:
        handler.setFormatter(logging.Formatter(LOG_FORMAT, datefmt="%Y-%m-%d %H:%M:%S"))
    root.addHandler(handler)
    root.propagate = False
    return root


def get_logger(name: str) -> Logger:
    """モジュール用ロガーを取得"""
    return Logger(name)
