from .config import Settings, get_settings
from .exceptions import RingSumsError
from .logging_utils import get_logger, setup_logging

__all__ = ["RingSumsError", "Settings", "get_logger", "get_settings", "setup_logging"]
