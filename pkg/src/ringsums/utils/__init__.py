from .cli_utils import CLIUtils

__all__ = ["CLIUtils"]
