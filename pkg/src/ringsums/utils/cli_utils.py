import sys
import unicodedata
from typing import Optional, Sequence, TextIO

from ..services.suites import SuiteReport


def _width(text: str) -> int:
    """全角文字は 2 桁として数える"""
    return sum(2 if unicodedata.east_asian_width(ch) in ("F", "W") else 1 for ch in text)


def _pad(text: str, width: int) -> str:
    return text + " " * (width - _width(text))


class CLIUtils:
    """
    CLIUtilsクラスは、ringsums の CLI で使う表示用の関数を提供します。
    """

    @staticmethod
    def display_table(headers: Sequence[str], rows: Sequence[Sequence[object]], out: Optional[TextIO] = None) -> None:
        """
        罫線付きの表を表示する関数

        :param headers: 見出し
        :param rows: 行のリスト（各セルは str() で表示）
        """
        out = out or sys.stdout
        cells = [[str(c) for c in row] for row in rows]
        widths = [_width(h) for h in headers]
        for row in cells:
            widths = [max(w, _width(c)) for w, c in zip(widths, row)]

        def line(left: str, mid: str, right: str) -> str:
            return left + mid.join("─" * (w + 2) for w in widths) + right

        print(line("┌", "┬", "┐"), file=out)
        print("│" + "│".join(f" {_pad(h, w)} " for h, w in zip(headers, widths)) + "│", file=out)
        print(line("├", "┼", "┤"), file=out)
        for row in cells:
            print("│" + "│".join(f" {_pad(c, w)} " for c, w in zip(row, widths)) + "│", file=out)
        print(line("└", "┴", "┘"), file=out)

    @staticmethod
    def display_suite(report: SuiteReport, out: Optional[TextIO] = None, failures_only: bool = True) -> None:
        """
        スイートの結果を表示する関数（既定では不一致のケースだけ表に出す）
        """
        out = out or sys.stdout
        status = "✅" if report.ok else "❌"
        print(
            f"{status} {report.suite}: {report.passed} 件一致 / {report.failed} 件不一致"
            f" ({report.duration:.2f} 秒)",
            file=out,
        )
        shown = [c for c in report.cases if not (failures_only and c.passed)]
        if shown:
            CLIUtils.display_table(
                ["環", "パラメータ", "期待値", "計算値", "根拠"],
                [[c.ring, c.params, c.expected, c.actual, c.provenance] for c in shown],
                out,
            )

    @staticmethod
    def show_success(message: str, out: Optional[TextIO] = None) -> None:
        """
        成功メッセージを表示する関数

        :param message: 表示するメッセージ
        """
        out = out or sys.stdout
        print(f"\033[92m✅ {message}\033[0m", file=out)

    @staticmethod
    def show_failure(message: str, out: Optional[TextIO] = None) -> None:
        """
        失敗メッセージを表示する関数

        :param message: 表示するメッセージ
        """
        out = out or sys.stderr
        print(f"\033[91m❌ {message}\033[0m", file=out)
