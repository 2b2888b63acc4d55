"""
ringsums の例外階層

すべての例外は RingSumsError を基底とし、CLI の終了コードを exit_code として持つ。
"""

from typing import Any, Optional


class RingSumsError(Exception):
    """ringsums の基底例外"""

    exit_code: int = 1

    def __init__(self, message: str) -> None:
        self.message = message
        super().__init__(message)


class RingSpecError(RingSumsError):
    """環仕様文字列の構文エラー・意味エラー"""

    exit_code = 2

    def __init__(self, message: str, position: Optional[int] = None) -> None:
        self.position = position
        if position is not None:
            message = f"{message} (位置 {position})"
        super().__init__(message)


class RingMismatchError(RingSumsError):
    """異なる環の元・多項式を混ぜて演算しようとした"""

    exit_code = 2

    def __init__(self, left: Any, right: Any) -> None:
        self.left = left
        self.right = right
        super().__init__(f"環が一致しません: {left} と {right}")


class UnsupportedRingError(RingSumsError):
    """その環の種類では定義されない演算"""

    exit_code = 2

    def __init__(self, operation: str, ring: Any) -> None:
        self.operation = operation
        self.ring = ring
        super().__init__(f"{operation} は {ring} では使えません")


class EnumerationCapError(RingSumsError):
    """総当たりの規模が上限を超えた"""

    exit_code = 3

    def __init__(self, order: int, cap: int, what: str = "環の位数") -> None:
        self.order = order
        self.cap = cap
        super().__init__(f"{what} {order} が上限 {cap} を超えています")


class InfeasibleComputationError(RingSumsError):
    """総当たりでも線形代数でも計算できない規模"""

    exit_code = 3


class ClosedFormDispatchError(RingSumsError):
    """閉じた式の場合分けに該当しない環仕様"""

    exit_code = 4

    def __init__(self, spec: Any) -> None:
        self.spec = spec
        super().__init__(f"閉じた式が定まらない環仕様です: {spec}")


class InvarianceHypothesisError(RingSumsError):
    """平行移動不変性の分類定理の仮定を満たさない入力"""

    exit_code = 2


class VerificationFailure(RingSumsError):
    """総当たりと閉じた式の不一致・検証スイートの失敗"""

    exit_code = 1
