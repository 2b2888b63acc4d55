"""
ringsums の設定管理

環境変数 (RINGSUMS_ 接頭辞) と .env から読み込む。
CLI のフラグは with_overrides() で複製に適用する。
"""

from typing import Any

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """計算の上限・並列度・ログ設定"""

    enumeration_cap: int = Field(
        default=2**20,
        ge=1,
        description="総当たりで列挙する環の位数の上限",
    )

    exhaustive_cap: int = Field(
        default=2**24,
        ge=1,
        description="不変多項式を係数ベクトルの全列挙で求める上限 |R|^(D+1)",
    )

    span_enumeration_cap: int = Field(
        default=2**20,
        ge=1,
        description="生成元から加群を全列挙して比較する上限",
    )

    full_translation_check_cap: int = Field(
        default=256,
        ge=1,
        description="不変性判定で全元による平行移動も確認する環の位数の上限",
    )

    degree_cap: int = Field(
        default=64,
        ge=1,
        description="不変多項式の次数上限 D の既定値の上限",
    )

    jobs: int = Field(
        default=1,
        ge=1,
        le=64,
        description="検証スイートの並列ワーカー数",
    )

    log_level: str = Field(default="WARNING", description="ログレベル")

    log_json: bool = Field(default=False, description="ログを JSON 行で出力するか")

    model_config = SettingsConfigDict(
        env_prefix="RINGSUMS_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        """ログレベルのバリデーション"""
        allowed_levels = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]
        v = v.upper()
        if v not in allowed_levels:
            raise ValueError(f"Log level must be one of {allowed_levels}")
        return v

    def with_overrides(self, **changes: Any) -> "Settings":
        """None 以外の値だけを上書きした設定を返す（検証付き）"""
        updates = {key: value for key, value in changes.items() if value is not None}
        if not updates:
            return self
        return Settings.model_validate({**self.model_dump(), **updates})


# グローバル設定インスタンス
settings = Settings()


def get_settings() -> Settings:
    """設定を取得する"""
    return settings


def reload_settings() -> Settings:
    """設定を再読み込みする（テスト用）"""
    global settings
    settings = Settings()
    return settings


def use_settings(new_settings: Settings) -> Settings:
    """プロセス全体の設定を差し替える（CLI・ワーカープロセス用）"""
    global settings
    settings = new_settings
    return settings
