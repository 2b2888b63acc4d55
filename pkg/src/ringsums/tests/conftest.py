import pytest
from hypothesis import HealthCheck, settings as hypothesis_settings

from ringsums.core.config import Settings, use_settings
from ringsums.rings.factory import build_ring

# 乱数に依存しない実行（CI と手元で同じ例を使う）
hypothesis_settings.register_profile(
    "ringsums",
    derandomize=True,
    max_examples=50,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
hypothesis_settings.load_profile("ringsums")


@pytest.fixture(autouse=True)
def default_settings():
    """テストごとに既定の設定へ戻す"""
    settings = use_settings(Settings(_env_file=None))
    yield settings
    use_settings(Settings(_env_file=None))


@pytest.fixture
def gf2():
    return build_ring("GF(2)")


@pytest.fixture
def gf4():
    return build_ring("GF(4)")


@pytest.fixture
def z4():
    return build_ring("Zmod(4)")


@pytest.fixture
def dual_f2():
    """F_2[x]/(x^2)"""
    return build_ring("Nil(GF(2),2)")


@pytest.fixture
def ut2():
    """F_2 上の 2×2 上三角行列環"""
    return build_ring("UT(2,GF(2))")


@pytest.fixture
def mat2():
    return build_ring("Mat(2,GF(2))")
