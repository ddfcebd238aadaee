"""
配置管理模块 - 使用Pydantic Settings
"""
from functools import lru_cache
from pathlib import Path
from typing import Optional

from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    """应用配置，环境变量前缀 PERCERT_"""

    # 穷举搜索配置
    bruteforce_cap: int = 16  # 最多枚举的边数

    # 下界着色配置
    extra_colourings: int = 0  # 额外尝试的随机贪心着色数
    colouring_seed: int = 0

    # 证书缓存 (空 = 仅内存)
    cache_path: str = ""

    # 输出
    log_level: str = "WARNING"
    output_indent: int = 2

    class Config:
        env_prefix = "PERCERT_"
        env_file = ".env"
        env_file_encoding = "utf-8"
        extra = "ignore"


@lru_cache()
def get_settings() -> Settings:
    """获取配置单例"""
    return Settings()


def get_cache_path() -> Optional[Path]:
    """获取证书缓存路径，未配置时返回 None"""
    settings = get_settings()
    if settings.cache_path:
        return Path(settings.cache_path)
    return None
