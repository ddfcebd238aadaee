"""
证书存储模块 - 进程内只写一次的缓存，可选 SQLite 持久化
"""
import json
import logging
import sqlite3
import threading
from pathlib import Path
from typing import Any, Dict, Optional, Tuple

logger = logging.getLogger(__name__)

CacheKey = Tuple[str, int]


class CertificateStore:
    """(图标识, r) → 证书记录；同一键只写一次，之后的写入被忽略"""

    def __init__(self, db_path: Optional[Path] = None):
        self.db_path = db_path
        self._memory: Dict[CacheKey, Dict[str, Any]] = {}
        self._lock = threading.Lock()
        if self.db_path is not None:
            self.db_path.parent.mkdir(parents=True, exist_ok=True)
            self._init_db()
            logger.info("证书缓存已打开: %s", self.db_path)

    def _get_connection(self) -> sqlite3.Connection:
        """获取数据库连接"""
        conn = sqlite3.connect(str(self.db_path))
        conn.row_factory = sqlite3.Row
        return conn

    def _init_db(self):
        """初始化数据库表"""
        conn = self._get_connection()
        cursor = conn.cursor()
        cursor.execute("""
            CREATE TABLE IF NOT EXISTS certificates (
                graph_id TEXT NOT NULL,
                r INTEGER NOT NULL,
                payload TEXT NOT NULL,
                created_at TIMESTAMP DEFAULT CURRENT_TIMESTAMP,
                PRIMARY KEY (graph_id, r)
            )
        """)
        conn.commit()
        conn.close()

    def get(self, key: CacheKey) -> Optional[Dict[str, Any]]:
        """读取证书记录，先查内存再查数据库"""
        with self._lock:
            if key in self._memory:
                return self._memory[key]
        if self.db_path is None:
            return None
        try:
            conn = self._get_connection()
            cursor = conn.cursor()
            cursor.execute(
                "SELECT payload FROM certificates WHERE graph_id = ? AND r = ?",
                key,
            )
            row = cursor.fetchone()
            conn.close()
        except sqlite3.Error as e:
            logger.error("读取证书失败: %s", e)
            return None
        if row is None:
            return None
        record = json.loads(row["payload"])
        with self._lock:
            return self._memory.setdefault(key, record)

    def put(self, key: CacheKey, record: Dict[str, Any]) -> Dict[str, Any]:
        """写入证书记录，返回该键上最终保存的记录"""
        with self._lock:
            stored = self._memory.setdefault(key, record)
        if stored is record and self.db_path is not None:
            try:
                conn = self._get_connection()
                cursor = conn.cursor()
                cursor.execute(
                    "INSERT OR IGNORE INTO certificates (graph_id, r, payload) VALUES (?, ?, ?)",
                    (key[0], key[1], json.dumps(record, sort_keys=True)),
                )
                conn.commit()
                conn.close()
            except sqlite3.Error as e:
                logger.error("保存证书失败: %s", e)
        return stored

    def __len__(self) -> int:
        with self._lock:
            return len(self._memory)
