"""
Enumeration Memo Store
Append-only memo of enumerated degree slices, with memory or JSON-directory backend
"""
import json
import logging
import os
import threading
from typing import Dict, List, Optional, Tuple

logger = logging.getLogger(__name__)

SliceKey = Tuple[str, int, int]
Row = Tuple[int, ...]


class MemoStore:
    """Memo keyed by (kind, n, degree).

    Completed slices are read without locking; insertion takes the lock and
    never overwrites an existing slice.
    """

    def __init__(self, cache_dir: Optional[str] = None):
        self.memory_store: Dict[SliceKey, Tuple[Row, ...]] = {}
        self.cache_dir = cache_dir
        self._lock = threading.Lock()

        if cache_dir:
            try:
                os.makedirs(cache_dir, exist_ok=True)
                logger.info(f"Enumeration memo using JSON backend at {cache_dir}")
            except OSError as e:
                logger.warning(f"Cannot use cache directory {cache_dir}, using memory backend: {str(e)}")
                self.cache_dir = None
        else:
            logger.debug("Enumeration memo using memory backend")

    def _path(self, key: SliceKey) -> str:
        kind, n, degree = key
        return os.path.join(self.cache_dir, f"{kind}-n{n}-d{degree}.json")

    def get(self, key: SliceKey) -> Optional[Tuple[Row, ...]]:
        rows = self.memory_store.get(key)
        if rows is not None:
            return rows
        if self.cache_dir:
            return self._load_json(key)
        return None

    def _load_json(self, key: SliceKey) -> Optional[Tuple[Row, ...]]:
        path = self._path(key)
        if not os.path.exists(path):
            return None
        try:
            with open(path, "r", encoding="utf-8") as handle:
                payload = json.load(handle)
            rows = tuple((int(a),) + tuple(int(x) for x in b) for a, b in payload)
        except (OSError, ValueError, TypeError) as e:
            logger.warning(f"Ignoring unreadable memo file {path}: {str(e)}")
            return None
        with self._lock:
            rows = self.memory_store.setdefault(key, rows)
        logger.info(f"Loaded {len(rows)} classes for {key} from disk")
        return rows

    def put(self, key: SliceKey, rows: List[Row]) -> Tuple[Row, ...]:
        with self._lock:
            if key in self.memory_store:
                return self.memory_store[key]
            frozen = tuple(rows)
            self.memory_store[key] = frozen
        if self.cache_dir:
            self._write_json(key, frozen)
        return frozen

    def _write_json(self, key: SliceKey, rows: Tuple[Row, ...]) -> None:
        path = self._path(key)
        payload = [[row[0], list(row[1:])] for row in rows]
        tmp_path = f"{path}.{os.getpid()}.{threading.get_ident()}.tmp"
        try:
            with open(tmp_path, "w", encoding="utf-8") as handle:
                json.dump(payload, handle)
            os.replace(tmp_path, path)
        except OSError as e:
            logger.warning(f"Failed to persist memo slice {key}: {str(e)}")

    def clear(self) -> None:
        with self._lock:
            self.memory_store.clear()

    def __len__(self) -> int:
        return len(self.memory_store)
