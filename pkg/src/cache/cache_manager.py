"""
Cache Manager Module

This module implements the in-memory cache for pipeline step results. Entries
are stored as canonical JSON text so a cached result can never be mutated by
a later step.
"""

import hashlib
import json
import logging
import time
from typing import Any, Dict, Optional

logger = logging.getLogger(__name__)


def make_key(payload: Dict[str, Any]) -> str:
    """sha256 of the canonical JSON of a step description."""
    return hashlib.sha256(json.dumps(payload, sort_keys=True, default=str).encode()).hexdigest()


class CacheManager:
    """
    Time-limited memory cache with hit/miss/set counters.

    Args:
        ttl: Time-to-live for cache entries in seconds
        enabled: When False every lookup misses and nothing is stored
    """

    def __init__(self, ttl: int = 3600, enabled: bool = True):
        self.ttl = ttl
        self.enabled = enabled
        self.cache: Dict[str, Dict[str, Any]] = {}
        self.metrics = {'hits': 0, 'misses': 0, 'sets': 0}

    def get(self, key: str) -> Optional[Dict[str, Any]]:
        """
        Get a value from the cache.

        Args:
            key: Cache key

        Returns:
            A fresh copy of the cached value, or None if absent or expired
        """
        entry = self.cache.get(key) if self.enabled else None
        if entry is not None and time.monotonic() < entry['expiry']:
            self.metrics['hits'] += 1
            logger.debug(f"Cache hit for key: {key[:12]}")
            return json.loads(entry['value'])

        if entry is not None:
            logger.debug(f"Cache entry expired for key: {key[:12]}")
            del self.cache[key]
        self.metrics['misses'] += 1
        return None

    def set(self, key: str, value: Dict[str, Any]) -> None:
        """
        Set a value in the cache.

        Args:
            key: Cache key
            value: JSON-serializable result
        """
        if not self.enabled:
            return
        self.cache[key] = {
            'value': json.dumps(value, sort_keys=True),
            'expiry': time.monotonic() + self.ttl,
        }
        self.metrics['sets'] += 1
        logger.debug(f"Cache set for key: {key[:12]}")

    def delete(self, key: str) -> None:
        self.cache.pop(key, None)

    def clear(self) -> None:
        """Clear all entries and reset the counters."""
        self.cache = {}
        self.metrics = {'hits': 0, 'misses': 0, 'sets': 0}
        logger.info("Step cache cleared")

    def get_metrics(self) -> Dict[str, int]:
        return dict(self.metrics)
