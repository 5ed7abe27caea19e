"""
Tests for the Cache Manager Module
"""

from unittest.mock import patch

from src.cache.cache_manager import CacheManager, make_key


class TestCacheManager:
    """Tests for the CacheManager class."""

    def setup_method(self):
        """Set up test fixtures."""
        self.cache_manager = CacheManager(ttl=60)

    def test_set_and_get(self):
        """Test setting and getting a value."""
        self.cache_manager.set("key", {'passed': True, 'classes': 3})

        assert self.cache_manager.get("key") == {'passed': True, 'classes': 3}
        assert self.cache_manager.get_metrics() == {'hits': 1, 'misses': 0, 'sets': 1}

    def test_get_returns_a_copy(self):
        """Test that mutating a returned value does not touch the cache."""
        self.cache_manager.set("key", {'labels': ['A']})

        self.cache_manager.get("key")['labels'].append('B')

        assert self.cache_manager.get("key") == {'labels': ['A']}

    def test_miss(self):
        """Test getting a missing key."""
        assert self.cache_manager.get("absent") is None
        assert self.cache_manager.get_metrics()['misses'] == 1

    @patch('src.cache.cache_manager.time.monotonic')
    def test_expiry(self, mock_monotonic):
        """Test that expired entries are dropped."""
        mock_monotonic.return_value = 100.0
        self.cache_manager.set("key", {'passed': True})

        mock_monotonic.return_value = 161.0

        assert self.cache_manager.get("key") is None
        assert "key" not in self.cache_manager.cache

    def test_disabled(self):
        """Test a disabled cache."""
        cache_manager = CacheManager(enabled=False)
        cache_manager.set("key", {'passed': True})

        assert cache_manager.get("key") is None
        assert cache_manager.get_metrics()['sets'] == 0

    def test_delete_and_clear(self):
        """Test deleting entries and clearing the cache."""
        self.cache_manager.set("a", {})
        self.cache_manager.set("b", {})

        self.cache_manager.delete("a")
        assert self.cache_manager.get("a") is None

        self.cache_manager.clear()
        assert self.cache_manager.cache == {}
        assert self.cache_manager.get_metrics() == {'hits': 0, 'misses': 0, 'sets': 0}


class TestMakeKey:
    """Tests for make_key."""

    def test_key_ignores_dict_order(self):
        assert make_key({'step': 'quiver', 'seed': 0}) == make_key({'seed': 0, 'step': 'quiver'})

    def test_key_depends_on_values(self):
        assert make_key({'step': 'quiver'}) != make_key({'step': 'hilbert'})
