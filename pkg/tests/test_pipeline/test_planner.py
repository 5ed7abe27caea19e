"""
Tests for the Planner Module
"""

import pytest

from src.pipeline.planner import ANALYZE_STEPS, CommandPlanner


class TestCommandPlanner:
    """Tests for the CommandPlanner class."""

    def setup_method(self):
        """Set up the test environment."""
        self.planner = CommandPlanner(guardrails={'max_truncation': 6})
        self.options = {'truncation': 4, 'seed': 0, 'window': 0}

    def test_analyze_expands_to_steps(self):
        """Test that analyze runs every report step."""
        plan = self.planner.plan('analyze', self.options)
        assert plan['steps'] == ANALYZE_STEPS
        assert plan['steps'] is not ANALYZE_STEPS

    def test_single_step(self):
        """Test a command that is a single step."""
        assert self.planner.plan('render', self.options)['steps'] == ['render']

    def test_overrides_take_precedence(self):
        """Test that command-line options override the spec options."""
        plan = self.planner.plan('quiver', self.options, {'truncation': 2, 'seed': None})
        assert plan['options'] == {'truncation': 2, 'seed': 0, 'window': 0}

    def test_truncation_is_clamped(self, caplog):
        """Test the truncation guardrail."""
        plan = self.planner.plan('oracle', self.options, {'truncation': 40})
        assert plan['options']['truncation'] == 6
        assert "clamping" in caplog.text

    def test_default_guardrails_read_the_environment(self, monkeypatch):
        """Test the HTK_MAX_TRUNCATION environment variable."""
        monkeypatch.setenv('HTK_MAX_TRUNCATION', '3')
        assert CommandPlanner().guardrails == {'max_truncation': 3}

    def test_unknown_command(self):
        """Test that unknown commands are rejected."""
        with pytest.raises(ValueError):
            self.planner.plan('integrate', self.options)
