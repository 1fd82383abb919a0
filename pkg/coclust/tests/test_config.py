import os
from pathlib import Path
from unittest.mock import patch

from coclust_api.config import Settings, settings


class TestSettings:
    """Test Settings class."""

    def test_default_values(self):
        """Test default settings values."""
        with patch.dict(os.environ, {}, clear=True):
            test_settings = Settings()
            assert test_settings.APP_NAME == "Cocluster Sketch Service"
            assert test_settings.LOG_LEVEL == "INFO"
            assert test_settings.HOST == "0.0.0.0"
            assert test_settings.PORT == 8000
            assert test_settings.MAX_REQUEST_EDGES == 200_000
            assert test_settings.ORACLE_MAX_NODES == 10
            assert test_settings.MIN_COMPRESSION_RATIO == 0.2

    def test_custom_values_from_env(self):
        """Test settings with custom environment variables."""
        with patch.dict(os.environ, {"LOG_LEVEL": "DEBUG", "ORACLE_MAX_NODES": "8"}, clear=True):
            test_settings = Settings()
            assert test_settings.LOG_LEVEL == "DEBUG"
            assert test_settings.ORACLE_MAX_NODES == 8
            assert test_settings.MAX_REQUEST_EDGES == 200_000

    def test_settings_singleton_behavior(self):
        """Test that settings instance is a singleton."""
        from coclust_api.config import settings as settings2
        assert isinstance(settings, Settings)
        assert settings is settings2

    def test_documented_port(self):
        """Test the README serves the app on the configured default port."""
        readme = (Path(__file__).resolve().parents[1] / "README.md").read_text(encoding="utf-8")
        with patch.dict(os.environ, {}, clear=True):
            assert f"--port {Settings().PORT}" in readme
