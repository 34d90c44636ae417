"""
Configuration Manager for numerical tolerances and run defaults

Loads tolerance parameters from config/tolerances.json and lets individual
values be overridden from the environment (or a .env file):

    BORN_TOOLKIT_CONFIG=path/to/tolerances.json
    BORN_TOOLKIT_MEMBERSHIP_TOL=1e-9

Library functions keep their own module-level defaults (same values); the
CLI asks this manager for the defaults of --tol, --restarts, --stake and
--shots.
"""

from __future__ import annotations

import json
import logging
import os
from datetime import datetime
from typing import Dict, Optional

from dotenv import load_dotenv

load_dotenv()

logger = logging.getLogger(__name__)

ENV_PREFIX = "BORN_TOOLKIT_"
DEFAULT_CONFIG_FILE = os.path.join("config", "tolerances.json")

DEFAULT_PARAMETERS: Dict[str, float] = {
    # operators
    "density_tol": 1e-10,
    "povm_tol": 1e-10,

    # sic
    "fiducial_tol": 1e-10,
    "fiducial_restarts": 16,
    "sic_verify_tol": 1e-9,

    # representation / qplex
    "mmd_tol": 1e-9,
    "membership_tol": 1e-10,
    "extension_tol": 1e-10,

    # coherence
    "born_coherence_tol": 1e-10,
    "stake": 1.0,

    # experiments
    "shots": 100000,
}


class ToleranceConfigManager:
    """Manages tolerance configuration parameters."""

    def __init__(self, config_file: Optional[str] = None):
        self.config_file = config_file or os.getenv(ENV_PREFIX + "CONFIG", DEFAULT_CONFIG_FILE)
        self._cached_config: Optional[Dict] = None
        self._last_loaded: Optional[datetime] = None

    def load_parameters(self) -> Dict:
        """Load parameters from the config file, then apply env overrides."""
        params = dict(DEFAULT_PARAMETERS)
        try:
            if os.path.exists(self.config_file):
                with open(self.config_file, "r") as f:
                    config = json.load(f)
                for key, value in (config.get("parameters") or {}).items():
                    if key not in DEFAULT_PARAMETERS:
                        logger.warning("Ignoring unknown parameter %r in %s", key, self.config_file)
                        continue
                    params[key] = value
                logger.info("Loaded tolerance parameters from %s", self.config_file)
            else:
                logger.debug("No config file at %s, using defaults", self.config_file)
        except (OSError, json.JSONDecodeError, AttributeError) as e:
            logger.warning("Error loading %s (%s), using defaults", self.config_file, e)

        params.update(self._env_overrides())
        self._cached_config = params
        self._last_loaded = datetime.now()
        return params

    def get_parameters(self, force_reload: bool = False) -> Dict:
        """Get current parameters, optionally force reload from file."""
        if force_reload or self._cached_config is None:
            return self.load_parameters()
        return self._cached_config

    def get(self, key: str):
        params = self.get_parameters()
        if key not in params:
            raise KeyError(f"Unknown configuration parameter {key!r}")
        return params[key]

    def _env_overrides(self) -> Dict:
        overrides = {}
        for key, default in DEFAULT_PARAMETERS.items():
            raw = os.getenv(ENV_PREFIX + key.upper())
            if raw is None:
                continue
            try:
                overrides[key] = type(default)(float(raw)) if isinstance(default, int) else float(raw)
            except ValueError:
                logger.warning("Ignoring non-numeric %s%s=%r", ENV_PREFIX, key.upper(), raw)
        return overrides


# Global instance for easy access
config_manager = ToleranceConfigManager()
