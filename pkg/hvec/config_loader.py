"""
YAML loader module for hvec.
Handles loading and validation of settings and suite configurations.
"""

import os
from pathlib import Path
from typing import Any, Dict, Union

import yaml
from loguru import logger
from pydantic import ValidationError

from .errors import ConfigError
from .schemas import HvecSettings, SuiteConfig

PROJECT_ROOT = Path(__file__).resolve().parent.parent
DEFAULT_SETTINGS_YAML = "hvec_config.yaml"
DEFAULT_SUITE_DIR = "data/suites"
THREADS_ENV = "HVEC_THREADS"


class ConfigLoader:
    """Handles loading and validation of YAML configuration."""

    def __init__(self, base_dir: Union[str, Path] = PROJECT_ROOT):
        """Initialize the loader.

        Args:
            base_dir: Fallback directory for relative paths that do not exist
                from the working directory
        """
        self.base_dir = Path(base_dir)
        logger.debug(f"Config loader initialized with base directory: {self.base_dir}")

    def _resolve(self, filename: Union[str, Path]) -> Path:
        path = Path(filename)
        if path.is_absolute() or path.exists():
            return path
        return self.base_dir / path

    def load_file(self, filename: Union[str, Path]) -> Dict[str, Any]:
        """Load and parse a YAML file.

        Args:
            filename: Path of the YAML file, relative to the base directory

        Returns:
            Dict[str, Any]: Parsed YAML data; an empty document gives {}

        Raises:
            FileNotFoundError: If the file doesn't exist
            ConfigError: If the file is not valid YAML or not a mapping
        """
        file_path = self._resolve(filename)
        try:
            with open(file_path, 'r', encoding='utf-8') as f:
                data = yaml.safe_load(f)
        except FileNotFoundError:
            logger.error(f"YAML file not found: {file_path}")
            raise
        except yaml.YAMLError as e:
            logger.error(f"Error parsing YAML file {file_path}: {e}")
            raise ConfigError(f"Invalid YAML in {file_path}: {e}") from e

        if data is None:
            data = {}
        if not isinstance(data, dict):
            msg = f"Top level of {file_path} must be a mapping"
            logger.error(msg)
            raise ConfigError(msg)
        logger.info(f"Successfully loaded YAML file: {file_path}")
        return data

    def load_settings(self, filename: Union[str, Path] = DEFAULT_SETTINGS_YAML) -> HvecSettings:
        """Load hvec_config.yaml, falling back to defaults when it is absent.

        The HVEC_THREADS environment variable overrides ``threads``.
        """
        try:
            data = self.load_file(filename)
        except FileNotFoundError:
            logger.warning(f"Settings file not found: {filename}. Using default settings.")
            data = {}
        try:
            settings = HvecSettings.model_validate(data)
        except ValidationError as e:
            logger.error(f"Invalid settings in {filename}: {e}")
            raise ConfigError(f"Invalid settings in {filename}: {e.errors()[0]['msg']}") from e

        env_threads = os.environ.get(THREADS_ENV)
        if env_threads:
            try:
                threads = int(env_threads)
            except ValueError:
                logger.warning(f"Ignoring non-integer {THREADS_ENV}={env_threads!r}")
            else:
                if threads >= 1:
                    settings = settings.model_copy(update={"threads": threads})
                else:
                    logger.warning(f"Ignoring {THREADS_ENV}={threads}; it must be at least 1")
        return settings

    def resolve_suite_path(self, name_or_path: str) -> Path:
        """'default' and other bare names map into data/suites/."""
        path = Path(name_or_path)
        if path.suffix in ('.yaml', '.yml') or path.parent != Path('.'):
            return self._resolve(path)
        return self._resolve(Path(DEFAULT_SUITE_DIR) / f"{name_or_path}.yaml")

    def load_suite(self, name_or_path: str) -> SuiteConfig:
        """Load and validate a suite configuration.

        Raises:
            ConfigError: If the file is missing, unparsable or fails validation
        """
        path = self.resolve_suite_path(name_or_path)
        try:
            data = self.load_file(path)
        except FileNotFoundError:
            raise ConfigError(f"Suite configuration not found: {path}") from None
        try:
            suite = SuiteConfig.model_validate(data)
        except ValidationError as e:
            logger.error(f"Invalid suite configuration {path}: {e}")
            raise ConfigError(f"Invalid suite configuration {path}: {e.errors()[0]['msg']}") from e
        logger.info(f"Suite '{suite.name}': {len(suite.complexes)} complex sources, primes {suite.primes}")
        return suite
