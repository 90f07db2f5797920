"""
Toolkit logger
Log lines go to stderr; stdout carries only command output
"""
import logging
import sys
from typing import Any, Optional

LOGGER_NAME = 'immgeo'
LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
DATE_FORMAT = '%Y-%m-%d %H:%M:%S'


def _level(name: str) -> int:
    return getattr(logging, name.upper(), logging.INFO)


class Logger:
    """
    Class-level facade over the ``immgeo`` logger

    Configured once, from settings, on first import. ``--log-level`` can
    change the level afterwards.
    """

    _logger: Optional[logging.Logger] = None

    @classmethod
    def setup(cls, level: str = "INFO", log_file: Optional[str] = None):
        """
        Attach the stderr handler (and a file handler when log_file is set)

        Args:
            level: DEBUG, INFO, WARNING or ERROR
            log_file: Optional path that receives a copy of every line
        """
        if cls._logger is not None:
            return

        logger = logging.getLogger(LOGGER_NAME)
        logger.setLevel(_level(level))
        logger.propagate = False
        if not logger.handlers:
            formatter = logging.Formatter(LOG_FORMAT, datefmt=DATE_FORMAT)
            handlers = [logging.StreamHandler(sys.stderr)]
            if log_file:
                handlers.append(logging.FileHandler(log_file))
            for handler in handlers:
                handler.setFormatter(formatter)
                logger.addHandler(handler)
        cls._logger = logger

    @classmethod
    def set_level(cls, level: str):
        cls._get().setLevel(_level(level))

    @classmethod
    def _get(cls) -> logging.Logger:
        if cls._logger is None:
            cls.setup()
        return cls._logger

    @classmethod
    def debug(cls, message: str):
        cls._get().debug(message)

    @classmethod
    def info(cls, message: str):
        cls._get().info(message)

    @classmethod
    def warning(cls, message: str):
        cls._get().warning(message)

    @classmethod
    def error(cls, message: str, exc_info: Optional[Any] = None):
        """Log an error; exc_info attaches the traceback of a caught exception"""
        cls._get().error(message, exc_info=exc_info)


def _configure_from_settings():
    from immgeo.config.settings import get_config
    settings = get_config()
    Logger.setup(level=settings.LOG_LEVEL, log_file=settings.LOG_FILE)


_configure_from_settings()
