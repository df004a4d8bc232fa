import json
import logging
import sys
from datetime import datetime
from typing import Any, Dict, Optional

ROOT_LOGGER = "ribbon_morph"


class Logger:
    """Structured logger over the package root logger.

    Keyword arguments of every call travel as ``record.data``. Module loggers
    created with ``logging.getLogger(__name__)`` inside the package propagate
    here and share the handler.
    """

    def __init__(self,
                 level: int = logging.INFO,
                 handler: Optional[logging.Handler] = None,
                 formatter: Optional[logging.Formatter] = None,
                 ):
        self.__level = level
        handler = handler or logging.StreamHandler(sys.stderr)
        handler.setFormatter(formatter or TextCustomFormatter())

        self.__logger = logging.getLogger(ROOT_LOGGER)
        self.__logger.setLevel(level)
        self.__logger.handlers.clear()
        self.__logger.addHandler(handler)
        # stdout carries reports and tables only
        self.__logger.propagate = False

    @property
    def level(self) -> int:
        return self.__level

    def __emit(self, level: int, message: str, data: Dict[str, Any]) -> None:
        self.__logger.log(level, message, extra={"data": data})

    def debug(self, message: str, **kwargs) -> None:
        self.__emit(logging.DEBUG, message, kwargs)

    def info(self, message: str, **kwargs) -> None:
        self.__emit(logging.INFO, message, kwargs)

    def warn(self, message: str, **kwargs) -> None:
        self.__emit(logging.WARNING, message, kwargs)

    def error(self, message: str, **kwargs) -> None:
        self.__emit(logging.ERROR, message, kwargs)


def _record_data(record: logging.LogRecord) -> Dict[str, Any]:
    return getattr(record, "data", None) or {}


class JSONCustomFormatter(logging.Formatter):
    def format(self, record: logging.LogRecord) -> str:
        line = {
            "level": record.levelname,
            "timestamp": datetime.fromtimestamp(record.created).strftime('%Y-%m-%dT%H:%M:%S'),
            "logger": record.name,
            "message": record.getMessage(),
            **_record_data(record),
        }
        # numpy scalars and paths
        return json.dumps(line, default=str)


class TextCustomFormatter(logging.Formatter):
    def format(self, record: logging.LogRecord) -> str:
        timestamp = datetime.fromtimestamp(record.created).strftime('%Y-%m-%d %H:%M:%S')
        line = f"{timestamp} | {record.levelname:8} | {record.getMessage()}"
        data = _record_data(record)
        if data:
            line += " | " + ", ".join(f"{key}={value}" for key, value in data.items())
        return line


def formatter_for(fmt: str) -> logging.Formatter:
    return JSONCustomFormatter() if fmt == "json" else TextCustomFormatter()
