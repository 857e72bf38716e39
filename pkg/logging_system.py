"""
Logging System - petpatch
Logs estruturados em JSON; stdout fica reservado para os relatórios
"""

import json
import logging
import logging.handlers
import sys
import traceback
from datetime import datetime
from functools import wraps
from pathlib import Path
from typing import Optional

ROOT_LOGGER = "petpatch"


class CustomFormatter(logging.Formatter):
    """Formatter personalizado para logs estruturados"""

    EXTRA_FIELDS = ("point", "family", "task_id", "n")

    def format(self, record):
        log_data = {
            "timestamp": datetime.fromtimestamp(record.created).isoformat(),
            "level": record.levelname,
            "logger": record.name,
            "message": record.getMessage(),
            "module": record.module,
            "function": record.funcName,
            "line": record.lineno,
            "process": record.process,
        }

        for field in self.EXTRA_FIELDS:
            if hasattr(record, field):
                log_data[field] = getattr(record, field)

        if record.exc_info:
            log_data["exception"] = {
                "type": record.exc_info[0].__name__,
                "message": str(record.exc_info[1]),
                "traceback": traceback.format_exception(*record.exc_info),
            }

        return json.dumps(log_data, ensure_ascii=False)


class PetpatchLogger:
    """Configura os handlers do logger raiz do petpatch"""

    def __init__(
        self,
        log_level: str = "WARNING",
        log_dir: Optional[str] = None,
        max_file_size: int = 10485760,
        backup_count: int = 5,
    ):
        self.log_level = getattr(logging, str(log_level).upper(), logging.WARNING)
        self.log_dir = Path(log_dir) if log_dir else None
        self.max_file_size = max_file_size
        self.backup_count = backup_count
        self.setup_logging()

    def setup_logging(self):
        """Configura o sistema de logging"""
        self.logger = logging.getLogger(ROOT_LOGGER)
        self.logger.setLevel(self.log_level)
        self.logger.propagate = False

        for handler in self.logger.handlers[:]:
            self.logger.removeHandler(handler)
            handler.close()

        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setFormatter(CustomFormatter())
        self.logger.addHandler(console_handler)

        if self.log_dir is not None:
            self.log_dir.mkdir(parents=True, exist_ok=True)
            self.logger.addHandler(self._rotating_handler("petpatch.log"))
            self.logger.addHandler(self._rotating_handler("errors.log", logging.ERROR))

    def _rotating_handler(self, filename: str, level: int = logging.NOTSET) -> logging.Handler:
        handler = logging.handlers.RotatingFileHandler(
            self.log_dir / filename,
            maxBytes=self.max_file_size,
            backupCount=self.backup_count,
            encoding="utf-8",
        )
        handler.setLevel(level)
        handler.setFormatter(CustomFormatter())
        return handler


def get_logger(name: str) -> logging.Logger:
    """Função de conveniência para obter logger"""
    if name.startswith(ROOT_LOGGER + ".") or name == ROOT_LOGGER:
        return logging.getLogger(name)
    return logging.getLogger(f"{ROOT_LOGGER}.{name}")


def log_function_call(logger_name: str = None):
    """Decorador para log automático de chamadas de função"""

    def decorator(func):
        @wraps(func)
        def wrapper(*args, **kwargs):
            logger = get_logger(logger_name or func.__module__)
            start_time = datetime.now()
            logger.debug(f"Iniciando {func.__name__}")

            try:
                result = func(*args, **kwargs)
                duration = (datetime.now() - start_time).total_seconds()
                logger.debug(f"Concluído {func.__name__} em {duration:.3f}s")
                return result

            except Exception as e:
                duration = (datetime.now() - start_time).total_seconds()
                logger.error(
                    f"Erro em {func.__name__} após {duration:.3f}s: {str(e)}",
                    exc_info=True,
                )
                raise

        return wrapper

    return decorator


def setup_petpatch_logging(logging_config=None) -> PetpatchLogger:
    """Configura o sistema de logs para toda a aplicação"""
    if logging_config is None:
        return PetpatchLogger()
    return PetpatchLogger(
        log_level=logging_config.log_level,
        log_dir=logging_config.log_dir,
        max_file_size=logging_config.max_file_size,
        backup_count=logging_config.backup_count,
    )
