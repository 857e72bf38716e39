"""
Config Manager - petpatch
Configuração central: padrões em dataclasses, arquivo YAML opcional e variáveis de ambiente
"""

from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Any, Dict, Optional

import yaml
from decouple import config as env_config

from logging_system import get_logger

logger = get_logger(__name__)


@dataclass
class SurveyConfig:
    """Configurações dos levantamentos de pontos fixos"""
    jobs: int = 1


@dataclass
class ProbeConfig:
    """Configurações da sonda de semicontinuidade"""
    param_min: int = -3
    param_max: int = 3
    samples: int = 5
    seed: int = 1


@dataclass
class OutputConfig:
    """Configurações de saída"""
    format: str = "text"
    schema_version: int = 1
    prune_essential: bool = False


@dataclass
class LoggingConfig:
    """Configurações de logging"""
    log_level: str = "WARNING"
    log_dir: Optional[str] = None
    max_file_size: int = 10485760  # 10MB
    backup_count: int = 5


class ConfigManager:
    """Gerenciador central de configurações"""

    def __init__(self, config_file: str = None):
        path = config_file or env_config("PETPATCH_CONFIG", default="")
        self.config_file = Path(path) if path else None

        self._default_config = {
            "survey": SurveyConfig(),
            "probe": ProbeConfig(),
            "output": OutputConfig(),
            "logging": LoggingConfig(),
        }

        self._config: Dict[str, Any] = {}
        self._load_config()

    def _load_config(self):
        """Carrega configurações do arquivo e variáveis de ambiente"""
        self._config = dict(self._default_config)

        if self.config_file is not None and self.config_file.exists():
            try:
                with open(self.config_file, "r", encoding="utf-8") as f:
                    file_config = yaml.safe_load(f) or {}
                self._merge_config(file_config)
                logger.info(f"Configurações carregadas de {self.config_file}")
            except (OSError, yaml.YAMLError, TypeError) as e:
                logger.error(f"Erro ao carregar configurações do arquivo: {e}")

        self._load_env_overrides()

    def _merge_config(self, new_config: Dict[str, Any]):
        """Mescla nova configuração com a existente"""
        for section, values in new_config.items():
            if section in self._config and isinstance(values, dict):
                current_dataclass = self._config[section]
                updated_values = asdict(current_dataclass)
                updated_values.update(values)
                self._config[section] = type(current_dataclass)(**updated_values)
            else:
                logger.warning(f"Seção de configuração ignorada: {section}")

    def _load_env_overrides(self):
        """Carrega overrides das variáveis de ambiente"""
        env_mappings = {
            "PETPATCH_JOBS": ("survey", "jobs", int),
            "PETPATCH_FORMAT": ("output", "format", str),
            "PETPATCH_PROBE_SEED": ("probe", "seed", int),
            "LOG_LEVEL": ("logging", "log_level", str),
            "LOG_DIR": ("logging", "log_dir", str),
        }

        for env_var, (section, field, cast) in env_mappings.items():
            value = env_config(env_var, default=None)
            if value:
                self.set(section, field, cast(value))

    def save_config(self, path: str = None) -> bool:
        """Salva configurações no arquivo"""
        target = Path(path) if path else self.config_file
        if target is None:
            logger.error("Nenhum arquivo de configuração definido")
            return False

        try:
            config_dict = {section: asdict(obj) for section, obj in self._config.items()}
            with open(target, "w", encoding="utf-8") as f:
                yaml.dump(config_dict, f, default_flow_style=False, allow_unicode=True)
            logger.info(f"Configurações salvas em {target}")
            return True
        except OSError as e:
            logger.error(f"Erro ao salvar configurações: {e}")
            return False

    def get(self, section: str, field: str = None) -> Any:
        """Obtém configuração específica"""
        if section not in self._config:
            return None
        if field is None:
            return self._config[section]
        return getattr(self._config[section], field, None)

    def set(self, section: str, field: str, value: Any) -> bool:
        """Define configuração específica"""
        if section not in self._config:
            logger.error(f"Seção de configuração não encontrada: {section}")
            return False

        current_dataclass = self._config[section]
        updated_values = asdict(current_dataclass)
        if field not in updated_values:
            logger.error(f"Campo de configuração desconhecido: {section}.{field}")
            return False

        updated_values[field] = value
        self._config[section] = type(current_dataclass)(**updated_values)
        logger.debug(f"Configuração atualizada: {section}.{field} = {value}")
        return True
