from typing import Dict, Any

from ...config.global_definitions import with_global_definitions
from .config_definitions import config_definitions

CLI_TITLE = 'Run a committee rule and report the degrees of its output'
CONFIG_SECTION_NAME = 'SOLVE'


def get_config_definitions() -> Dict[str, Dict[str, Any]]:
    return with_global_definitions(config_definitions)
