from typing import Dict, Any

from ...config.global_definitions import with_global_definitions
from .config_definitions import config_definitions

CLI_TITLE = 'Time committee rules over a directory of instances'
CONFIG_SECTION_NAME = 'BENCH'


def get_config_definitions() -> Dict[str, Dict[str, Any]]:
    return with_global_definitions(config_definitions)
