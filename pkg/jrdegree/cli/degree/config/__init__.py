from typing import Dict, Any

from ...config.global_definitions import with_global_definitions
from .config_definitions import config_definitions

CLI_TITLE = 'Compute the JR and EJR degrees of a committee'
CONFIG_SECTION_NAME = 'DEGREE'


def get_config_definitions() -> Dict[str, Dict[str, Any]]:
    return with_global_definitions(config_definitions)
