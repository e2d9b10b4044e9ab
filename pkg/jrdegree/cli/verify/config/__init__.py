from typing import Dict, Any

from ...config.global_definitions import with_global_definitions
from .config_definitions import config_definitions

CLI_TITLE = 'Check that a committee satisfies JR or EJR'
CONFIG_SECTION_NAME = 'VERIFY'


def get_config_definitions() -> Dict[str, Dict[str, Any]]:
    return with_global_definitions(config_definitions)
