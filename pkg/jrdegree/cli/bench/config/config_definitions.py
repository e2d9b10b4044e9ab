from typing import Dict, Any

from ....solvers.dispatch import get_valid_rules
from ....core.formats import INSTANCE_SUFFIX

config_definitions: Dict[str, Dict[str, Any]] = {
    "rules": {
        "short_name": "r",
        "description": "Comma-separated rules to run on every instance.",
        "context": "ALL",
        "argument_type": "OPTION",
        "default": "greedyav,lspav,mdjr,mdejr",
        "meta": {
            "separator": ",",
            "valid_options": get_valid_rules()
        }
    },
    "suffix": {
        "description": "Only files with this suffix are read from the suite "
                       "directory.",
        "context": "ALL",
        "argument_type": "OPTION",
        "default": INSTANCE_SUFFIX
    },
    "output-path": {
        "short_name": "o",
        "description": "Write the CSV table to this path instead of stdout.",
        "context": "ALL",
        "argument_type": "OPTION",
        "default": None
    }
}
