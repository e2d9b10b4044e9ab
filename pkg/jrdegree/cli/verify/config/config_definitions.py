from typing import Dict, Any

from ...config.value_types import positive_int
from ..verify import Axiom

config_definitions: Dict[str, Dict[str, Any]] = {
    "committee": {
        "short_name": "w",
        "description": "Comma-separated ids of the k committee members.",
        "context": "CLI",
        "argument_type": "OPTION",
        "meta": {
            "separator": ",",
            "value_type": int
        }
    },
    "axiom": {
        "short_name": "a",
        "description": "Axiom to check.",
        "context": "ALL",
        "argument_type": "OPTION",
        "default": Axiom.JR.value,
        "meta": {
            "valid_options": Axiom.get_valid_options()
        }
    },
    "min-degree": {
        "short_name": "m",
        "description": "Degree the committee must reach. 1 checks the plain "
                       "axiom; larger values check the degree.",
        "context": "ALL",
        "argument_type": "OPTION",
        "default": 1,
        "meta": {
            "value_type": positive_int
        }
    }
}
