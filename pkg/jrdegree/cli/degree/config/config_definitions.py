from typing import Dict, Any

from ....degree.proportionality import DEFAULT_PROFILE_CANDIDATE_CAP

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
    "proportionality": {
        "short_name": "p",
        "description": "Also report the proportionality profile, the minimum "
                       "average satisfaction of the cohesive groups per "
                       "level. Limited to instances with at most "
                       f"{DEFAULT_PROFILE_CANDIDATE_CAP} candidates.",
        "context": "ALL",
        "argument_type": "FLAG",
        "default": False
    }
}
