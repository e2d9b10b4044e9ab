from typing import Dict, Any

from ....solvers.dispatch import Rule, get_valid_rules

config_definitions: Dict[str, Dict[str, Any]] = {
    "rule": {
        "short_name": "r",
        "description": "Committee rule to run. pav, mdjr, mdejr, brute-jr and "
                       "brute-ejr enumerate committees and are bounded by "
                       "--budget.",
        "context": "ALL",
        "argument_type": "OPTION",
        "default": Rule.MDEJR.value,
        "meta": {
            "valid_options": get_valid_rules()
        }
    },
    "lambda": {
        "short_name": "l",
        "description": "Swap threshold of lspav as \"p/q\", an integer or a "
                       "decimal. Defaults to 1/(2k²).",
        "context": "ALL",
        "argument_type": "OPTION",
        "default": None
    },
    "initial": {
        "short_name": "i",
        "description": "Comma-separated ids of the committee lspav starts "
                       "from. Without it lspav starts from a committee drawn "
                       "with --seed, or from {1..k}.",
        "context": "CLI",
        "argument_type": "OPTION",
        "meta": {
            "separator": ",",
            "value_type": int
        }
    },
    "trace": {
        "description": "Include the swaps performed by lspav in the report.",
        "context": "ALL",
        "argument_type": "FLAG",
        "default": False
    },
    "collapse-duplicates": {
        "description": "Keep at most k candidates per identical approver set "
                       "before enumerating. Committees are reported in the "
                       "original candidate ids.",
        "context": "ALL",
        "argument_type": "FLAG",
        "default": False
    }
}
