from typing import Dict, Any

from ...config.value_types import positive_int, rational

config_definitions: Dict[str, Dict[str, Any]] = {
    "n": {
        "description": "Number of voters (random).",
        "context": "ALL",
        "argument_type": "OPTION",
        "default": None,
        "meta": {
            "value_type": positive_int
        }
    },
    "m": {
        "description": "Number of candidates (random).",
        "context": "ALL",
        "argument_type": "OPTION",
        "default": None,
        "meta": {
            "value_type": positive_int
        }
    },
    "k": {
        "description": "Committee size (random).",
        "context": "ALL",
        "argument_type": "OPTION",
        "default": None,
        "meta": {
            "value_type": positive_int
        }
    },
    "prob": {
        "description": "Approval probability as \"p/q\", an integer or a "
                       "decimal (random).",
        "context": "ALL",
        "argument_type": "OPTION",
        "default": None,
        "meta": {
            "value_type": rational
        }
    },
    "p": {
        "description": "Size parameter of the instance on which PAV does not "
                       "maximize the EJR degree (pav-fail, p >= 2).",
        "context": "CLI",
        "argument_type": "OPTION",
        "default": None,
        "meta": {
            "value_type": int
        }
    },
    "P": {
        "description": "Size parameter of the block instance on which no "
                       "JR committee reaches a high degree (appendix-b, "
                       "P >= 2).",
        "context": "CLI",
        "argument_type": "OPTION",
        "default": None,
        "meta": {
            "value_type": int
        }
    },
    "exponent": {
        "short_name": "e",
        "description": "Padding exponent: pad-sparse adds (clauses + "
                       "variables + 1)^exponent fresh variables.",
        "context": "ALL",
        "argument_type": "OPTION",
        "default": 1,
        "meta": {
            "value_type": positive_int
        }
    },
    "input": {
        "short_name": "i",
        "description": "DIMACS CNF file (sparse-sat, sat2sparse, pad-sparse) "
                       "or set-cover file (setcover-jr, setcover-ejr).",
        "context": "CLI",
        "argument_type": "OPTION",
        "default": None
    },
    "out": {
        "short_name": "o",
        "description": "Write the output to this path instead of stdout. "
                       "Parent directories are created.",
        "context": "CLI",
        "argument_type": "OPTION",
        "default": None
    }
}
