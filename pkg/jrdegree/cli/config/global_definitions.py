import copy
from typing import Any, Dict

from ...degree.cohesion import DEFAULT_COHESION_INDEX_LIMIT
from ...solvers.search import DEFAULT_COMMITTEE_BUDGET
from .defaults import INI_DEFAULT_PATH
from .value_types import positive_int

global_definitions: Dict[str, Dict[str, Any]] = {
    "json": {
        "description": "Write the report as compact JSON instead of text.",
        "context": "ALL",
        "argument_type": "FLAG",
        "default": False
    },
    "threads": {
        "short_name": "t",
        "description": "Number of worker processes used to enumerate "
                       "committees. Results do not depend on this value.",
        "context": "ALL",
        "argument_type": "OPTION",
        "default": 1,
        "meta": {
            "value_type": positive_int
        }
    },
    "budget": {
        "short_name": "b",
        "description": "Maximum number of committees any exhaustive search "
                       f"may enumerate (defaults to {DEFAULT_COMMITTEE_BUDGET}"
                       ").",
        "context": "ALL",
        "argument_type": "OPTION",
        "default": DEFAULT_COMMITTEE_BUDGET,
        "meta": {
            "value_type": positive_int
        }
    },
    "index-limit": {
        "description": "Maximum number of eligible candidate sets the EJR "
                       "cohesion index may hold (defaults to "
                       f"{DEFAULT_COHESION_INDEX_LIMIT}).",
        "context": "ALL",
        "argument_type": "OPTION",
        "default": DEFAULT_COHESION_INDEX_LIMIT,
        "meta": {
            "value_type": positive_int
        }
    },
    "seed": {
        "description": "Seed for every randomized path. Randomized "
                       "operations fail without one.",
        "context": "ALL",
        "argument_type": "OPTION",
        "default": None,
        "meta": {
            "value_type": int
        }
    },
    "configuration": {
        "short_name": "c",
        "description": "Path to a configuration INI file to use (defaults to"
                       f" \"{INI_DEFAULT_PATH}\").",
        "context": "CLI",
        "argument_type": "OPTION",
        "default": INI_DEFAULT_PATH
    },
    "verbose": {
        "short_name": "v",
        "description": "Enable verbose logging.",
        "context": "ALL",
        "argument_type": "FLAG",
        "default": False
    },
    "debug": {
        "short_name": "d",
        "description": "Enable debug logging and print tracebacks on errors.",
        "context": "ALL",
        "argument_type": "FLAG",
        "default": False
    },
    "quiet": {
        "short_name": "q",
        "description": "Suppress all log output other than the report.",
        "context": "ALL",
        "argument_type": "FLAG",
        "default": False
    },
    "version": {
        "description": "Display the version of jrdegree.",
        "context": "CLI",
        "argument_type": "FLAG",
        "default": False
    }
}


def with_global_definitions(
            definitions: Dict[str, Dict[str, Any]]
        ) -> Dict[str, Dict[str, Any]]:
    """Subcommand definitions followed by fresh copies of the global ones"""
    merged = copy.deepcopy(definitions)
    for name, definition in global_definitions.items():
        if name in merged:
            raise KeyError(f'Option {name} is already a global option')
        merged[name] = copy.deepcopy(definition)
    return merged
