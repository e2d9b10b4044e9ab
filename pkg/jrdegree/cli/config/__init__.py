import sys
from argparse import Namespace
from types import SimpleNamespace
from typing import Any, List, Dict, Optional

from ...version import __version__
from .cli_parser import CliCanonicalValueExtractor, get_cli_values
from .config_items import ConfigItemDefinition, \
    AlwaysInvalidExtractor, CanonicalValueExtractorInterface, not_set_token, \
    get_config_map_for_subcommand
from .ini_parser import load_ini, get_ini_value_extractor


class Config(SimpleNamespace):

    def __init__(
                self,
                definitions,
                subcommand,
                ini_path: Optional[str] = None
            ):
        super().__init__()
        self.__definitions = definitions
        self.subcommand = subcommand
        self.ini_path = ini_path
        self.trailing_arguments = None

    def values(self) -> Dict[str, Any]:
        result: Dict[str, Any] = dict()
        for prop, value in vars(self).items():
            if (prop.startswith('_') or callable(value) or
                    isinstance(value, classmethod)):
                continue
            result[prop] = value
        return result

    def get(self, property_name) -> Any:
        return getattr(self, property_name)

    def define(self, property_name) -> ConfigItemDefinition:
        return self.__definitions[property_name]

    def has_ini_file(self) -> bool:
        return self.ini_path is not None


def create_config_object(
            subcommand: str,
            definitions: Dict[str, ConfigItemDefinition],
            trailing_arguments: List[str],
            value_extractors: List[CanonicalValueExtractorInterface],
            *ordered_sources
        ) -> Config:
    target = Config(definitions, subcommand)
    for source in ordered_sources:
        extractor = AlwaysInvalidExtractor()
        for candidate in value_extractors:
            if candidate.is_valid_source(source):
                extractor = candidate
                break
        for item_definition in definitions.values():
            new_value = extractor.get_canonical_value(item_definition, source)
            # later sources replace earlier values
            if new_value is not not_set_token:
                setattr(target, item_definition.property_name, new_value)
            elif not hasattr(target, item_definition.property_name):
                default = item_definition.default
                if default is not_set_token:
                    default = None
                if item_definition.has_separator() and \
                        isinstance(default, str):
                    default = [
                            item_definition.get_value_type()(item)
                            for item in
                            default.split(item_definition.meta.separator)
                        ]
                setattr(target, item_definition.property_name, default)
    target.trailing_arguments = trailing_arguments
    return target


def load_config(arguments: Optional[List[str]] = None) -> Config:
    """Build the configuration of one invocation from the definitions, the
    INI file and the command line, in increasing order of precedence"""
    parser, cli_values, trailing_arguments = get_cli_values(arguments)
    if getattr(cli_values, 'show_version', False) and \
            not cli_values.subcommand:
        print(f'jrdegree {__version__}')
        sys.exit(0)
    if not cli_values.subcommand:
        parser.print_help()
        sys.exit(0)
    subcommand = cli_values.subcommand
    ini_values, ini_path = load_ini(cli_values)
    config = create_config_object(
            subcommand,
            get_config_map_for_subcommand(subcommand),
            trailing_arguments,
            [
                get_ini_value_extractor(subcommand),
                CliCanonicalValueExtractor()
            ],
            ini_values,
            cli_values
        )
    config.ini_path = ini_path
    if getattr(cli_values, 'show_version', False):
        config.version = True
    return config


def namespace_for(subcommand: str, **values) -> Namespace:
    """Namespace shaped like parsed CLI values, for building configs in
    code"""
    return Namespace(subcommand=subcommand, **values)
