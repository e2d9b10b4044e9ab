import errno
import json
import os
from argparse import Namespace
from configparser import ConfigParser, Error as ConfigParserError
from typing import Any, Dict, Optional, Tuple

from ...logging import log
from ...util.io import IoException
from .config_items import Context, ConfigItemDefinition, \
    CanonicalValueExtractorInterface, not_set_token, \
    get_config_map_for_subcommand, get_subcommand_module
from .defaults import INI_DEFAULT_PATH

valid_contexts = {Context.ALL, Context.CONFIG}


class IniCanonicalValueExtractor(CanonicalValueExtractorInterface):

    def __init__(self, config_section_name):
        self.config_section_name = config_section_name

    def is_valid_source(self, source: Any) -> bool:
        return isinstance(source, ConfigParser)

    def get_canonical_value(self, definition: ConfigItemDefinition,
                            source: ConfigParser) -> Any:
        self.assert_is_valid_source(source)
        value_type = definition.get_value_type()
        if value_type == bool:
            value = source.getboolean(self.config_section_name,
                                      definition.property_name,
                                      fallback=not_set_token)
        else:
            value = source.get(self.config_section_name,
                               definition.property_name,
                               fallback=not_set_token)
        if value is not_set_token or value_type == bool:
            return value
        if definition.has_separator():
            values = [value_type(item.strip()) for item in
                      value.split(definition.meta.separator) if item.strip()]
        else:
            values = [value_type(value)]
        if definition.has_options_list():
            for item in values:
                if item not in definition.meta.valid_options:
                    raise ValueError(
                            f'Invalid value for {definition.property_name} '
                            f'in the configuration file: {item}'
                        )
        return values if definition.has_separator() else values[0]


def get_definitions(subcommand: str) -> Dict[str, ConfigItemDefinition]:
    return get_config_map_for_subcommand(subcommand)


def get_config_section_name(subcommand: str) -> str:
    return get_subcommand_module(subcommand).CONFIG_SECTION_NAME


def get_ini_value_extractor(subcommand: str) -> IniCanonicalValueExtractor:
    return IniCanonicalValueExtractor(get_config_section_name(subcommand))


def get_ini_path(cli_values: Namespace) -> str:
    path = getattr(cli_values, 'configuration', None)
    if not isinstance(path, str):
        path = INI_DEFAULT_PATH
    return os.path.expanduser(path)


def load_ini(cli_values: Namespace) -> Tuple[ConfigParser, Optional[str]]:
    config = ConfigParser()
    ini_path = get_ini_path(cli_values)
    try:
        with open(ini_path) as file:
            config.read_file(file)
    except OSError as error:
        if error.errno == errno.EACCES:
            raise IoException(
                f"The current user cannot read the config file: "
                f"{json.dumps(ini_path)}") from error
        elif error.errno != errno.ENOENT:
            raise IoException(
                f"Unable to read the config file {json.dumps(ini_path)}: "
                f"{error}") from error
        # no config file: defaults and CLI values only
        log.debug(
            f"Config file not found: {json.dumps(ini_path)}. Using default "
            f"config values.")
        return (config, None)
    except ConfigParserError as error:
        raise IoException(
            f"Invalid config file {json.dumps(ini_path)}: {error}"
            ) from error
    subcommand = cli_values.subcommand
    config_section_name = get_config_section_name(subcommand)
    definitions = get_definitions(subcommand)
    for section_name in config.sections():
        if section_name != config_section_name:
            config.remove_section(section_name)
    if not config.has_section(config_section_name):
        return (config, ini_path)
    invalid_settings = False
    # keys are kebab-case in the definitions and snake_case in the INI
    for property_name in list(config.options(config_section_name)):
        key = property_name.replace('_', '-')
        if key not in definitions or '-' in property_name:
            log.warning(
                f"Ignoring unknown config setting {json.dumps(property_name)}")
            config.remove_option(config_section_name, property_name)
            invalid_settings = True
        elif definitions[key].context not in valid_contexts:
            log.warning(
                f"Ignoring setting that is not valid in the config file "
                f"context: {json.dumps(definitions[key].name)}.")
            config.remove_option(config_section_name, property_name)
            invalid_settings = True
    if invalid_settings:
        log.warning(
            "*** Settings not known to jrdegree or not intended for use in "
            "INI config files were discarded. ***")
    return (config, ini_path)
