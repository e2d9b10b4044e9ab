import argparse
import json
from argparse import ArgumentParser, Namespace
from typing import List, Dict, Any, Tuple, Optional

from ...logging import log
from .config_items import ConfigItemDefinition, \
    CanonicalValueExtractorInterface, Context, \
    not_set_token, valid_subcommands, get_config_map_for_subcommand, \
    get_subcommand_module

NAME = 'jrdegree'
DESCRIPTION = ('Compute, maximize and verify the JR and EJR degrees of '
               'approval-based committees - use jrdegree {subcommand} --help '
               'for additional information about subcommands')
COMMAND = 'jrdegree'

valid_contexts = {Context.ALL, Context.CLI}


class CliCanonicalValueExtractor(CanonicalValueExtractorInterface):

    def is_valid_source(self, source: Any) -> bool:
        return isinstance(source, Namespace)

    def get_canonical_value(self, definition: ConfigItemDefinition,
                            source: Namespace) -> Any:
        self.assert_is_valid_source(source)
        value = getattr(source, definition.property_name, not_set_token)

        # Unset repeatable options are lists holding only not_set_token;
        # set ones still carry that entry and it is discarded
        if isinstance(value, list):
            value = [item for item in value if item is not not_set_token]
            if not value:
                value = not_set_token
        return value


def create_split_and_append_action(
            delimiter: str,
            value_type=None,
            valid_options: Optional[Tuple[str, ...]] = None
        ):

    if value_type is None:
        value_type = str

    class SplitAndAppend(argparse.Action):

        def __call__(
                    self,
                    parser: argparse.ArgumentParser,
                    namespace: argparse.Namespace,
                    values,
                    option_string=None
                ):
            items = list(getattr(namespace, self.dest, None) or [])
            new_values = values.split(delimiter)
            try:
                new_items = [value_type(value.strip()) for value in new_values
                             if value.strip() != '']
            except ValueError as error:
                raise argparse.ArgumentError(self, str(error))
            if valid_options is not None:
                for item in new_items:
                    if item not in valid_options:
                        raise argparse.ArgumentError(
                                self,
                                f"invalid choice: {item!r} (choose from "
                                f"{', '.join(valid_options)})"
                            )
            items.extend(new_items)
            setattr(namespace, self.dest, items)

    return SplitAndAppend


def _help_text(definition: ConfigItemDefinition) -> str:
    if definition.hidden:
        return argparse.SUPPRESS
    if definition.is_flag() and definition.default:
        return (f'{definition.description} Enabled by default, use '
                f'--no-{definition.name} to disable.')
    return definition.description


def _add_flag(target_parser, definition: ConfigItemDefinition,
              names: List[str]) -> None:
    # both switches share one destination; the last one given wins
    target_parser.add_argument(
            *names,
            action='store_true',
            default=not_set_token,
            dest=definition.property_name,
            help=_help_text(definition)
        )
    target_parser.add_argument(
            f'--no-{definition.name}',
            action='store_false',
            default=not_set_token,
            dest=definition.property_name,
            help=argparse.SUPPRESS
            if definition.hidden or not definition.default
            else f'Disable --{definition.name}.'
        )


def _add_option(target_parser, definition: ConfigItemDefinition,
                names: List[str]) -> None:
    options: Dict[str, Any] = {
            'dest': definition.property_name,
            'help': _help_text(definition)
        }
    if definition.has_separator():
        options['default'] = [not_set_token]
        options['action'] = create_split_and_append_action(
                definition.meta.separator,
                definition.get_value_type(),
                definition.meta.valid_options
            )
    else:
        options['default'] = not_set_token
        options['type'] = definition.get_value_type()
        if definition.has_options_list():
            options['choices'] = definition.meta.valid_options
    target_parser.add_argument(*names, **options)


def add_to_parser(target_parser,
                  config_definition: ConfigItemDefinition) -> None:
    if config_definition.context not in valid_contexts:
        log.warning(
                f'Option {json.dumps(config_definition.name)} can only be '
                'set in the configuration file'
            )
        return
    if config_definition.name == 'help' or \
            config_definition.short_name == 'h':
        raise ValueError('The help option is reserved for argparse')
    names = [f'--{config_definition.name}']
    if config_definition.short_name:
        names.append(f'-{config_definition.short_name}')
    if config_definition.is_flag():
        _add_flag(target_parser, config_definition, names)
    else:
        _add_option(target_parser, config_definition, names)


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(prog=COMMAND, description=DESCRIPTION)
    parser.add_argument(
            '--version',
            action='store_true',
            default=False,
            dest='show_version',
            help='Display the version of jrdegree.'
        )
    subparsers = parser.add_subparsers(title='jrdegree subcommands',
                                       dest='subcommand')
    for subcommand in valid_subcommands:
        definitions = get_config_map_for_subcommand(subcommand)
        subparser = subparsers.add_parser(
                subcommand,
                prog=f'{COMMAND} {subcommand}',
                help=get_subcommand_module(subcommand).CLI_TITLE
            )
        for definition in definitions.values():
            add_to_parser(subparser, definition)
    return parser


def get_cli_values(
            arguments: Optional[List[str]] = None
        ) -> Tuple[ArgumentParser, Namespace, List[str]]:
    parser = build_parser()
    cli_values, trailing_arguments = parser.parse_known_args(arguments)
    if '--' in trailing_arguments:
        if trailing_arguments[0] != '--':
            unknowns = trailing_arguments[0:trailing_arguments.index('--')]
            unknowns = ', '.join(map(lambda x: json.dumps(x), unknowns))
            raise ValueError(f"Encountered unknown command arguments: "
                             f"{unknowns}")
        trailing_arguments = trailing_arguments[1:]
    for argument in trailing_arguments:
        if argument.startswith('-') and len(argument) > 1:
            parser.error(f'unrecognized arguments: {argument}')
    return parser, cli_values, trailing_arguments
