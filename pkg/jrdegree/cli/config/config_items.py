import abc
import importlib
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from types import ModuleType
from typing import Optional, Any, Dict, Tuple, Type, Callable, Union

valid_subcommands: Tuple[str, ...] = ('degree', 'solve', 'gen', 'verify',
                                      'bench')

# set by the loader itself, never by a definition
reserved_names = frozenset({'subcommand', 'trailing_arguments'})


class Context(Enum):
    ALL = 1
    """Accepted on the command line and in the INI file"""
    CLI = 2
    """Command line only"""
    CONFIG = 3
    """INI file only"""


class ArgumentType(Enum):
    FLAG = 1
    """Boolean switch; --no-<name> is added to turn it off"""
    OPTION = 2
    """Named option followed by a value"""


class _NotSet:

    def __repr__(self) -> str:
        return '<not set>'


not_set_token = _NotSet()
"""Compared by identity to tell unset values apart from None"""


@dataclass(frozen=True)
class ConfigItemMeta:
    valid_options: Optional[Tuple[str, ...]] = None
    separator: Optional[str] = None
    value_type: Union[Type, Callable] = str


@dataclass(frozen=True)
class ConfigItemDefinition:
    """One option of a subcommand, built from its definition dictionary"""

    name: str
    property_name: str
    description: str
    context: Context
    argument_type: ArgumentType
    default: Any = not_set_token
    hidden: bool = False
    short_name: Optional[str] = None
    meta: Optional[ConfigItemMeta] = None

    def has_options_list(self) -> bool:
        return self.meta is not None and bool(self.meta.valid_options)

    def has_separator(self) -> bool:
        return self.meta is not None and bool(self.meta.separator)

    def is_flag(self) -> bool:
        return self.argument_type is ArgumentType.FLAG

    def get_value_type(self):
        if self.is_flag():
            return bool
        return self.meta.value_type if self.meta else str

    @classmethod
    def from_dict(cls, name: str, source: Dict[str, Any]):
        meta = source.get('meta')
        if meta:
            meta = dict(meta)
            if meta.get('valid_options'):
                meta['valid_options'] = tuple(meta['valid_options'])
            meta = ConfigItemMeta(**meta)
        definition = cls(
                name=name,
                property_name=name.replace('-', '_'),
                description=source['description'],
                context=Context[source['context']],
                argument_type=ArgumentType[source['argument_type']],
                default=source.get('default', not_set_token),
                hidden=source.get('hidden', False),
                short_name=source.get('short_name'),
                meta=meta or None
            )
        if definition.is_flag() and not isinstance(definition.default, bool):
            raise ValueError(
                    f'Flag {name} needs a boolean default, received '
                    f'{definition.default!r}'
                )
        return definition


class CanonicalValueExtractorInterface(metaclass=abc.ABCMeta):

    @abc.abstractmethod
    def is_valid_source(self, source: Any) -> bool:
        """Whether values can be read from the source"""
        raise NotImplementedError

    def assert_is_valid_source(self, source: Any) -> None:
        if not self.is_valid_source(source):
            raise ValueError(f'Invalid configuration source: {type(source)}')

    @abc.abstractmethod
    def get_canonical_value(self, definition: ConfigItemDefinition,
                            source: Any) -> Any:
        """The typed value the source holds for the definition, or
        not_set_token"""
        raise NotImplementedError


class AlwaysInvalidExtractor(CanonicalValueExtractorInterface):

    def is_valid_source(self, source: Any) -> bool:
        return False

    def get_canonical_value(self, definition: ConfigItemDefinition,
                            source: Any) -> Any:
        self.assert_is_valid_source(source)


def config_definitions_to_config_map(
            config_definitions: Dict[str, Dict[str, Any]]
        ) -> Dict[str, ConfigItemDefinition]:
    """Build the definitions of one subcommand, rejecting names that would
    clash on the command line"""
    result: Dict[str, ConfigItemDefinition] = {}
    claimed = set()
    short_names = set()
    for name, source in config_definitions.items():
        definition = ConfigItemDefinition.from_dict(name, source)
        if name in reserved_names:
            raise KeyError(f'The option name {name} is reserved')
        if name in claimed:
            raise KeyError(f'The option name {name} is already in use')
        claimed.add(name)
        if definition.is_flag():
            claimed.add(f'no-{name}')
        if definition.short_name:
            if definition.short_name in short_names:
                raise KeyError(
                        f'The short name {definition.short_name} is already '
                        'in use'
                    )
            short_names.add(definition.short_name)
        result[name] = definition
    return result


@lru_cache(maxsize=len(valid_subcommands))
def get_subcommand_module(command_name: str) -> ModuleType:
    if command_name not in valid_subcommands:
        raise ValueError(f'Unsupported subcommand {command_name}')
    return importlib.import_module(f'jrdegree.cli.{command_name}.config')


@lru_cache(maxsize=len(valid_subcommands))
def get_config_map_for_subcommand(
            command_name: str
        ) -> Dict[str, ConfigItemDefinition]:
    return config_definitions_to_config_map(
            get_subcommand_module(command_name).get_config_definitions()
        )
