import importlib
import sys
from typing import List, Optional

from ..util.io import IoException
from .command import EXIT_INVALID_INPUT, print_error
from .config import load_config


def main(arguments: Optional[List[str]] = None):
    try:
        config = load_config(arguments)
    except (ValueError, IoException) as error:
        print_error(f'Error: {error}')
        sys.exit(EXIT_INVALID_INPUT)

    subcommand_module = importlib.import_module(
            f'.{config.subcommand}.{config.subcommand}',
            package='jrdegree.cli'
        )
    exit_code = subcommand_module.main(config)
    sys.exit(exit_code)


if __name__ == '__main__':
    main()
