import signal
import sys
import traceback
from multiprocessing import parent_process
from typing import List, Optional, Type

from ..core.exceptions import JrDegreeException, InstanceFormatException, \
    InstanceValidationException, CommitteeException
from ..core.formats import read_instance
from ..core.instance import ApprovalInstance, Committee, committee_from_ids
from ..degree.exceptions import OracleCapExceededException
from ..generators.exceptions import GeneratorException
from ..logging import log, set_level_from_flags
from ..rules.exceptions import InvalidLambdaException
from ..solvers.exceptions import BudgetExceededException, SolverException
from ..solvers.pool import ExceptionContainer, terminate_active_pools
from ..util.io import IoException
from ..version import __version__

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INVALID_INPUT = 2
EXIT_BUDGET_EXCEEDED = 3
EXIT_INVALID_LAMBDA = 4
EXIT_UNEXPECTED_ERROR = 5
EXIT_INTERRUPTED = 130


class UsageException(JrDegreeException):
    pass


# checked in order, so subclasses precede their bases
exit_codes = (
        (BudgetExceededException, EXIT_BUDGET_EXCEEDED),
        (InvalidLambdaException, EXIT_INVALID_LAMBDA),
        (InstanceFormatException, EXIT_INVALID_INPUT),
        (InstanceValidationException, EXIT_INVALID_INPUT),
        (CommitteeException, EXIT_INVALID_INPUT),
        (OracleCapExceededException, EXIT_BUDGET_EXCEEDED),
        (GeneratorException, EXIT_INVALID_INPUT),
        (SolverException, EXIT_INVALID_INPUT),
        (UsageException, EXIT_INVALID_INPUT),
        (IoException, EXIT_INVALID_INPUT),
        (ValueError, EXIT_INVALID_INPUT)
    )


def get_exit_code(exception: BaseException) -> int:
    for exception_type, code in exit_codes:
        if isinstance(exception, exception_type):
            return code
    return EXIT_UNEXPECTED_ERROR


def print_error(message: str) -> None:
    if sys.stderr is not None:
        print(message, file=sys.stderr)
    else:
        print(message)


def write_output(text: str) -> None:
    """Write a fully rendered report to stdout"""
    if not text.endswith('\n'):
        text += '\n'
    sys.stdout.write(text)
    sys.stdout.flush()


def display_version() -> None:
    print(f'jrdegree {__version__}')


class Subcommand:

    def __init__(self, config):
        self.config = config

    def execute(self) -> int:
        raise NotImplementedError()

    def terminate(self) -> None:
        terminate_active_pools()

    def get_operands(self, count: int, names: str) -> List[str]:
        operands = self.config.trailing_arguments or []
        if len(operands) != count:
            raise UsageException(
                    f'Expected {names}, received {len(operands)} '
                    f'positional argument(s)'
                )
        return operands

    def read_instance_operand(self) -> ApprovalInstance:
        path = self.get_operands(1, 'one instance path')[0]
        instance = read_instance(path)
        log.debug(f'Loaded {path}: {instance.describe()}')
        return instance

    def get_committee(
                self,
                instance: ApprovalInstance,
                option: str = 'committee',
                required: bool = True
            ) -> Optional[Committee]:
        ids = self.config.get(option.replace('-', '_'))
        if not ids:
            if required:
                raise UsageException(f'--{option} is required')
            return None
        return committee_from_ids(instance, ids)


def initialize_interrupt_handling(command: Subcommand) -> None:

    def handle_interrupt(signal_number: int, stack) -> None:
        if parent_process() is None:
            log.info('Interrupted, stopping...')
            command.terminate()
        sys.exit(EXIT_INTERRUPTED)

    signal.signal(signal.SIGINT, handle_interrupt)


def run_subcommand(config, command_class: Type[Subcommand]) -> int:
    command = None
    try:
        if config.version:
            display_version()
            return EXIT_OK
        set_level_from_flags(config.quiet, config.debug, config.verbose)
        command = command_class(config)
        initialize_interrupt_handling(command)
        return command.execute()
    except BaseException as exception:
        if isinstance(exception, SystemExit):
            raise exception
        if command is not None:
            command.terminate()
        if isinstance(exception, ExceptionContainer):
            if config.debug:
                print_error(exception.trace)
                return get_exit_code(exception.exception)
            exception = exception.exception
        if isinstance(exception, KeyboardInterrupt):
            return EXIT_INTERRUPTED
        if config.debug:
            print_error(''.join(traceback.format_exception(
                    type(exception), exception, exception.__traceback__)))
            return get_exit_code(exception)
        print_error(f'Error: {exception}')
        return get_exit_code(exception)
