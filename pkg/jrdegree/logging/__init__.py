import logging
from typing import Optional

DEFAULT_LOGGER_NAME = 'jrdegree'

logging.basicConfig(format='%(message)s')
log = logging.getLogger(DEFAULT_LOGGER_NAME)
root_log = logging.getLogger()

initial_handler: Optional[logging.Handler] = None


def set_level_from_flags(
            quiet: bool = False,
            debug: bool = False,
            verbose: Optional[bool] = None
        ) -> None:
    if quiet:
        log.setLevel(logging.CRITICAL)
    elif debug:
        log.setLevel(logging.DEBUG)
    elif verbose:
        log.setLevel(logging.INFO)
    else:
        log.setLevel(logging.WARNING)


def remove_initial_handler() -> None:
    """Detach the console handler installed by basicConfig.

    Worker processes call this before installing a queue handler so records
    are emitted once, by the parent.
    """
    global initial_handler
    if initial_handler is not None or not root_log.handlers:
        return
    initial_handler = root_log.handlers[0]
    root_log.removeHandler(initial_handler)
