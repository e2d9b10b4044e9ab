from . import exceptions, search, pool, exact, fpt, preprocessing, result, \
        dispatch

__all__ = [
        'exceptions',
        'search',
        'pool',
        'exact',
        'fpt',
        'preprocessing',
        'result',
        'dispatch'
    ]
