from . import exceptions, families, cnf, sat_reduction, set_cover, randomized

__all__ = [
        'exceptions',
        'families',
        'cnf',
        'sat_reduction',
        'set_cover',
        'randomized'
    ]
