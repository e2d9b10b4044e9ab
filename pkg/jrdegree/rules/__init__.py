from . import exceptions, pav, greedy, local_search

__all__ = ['exceptions', 'pav', 'greedy', 'local_search']
