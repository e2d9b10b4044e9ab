from . import exceptions, cohesion, oracles, naive, proportionality

__all__ = ['exceptions', 'cohesion', 'oracles', 'naive', 'proportionality']
