from . import exceptions, instance, witness, formats

__all__ = ['exceptions', 'instance', 'witness', 'formats']
