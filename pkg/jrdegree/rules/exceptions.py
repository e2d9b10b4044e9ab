from ..core.exceptions import JrDegreeException


class InvalidLambdaException(JrDegreeException):
    pass


class SwapException(JrDegreeException):
    pass
