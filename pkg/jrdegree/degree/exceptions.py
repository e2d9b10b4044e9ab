from ..core.exceptions import JrDegreeException


class OracleCapExceededException(JrDegreeException):

    def __init__(self, message: str, size: int, cap: int):
        self.size = size
        self.cap = cap
        super().__init__(f'{message} ({size} > {cap})')
