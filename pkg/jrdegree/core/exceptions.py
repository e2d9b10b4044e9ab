from typing import Optional


class JrDegreeException(Exception):
    pass


class InstanceFormatException(JrDegreeException):

    def __init__(self, message: str, line_number: Optional[int] = None):
        self.line_number = line_number
        if line_number is not None:
            message = f'Line {line_number}: {message}'
        super().__init__(message)


class InstanceValidationException(JrDegreeException):
    pass


class CommitteeException(JrDegreeException):
    pass
