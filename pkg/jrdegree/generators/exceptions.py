from typing import Optional

from ..core.exceptions import JrDegreeException


class GeneratorException(JrDegreeException):
    pass


class InputFormatException(GeneratorException):

    def __init__(self, message: str, line_number: Optional[int] = None):
        self.line_number = line_number
        if line_number is not None:
            message = f'Line {line_number}: {message}'
        super().__init__(message)


class CnfFormatException(InputFormatException):
    pass


class SetCoverFormatException(InputFormatException):
    pass


class SparsityException(GeneratorException):
    pass


class PaddingBudgetException(GeneratorException):

    def __init__(self, required: int, budget: int):
        self.required = required
        self.budget = budget
        super().__init__(
                f'Padding requires {required} new variables, which exceeds '
                f'the budget of {budget}'
            )
