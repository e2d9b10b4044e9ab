from ..core.exceptions import JrDegreeException


class SolverException(JrDegreeException):
    pass


class BudgetExceededException(SolverException):

    def __init__(self, required: int, budget: int):
        self.required = required
        self.budget = budget
        super().__init__(
                f'Enumerating {required} committees exceeds the budget of '
                f'{budget}'
            )


class EnumerationException(SolverException):
    pass
