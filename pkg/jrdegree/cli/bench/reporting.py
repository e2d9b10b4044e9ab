import csv
import io
from enum import Enum
from typing import List, NamedTuple, Optional


class BenchColumn(str, Enum):
    INSTANCE = 'instance'
    TASK = 'task'
    STATUS = 'status'
    VALUE = 'value'
    MICROSECONDS = 'microseconds'

    def get_valid_options() -> List[str]:
        return [column.value for column in BenchColumn]


class BenchStatus(str, Enum):
    OK = 'ok'
    ERROR = 'error'
    BUDGET_EXCEEDED = 'budget-exceeded'


class BenchRow(NamedTuple):
    instance: str
    task: str
    status: BenchStatus
    value: Optional[int] = None
    microseconds: Optional[int] = None

    def to_list(self) -> List[str]:
        return [
                self.instance,
                self.task,
                self.status.value,
                '' if self.value is None else str(self.value),
                '' if self.microseconds is None else str(self.microseconds)
            ]

    def to_dict(self) -> dict:
        return {
                BenchColumn.INSTANCE.value: self.instance,
                BenchColumn.TASK.value: self.task,
                BenchColumn.STATUS.value: self.status.value,
                BenchColumn.VALUE.value: self.value,
                BenchColumn.MICROSECONDS.value: self.microseconds
            }


class BenchReport:

    def __init__(self):
        self.rows: List[BenchRow] = []

    def add_row(self, row: BenchRow) -> None:
        self.rows.append(row)

    def has_status(self, status: BenchStatus) -> bool:
        return any(row.status is status for row in self.rows)

    def to_csv(self) -> str:
        target = io.StringIO()
        writer = csv.writer(target, lineterminator='\n')
        writer.writerow(BenchColumn.get_valid_options())
        for row in self.rows:
            writer.writerow(row.to_list())
        return target.getvalue()

    def to_list(self) -> List[dict]:
        return [row.to_dict() for row in self.rows]
