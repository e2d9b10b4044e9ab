import os

from ...core.exceptions import JrDegreeException
from ...core.formats import read_instance
from ...core.instance import ApprovalInstance
from ...degree.exceptions import OracleCapExceededException
from ...logging import log
from ...solvers.dispatch import Rule, solve
from ...solvers.exceptions import BudgetExceededException
from ...solvers.pool import ExceptionContainer
from ...util.io import IoException, list_files, write_text
from ...util.timing import Timer, unit_microseconds
from ..command import Subcommand, EXIT_OK, EXIT_BUDGET_EXCEEDED, \
    run_subcommand, write_output
from ..reporting import ReportFormat, get_report_format, format_json
from .reporting import BenchReport, BenchRow, BenchStatus

LOAD_TASK = 'load'
"""Task name of the row recorded for an instance that cannot be read"""

JR_RULES = {Rule.GREEDY_AV, Rule.MDJR, Rule.BRUTE_JR}
SIZE_LIMIT_EXCEPTIONS = (BudgetExceededException, OracleCapExceededException)


class BenchCommand(Subcommand):

    def run_task(
                self,
                name: str,
                instance: ApprovalInstance,
                rule: Rule
            ) -> BenchRow:
        timer = Timer()
        try:
            result = solve(
                    instance,
                    rule,
                    seed=self.config.seed,
                    budget=self.config.budget,
                    workers=self.config.threads,
                    index_limit=self.config.index_limit
                )
        except (JrDegreeException, ExceptionContainer) as error:
            exception = error.exception \
                if isinstance(error, ExceptionContainer) else error
            if not isinstance(exception, JrDegreeException):
                raise
            log.warning(f'{name} {rule.value}: {exception}')
            status = BenchStatus.BUDGET_EXCEEDED \
                if isinstance(exception, SIZE_LIMIT_EXCEPTIONS) \
                else BenchStatus.ERROR
            return BenchRow(name, rule.value, status)
        timer.stop()
        # JR rules are scored by the degree they maximize
        value = result.jr_degree if rule in JR_RULES else result.ejr_degree
        return BenchRow(
                name,
                rule.value,
                BenchStatus.OK,
                value,
                timer.get_elapsed(unit_microseconds)
            )

    def execute(self) -> int:
        suite = self.get_operands(1, 'one suite directory')[0]
        rules = [Rule(name) for name in self.config.rules]
        report = BenchReport()
        paths = list_files(suite, self.config.suffix)
        log.info(f'Benchmarking {len(paths)} instance(s) from {suite}')
        for path in paths:
            name = os.path.basename(path)
            try:
                instance = read_instance(path)
            except (JrDegreeException, IoException) as exception:
                log.warning(f'Skipping {name}: {exception}')
                report.add_row(BenchRow(name, LOAD_TASK, BenchStatus.ERROR))
                continue
            for rule in rules:
                report.add_row(self.run_task(name, instance, rule))
        if get_report_format(self.config) is ReportFormat.JSON:
            output = format_json(report.to_list())
        else:
            output = report.to_csv()
        if self.config.output_path is None:
            write_output(output)
        else:
            write_text(self.config.output_path, output)
        if report.has_status(BenchStatus.BUDGET_EXCEEDED):
            return EXIT_BUDGET_EXCEEDED
        return EXIT_OK


def main(config) -> int:
    return run_subcommand(config, BenchCommand)
