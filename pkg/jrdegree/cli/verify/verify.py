from enum import Enum
from typing import List

from ...degree.oracles import jr_degree, ejr_degree
from ...logging import log
from ..command import Subcommand, EXIT_OK, EXIT_VIOLATION, run_subcommand, \
    write_output
from ..reporting import ReportFormat, get_report_format, format_json, \
    format_fields


class Axiom(str, Enum):
    JR = 'jr'
    EJR = 'ejr'

    def get_valid_options() -> List[str]:
        return [axiom.value for axiom in Axiom]


class VerifyCommand(Subcommand):

    def execute(self) -> int:
        instance = self.read_instance_operand()
        committee = self.get_committee(instance)
        axiom = Axiom(self.config.axiom)
        if axiom is Axiom.JR:
            report = jr_degree(instance, committee)
            degree, witness = report.jr_degree, report.jr_witness
        else:
            report = ejr_degree(instance, committee, self.config.index_limit)
            degree, witness = report.ejr_degree, report.ejr_witness
        minimum = self.config.min_degree
        # without a cohesive group the axiom holds vacuously
        satisfied = degree is None or degree >= minimum
        if degree is None:
            log.info('The instance has no cohesive group')
        if get_report_format(self.config) is ReportFormat.JSON:
            output = format_json({
                    'axiom': axiom.value,
                    'committee': committee.to_list(),
                    'degree': degree,
                    'min_degree': minimum,
                    'satisfied': satisfied,
                    'witness': None if satisfied else witness.to_dict()
                })
        else:
            output = format_fields([
                    ('axiom', axiom.value),
                    ('committee', committee),
                    ('degree', degree),
                    ('min_degree', minimum),
                    ('satisfied', satisfied),
                    ('witness', None if satisfied else witness)
                ])
        write_output(output)
        return EXIT_OK if satisfied else EXIT_VIOLATION


def main(config) -> int:
    return run_subcommand(config, VerifyCommand)
