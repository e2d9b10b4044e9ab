from ...degree.oracles import degree_report
from ...degree.proportionality import proportionality_profile
from ..command import Subcommand, EXIT_OK, run_subcommand, write_output
from ..reporting import ReportFormat, get_report_format, format_json, \
    format_fields


class DegreeCommand(Subcommand):

    def execute(self) -> int:
        instance = self.read_instance_operand()
        committee = self.get_committee(instance)
        report = degree_report(instance, committee, self.config.index_limit)
        profile = None
        if self.config.proportionality:
            profile = proportionality_profile(
                    instance,
                    committee,
                    index_limit=self.config.index_limit
                )
        if get_report_format(self.config) is ReportFormat.JSON:
            data = report.to_dict()
            data['committee'] = committee.to_list()
            if profile is not None:
                data['proportionality'] = profile.to_dict()
            output = format_json(data)
        else:
            fields = [
                    ('instance', instance.describe()),
                    ('committee', committee),
                    ('jr_degree', report.jr_degree),
                    ('ejr_degree', report.ejr_degree),
                    ('jr_witness', report.jr_witness),
                    ('ejr_witness', report.ejr_witness)
                ]
            if profile is not None:
                fields.append(
                        ('proportionality', profile.to_text() or None)
                    )
            output = format_fields(fields)
        write_output(output)
        return EXIT_OK


def main(config) -> int:
    return run_subcommand(config, DegreeCommand)
