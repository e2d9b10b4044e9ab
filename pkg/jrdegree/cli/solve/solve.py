from ...solvers.dispatch import solve
from ..command import Subcommand, EXIT_OK, run_subcommand, write_output
from ..reporting import ReportFormat, get_report_format, format_json, \
    format_fields, append_block


class SolveCommand(Subcommand):

    def execute(self) -> int:
        instance = self.read_instance_operand()
        initial = self.get_committee(instance, 'initial', required=False)
        result = solve(
                instance,
                self.config.rule,
                threshold=self.config.get('lambda'),
                initial=initial,
                seed=self.config.seed,
                budget=self.config.budget,
                workers=self.config.threads,
                collapse_duplicates=self.config.collapse_duplicates,
                index_limit=self.config.index_limit
            )
        if get_report_format(self.config) is ReportFormat.JSON:
            output = format_json(result.to_dict(self.config.trace))
        else:
            output = format_fields([
                    ('rule', result.rule),
                    ('committee', result.committee),
                    ('jr_degree', result.jr_degree),
                    ('ejr_degree', result.ejr_degree),
                    ('c_max_proven', result.c_max_proven),
                    ('enumerated', result.enumerated),
                    ('extended_loop_bound', result.extended_loop_bound),
                    ('collapsed', result.collapsed)
                ])
            if self.config.trace and result.trace is not None:
                output += f'swaps: {result.trace.swap_count}\n'
                output = append_block(output, 'trace', result.trace.to_text())
        write_output(output)
        return EXIT_OK


def main(config) -> int:
    return run_subcommand(config, SolveCommand)
