from enum import Enum
from typing import Any, List

from ...core.formats import serialize_instance
from ...core.instance import ApprovalInstance
from ...generators.cnf import read_dimacs, serialize_dimacs
from ...generators.families import gen_tiny, gen_prop_example, \
    gen_appendix_b, gen_pav_failure
from ...generators.randomized import gen_random
from ...generators.sat_reduction import sat_to_sparse_sat, pad_sparse_sat, \
    sparse_sat_to_voting
from ...generators.set_cover import read_set_cover, set_cover_to_mdjr, \
    set_cover_to_mdejr
from ...logging import log
from ...util.io import write_text
from ..command import Subcommand, UsageException, EXIT_OK, run_subcommand, \
    write_output


class GeneratorFamily(str, Enum):
    TINY = 'tiny'
    PROP_EXAMPLE = 'prop-example'
    APPENDIX_B = 'appendix-b'
    PAV_FAIL = 'pav-fail'
    SPARSE_SAT = 'sparse-sat'
    SAT_TO_SPARSE = 'sat2sparse'
    PAD_SPARSE = 'pad-sparse'
    SET_COVER_JR = 'setcover-jr'
    SET_COVER_EJR = 'setcover-ejr'
    RANDOM = 'random'

    def get_valid_options() -> List[str]:
        return [family.value for family in GeneratorFamily]


class GenCommand(Subcommand):

    def require(self, option: str) -> Any:
        value = self.config.get(option)
        if value is None:
            raise UsageException(
                    f'--{option} is required for the {self.family.value} '
                    f'family'
                )
        return value

    def get_family(self) -> GeneratorFamily:
        name = self.get_operands(1, 'one generator family')[0]
        try:
            return GeneratorFamily(name)
        except ValueError:
            raise UsageException(
                    f'Unknown generator family {name}, expected one of: '
                    f'{", ".join(GeneratorFamily.get_valid_options())}'
                )

    def generate_instance(self) -> ApprovalInstance:
        family = self.family
        if family is GeneratorFamily.TINY:
            return gen_tiny()
        if family is GeneratorFamily.PROP_EXAMPLE:
            return gen_prop_example()
        if family is GeneratorFamily.APPENDIX_B:
            return gen_appendix_b(self.require('P'))
        if family is GeneratorFamily.PAV_FAIL:
            return gen_pav_failure(self.require('p'))
        if family is GeneratorFamily.SPARSE_SAT:
            return sparse_sat_to_voting(read_dimacs(self.require('input')))
        if family is GeneratorFamily.SET_COVER_JR:
            return set_cover_to_mdjr(read_set_cover(self.require('input')))
        if family is GeneratorFamily.SET_COVER_EJR:
            return set_cover_to_mdejr(read_set_cover(self.require('input')))
        if self.config.seed is None:
            raise UsageException('--seed is required for the random family')
        return gen_random(
                self.require('n'),
                self.require('m'),
                self.require('k'),
                self.require('prob'),
                self.config.seed
            )

    def generate(self) -> str:
        if self.family is GeneratorFamily.SAT_TO_SPARSE:
            formula = sat_to_sparse_sat(read_dimacs(self.require('input')))
        elif self.family is GeneratorFamily.PAD_SPARSE:
            formula = pad_sparse_sat(
                    read_dimacs(self.require('input')),
                    self.config.exponent
                )
        else:
            instance = self.generate_instance()
            log.debug(f'Generated {self.family.value}: '
                      f'{instance.describe()}')
            return serialize_instance(instance)
        log.debug(
                f'Generated {self.family.value}: '
                f'{formula.variable_count} variables, '
                f'{formula.clause_count} clauses'
            )
        return serialize_dimacs(formula)

    def execute(self) -> int:
        self.family = self.get_family()
        output = self.generate()
        if self.config.out is None:
            write_output(output)
        else:
            path = write_text(self.config.out, output)
            log.info(f'Wrote {path}')
        return EXIT_OK


def main(config) -> int:
    return run_subcommand(config, GenCommand)
