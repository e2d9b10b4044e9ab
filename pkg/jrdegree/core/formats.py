from typing import List, Optional, TextIO, Union, FrozenSet

from ..util.io import read_text, write_text
from .exceptions import InstanceFormatException, InstanceValidationException
from .instance import ApprovalInstance

COMMENT_PREFIX = '#'
INSTANCE_SUFFIX = '.abc'


def _parse_int(token: str, what: str, line_number: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise InstanceFormatException(
                f'Invalid {what}: {token!r}',
                line_number
            )


def _parse_header(line: str, line_number: int) -> List[int]:
    tokens = line.split()
    if len(tokens) != 3:
        raise InstanceFormatException(
                f'Header must be "n m k", received {line.strip()!r}',
                line_number
            )
    values = [_parse_int(token, 'header value', line_number)
              for token in tokens]
    n, m, k = values
    if n < 1 or m < 1 or k < 1:
        raise InstanceFormatException(
                'Header values must be positive integers',
                line_number
            )
    if k > m:
        raise InstanceFormatException(
                f'Committee size k={k} exceeds candidate count m={m}',
                line_number
            )
    return values


def _parse_ballot(line: str, m: int, line_number: int) -> FrozenSet[int]:
    ballot = set()
    for token in line.split():
        candidate = _parse_int(token, 'candidate id', line_number)
        if not 1 <= candidate <= m:
            raise InstanceFormatException(
                    f'Candidate id {candidate} is out of range 1..{m}',
                    line_number
                )
        if candidate in ballot:
            raise InstanceFormatException(
                    f'Candidate id {candidate} is repeated',
                    line_number
                )
        ballot.add(candidate)
    return frozenset(ballot)


def parse_instance(text: Union[str, TextIO]) -> ApprovalInstance:
    if not isinstance(text, str):
        text = text.read()
    header: Optional[List[int]] = None
    ballots: List[FrozenSet[int]] = []
    last_line_number = 0
    for line_number, line in enumerate(text.splitlines(), start=1):
        last_line_number = line_number
        if line.startswith(COMMENT_PREFIX):
            continue
        if header is None:
            if not line.strip():
                continue
            header = _parse_header(line, line_number)
            continue
        n, m, _k = header
        if len(ballots) == n:
            if line.strip():
                raise InstanceFormatException(
                        f'Found more than the declared {n} ballot lines',
                        line_number
                    )
            continue
        ballots.append(_parse_ballot(line, m, line_number))
    if header is None:
        raise InstanceFormatException('Missing "n m k" header', 1)
    n, m, k = header
    if len(ballots) != n:
        raise InstanceFormatException(
                f'Expected {n} ballot lines, found {len(ballots)}',
                last_line_number + 1
            )
    try:
        return ApprovalInstance(n, m, k, tuple(ballots))
    except InstanceValidationException as exception:
        raise InstanceFormatException(str(exception)) from exception


def serialize_instance(instance: ApprovalInstance) -> str:
    lines = [f'{instance.n} {instance.m} {instance.k}']
    for ballot in instance.ballots:
        lines.append(' '.join(str(candidate) for candidate in sorted(ballot)))
    return '\n'.join(lines) + '\n'


def read_instance(path: str) -> ApprovalInstance:
    return parse_instance(read_text(path))


def write_instance(instance: ApprovalInstance, path: str) -> str:
    return write_text(path, serialize_instance(instance))
