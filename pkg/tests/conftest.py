import os
from typing import Callable

import pytest

from jrdegree.core.instance import ApprovalInstance
from jrdegree.generators.families import gen_tiny, gen_prop_example, \
    gen_pav_failure, gen_appendix_b

GOLDEN_DIRECTORY = os.path.join(os.path.dirname(__file__), 'goldens')


@pytest.fixture
def tiny() -> ApprovalInstance:
    return gen_tiny()


@pytest.fixture
def prop_example() -> ApprovalInstance:
    return gen_prop_example()


@pytest.fixture
def pav_fail_2() -> ApprovalInstance:
    return gen_pav_failure(2)


@pytest.fixture
def appendix_b_2() -> ApprovalInstance:
    return gen_appendix_b(2)


@pytest.fixture
def golden() -> Callable[[str, str], None]:
    """Compare text with the committed file tests/goldens/<name>"""

    def check(name: str, text: str) -> None:
        path = os.path.join(GOLDEN_DIRECTORY, name)
        if not os.path.exists(path):
            pytest.fail(f'Golden file {name} is missing')
        with open(path, 'r', encoding='utf-8', newline='') as file:
            assert file.read() == text

    return check


@pytest.fixture
def write_file(tmp_path) -> Callable[[str, str], str]:

    def write(name: str, content: str) -> str:
        path = tmp_path / name
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(content, encoding='utf-8')
        return str(path)

    return write
