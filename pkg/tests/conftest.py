import json
from fractions import Fraction

import pytest
from hypothesis import settings

from geninv import GF, QI, SquareMatrix
from geninv.formats import matrix_to_dict

settings.register_profile("geninv", max_examples=60, deadline=None)
settings.load_profile("geninv")


def M(rows, domain=QI):
    return SquareMatrix.from_rows(rows, domain)


def half():
    return Fraction(1, 2)


@pytest.fixture
def worked_pair():
    """a and d from the worked 2x2 example over Q(i)."""
    return M([[1, 0], [1, 0]]), M([[1, 1], [0, 0]])


@pytest.fixture
def write_matrix(tmp_path):
    def _write(name, m):
        path = tmp_path / f"{name}.json"
        path.write_text(json.dumps(matrix_to_dict(m)))
        return str(path)
    return _write


GF2, GF3, GF5 = GF(2), GF(3), GF(5)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
