import numpy as np
import pytest

from _acceptance_log import RESULTS


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def pytest_terminal_summary(terminalreporter):
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(RESULTS, key=lambda k: (int(k.split(".")[0].rstrip("abcdefghij")), k)):
        ok, detail = RESULTS[key]
        terminalreporter.write_line(f"criterion {key:<4} {'PASS' if ok else 'FAIL'}  {detail}")
