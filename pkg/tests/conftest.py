import json
from pathlib import Path

import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture(scope="session")
def frozen():
    return json.loads((Path(__file__).parent / "data" / "frozen.json").read_text())


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(RESULTS):
        ok, detail = RESULTS[name]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {name}: {detail}")
