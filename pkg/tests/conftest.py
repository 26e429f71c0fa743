import json
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))


@pytest.fixture
def wave_doc(tmp_path):
    def write(modulus, u="0.1", phase=None, **extra):
        phase = phase if phase is not None else ["0"] * len(modulus)
        data = {"u": u, "phase_radius": "1",
                "amplitudes": {"polar": {"modulus": modulus, "phase": phase}}, **extra}
        path = tmp_path / "wave.json"
        path.write_text(json.dumps(data))
        return path
    return write


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is not None and module.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in module.RESULTS:
            terminalreporter.write_line(line)
