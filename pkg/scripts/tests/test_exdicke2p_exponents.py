import json
import os
import subprocess
import sys
from pathlib import Path

import pytest
import yaml


@pytest.fixture
def script_env():
    env = os.environ.copy()
    env["LOGGING_LEVEL"] = "INFO"
    return env


def test_run_exdicke2p_exponents(script_env):

    exec = Path(__file__).parent.parent / "exdicke2p_exponents.py"
    cwd = Path(os.environ["DATA"])
    result = subprocess.run(
        [sys.executable, exec],
        cwd=cwd,
        env=script_env,
        capture_output=True,
        text=True
    )
    print(result.stdout)
    print(result.stderr)

    assert result.returncode == 0
    assert "PASS" in result.stdout

    with open(cwd / "exponents.json") as fh:
        payload = json.load(fh)
    assert payload['report']['status'] == 'PASS'
    assert payload['params']['n_qubits'] == 1000
    with open(cwd / "exponents_summary.yaml") as fh:
        summary = yaml.safe_load(fh)
    assert summary['status'] == 'PASS'
