# tests/conftest.py
import os
import pytest

home_dicke2p = os.path.abspath(os.path.join(os.path.dirname(__file__), "../.."))
test_dir = os.path.join(home_dicke2p, 'scripts', 'tests', 'tests_output')
run_dir = os.path.join(test_dir, 'RUNDIRS', 'dicke2p')


@pytest.fixture(scope="session", autouse=True)
def set_env_vars():
    os.environ["HOMEdicke2p"] = home_dicke2p
    pythonpath = os.environ.get("PYTHONPATH", "")
    os.environ["PYTHONPATH"] = f"{pythonpath}:{os.path.join(home_dicke2p, 'ush', 'python')}"
    os.environ["DATA"] = run_dir


@pytest.fixture(autouse=True, scope="session")
def isolate_test_output():
    os.makedirs(run_dir, exist_ok=True)
    os.chdir(run_dir)
