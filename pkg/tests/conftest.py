import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

SEED = int(os.environ.get("COBEQ_SEED", "271828"))


def pytest_report_header(config):
    return f"cobeq randomized suites: seed={SEED} (override with COBEQ_SEED)"
