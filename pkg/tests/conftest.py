"""GGT_SEED drives the randomized property tests only; every claim
check is deterministic."""

import os


def pytest_report_header(config):
    return f"GGT_SEED={os.environ.get('GGT_SEED', '17 (default)')}"
