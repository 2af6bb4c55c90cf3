import shutil
import time

import pytest

from dimer_residues.engine import RecordCache, compute_range

MAX_N = 192


@pytest.fixture(scope="session")
def warm_cache(tmp_path_factory):
    """Cache file holding B_1..B_192 from the discriminant route (built once)."""
    path = tmp_path_factory.mktemp("warm") / "records.jsonl"
    t0 = time.perf_counter()
    compute_range(range(1, MAX_N + 1), "discriminant", cache=RecordCache(path))
    warm_cache.seconds = time.perf_counter() - t0
    return path


@pytest.fixture(scope="session")
def b_table(warm_cache):
    return {n: rec.b for n, rec in RecordCache(warm_cache).load().items()}


@pytest.fixture
def cache_path(tmp_path, monkeypatch):
    path = tmp_path / "records.jsonl"
    monkeypatch.setenv("DIMER_RESIDUES_CACHE", str(path))
    return path


@pytest.fixture
def warm_cache_path(cache_path, warm_cache):
    shutil.copy(warm_cache, cache_path)
    return cache_path


_acceptance_lines = []


@pytest.fixture(scope="session")
def acceptance_log():
    return _acceptance_lines


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
