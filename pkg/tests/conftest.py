from __future__ import annotations

import sys
from functools import cache

import pytest
from hypothesis import HealthCheck, settings

from ddf.corpus import BASES, build_corpus

BASE_NAMES = sorted(BASES)

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@cache
def corpus(name: str):
    return build_corpus(name, seed=7)


@pytest.fixture(params=BASE_NAMES)
def cp(request):
    return corpus(request.param)


def pytest_terminal_summary(terminalreporter):
    results = getattr(sys.modules.get("test_acceptance"), "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for n in sorted(results):
            terminalreporter.write_line(results[n])
