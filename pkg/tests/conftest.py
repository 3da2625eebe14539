import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from grassmann_codes.cache import build_bundle
from grassmann_codes.field import build_field
from grassmann_codes.pipeline import decoder_from_bundle

_bundles = {}
_decoders = {}


def bundle_for(q, m):
    if (q, m) not in _bundles:
        _bundles[q, m] = build_bundle(q, m)
    return _bundles[q, m]


def decoder_for(q, m):
    if (q, m) not in _decoders:
        _decoders[q, m] = decoder_from_bundle(bundle_for(q, m))
    return _decoders[q, m]


@pytest.fixture(scope="session")
def f16():
    return build_field(2, 4)


@pytest.fixture(scope="session")
def b24():
    return bundle_for(2, 4)


@pytest.fixture(scope="session")
def b25():
    return bundle_for(2, 5)


@pytest.fixture(scope="session")
def b34():
    return bundle_for(3, 4)


@pytest.fixture(scope="session")
def dec24():
    return decoder_for(2, 4)


@pytest.fixture(scope="session")
def dec25():
    return decoder_for(2, 5)


ACCEPTANCE_LINES = []


def record(criterion, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {criterion}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
