import random

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from freeccc import parse_signature
from freeccc.generate import TermGenerator

DEFAULT_SIGNATURE = """\
object D A B C
arrow f : A |- B
arrow g : B |- C
arrow h : D*A |- B
indeterminate x : T |- D
"""

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

# criterion number -> (passed, detail); filled in by test_acceptance
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


@pytest.fixture(scope="session")
def sig():
    return parse_signature(DEFAULT_SIGNATURE)


@pytest.fixture(scope="session")
def sig_file(tmp_path_factory):
    path = tmp_path_factory.mktemp("sig") / "default.sig"
    path.write_text(DEFAULT_SIGNATURE)
    return path


seeds = st.integers(min_value=0, max_value=2**32 - 1)


def arrow_from(sig, seed, poly=False, depth=3, **kw):
    gen = TermGenerator(sig, random.Random(seed), poly=poly)
    return gen.random_arrow(depth, **kw)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {n}: {detail}")
