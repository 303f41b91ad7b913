from __future__ import annotations

import pytest

from helpers import applicable_verdicts
from omnicolor.errors import UnknownFixture
from omnicolor.fixtures import FIXTURES, fixture

# checks each deliberately broken fixture must fail; everything else must pass
EXPECTED_FAILURES = {
    "broken-jacobi": {"lie", "dirac:graph"},
    "broken-l3": {"two-term", "jacobiator"},
    "crossed-broken": {"crossed-module"},
}


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_fixture_verdicts(name):
    f = fixture(name)
    assert f.description
    verdicts = applicable_verdicts(f)
    failing = {k for k, v in verdicts.items() if not v.passed}
    assert failing == EXPECTED_FAILURES.get(name, set()), {k: verdicts[k].render_text() for k in failing}
    for k in failing:
        assert any(c.witness is not None for c in verdicts[k].failures())


def test_broken_jacobi_documents_its_witness():
    f = fixture("broken-jacobi")
    w = applicable_verdicts(f)["lie"]["jacobi-J1"].witness
    assert ", ".join(w.args) in f.description


def test_unknown_fixture():
    with pytest.raises(UnknownFixture):
        fixture("no-such-algebra")
