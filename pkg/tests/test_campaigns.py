"""Every registered campaign replays clean at a small order bound."""

from __future__ import annotations

import pytest

from translatable.campaigns import THEOREMS
from translatable.search import verify

SMALL_BOUND = 6


@pytest.mark.parametrize("theorem_id", sorted(THEOREMS))
def test_campaign_passes_at_small_bound(theorem_id):
    bound = min(THEOREMS[theorem_id].default_max_n, SMALL_BOUND)
    report = verify(theorem_id, max_n=bound)
    assert report.passed, [f.as_dict() for f in report.failures]


def test_every_result_names_its_campaign():
    report = verify("semigroup-criterion", max_n=5)
    assert {r.theorem for r in report.results} == {"semigroup-criterion"}
    assert all(r.status in ("pass", "fail", "expected-fail") for r in report.results)
