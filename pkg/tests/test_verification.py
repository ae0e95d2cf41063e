from __future__ import annotations

import pytest

from antichains import verification
from antichains.verification import SUITES, random_pairs, run_suites


def test_all_suites_pass_n3():
    checks = run_suites(3)
    assert checks and all(c.ok for c in checks), [c.line() for c in checks if not c.ok]


def test_random_pairs_are_ordered_and_seeded():
    a = random_pairs(4, 50, seed=1)
    b = random_pairs(4, 50, seed=1)
    assert a == b
    assert all(lo <= hi for lo, hi in a)
    assert a != random_pairs(4, 50, seed=2)


def test_negative_control(monkeypatch):
    monkeypatch.setattr(verification, "size_leveled", lambda lo, hi=None, parity="even": 1)
    checks = verification.sizes_suite(2)
    assert not checks[0].ok and checks[0].witness
    assert checks[0].line().startswith("FAIL")


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suites(2, ["nope"])
    assert "lattice" in SUITES
