"""Property suites at reduced size; the full sizes run in test_acceptance."""

import property_suites as ps


def test_group_law_axioms():
    assert ps.group_law_axioms(60, seed=11) == 60


def test_chudnovsky_matches_weierstrass():
    assert ps.chudnovsky_vs_weierstrass(15, 8, seed=12) == 120


def test_disc_res_multiplicativity():
    assert ps.disc_res_multiplicativity(40, seed=13) == 40


def test_fiber_guard_nonzero():
    assert ps.fiber_guard_nonzero(5, seed=14) == 50
