import pytest

from quadrep.fixtures import FIXTURES, run_fixture


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_fixture_passes(name):
    res = run_fixture(name)
    failed = [n for n, ok in res.checks if not ok]
    assert res.ok and not failed, failed
    assert all(P.verified for P in res.points)


def test_derived_constant_differs_from_printed():
    res = run_fixture("ex3.5")
    assert str(res.data["ratio_to_printed"]) == "5/3"
    assert any("102" in note for note in res.notes)


def test_unknown_fixture():
    with pytest.raises(Exception):
        run_fixture("ex0.0")
