from fractions import Fraction as F

import pytest

from quadrep import identities
from quadrep.constructions import H_sec4, derive_F_sec4
from quadrep.exact_arith import DomainError, UniPoly, poly_discriminant
from quadrep.identities import (
    IdentityRecord,
    get_identity,
    identity_catalog,
    random_rational,
    verify_identity,
)


def test_catalog_shape():
    ids = [r.id for r in identity_catalog()]
    assert ids == [f"I{k}" for k in range(1, 14)]
    assert "derive_H1H2_sec5" in get_identity("I7").depends
    with pytest.raises(DomainError):
        get_identity("I99")


@pytest.mark.parametrize("rec", identity_catalog(), ids=lambda r: r.id)
def test_smoke_tuple(rec):
    lhs, rhs = rec.evaluate(rec.smoke)
    assert rhs != 0
    # one identity holds up to the sign convention of the discriminant
    assert lhs == (-rhs if rec.id == "I2" else rhs)


def test_sign_convention_delta_is_constant():
    rep = verify_identity("I2", trials=6, seed=3)
    assert rep.status == "convention-delta" and rep.delta == -1 and rep.ok


@pytest.mark.parametrize("ident", ["I1", "I3", "I9", "I11", "I12"])
def test_cheap_identities_hold_exactly(ident):
    rep = verify_identity(ident, trials=8, seed=1)
    assert rep.status == "pass" and rep.passed == 8


def test_printed_sign_in_quartic_factor_fails():
    args = dict(b=F(2), c=F(-3), p0=F(1, 2), q0=F(5, 3), A1=F(7, 4), A2=F(-2), A3=F(3, 5), A4=F(-1, 7))
    rec = get_identity("I5")
    lhs, rhs = rec.evaluate(args)
    assert lhs == rhs
    G = derive_F_sec4(**args)[3]
    m = args["p0"] ** 2 + args["b"] * args["q0"] ** 2 + args["c"]
    f = UniPoly([m * m, args["A1"], args["A2"], args["A3"], args["A4"]])
    printed = rhs / H_sec4(*args.values()) * H_sec4(*args.values(), printed=True)
    assert poly_discriminant(G) != printed
    assert poly_discriminant(f) != 0


def test_broken_identity_is_reported(monkeypatch):
    fake = IdentityRecord("IX", "x^2 = x", ("x",), lambda x: x * x, lambda x: x)
    monkeypatch.setitem(identities._BY_ID, "IX", fake)
    rep = verify_identity("IX", trials=5)
    assert rep.status == "fail" and not rep.ok and rep.counterexamples


def test_same_seed_same_tuples():
    import random
    a = [random_rational(random.Random("7:I1")) for _ in range(3)]
    b = [random_rational(random.Random("7:I1")) for _ in range(3)]
    assert a == b
    assert verify_identity("I9", 3, seed=7).to_json() == verify_identity("I9", 3, seed=7).to_json()


def test_trials_must_be_positive():
    with pytest.raises(DomainError):
        verify_identity("I1", trials=0)
