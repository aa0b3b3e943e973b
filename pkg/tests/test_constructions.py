import random
from fractions import Fraction as F

import pytest

from quadrep.constructions import (
    BUILDERS,
    PROJ_X,
    H_sec4,
    L4,
    apply_psi,
    build,
    build_sec2,
    build_sec3_case1,
    build_sec3_case2,
    build_sec3_case3,
    build_sec4_case1,
    build_sec4_case2,
    build_sec5,
    derive_G_sec2,
    family_params,
    fiber_polynomial,
    reduced_model,
)
from quadrep.constructions.base import QuadElt, kappa_for
from quadrep.constructions.printed import (
    fiber_quartic_ex5_2,
    map_ex2_4,
    map_ex3_2,
    map_ex3_3,
    map_ex4_3,
    map_ex5_2,
)
from quadrep.exact_arith import DomainError, UniPoly, poly_discriminant

from conftest import sample_construction


def surface_identity_vanishes(con):
    """The surface equation composed with psi is zero in Q[U, w]/(w^2 - g)."""
    rep, g, form = con.psi_rep, con.g, con.form
    val = rep.p.mul(rep.p, g).scale(UniPoly([form.a])).add(rep.q.mul(rep.q, g).scale(UniPoly([form.b])))
    if form.c:
        val = val.add(QuadElt.const(form.c))
    if con.projection == PROJ_X:
        lhs, arg = val.mul(val, g), rep.coord
    else:
        lhs, arg = rep.coord.mul(rep.coord, g), val
    rhs = QuadElt.const(con.f.coeffs[-1])
    for c in reversed(con.f.coeffs[:-1]):
        rhs = rhs.mul(arg, g).add(QuadElt.const(c))
    diff = lhs.add(rhs.scale(UniPoly([-1])))
    return diff.A.is_zero() and diff.B.is_zero()


@pytest.mark.parametrize("family", sorted(BUILDERS))
def test_psi_lands_on_surface_identically(family):
    con = sample_construction(family, random.Random(family))
    assert surface_identity_vanishes(con)
    assert poly_discriminant(con.g) != 0


def test_first_construction():
    con = build_sec2(1, 3, 0, 1, 1, 0)
    assert con.g == UniPoly([6, 0, 0, 0, -2])
    assert con.f == UniPoly([3, 0, 0, 0, 1])
    (P,) = [P for P in apply_psi(con, 1, 2) if P.coord == map_ex2_4(1, 2)[1]]
    assert (P.p, P.q, P.coord) == tuple(map_ex2_4(1, 2))


def test_first_construction_sextic_has_genus_two():
    G = derive_G_sec2(11, 0, 12, -5, 1, 0)
    assert G == UniPoly([-528, 0, -440, 0, 1200, 0, 1000])
    assert poly_discriminant(G) != 0


def test_even_quartic_case1():
    con = build_sec3_case1(3, 1, 0, 2)
    assert (con.f[2], con.f[0]) == (F(-15, 2), F(15))
    model = reduced_model(con.g)
    assert model.g == UniPoly([10, 0, 60, 0, -6])
    assert con.g == model.g * 9
    assert con.g == L4(3, 1, 0, 2) * -6
    assert con.on_surface(*map_ex3_2(-3, 8))
    pts = apply_psi(con, *model.to_aux(-3, 8))
    assert tuple(map_ex3_2(-3, 8)) in [(P.p, P.q, P.coord) for P in pts]


def test_closed_form_matches_elimination():
    rng = random.Random(8)
    for _ in range(10):
        b, p0, q0, r0 = (F(rng.randint(1, 9), rng.randint(1, 5)) for _ in range(4))
        try:
            con = build_sec3_case1(b, p0, q0, r0)
        except DomainError:
            continue
        assert con.g == L4(b, p0, q0, r0) * (-2 * b)


def test_even_quartic_case2():
    con = build_sec3_case2(2, 1, 1, 1)
    model = reduced_model(con.g)
    assert model.g == UniPoly([-9, 0, 4, 0, 4])
    pts = apply_psi(con, *model.to_aux(F(3, 2), F(9, 2)))
    assert tuple(map_ex3_3(F(3, 2), F(9, 2))) in [(P.p, P.q, P.coord) for P in pts]


def test_even_quartic_case3():
    con = build_sec3_case3(-5, F(1, 2), 1, F(5, 8), F(1, 8))
    assert (con.f[2], con.f[0]) == (F(-39, 32), F(81, 256))
    model = reduced_model(con.g)
    assert model.g == UniPoly([-11, -10, 85]) * UniPoly([-13, -14, 107]) * 2
    with pytest.raises(DomainError):
        build_sec3_case3(-5, F(1, 2), 1, F(5, 8), F(1, 4))


def test_quartic_case_with_constant():
    con = build_sec4_case1(1, 1, 1, 1, 24, 288)
    assert con.f == UniPoly([9, 24, 288, 16, 4])
    model = reduced_model(con.g)
    assert model.g == UniPoly([130, 0, 63, 0, -3])
    pts = apply_psi(con, *model.to_aux(F(9, 2), F(53, 4)))
    assert tuple(map_ex4_3(F(9, 2), F(53, 4))) in [(P.p, P.q, P.coord) for P in pts]
    small = build_sec4_case1(1, 1, 1, 1, 2, 2)
    assert small.f(UniPoly([0, 12])) == con.f


def test_printed_sign_of_discriminant_factor_fails():
    args = (F(2), F(3), F(1, 2), F(5, 3), F(7, 4), F(-2), F(3, 5), F(-1, 7))
    assert H_sec4(*args) != H_sec4(*args, printed=True)
    con = build_sec4_case2(1, 1, 1, 1, 2, 3, 4)
    assert surface_identity_vanishes(con)


def test_cubic_case_map():
    con = build_sec5(3, a=1, b=1, p0=2, q0=0, v=-16)
    assert con.family == "Sec5Case4"
    assert con.f == UniPoly([480, -128, 2, 1])
    pts = apply_psi(con, *reduced_model(con.g).to_aux(1, 4))
    assert tuple(map_ex5_2(1, 1, 4)) in [(P.p, P.q, P.coord) for P in pts]
    assert fiber_polynomial(con, 10) == fiber_quartic_ex5_2(1, 10).monic()


def test_reduced_model_of_cubic_case():
    con = build_sec5(3, a=1, b=1, p0=2, q0=0, v=-16)
    model = reduced_model(con.g)
    assert model.g == UniPoly([1, 0, 1]) * UniPoly([3, 0, 1]) * 2
    u, w = model.to_aux(1, 4)
    assert con.on_aux(u, w)
    assert model.from_aux(u, w) == (1, 4)


@pytest.mark.parametrize("family", ["Sec5Case2", "Sec5Case3"])
def test_printed_prefactor_sign_is_rejected(family):
    # the corrected sign is forced: the negated curve is not kappa^2 * g
    con = sample_construction(family, random.Random(family + "sign"))
    disc = con.extra["elimination"].disc
    kappa_for(disc, con.g)
    with pytest.raises(DomainError):
        kappa_for(disc, con.g * -1)


def test_build_rejects_unknown_parameters():
    with pytest.raises(DomainError):
        build("Sec2", {"b": 1, "c": 3, "d": 0, "e": 1, "p0": 1, "q0": 0, "z": 2})
    with pytest.raises(DomainError):
        family_params("Sec9")
    assert family_params("Sec5Case5") == {"a", "b", "p0", "q0", "Y0", "Z"}


def test_off_curve_point_rejected():
    con = build_sec2(1, 3, 0, 1, 1, 0)
    with pytest.raises(DomainError):
        apply_psi(con, 1, 3)


def test_sec5_rejects_singular_choices():
    with pytest.raises(DomainError):
        build_sec5(1, a=1, b=1, p0=1, q0=1, t=F(1, 2))
    with pytest.raises(DomainError):
        build_sec5(3, a=1, b=1, p0=1, q0=1, v=2 * 4)
