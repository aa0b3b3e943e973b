"""The eight end-to-end acceptance criteria, each timed against its limit.

Every criterion prints a single PASS/FAIL line (also under output capture).
"""

import time
from fractions import Fraction as F

import property_suites as ps
from quadrep.constructions import apply_psi, build, reduced_model
from quadrep.elliptic import WCurve, certify_infinite_order, find_isomorphism, torsion_subgroup, wpt
from quadrep.exact_arith import UniPoly, poly_discriminant, squarefree_part
from quadrep.fixtures import run_fixture
from quadrep.identities import verify_all
from quadrep.localsolve import locally_solvable
from quadrep.pointgen import aux_model, cz_demo, generate, search_integer_points_u, u_from_curve_point


def _criterion(capsys, n, title, limit, body):
    start = time.perf_counter()
    err = None
    try:
        detail = body()
    except AssertionError as exc:
        err, detail = exc, f"assertion failed: {exc}"
    secs = time.perf_counter() - start
    ok = err is None and secs < limit
    with capsys.disabled():
        print(f"\n[criterion {n}] {'PASS' if ok else 'FAIL'}  {title}  ({secs:.2f}s, limit {limit}s)  {detail or ''}")
    if err is not None:
        raise err
    assert secs < limit, f"criterion {n} took {secs:.1f}s"


def test_criterion_1_even_quartic_chain(capsys):
    def body():
        con = build("Sec3Case3", {"b": -5, "s": F(1, 2), "p0": F(5, 8), "q0": F(1, 8), "r0": 1})
        f = con.f
        assert (f[2], f[0]) == (F(-39, 32), F(81, 256))
        E10 = WCurve(588, 36, 0)
        am = aux_model(con, (F(-1, 3), F(32, 9)))
        assert am.cubic.curve.j_invariant == E10.j_invariant
        assert find_isomorphism(E10, am.cubic.curve) is not None
        G = wpt(36, -900)
        assert certify_infinite_order(E10, G)
        s = generate(con, G, 15, curve=E10, am=am)
        xs = {P.coord for P in s.emitted}
        assert len(xs) >= 15
        for P in s.emitted:
            X = P.coord
            assert (P.p ** 2 - 5 * P.q ** 2) ** 2 == X ** 4 - F(39, 32) * X ** 2 + F(81, 256)
        return f"{len(xs)} distinct X"
    _criterion(capsys, 1, "even quartic chain with b = -5", 30, body)


def test_criterion_2_cubic_chain(capsys):
    def body():
        E1 = WCurve(2, -128, 480)
        T = torsion_subgroup(E1)
        assert T.structure == (4,) and wpt(4, 8) in T.points
        con = build("Sec5Case4", {"a": 1, "b": 1, "p0": 2, "q0": 0, "v": -16})
        model = reduced_model(con.g)
        images = [(P.p, P.q, P.coord) for P in apply_psi(con, *model.to_aux(1, 4))]
        assert (3, 1, -20) in images
        assert 3 ** 2 + 1 ** 2 == 10 and E1.contains(wpt(10, -20))
        E11 = WCurve(-1, -4, -2)
        # Y and -Y share p^2 + q^2, so 20 distinct Y give at least 10 form values
        s = generate(con, wpt(F(-3, 4), F(-1, 8)), 20, curve=E11, am=aux_model(con, (1, 4)))
        values = {P.p ** 2 + P.q ** 2 for P in s.emitted}
        assert len(values) >= 10
        for P in s.emitted:
            assert P.coord ** 2 == E1.cubic(P.p ** 2 + P.q ** 2)
        return f"{len(values)} distinct p^2 + q^2"
    _criterion(capsys, 2, "cubic chain Y^2 = f1(p^2 + q^2)", 30, body)


def test_criterion_3_printed_auxiliary_curves(capsys):
    checks = [
        ("ex3.2", 20, UniPoly([10, 0, 60, 0, -6]), [(-1, 8), (-3, 8)],
         lambda P: (P.p ** 2 + 3 * P.q ** 2) ** 2 == P.coord ** 4 - F(15, 2) * P.coord ** 2 + 15),
        ("ex3.3", 20, UniPoly([-9, 0, 4, 0, 4]), [(F(3, 2), F(9, 2))],
         lambda P: (P.p ** 2 + 2 * P.q ** 2) ** 2 == P.coord ** 4 - 2 * P.coord ** 2 + 10),
        ("ex4.3", 10, UniPoly([130, 0, 63, 0, -3]), [(F(9, 2), F(53, 4))],
         lambda P: (P.p ** 2 + P.q ** 2 + 1) ** 2 == UniPoly([9, 24, 288, 16, 4])(P.coord)),
    ]

    def body():
        counts = []
        for name, need, curve, base_points, on_surface in checks:
            res = run_fixture(name, count=need)
            assert res.ok, [c for c in res.checks if not c[1]]
            assert res.data["reduced_curve"] == curve
            for u, w in base_points:
                assert curve(u) == F(w) ** 2
            values = {P.coord for P in res.points}
            assert len(values) >= need and all(on_surface(P) for P in res.points)
            counts.append(len(values))
        return "distinct projections " + "/".join(map(str, counts))
    _criterion(capsys, 3, "printed auxiliary curves and point streams", 120, body)


def test_criterion_4_identity_catalog(capsys):
    def body():
        reports = verify_all(20)
        assert len(reports) == 13
        deltas = []
        for r in reports:
            assert r.ok and r.passed == 20, r.to_json()
            if r.status == "convention-delta":
                deltas.append(f"{r.id} x {r.delta}")
        return "13/13 identities; convention deltas: " + (", ".join(deltas) or "none")
    _criterion(capsys, 4, "identity catalog by random specialization", 600, body)


def test_criterion_5_local_solvability(capsys):
    def body():
        assert not locally_solvable(UniPoly([18, 0, 0, 0, -54]), 2).solvable
        quad = UniPoly([10001, -4046, 71009]) * UniPoly([-239735, 28322, 2388313])
        assert not locally_solvable(quad * 102, 17).solvable
        for p in (2, 3, 5, 7):
            assert locally_solvable(UniPoly([18, 0, 0, 0, -2]), p).solvable
        return "unsolvable at 2 and at 17; solvable at 2, 3, 5, 7"
    _criterion(capsys, 5, "local solvability fixtures", 60, body)


def test_criterion_6_integer_point_search(capsys):
    def body():
        pts = search_integer_points_u(10 ** 5)
        assert [u for u, _ in pts] == [-6, -4, -3, -2, 0, 2, 6, 48]
        for u, v in pts:
            assert v * v == u * (u + 2) * (u + 6) and v >= 0
        classes = {squarefree_part(2 * u) for u, v in pts if u > 0 and v != 0}
        assert classes == {1, 3, 6} and classes <= {1, 2, 3, 6}
        u, _ = u_from_curve_point(2, F(1, 4), F(15, 4))
        assert u.denominator != 1           # the class-2 point is not an integer point
        res = run_fixture("rem5.3")
        assert res.ok
        return f"classes {sorted(classes)}; b = 2 point maps to u = {u} (not integral)"
    _criterion(capsys, 6, "integer points on v^2 = u(u+2)(u+6) up to 10^5", 60, body)


def test_criterion_7_genus_two_demo(capsys):
    def body():
        d = cz_demo(4)
        X, Y = F(1, 2), F(15, 4)
        assert Y * Y == (X * X + 1) * (X * X + 11) and d["generator_verified"]
        assert len(d["rows"]) == 4 and all(r["on_curve"] for r in d["rows"])
        assert d["sextic_degree"] == 6 and poly_discriminant(d["sextic"]) != 0
        return "4 multiples on the curve; sextic discriminant nonzero"
    _criterion(capsys, 7, "multiples on (X^2+1)(X^2+11) and the genus-2 sextic", 10, body)


def test_criterion_8_property_suites(capsys):
    def body():
        counts = [ps.group_law_axioms(200), ps.chudnovsky_vs_weierstrass(50, 8),
                  ps.disc_res_multiplicativity(100), ps.fiber_guard_nonzero(50)]
        return "cases " + "/".join(map(str, counts))
    _criterion(capsys, 8, "group law, Chudnovsky, Disc/Res, fiber guard", 300, body)
