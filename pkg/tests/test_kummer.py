from fractions import Fraction

import pytest

from tropical_kummer import (
    Distinct,
    EquivalentMinus,
    EquivalentPlus,
    ProductTypeError,
    Vec2,
    Vec3,
    affine_pieces,
    build_quartic,
    contains,
    coplanarity_report,
    g_action,
    injectivity_check,
    lagrange_reduce,
    psi_eval,
    theta_constants,
    two_torsion_images,
    vertex_sign_diagnostics,
)
from tropical_kummer.sampling import (
    random_integer_vector,
    random_irreducible_surface,
    random_point,
    rng_for,
)

F = Fraction
H = F(1, 2)


def test_psi_examples(hexagonal):
    assert psi_eval(hexagonal, Vec2(0, 0)) == Vec3(H, H, H)
    assert psi_eval(hexagonal, Vec2(H, 0)) == Vec3(-H, 0, 0)


def test_psi_is_lattice_periodic(hexagonal, skew_hexagonal, unit_square):
    for s in (hexagonal, skew_hexagonal, unit_square):
        for k in range(25):
            rng = rng_for(41, "periodic", k)
            x = random_point(rng, 3)
            shift = random_integer_vector(rng, 3)
            assert psi_eval(s, x) == psi_eval(s, x + shift)


def test_psi_product_type_collapses(unit_square):
    for k in range(40):
        x = random_point(rng_for(43, "collapse", k), 3)
        assert psi_eval(unit_square, x) == psi_eval(unit_square, Vec2(x.x, -x.y))


def test_g_action_examples():
    p = (0, H, H, H)
    assert g_action(((0, 1, 2, 3), False), p) == Vec3(H, H, H)
    assert g_action(((1, 0, 3, 2), False), p) == Vec3(-H, 0, 0)
    assert g_action(((0, 1, 2, 3), True), p) == Vec3(-H, -H, -H)


def test_g_action_rejects_bad_input():
    with pytest.raises(ValueError):
        g_action(((0, 0, 1, 2), False), (0, 1, 2, 3))
    with pytest.raises(ValueError):
        g_action(((0, 1, 2, 3), False), (0, 1, 2))


def test_quartic_vertices_symmetric_example(hexagonal):
    quartic = build_quartic(hexagonal)
    expected = {
        (H, H, H),
        (-H, 0, 0),
        (0, -H, 0),
        (0, 0, -H),
        (-H, -H, -H),
        (H, 0, 0),
        (0, H, 0),
        (0, 0, H),
    }
    assert {v.as_tuple() for v in quartic.vertices} == expected
    # Edges from the antipodal base vertex span the parallelepiped.
    base = quartic.vertex("tau_tilde_0")
    edges = {
        (quartic.vertex(f"tau_{i}") - base).as_tuple() for i in (1, 2, 3)
    }
    assert edges == {(0, H, H), (H, 0, H), (H, H, 0)}


def test_quartic_requires_irreducible(unit_square):
    with pytest.raises(ProductTypeError):
        build_quartic(unit_square)


def test_quartic_skew_example(skew_hexagonal):
    quartic = build_quartic(skew_hexagonal)
    assert quartic.vertex("tau_0") == Vec3(H, F(3, 4), F(3, 4))


def test_quartic_vertex_set_is_antipodally_stable(skew_hexagonal):
    vertices = set(build_quartic(skew_hexagonal).vertices)
    assert vertices == {-v for v in vertices}


def test_face_offsets_come_in_opposite_pairs(hexagonal, skew_hexagonal):
    for s in (hexagonal, skew_hexagonal):
        faces = build_quartic(s).faces
        by_normal = {}
        for f in faces:
            by_normal.setdefault(f.normal, []).append(f.offset)
        assert len(by_normal) == 3
        for offsets in by_normal.values():
            assert len(offsets) == 2
            assert offsets[0] == -offsets[1]


def test_contains_examples(hexagonal):
    quartic = build_quartic(hexagonal)
    assert contains(quartic, quartic.vertex("tau_0"))
    assert not contains(quartic, Vec3(0, 0, 0))
    assert contains(quartic, psi_eval(hexagonal, Vec2(F(1, 5), F(1, 7))))


def test_contains_rejects_points_off_the_faces(hexagonal):
    quartic = build_quartic(hexagonal)
    # On the right plane but outside the face quadrilateral.
    assert not contains(quartic, Vec3(F(5, 2), F(5, 2), F(9, 2)))


def test_surface_coverage(hexagonal, skew_hexagonal):
    for s in (hexagonal, skew_hexagonal):
        quartic = build_quartic(s)
        for k in range(60):
            x = random_point(rng_for(47, "coverage", k), 4)
            assert contains(quartic, psi_eval(s, x))


def test_injectivity_examples(hexagonal):
    y = Vec2(F(1, 5), 0)
    assert injectivity_check(hexagonal, y, y + Vec2(3, -2)) == EquivalentPlus(
        Vec2(3, -2)
    )
    assert injectivity_check(hexagonal, y, -y) == EquivalentMinus(Vec2(0, 0))
    verdict = injectivity_check(hexagonal, y, Vec2(0, F(1, 5)))
    assert isinstance(verdict, Distinct)


def test_injectivity_rejects_product(unit_square):
    with pytest.raises(ProductTypeError):
        injectivity_check(unit_square, Vec2(0, 0), Vec2(0, 0))


def test_injectivity_biconditional_sampled(hexagonal):
    s = hexagonal
    for k in range(200):
        rng = rng_for(53, "pairs", k)
        y = random_point(rng, 3)
        mode = rng.randrange(3)
        if mode == 0:
            yp = y + random_integer_vector(rng, 3)
        elif mode == 1:
            yp = -y + random_integer_vector(rng, 3)
        else:
            yp = random_point(rng, 3)
        verdict = injectivity_check(s, y, yp)
        same = psi_eval(s, y) == psi_eval(s, yp)
        assert isinstance(verdict, (EquivalentPlus, EquivalentMinus)) == same


def test_affine_pieces_sigma_linear_part(hexagonal):
    pieces = affine_pieces(hexagonal)
    sigma = next(p for p in pieces if p.cell.label == "sigma1")
    assert sigma.linear_part == ((1, 0), (0, 1), (1, 1))
    assert sigma.unimodular


def test_affine_pieces_all_unimodular(hexagonal, skew_hexagonal):
    for s in (hexagonal, skew_hexagonal):
        pieces = affine_pieces(s)
        assert len(pieces) == 18
        assert all(p.unimodular for p in pieces)


def test_affine_pieces_antipodal_cells_negate(hexagonal):
    pieces = {p.cell.label: p for p in affine_pieces(hexagonal)}
    for kind in ("sigma", "tau", "rho"):
        for q in (1, 2, 3):
            a = pieces[f"{kind}{q}"]
            b = pieces[f"{kind}{q + 3}"]
            assert b.linear_part == tuple(
                (-r[0], -r[1]) for r in a.linear_part
            )


def test_affine_pieces_offset_reproduces_values(hexagonal):
    for piece in affine_pieces(hexagonal):
        rows = piece.linear_part
        for p in piece.cell.vertices:
            dual = hexagonal.gram.mul_vec(p)  # dual-basis coordinates
            image = Vec3(
                rows[0][0] * dual.x + rows[0][1] * dual.y + piece.offset.x,
                rows[1][0] * dual.x + rows[1][1] * dual.y + piece.offset.y,
                rows[2][0] * dual.x + rows[2][1] * dual.y + piece.offset.z,
            )
            assert image == psi_eval(hexagonal, p)


def test_unimodularity_on_seeded_irreducible_surfaces():
    for k in range(6):
        s = random_irreducible_surface(rng_for(59, "unimodular", k))
        assert all(p.unimodular for p in affine_pieces(s))


def test_coplanarity_report_hexagonal(hexagonal):
    report = coplanarity_report(hexagonal)
    t10, t01, t11 = theta_constants(hexagonal)
    by_key = {
        (face.normal, face.offset): cells for face, cells in report.items()
    }
    assert by_key[((1, 1, -1), t10 + t01 - t11)] == (
        "rho3",
        "rho6",
        "sigma1",
        "sigma4",
    )
    assert by_key[((1, -1, -1), -t10 + t01 + t11)] == ("tau1", "tau4")


def test_coplanarity_report_skew(skew_hexagonal):
    report = coplanarity_report(skew_hexagonal)
    t10, t01, t11 = theta_constants(skew_hexagonal)
    assert -t10 + t01 + t11 == 1
    by_key = {
        (face.normal, face.offset): cells for face, cells in report.items()
    }
    assert by_key[((1, -1, -1), F(1))] == ("tau1", "tau4")


def test_two_torsion_images(hexagonal):
    rows = two_torsion_images(hexagonal)
    rb = lagrange_reduce(hexagonal)
    reps = [r[0] for r in rows]
    assert reps == [
        Vec2(0, 0),
        H * rb.u,
        H * rb.v,
        H * (rb.u + rb.v),
    ]
    assert rows[0][1] == Vec3(H, H, H)
    assert rows[1][1] == Vec3(-H, 0, 0)
    assert all(flag for _, _, flag in rows)


def test_orbit_matches_closed_form_display(hexagonal, skew_hexagonal):
    # The eight orbit vertices against their closed-form expressions in the
    # theta constants (third coordinate of tau_3 taken with the minus sign,
    # the reading the face planes single out).
    for s in (hexagonal, skew_hexagonal):
        quartic = build_quartic(s)
        a, b, c = quartic.theta_constants  # (t10, t01, t11)
        display = {
            "tau_0": Vec3(a, b, c),
            "tau_1": Vec3(-a, c - a, b - a),
            "tau_2": Vec3(c - b, -b, a - b),
            "tau_3": Vec3(b - c, a - c, -c),
            "tau_tilde_0": Vec3(-a, -b, -c),
            "tau_tilde_1": Vec3(a, a - c, a - b),
            "tau_tilde_2": Vec3(b - c, b, b - a),
            "tau_tilde_3": Vec3(c - b, c - a, c),
        }
        for label, expected in display.items():
            assert quartic.vertex(label) == expected
        for face in quartic.faces:
            for vid in face.vertex_ids:
                assert face.evaluate(display[vid]) == face.offset


def test_vertex_sign_diagnostics(hexagonal, skew_hexagonal):
    for s in (hexagonal, skew_hexagonal):
        report = vertex_sign_diagnostics(s)
        assert report["consistent_reading"] == "minus"
        assert report["plane_consistency"] == {"minus": True, "plus": False}
        t10, t01, t11 = theta_constants(s)
        assert report["orbit_vertex"] == Vec3(t01 - t11, t10 - t11, -t11)
