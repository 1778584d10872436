from fractions import Fraction

import pytest

from polarlines import constructions as con
from polarlines.analysis import (
    eigenspace_support,
    inner_distribution,
    plane_profile,
    regular_set_check,
)
from polarlines.schemetables import tables_for_space
from polarlines.search import line_spread_search


def one_system_of(space):
    if space.family == "Sp6" and space.q % 2 == 0:
        sec = con.quadric_section(space, "minus")
        inside = set(sec.point_indices)
        lines = [li for li, pts in enumerate(space.line_points) if all(p in inside for p in pts)]
        res = line_spread_search(space, sec.point_indices, lines)
    else:
        raise NotImplementedError
    assert res.lines is not None
    return res.lines


def test_plane_lines_pairwise_intersections(o6plus2):
    y0 = con.plane_lines(o6plus2, 0)
    assert len(y0) == 7
    shared_line_planes = o6plus2.line_planes[y0.indices[0]]
    assert len(shared_line_planes) == 2
    other = [p for p in shared_line_planes if p != 0]
    y1 = con.plane_lines(o6plus2, other[0])
    assert len(set(y0.indices) & set(y1.indices)) == 1


def test_plane_lines_sp63(sp63):
    y = con.plane_lines(sp63, 0)
    assert len(y) == 13


def test_point_pencil_sizes(o6plus2, o6plus3):
    assert len(con.point_pencil(o6plus2, 0)) == 9
    assert len(con.point_pencil(o6plus2, 0, "perp_avoiding")) == 24
    assert len(con.point_pencil(o6plus3, 5)) == 16


def test_hyperplane_classification_counts(o6plus2):
    secs = con.hyperplane_sections(o6plus2)
    assert len(secs) == 63
    kinds = {}
    for s in secs:
        kinds[s.kind] = kinds.get(s.kind, 0) + 1
    assert kinds == {"degenerate": 35, "gq": 28}
    for s in secs:
        if s.kind == "degenerate":
            assert s.radical_point is not None


def test_gq_section_lines_o6plus3(o6plus3):
    y = con.hyperplane_section_lines(o6plus3, con.find_section(o6plus3, "gq"))
    assert len(y) == 40


def test_gq_section_lines_o73(o73):
    tables = tables_for_space(o73)
    y = con.hyperplane_section_lines(o73, con.find_section(o73, "gq"))
    # elliptic section of the parabolic space: a quadrangle of order (3, 9)
    assert len(y) == 280
    assert eigenspace_support(o73, tables, y) == {"11"}


def test_rank3_section_lines_o73(o73):
    y = con.hyperplane_section_lines(o73, con.find_section(o73, "rank3"))
    assert len(y) == 520


def test_rank3_section_lines_u64(u64):
    with pytest.raises(ValueError, match="no rank3"):
        con.find_section(u64, "rank3")
    y = con.hyperplane_section_lines(u64, con.find_section(u64, "gq"))
    assert len(y) == 297


def test_degenerate_section_rejected(o6plus2):
    sec = next(s for s in con.hyperplane_sections(o6plus2) if s.kind == "degenerate")
    with pytest.raises(ValueError, match="degenerate"):
        con.hyperplane_section_lines(o6plus2, sec)


def test_quadric_sections_in_sp62(sp62):
    plus = con.quadric_section_lines(sp62, con.quadric_section(sp62, "plus"))
    assert len(plus) == 105
    minus = con.quadric_section_lines(sp62, con.quadric_section(sp62, "minus"))
    assert len(minus) == 45


def test_quadric_section_odd_q_rejected(sp63):
    with pytest.raises(ValueError, match="even"):
        con.quadric_section(sp63, "plus")


def test_elliptic_ovoid(o6plus2, o6plus3):
    ov2 = con.elliptic_ovoid(o6plus2)
    assert len(ov2) == 5
    for plane_pts in o6plus2.plane_points:
        assert len(set(plane_pts) & set(ov2)) == 1
    assert len(con.elliptic_ovoid(o6plus3)) == 10


def test_ovoid_points_pairwise_non_perpendicular(o6plus2):
    ov = con.elliptic_ovoid(o6plus2)
    for i, a in enumerate(ov):
        for b in ov[i + 1 :]:
            assert not o6plus2.perp_points[a, b]


def test_pencil_union(o6plus2, o6plus3):
    tables = tables_for_space(o6plus2)
    y = con.pencil_union(o6plus2, con.elliptic_ovoid(o6plus2))
    assert len(y) == 45
    rep = regular_set_check(o6plus2, tables, y)
    assert rep.is_regular and rep.eigenspace == "11"
    # size agrees with (q+1)(q^{e+1}+1)(q^{e+2}+1) and with the pencil count
    q, s = o6plus3.q, o6plus3.qe
    y3 = con.pencil_union(o6plus3, con.elliptic_ovoid(o6plus3))
    assert len(y3) == (q + 1) * (s * q + 1) * (s * q * q + 1) == 160
    assert len(y3) == (s * q * q + 1) * len(con.point_pencil(o6plus3, 0))


def test_pencil_union_rejects_non_ovoid(o6plus2):
    with pytest.raises(ValueError, match="ovoid must have"):
        con.pencil_union(o6plus2, (0, 1, 2))
    # five collinear-ish points: pencils meet, caught by the disjointness check
    pts = list(o6plus2.line_points[0]) + [o6plus2.line_points[1][0], o6plus2.line_points[2][-1]]
    pts = list(dict.fromkeys(pts))[:5]
    if len(pts) == 5:
        with pytest.raises(Exception):
            con.pencil_union(o6plus2, pts)


def test_m_ovoid_lift(o6plus3):
    tables = tables_for_space(o6plus3)
    sec = con.find_section(o6plus3, "gq")
    ovoid = con.elliptic_ovoid(o6plus3, fixed_duals=[sec.dual_point])
    assert con.validate_m_ovoid(o6plus3, sec, ovoid) == 1
    y = con.m_ovoid_lift(o6plus3, sec, ovoid)
    assert len(y) == 120
    rep = regular_set_check(o6plus3, tables, y)
    assert rep.is_regular and rep.eigenspace == "11"


def test_m_ovoid_lift_all_points_is_degenerate_case(o6plus3):
    sec = con.find_section(o6plus3, "gq")
    allpts = con.section_point_indices(o6plus3, sec)
    assert con.validate_m_ovoid(o6plus3, sec, allpts) == 4
    y = con.m_ovoid_lift(o6plus3, sec, allpts)
    q, s = o6plus3.q, o6plus3.qe
    assert len(y) == (q + 1) * q * (s * q + 1) * (s * q * q + 1)


def test_m_ovoid_lift_rejects_even_q(o6plus2):
    sec = con.find_section(o6plus2, "gq")
    with pytest.raises(ValueError, match="odd"):
        con.m_ovoid_lift(o6plus2, sec, con.section_point_indices(o6plus2, sec))


def test_m_ovoid_validation_rejects_bad_sets(o6plus3):
    sec = con.find_section(o6plus3, "gq")
    pts = con.section_point_indices(o6plus3, sec)
    with pytest.raises(ValueError, match="not an m-ovoid"):
        con.validate_m_ovoid(o6plus3, sec, pts[:7])


def test_symplectic_spread(sp62, sp63):
    planes2 = con.symplectic_spread_planes(sp62)
    assert len(planes2) == 9
    y2 = con.symplectic_spread_lines(sp62)
    assert len(y2) == 63
    assert inner_distribution(sp62, y2) == (1, 6, 0, 24, 32)
    planes3 = con.symplectic_spread_planes(sp63)
    assert len(planes3) == 28
    y3 = con.symplectic_spread_lines(sp63)
    assert len(y3) == 364
    tables = tables_for_space(sp63)
    rep = regular_set_check(sp63, tables, y3)
    assert rep.is_regular and rep.eigenspace == "20"


def test_spread_rejected_outside_sp6(o6plus2):
    with pytest.raises(ValueError, match="Sp6"):
        con.symplectic_spread_lines(o6plus2)


def test_hexagon_sp62(sp62):
    tables = tables_for_space(sp62)
    y = con.hexagon_lines(sp62)
    assert len(y) == 63
    assert inner_distribution(sp62, y) == (1, 6, 0, 24, 32)
    rep = regular_set_check(sp62, tables, y)
    assert rep.is_regular and rep.eigenspace == "20"
    prof = plane_profile(sp62, y)
    assert set(prof.histogram) <= {0, 1, sp62.q + 1}
    assert prof.pencil_ok
    assert con.incidence_girth(sp62, y) == 12


def test_hexagon_o73(o73):
    tables = tables_for_space(o73)
    y = con.hexagon_lines(o73)
    assert len(y) == 364
    assert inner_distribution(o73, y) == (1, 12, 0, 108, 243)
    rep = regular_set_check(o73, tables, y)
    assert rep.is_regular and rep.eigenspace == "20"


def test_hexagon_rejected_elsewhere(o6plus2, sp63):
    with pytest.raises(ValueError):
        con.hexagon_lines(o6plus2)
    with pytest.raises(ValueError):
        con.hexagon_lines(sp63)  # odd q symplectic has no hexagon here


def test_two_weight_profile(sp62):
    one = one_system_of(sp62)
    tw = con.two_weight_profile(sp62, one)
    assert tw.m == 1
    assert tw.values == {Fraction(15): 36, Fraction(11): 27}
    assert tw.dichotomy_ok


def test_two_weight_rejects_meeting_lines(sp62):
    with pytest.raises(ValueError, match="non-intersecting"):
        con.two_weight_profile(sp62, con.plane_lines(sp62, 0))


def test_two_weight_rejects_wrong_family(o6plus2):
    with pytest.raises(ValueError, match="Sp6"):
        con.two_weight_profile(o6plus2, [0])


def test_two_weight_rejects_support_meeting_v10(sp62):
    # a partial 1-system of 8 lines keeps pairwise opposition but picks up a
    # nonzero projection onto the first eigenspace
    one = one_system_of(sp62)
    with pytest.raises(ValueError, match="orthogonal to V10"):
        con.two_weight_profile(sp62, one[:8])


def test_srg_parameters():
    assert con.srg_parameters(1, 2, 2) == (64, 27, 3, -5)
    assert con.srg_parameters(1, 2, 4) == (256, 51, 3, -13)
    assert con.srg_parameters(1, 3, 2) == (729, 224, 8, -19)
    with pytest.raises(ValueError):
        con.srg_parameters(Fraction(1, 7), 2, 2)


def test_srg_graph_from_one_system(sp62):
    one = one_system_of(sp62)
    params = con.srg_parameters(1, 2, 2)
    adj = con.two_weight_graph(sp62, one)
    assert con.srg_check(adj, *params)
    assert not con.srg_check(adj, 64, 27, 3, -4)
