import random

import numpy as np
import pytest

from polarlines.linalg import Subspace
from polarlines.schemetables import empirical_valencies, tables_for_space
from polarlines.spaces import FormSpec, build_space, load_space, predicted_line_count, save_space

EXPECTED_COUNTS = {
    # family, q: (points, lines, planes)
    ("O6plus", 2): (35, 105, 30),
    ("Sp6", 2): (63, 315, 135),
    ("O6plus", 3): (130, 520, 80),
    ("O8minus", 2): (119, 1071, 765),
    ("O7", 3): (364, 3640, 1120),
    ("Sp6", 3): (364, 3640, 1120),
    ("U6", 4): (693, 6237, 891),
}


@pytest.mark.parametrize("family,q", sorted(EXPECTED_COUNTS))
def test_object_counts(spaces, family, q):
    space = spaces.get(family, q)
    got = (len(space.points), space.n_lines, len(space.plane_basis))
    assert got == EXPECTED_COUNTS[(family, q)]
    assert space.n_lines == predicted_line_count(family, q)


@pytest.mark.parametrize("family,q", sorted(EXPECTED_COUNTS))
def test_incidence_constants(spaces, family, q):
    space = spaces.get(family, q)
    s = space.qe
    assert all(len(v) == (q + 1) * (s * q + 1) for v in space.point_lines)
    assert all(len(v) == s + 1 for v in space.line_planes)
    assert all(len(v) == space.theta for v in space.plane_lines)
    assert all(len(pts) == q + 1 for pts in space.line_points)


@pytest.mark.parametrize("family,q", sorted(EXPECTED_COUNTS))
def test_valency_census_matches_first_p_row(spaces, family, q):
    space = spaces.get(family, q)
    tables = tables_for_space(space)
    assert empirical_valencies(space) == tables.valencies


@pytest.mark.parametrize("family,q", [("O6plus", 2), ("Sp6", 2), ("O8minus", 2), ("U6", 4)])
def test_table_agrees_with_geometric_classification(spaces, family, q):
    space = spaces.get(family, q)
    rng = random.Random(4321)
    for _ in range(25):
        li = rng.randrange(space.n_lines)
        mi = rng.randrange(space.n_lines)
        tag = space.classify_pair(li, mi)
        assert tag == space.classify_pair(mi, li)
        assert tag == space.classify_pair_geometric(li, mi)
    assert space.classify_pair(7, 7) == "00"


def test_coplanar_concurrent_lines_are_relation_10(o6plus2):
    lines = o6plus2.plane_lines[0]
    a, b = lines[0], lines[1]
    if set(o6plus2.line_points[a]) & set(o6plus2.line_points[b]):
        assert o6plus2.classify_pair(a, b) == "10"


def test_perp_of_whole_space_is_zero(o6plus2):
    space = o6plus2
    whole = Subspace(space.field, space.d, [tuple(int(i == j) for j in range(space.d)) for i in range(space.d)])
    assert space.perp(whole).dim == 0


def test_perp_of_isotropic_point_contains_it(o6plus2):
    space = o6plus2
    pt = Subspace(space.field, space.d, [space.points[0]])
    perp = space.perp(pt)
    assert perp.dim == space.d - 1
    assert perp.contains(space.points[0])


def test_perp_of_line_contains_it(o6plus2):
    space = o6plus2
    sub = space.line_subspace(0)
    perp = space.perp(sub)
    assert perp.dim == space.d - 2
    for row in sub.basis:
        assert perp.contains(row)


def test_o7_rejected_for_even_q():
    with pytest.raises(ValueError, match="Sp6"):
        build_space("O7", 2)


def test_hermitian_requires_square_q():
    with pytest.raises(ValueError, match="square"):
        FormSpec("U6", 2)


def test_u7_form_exists_even_though_enumeration_is_out_of_reach():
    form = FormSpec("U7", 4)
    assert form.d == 7 and form.e2 == 3
    # Hermitian Gram is the identity with conjugation on the second slot
    assert form.bilinear((1,) + (0,) * 6, (1,) + (0,) * 6) == 1
    assert form.is_singular((1, 1, 0, 0, 0, 0, 0))  # 1 + 1 = 0 in GF(4) norms



def test_enumeration_budget():
    with pytest.raises(ValueError, match="budget"):
        build_space("U7", 4)
    with pytest.raises(ValueError, match="budget"):
        build_space("O8minus", 3)


def test_cache_roundtrip_is_bit_exact(tmp_path, o6plus2):
    path = tmp_path / "o6plus_q2.json"
    save_space(o6plus2, path)
    again = load_space(path)
    assert again.fingerprint == o6plus2.fingerprint
    assert again.line_basis == o6plus2.line_basis
    assert again.plane_basis == o6plus2.plane_basis
    assert again.points == o6plus2.points
    assert np.array_equal(again.labels, o6plus2.labels)


def test_deterministic_rebuild(o6plus2):
    again = build_space("O6plus", 2)
    assert again.fingerprint == o6plus2.fingerprint
    assert again.line_basis == o6plus2.line_basis
