"""Constructions of the known structured line families, each self-validating.

Every constructor checks the inner distribution (and usually the eigenspace
support) of what it built against the known closed form and raises
GeometryError on any mismatch, so a returned set is already verified.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .analysis import (
    LineSet,
    _as_indices,
    dual_distribution,
    eigenspace_support,
    inner_distribution,
    make_lineset,
)
from .gf import field_make
from .linalg import rref
from .spaces import GeometryError, _normalize, _table_matmul
from .schemetables import tables_for_space


def _check_inner(space, y, expected, what):
    got = inner_distribution(space, y)
    want = tuple(Fraction(v) for v in expected)
    if got != want:
        raise GeometryError(f"{what}: inner distribution {got} != expected {want}")


def _check_support(space, y, expected, what):
    tables = tables_for_space(space)
    got = eigenspace_support(space, tables, y)
    if got != frozenset(expected):
        raise GeometryError(f"{what}: eigenspace support {set(got)} != expected {set(expected)}")


# -- planes and pencils --------------------------------------------------------


def plane_lines(space, plane_index):
    """All q^2+q+1 lines inside one plane."""
    q = space.q
    y = make_lineset(space, space.plane_lines[plane_index], name=f"plane[{plane_index}]")
    _check_inner(space, y, (1, q * q + q, 0, 0, 0), "plane lines")
    return y


def point_pencil(space, point_index, mode="through"):
    """Lines through a point, or the lines inside its perp that avoid it."""
    q, s = space.q, space.qe
    if mode == "through":
        y = make_lineset(space, space.point_lines[point_index], name=f"pencil[{point_index}]")
        _check_inner(space, y, (1, s * q + q, s * q * q, 0, 0), "point pencil")
        return y
    if mode != "perp_avoiding":
        raise ValueError("mode must be 'through' or 'perp_avoiding'")
    u = space.points[point_index]
    functional = space.form.perp_functional(u)
    f = space.field
    keep = []
    through = set(space.point_lines[point_index])
    for li, basis in enumerate(space.line_basis):
        if li in through:
            continue
        if all(_func_value(f, functional, row) == 0 for row in basis):
            keep.append(li)
    y = make_lineset(space, keep, name=f"pencil_perp_avoiding[{point_index}]")
    a1 = (1, q * q - 1, s * q * (q + 1), (q * q - 1) * s * q, s * s * q**3)
    _check_inner(space, y, a1, "perp-avoiding pencil")
    _check_support(space, y, {"10", "11"}, "perp-avoiding pencil")
    return y


def _func_value(field, functional, vec):
    acc = 0
    for c, x in zip(functional, vec):
        if c and x:
            acc = field.add(acc, field.mul(c, x))
    return acc


# -- hyperplane sections ---------------------------------------------------------


@dataclass(frozen=True)
class HyperplaneSection:
    """An ambient hyperplane u^perp with its polar-space classification."""

    dual_point: tuple
    kind: str  # "degenerate" | "rank3" | "gq"
    radical_point: int | None
    singular_count: int


def ambient_projective_points(space):
    f = space.field
    pts = []
    d = space.d
    for lead in range(d):
        for tail in itertools.product(range(f.q), repeat=d - lead - 1):
            pts.append((0,) * lead + (1,) + tail)
    pts.sort()
    return pts


def _points_in_hyperplane(space, dual_point):
    """Boolean mask over the space's points for membership in dual_point^perp."""
    functional = space.form.perp_functional(dual_point)
    f = space.field
    vals = np.zeros(len(space.points), dtype=np.uint8)
    for k, c in enumerate(functional):
        if c:
            vals = f.ADD[vals, f.MUL[c, space.pts_arr[:, k]]]
    return vals == 0


def hyperplane_sections(space):
    """Classify every ambient hyperplane u^perp of the space's vector space.

    Symplectic spaces have only degenerate hyperplanes; orthogonal and
    Hermitian spaces split into degenerate ones (u a point of the space,
    which is then the radical) and nondegenerate ones carrying either a
    rank-3 polar space with parameter e-1 or a generalized quadrangle with
    parameter e+1, told apart by their point counts.
    """
    q, s = space.q, space.qe
    theta = space.theta
    rank3_count = ((s // q) * q * q + 1) * theta if space.e2 >= 2 else None
    gq_count = (s * q * q + 1) * (q + 1)
    out = []
    for u in ambient_projective_points(space):
        mask = _points_in_hyperplane(space, u)
        cnt = int(mask.sum())
        pt = space.point_index.get(_normalize(space.field, u))
        if space.form.is_singular(u):
            out.append(HyperplaneSection(u, "degenerate", pt, cnt))
        elif rank3_count is not None and cnt == rank3_count:
            out.append(HyperplaneSection(u, "rank3", None, cnt))
        elif cnt == gq_count:
            out.append(HyperplaneSection(u, "gq", None, cnt))
        else:
            raise GeometryError(
                f"hyperplane of {space.family}/q={q} has unrecognized point count {cnt}"
            )
    return out


def find_section(space, kind):
    """First hyperplane section of the requested kind, in dual-point lex order."""
    for sec in hyperplane_sections(space):
        if sec.kind == kind:
            return sec
    raise ValueError(f"{space.family}/q={space.q} has no {kind} hyperplane section")


def section_point_indices(space, section):
    mask = _points_in_hyperplane(space, section.dual_point)
    return tuple(int(i) for i in np.nonzero(mask)[0])


def hyperplane_section_lines(space, section):
    """Lines of the space inside a nondegenerate hyperplane, distribution-checked."""
    if section.kind == "degenerate":
        raise ValueError("section is degenerate; expected a nondegenerate hyperplane")
    functional = space.form.perp_functional(section.dual_point)
    f = space.field
    keep = [
        li
        for li, basis in enumerate(space.line_basis)
        if all(_func_value(f, functional, row) == 0 for row in basis)
    ]
    q, s = space.q, space.qe
    y = make_lineset(space, keep, name=f"{section.kind}_section")
    if section.kind == "rank3":
        t = s // q  # q^(e-1)
        a = (
            1,
            q * (q + 1) * (t + 1),
            s * q * (q + 1),
            s * q * q * (q + 1) * (t + 1),
            s * s * q**3,
        )
        _check_inner(space, y, a, "rank-3 section lines")
        _check_support(space, y, {"10"}, "rank-3 section lines")
    else:
        a = (1, 0, s * q * (q + 1), 0, s * s * q**3)
        _check_inner(space, y, a, "generalized quadrangle section lines")
        _check_support(space, y, {"11"}, "generalized quadrangle section lines")
    return y


# -- quadric sections of Sp(6,q), q even ----------------------------------------


@dataclass(frozen=True)
class QuadricSection:
    """A quadratic form polarizing to the symplectic form, with its point set."""

    kind: str  # "plus" | "minus"
    quad: tuple
    point_indices: tuple


def quadric_section(space, kind):
    """Hyperbolic or elliptic quadric inside Sp(6,q), q even.

    The quadratic form x0*x3 + x1*x4 + x2*x5 (+ anisotropic correction on the
    last pair for the elliptic kind) polarizes to the standard symplectic
    form, so its singular lines are symplectic lines.
    """
    if space.family != "Sp6" or space.q % 2 != 0:
        raise ValueError("quadric sections are for Sp6 with even q")
    f = space.field
    quad = [(0, 3, 1), (1, 4, 1), (2, 5, 1)]
    if kind == "minus":
        alpha = beta = None
        for a in range(f.q):
            for b in range(f.q):
                # x^2*a + x + b irreducible over GF(q) <=> x2*x5+a*x2^2+b*x5^2 anisotropic
                if all(
                    f.add(f.mul(a, f.mul(z, z)), f.add(z, b)) != 0 for z in range(f.q)
                ) and b != 0 and a != 0:
                    alpha, beta = a, b
                    break
            if alpha is not None:
                break
        if alpha is None:
            raise GeometryError("no anisotropic correction found")
        quad += [(2, 2, alpha), (5, 5, beta)]
    elif kind != "plus":
        raise ValueError("kind must be 'plus' or 'minus'")

    def qval(v):
        acc = 0
        for (i, j, c) in quad:
            acc = f.add(acc, f.mul(c, f.mul(v[i], v[j])))
        return acc

    pts = tuple(i for i, p in enumerate(space.points) if qval(p) == 0)
    q, s = space.q, space.qe
    want = (q * q + 1) * space.theta if kind == "plus" else (s * q * q + 1) * (q + 1)
    if len(pts) != want:
        raise GeometryError(f"{kind} quadric section has {len(pts)} points, expected {want}")
    return QuadricSection(kind=kind, quad=tuple(quad), point_indices=pts)


def quadric_section_lines(space, section):
    """Sp(6,q) lines all of whose points are singular for the section's quadric."""
    inside = set(section.point_indices)
    keep = [
        li for li, pts in enumerate(space.line_points) if all(p in inside for p in pts)
    ]
    q, s = space.q, space.qe
    y = make_lineset(space, keep, name=f"quadric_{section.kind}_section")
    if section.kind == "plus":
        a = (1, q * (q + 1) * 2, s * q * (q + 1), s * q * q * (q + 1) * 2, s * s * q**3)
        _check_inner(space, y, a, "hyperbolic quadric section lines")
        _check_support(space, y, {"10"}, "hyperbolic quadric section lines")
    else:
        a = (1, 0, s * q * (q + 1), 0, s * s * q**3)
        _check_inner(space, y, a, "elliptic quadric section lines")
        _check_support(space, y, {"11"}, "elliptic quadric section lines")
    return y


# -- ovoids and pencil unions ----------------------------------------------------


def _dual_value_matrix(space, duals):
    """B(point, u) for all space points x ambient duals u, as a value matrix."""
    f = space.field
    rows = np.array([space.form.perp_functional(u) for u in duals], dtype=np.uint8)
    # value[i, j] = sum_k functional_j[k] * point_i[k]
    return _table_matmul(f, space.pts_arr, rows.T)


def elliptic_ovoid(space, fixed_duals=()):
    """Point set of a fixed 4-dimensional elliptic section of O+(6,q).

    With fixed_duals one functional can be pinned, which searches for an
    elliptic 4-space inside that hyperplane (giving an ovoid of the O(5,q)
    section).  Returns the tuple of point indices; pairwise non-collinearity
    and the one-point-per-plane property are asserted.
    """
    if space.family != "O6plus":
        raise ValueError("elliptic ovoids are built in O6plus only")
    q = space.q
    duals = ambient_projective_points(space)
    vals = _dual_value_matrix(space, duals)
    dual_index = {u: k for k, u in enumerate(duals)}
    fixed = [dual_index[_normalize(space.field, u)] for u in fixed_duals]
    need = 2 - len(fixed)
    if need < 0:
        raise ValueError("at most two functionals cut out a 4-space in dimension 6")
    masks = vals == 0
    fixed_mask = np.ones(len(space.points), dtype=bool)
    for k in fixed:
        fixed_mask &= masks[:, k]
    for combo in itertools.combinations(range(len(duals)), need):
        if any(k in fixed for k in combo):
            continue
        mask = fixed_mask.copy()
        for k in combo:
            mask &= masks[:, k]
        pts = np.nonzero(mask)[0]
        if len(pts) != q * q + 1:
            continue
        sub = space.perp_points[np.ix_(pts, pts)]
        if (sub & ~np.eye(len(pts), dtype=bool)).any():
            continue
        ovoid = tuple(int(i) for i in pts)
        if not fixed_duals:
            for plane_pts in space.plane_points:
                if len(set(plane_pts) & set(ovoid)) != 1:
                    raise GeometryError("elliptic section is not one point per plane")
        return ovoid
    raise GeometryError("no elliptic 4-space found")


def pencil_union(space, ovoid_points):
    """Union of the point-pencils through an ovoid, a regular set in V11."""
    q, s = space.q, space.qe
    if len(ovoid_points) != s * q * q + 1:
        raise ValueError(f"ovoid must have q^(e+2)+1 = {s * q * q + 1} points")
    lines = []
    for p in ovoid_points:
        lines.extend(space.point_lines[p])
    if len(set(lines)) != len(lines):
        raise GeometryError("point-pencils are not pairwise disjoint; not an ovoid")
    y = make_lineset(space, lines, name="pencil_union")
    want = (q + 1) * (s * q + 1) * (s * q * q + 1)
    if len(y) != want:
        raise GeometryError(f"pencil union has {len(y)} lines, expected {want}")
    _check_support(space, y, {"11"}, "pencil union")
    return y


# -- m-ovoid lifts ----------------------------------------------------------------


def validate_m_ovoid(space, section, point_indices):
    """Check that every line of the GQ section meets the set in m points; return m."""
    if section.kind != "gq":
        raise ValueError("m-ovoids live in a generalized quadrangle section")
    in_h = set(section_point_indices(space, section))
    pts = set(point_indices)
    if not pts <= in_h:
        raise ValueError("m-ovoid points must lie in the section")
    section_lines = hyperplane_section_lines(space, section)
    ms = {len(pts & set(space.line_points[li])) for li in section_lines.indices}
    if len(ms) != 1:
        raise ValueError(f"not an m-ovoid: line intersection sizes {sorted(ms)}")
    return ms.pop()


def m_ovoid_lift(space, section, point_indices):
    """Lines meeting the GQ section in exactly one point, that point in the m-ovoid.

    Defined for odd q; the result is a regular set in V11 of size
    m q (q^{e+1}+1)(q^{e+2}+1).
    """
    if space.q % 2 == 0:
        raise ValueError("the m-ovoid lift requires odd q")
    m = validate_m_ovoid(space, section, point_indices)
    pts = set(point_indices)
    in_h = np.zeros(len(space.points), dtype=bool)
    in_h[list(section_point_indices(space, section))] = True
    keep = []
    for li, line_pts in enumerate(space.line_points):
        hits = [p for p in line_pts if in_h[p]]
        if len(hits) == 1 and hits[0] in pts:
            keep.append(li)
        elif len(hits) not in (1, space.q + 1):
            raise GeometryError("a line meets the hyperplane in an impossible point count")
    q, s = space.q, space.qe
    y = make_lineset(space, keep, name=f"{m}_ovoid_lift")
    want = m * q * (s * q + 1) * (s * q * q + 1)
    if len(y) != want:
        raise GeometryError(f"m-ovoid lift has {len(y)} lines, expected {want}")
    _check_support(space, y, {"11"}, "m-ovoid lift")
    return y


# -- symplectic spreads ------------------------------------------------------------


def symplectic_spread_planes(space):
    """The regular plane spread of Sp(6,q) from the GF(q^3) trace form.

    Works for prime q (the cubic extension tables must exist); the planes are
    {(x, mx)} for m in GF(q^3) plus {(0, y)}, written in a trace-dual pair of
    bases so the form becomes the standard one.
    """
    if space.family != "Sp6":
        raise ValueError("plane spreads are built in Sp6 only")
    f = space.field
    if f.h != 1:
        raise ValueError("spread construction needs GF(q^3) arithmetic tables (prime q only)")
    cubic = field_make(f.p, 3)
    p = f.p

    def digitvec(z):
        return [(z // p**i) % p for i in range(3)]

    basis = [1, p, cubic.mul(p, p)]  # 1, g, g^2 where g is the class of x
    frob = lambda z: cubic.pow(z, p)

    def tr(z):
        out = z
        zz = z
        for _ in range(2):
            zz = frob(zz)
            out = cubic.add(out, zz)
        if out >= p:
            raise GeometryError("trace left the prime subfield")
        return out

    # dual basis: rows of M^-1 (over GF(p)) combine basis into trace-dual elements
    M = [[tr(cubic.mul(bi, bj)) for bj in basis] for bi in basis]
    Minv = _invert_gfp(M, p)
    dual_basis = []
    for j in range(3):
        acc = 0
        for k in range(3):
            acc = cubic.add(acc, cubic.mul(Minv[j][k], basis[k]))
        dual_basis.append(acc)

    Bmat = [digitvec(b) for b in basis]
    Bstar = [digitvec(b) for b in dual_basis]
    Binv = _invert_gfp(Bmat, p)
    Bstarinv = _invert_gfp(Bstar, p)

    def coords(z, inv):
        dv = digitvec(z)
        return tuple(sum(dv[k] * inv[k][j] for k in range(3)) % p for j in range(3))

    planes = []
    for mslope in range(cubic.q):
        rows = [coords(b, Binv) + coords(cubic.mul(mslope, b), Bstarinv) for b in basis]
        planes.append(rows)
    planes.append([(0, 0, 0) + coords(b, Bstarinv) for b in dual_basis])

    indices = []
    for rows in planes:
        rr, _ = rref(rows, f)
        key = b"".join(bytes(r) for r in rr)
        if key not in space.plane_key_index:
            raise GeometryError("spread plane is not totally isotropic")
        indices.append(space.plane_key_index[key])
    if len(set(indices)) != cubic.q + 1:
        raise GeometryError("spread planes are not distinct")
    for a, b in itertools.combinations(indices, 2):
        if set(space.plane_points[a]) & set(space.plane_points[b]):
            raise GeometryError("spread planes intersect")
    return tuple(indices)


def _invert_gfp(M, p):
    k = len(M)
    aug = [[M[i][j] % p for j in range(k)] + [int(i == j) for j in range(k)] for i in range(k)]
    for col in range(k):
        piv = next(r for r in range(col, k) if aug[r][col] % p)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = pow(aug[col][col], -1, p)
        aug[col] = [x * inv % p for x in aug[col]]
        for r in range(k):
            if r != col and aug[r][col]:
                c = aug[r][col]
                aug[r] = [(x - c * y) % p for x, y in zip(aug[r], aug[col])]
    return [row[k:] for row in aug]


def symplectic_spread_lines(space):
    """All lines inside the planes of the standard spread; regular in V20."""
    planes = symplectic_spread_planes(space)
    lines = []
    for pi in planes:
        lines.extend(space.plane_lines[pi])
    q, s = space.q, space.qe
    y = make_lineset(space, lines, name="spread_lines")
    want = (s * q * q + 1) * space.theta
    if len(y) != want:
        raise GeometryError(f"spread line set has {len(y)} lines, expected {want}")
    a = (1, q * q + q, 0, s * q * q * (q + 1), s * q**4)
    _check_inner(space, y, a, "spread lines")
    _check_support(space, y, {"20"}, "spread lines")
    return y


# -- the split Cayley hexagon -------------------------------------------------------


def _to_tits_coords(space, vec):
    """Map a host vector to the 7 coordinates of the reference quadric.

    Reference quadric: X0X4 + X1X5 + X2X6 - X3^2 = 0.  For O(7,q) hosts the
    map is linear with negations; for Sp(6,q), q even, the vector is lifted to
    the quadric by solving for the X3 coordinate (unique square root).
    """
    f = space.field
    if space.family == "O7":
        x = vec
        neg = f.neg
        # (x0,x1)(x2,x3)(x4,x5) hyperbolic pairs, x6^2 square term
        return (x[0], x[2], x[4], x[6], neg(x[1]), neg(x[3]), neg(x[5]))
    # Sp6, q even: symplectic coords pair i with i+3
    x = vec
    prod = 0
    X = (x[0], x[1], x[2], 0, x[3], x[4], x[5])
    for i, j in ((0, 4), (1, 5), (2, 6)):
        prod = f.add(prod, f.mul(X[i], X[j]))
    root = prod
    for _ in range(f.h - 1):
        root = f.mul(root, root)
    # char 2: (root)^2 = prod since squaring has order h on GF(2^h)
    if f.mul(root, root) != prod:
        raise GeometryError("square root failed in characteristic 2")
    return (X[0], X[1], X[2], root, X[4], X[5], X[6])


_HEXAGON_EQS = (
    # (i, j, k, l): Plucker coordinate p_ij must equal p_kl
    ((1, 2), (3, 4)),
    ((5, 4), (3, 2)),
    ((2, 0), (3, 5)),
    ((6, 5), (3, 0)),
    ((0, 1), (3, 6)),
    ((4, 6), (3, 1)),
)


def hexagon_lines(space):
    """Line set of the split Cayley hexagon in O(7,q), q odd, or Sp(6,q), q even.

    Lines are filtered by the six linear conditions on their Plucker
    coordinates in the reference quadric frame; the result is validated by
    its inner distribution, so any convention error fails loudly.
    """
    if not (space.family == "O7" or (space.family == "Sp6" and space.q % 2 == 0)):
        raise ValueError("the hexagon lives in O7 (odd q) or Sp6 (even q)")
    f = space.field

    def plucker(u, v):
        p = {}
        for i in range(7):
            for j in range(7):
                if i != j:
                    p[(i, j)] = f.sub(f.mul(u[i], v[j]), f.mul(u[j], v[i]))
        return p

    keep = []
    for li, basis in enumerate(space.line_basis):
        u = _to_tits_coords(space, basis[0])
        v = _to_tits_coords(space, basis[1])
        p = plucker(u, v)
        if all(p[a] == p[b] for a, b in _HEXAGON_EQS):
            keep.append(li)
    q = space.q
    y = make_lineset(space, keep, name="hexagon_lines")
    want = (q**3 + 1) * space.theta
    if len(y) != want:
        raise GeometryError(f"hexagon has {len(y)} lines, expected {want}")
    a = (1, q * q + q, 0, q**4 + q**3, q**5)
    _check_inner(space, y, a, "hexagon lines")
    _check_support(space, y, {"20"}, "hexagon lines")
    return y


def incidence_girth(space, y, cap=16):
    """Girth of the point-line incidence graph of the covered subgeometry."""
    idx = _as_indices(space, y)
    adj = {}
    for li in idx:
        lnode = ("L", li)
        for p in space.line_points[li]:
            pnode = ("P", p)
            adj.setdefault(lnode, []).append(pnode)
            adj.setdefault(pnode, []).append(lnode)
    best = cap
    for start in adj:
        # BFS shortest cycle through start
        dist = {start: 0}
        parent = {start: None}
        queue = [start]
        while queue:
            nxt = []
            for node in queue:
                if dist[node] * 2 >= best:
                    continue
                for nb in adj[node]:
                    if nb not in dist:
                        dist[nb] = dist[node] + 1
                        parent[nb] = node
                        nxt.append(nb)
                    elif parent[node] != nb and parent.get(nb) != node:
                        best = min(best, dist[node] + dist[nb] + 1)
            queue = nxt
    return best


# -- two-weight point sets and strongly regular graphs -------------------------------


@dataclass(frozen=True)
class TwoWeightProfile:
    values: dict
    big: Fraction
    small: Fraction
    m: Fraction
    dichotomy_ok: bool


def covered_points(space, y):
    pts = set()
    for li in _as_indices(space, y):
        pts.update(space.line_points[li])
    return tuple(sorted(pts))


def two_weight_profile(space, y):
    """Hyperplane census of the points covered by pairwise-opposite lines.

    For a family of pairwise non-intersecting lines orthogonal to V10 in
    Sp(6,q), U(7,q) or O-(8,q), every ambient hyperplane contains either
    m(q+1)(q^{e+1}+1) covered points or q^{e+1} fewer, the smaller value
    exactly for degenerate hyperplanes whose radical is covered.
    """
    if space.family not in ("Sp6", "U7", "O8minus"):
        raise ValueError("two-weight profiles need Sp6, U7 or O8minus")
    idx = _as_indices(space, y)
    sub = space.labels[np.ix_(idx, idx)]
    if ((sub == 1) | (sub == 2)).any():
        raise ValueError("lines must be pairwise non-intersecting")
    tables = tables_for_space(space)
    aq = dual_distribution(space, tables, idx)
    if aq[1] != 0:
        raise ValueError("the line set must be orthogonal to V10")
    q, s = space.q, space.qe
    m = Fraction(len(idx), s * q * q + 1)
    big = m * (q + 1) * (s * q + 1)
    small = big - s * q

    cov = covered_points(space, y)
    cov_set = set(cov)
    duals = ambient_projective_points(space)
    f = space.field
    rows = np.array([space.form.perp_functional(u) for u in duals], dtype=np.uint8)
    cov_arr = space.pts_arr[list(cov)]
    vals = _table_matmul(f, cov_arr, rows.T)
    counts = (vals == 0).sum(axis=0)

    values = {}
    dichotomy_ok = True
    for k, u in enumerate(duals):
        c = Fraction(int(counts[k]))
        values[c] = values.get(c, 0) + 1
        if space.form.is_singular(u):
            covered = space.point_index[_normalize(f, u)] in cov_set
            want = small if covered else big
        else:
            want = big
        if c != want:
            dichotomy_ok = False
    if not set(values) <= {big, small}:
        raise GeometryError(f"hyperplane profile {sorted(values)} is not two-valued as expected")
    return TwoWeightProfile(values=values, big=big, small=small, m=m, dichotomy_ok=dichotomy_ok)


def srg_parameters(m, q, e2):
    """Strongly regular graph parameters (v, k, r, s) from a two-weight set."""
    from .spaces import q_to_e_power

    s_pow = q_to_e_power(q, e2)
    m = Fraction(m)
    if m <= 0 or (m * (s_pow * q * q + 1)).denominator != 1:
        raise ValueError("m must be positive with m(q^{e+2}+1) integral")
    v = s_pow * s_pow * q**4
    k = m * (s_pow * q * q + 1) * (q * q - 1)
    r = m * (q * q - 1)
    s_eig = r - s_pow * q * q
    mu = k + r * s_eig
    lam = mu + r + s_eig
    if k.denominator != 1 or mu.denominator != 1 or mu < 0 or lam < -1:
        raise ValueError("parameters fail basic strong regularity feasibility")
    return (int(v), int(k), int(r), int(s_eig))


def two_weight_graph(space, y):
    """Explicit SRG on the ambient vectors: x ~ y iff <x - y> is covered.

    Only sensible for tiny ambient spaces (q^d vectors).
    """
    f = space.field
    d = space.d
    if f.q**d > 4096:
        raise ValueError("ambient vector space too large for an explicit graph")
    cov = set(covered_points(space, y))
    vectors = list(itertools.product(range(f.q), repeat=d))
    index = {v: i for i, v in enumerate(vectors)}
    n = len(vectors)
    adj = np.zeros((n, n), dtype=np.int64)
    for i, u in enumerate(vectors):
        for j in range(i + 1, n):
            w = vectors[j]
            diff = tuple(f.sub(a, b) for a, b in zip(u, w))
            if space.point_index.get(_normalize(f, diff)) in cov:
                adj[i, j] = adj[j, i] = 1
    return adj


def srg_check(adj, v, k, r, s):
    """Exact strong-regularity test of an adjacency matrix against (v,k,r,s)."""
    if adj.shape != (v, v):
        return False
    if not (adj.sum(axis=1) == k).all():
        return False
    lam = k + r * s + r + s
    mu = k + r * s
    sq = adj @ adj
    want = k * np.eye(v, dtype=np.int64) + lam * adj + mu * (1 - np.eye(v, dtype=np.int64) - adj)
    return bool((sq == want).all())
