"""Finite classical rank-3 polar spaces: forms, enumeration, pair relations.

Six families are supported (hyperbolic O+(6,q), parabolic O(7,q) for odd q,
elliptic O-(8,q), symplectic Sp(6,q), Hermitian U(6,q) and U(7,q) for square
q).  A built space enumerates all totally isotropic 1-, 2- and 3-spaces as
canonical RREF subspaces, indexed in a deterministic lexicographic order, and
classifies every ordered pair of lines into one of the five relations

    00: L = M
    10: dim(L cap M) = 1 and dim(L cap M^perp) = 2
    11: dim(L cap M) = 1 and dim(L cap M^perp) = 1
    20: dim(L cap M) = 0 and dim(L cap M^perp) = 1
    21: dim(L cap M) = 0 and dim(L cap M^perp) = 0

which are the classes of a 5-class association scheme on the lines.
"""

from __future__ import annotations

import hashlib
import itertools
import json

import numpy as np

from .gf import field_for_order
from .linalg import Subspace, intersect, kernel, rref

REL_TAGS = ("00", "10", "11", "20", "21")
REL_INDEX = {t: i for i, t in enumerate(REL_TAGS)}

FAMILIES = {
    # family: (ambient dim, 2e, kind)
    "O6plus": (6, 0, "orthogonal"),
    "U6": (6, 1, "hermitian"),
    "Sp6": (6, 2, "symplectic"),
    "O7": (7, 2, "orthogonal"),
    "U7": (7, 3, "hermitian"),
    "O8minus": (8, 4, "orthogonal"),
}

SPACE_FORMAT_VERSION = 1
DEFAULT_MAX_LINES = 20_000


class GeometryError(RuntimeError):
    """Internal consistency failure: the enumerated geometry contradicts itself."""


def q_to_e_power(q, e2):
    """q^e as an exact integer (e = e2/2); requires square q for odd e2."""
    f = field_for_order(q)
    exp2 = f.h * e2
    if exp2 % 2 != 0:
        raise ValueError(f"half-integer e requires square q, got q={q}")
    return f.p ** (exp2 // 2)


def _anisotropic_binary(field):
    """Lexicographically first (c1, c0) with x^2 + c1*x*y + c0*y^2 anisotropic."""
    q = field.q
    for c1 in range(q):
        for c0 in range(1, q):
            ok = True
            for a in range(q):
                for b in range(q):
                    if a == 0 and b == 0:
                        continue
                    v = field.add(
                        field.mul(a, a),
                        field.add(field.mul(c1, field.mul(a, b)), field.mul(c0, field.mul(b, b))),
                    )
                    if v == 0:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                return c1, c0
    raise GeometryError("no anisotropic binary quadratic form found")


class FormSpec:
    """A fixed standard sesquilinear/quadratic form for one family over GF(q)."""

    def __init__(self, family, q):
        if family not in FAMILIES:
            raise ValueError(f"unknown family {family!r}")
        d, e2, kind = FAMILIES[family]
        field = field_for_order(q)
        if kind == "hermitian" and field.h % 2 != 0:
            raise ValueError(f"{family} requires square q, got q={q}")
        if family == "O7" and field.p == 2:
            raise ValueError(
                "O7 requires odd q; for even q build Sp6, which has the same line geometry"
            )
        self.family = family
        self.q = q
        self.field = field
        self.d = d
        self.e2 = e2
        self.kind = kind

        gram = [[0] * d for _ in range(d)]
        quad = []
        if kind == "symplectic":
            for i in range(3):
                gram[i][3 + i] = 1
                gram[3 + i][i] = field.neg(1)
        elif kind == "hermitian":
            for i in range(d):
                gram[i][i] = 1
        else:
            npairs = d // 2
            for i in range(npairs):
                quad.append((2 * i, 2 * i + 1, 1))
            if family == "O7":
                quad.append((6, 6, 1))
            elif family == "O8minus":
                # replace the last hyperbolic pair by a fixed anisotropic plane
                quad.pop()
                c1, c0 = _anisotropic_binary(field)
                quad.extend([(6, 6, 1), (6, 7, c1), (7, 7, c0)])
            # polarization of the quadratic form
            for (i, j, c) in quad:
                if i == j:
                    gram[i][i] = field.add(gram[i][i], field.add(c, c))
                else:
                    gram[i][j] = field.add(gram[i][j], c)
                    gram[j][i] = field.add(gram[j][i], c)
        self.gram = tuple(tuple(r) for r in gram)
        self.quad = tuple(quad)

        rad = kernel(self.gram, field, d)
        if rad.dim != 0:
            raise GeometryError(f"{family}/q={q}: bilinear form is degenerate")

    def bilinear(self, u, v):
        """B(u, v), with conjugation on the second argument for Hermitian forms."""
        f = self.field
        if self.kind == "hermitian":
            v = tuple(f.conj(x) for x in v)
        acc = 0
        for i, ui in enumerate(u):
            if ui:
                row = self.gram[i]
                for j, vj in enumerate(v):
                    if vj and row[j]:
                        acc = f.add(acc, f.mul(ui, f.mul(row[j], vj)))
        return acc

    def quad_value(self, v):
        if self.kind != "orthogonal":
            raise ValueError("quadratic value only defined for orthogonal forms")
        f = self.field
        acc = 0
        for (i, j, c) in self.quad:
            acc = f.add(acc, f.mul(c, f.mul(v[i], v[j])))
        return acc

    def is_singular(self, v):
        """Whether <v> is a point of the polar space."""
        if self.kind == "symplectic":
            return any(v)
        if self.kind == "orthogonal":
            return any(v) and self.quad_value(v) == 0
        return any(v) and self.bilinear(v, v) == 0

    def perp_functional(self, s):
        """Coefficient row c with c.x = 0 <=> B(x, s) = 0."""
        f = self.field
        if self.kind == "hermitian":
            s = tuple(f.conj(x) for x in s)
        return tuple(
            # c_k = sum_l G[k][l] * s_l  (conjugate already applied)
            _dot_row(f, self.gram[k], s)
            for k in range(self.d)
        )


def _dot_row(field, row, s):
    acc = 0
    for a, b in zip(row, s):
        if a and b:
            acc = field.add(acc, field.mul(a, b))
    return acc


def _normalize(field, v):
    for k, x in enumerate(v):
        if x:
            if x == 1:
                return tuple(v)
            c = field.inv(x)
            return tuple(field.mul(c, y) for y in v)
    raise ValueError("cannot normalize the zero vector")


def _projective_points(field, d):
    """All projective points of GF(q)^d, leading coordinate 1, in lex order."""
    q = field.q
    pts = []
    for lead in range(d):
        for tail in itertools.product(range(q), repeat=d - lead - 1):
            pts.append((0,) * lead + (1,) + tail)
    pts.sort()
    return pts


def _table_matmul(field, A, M):
    """(A . M) over GF(q) for uint8 arrays A (n,d) and M (d,m) via tables."""
    add, mul = field.ADD, field.MUL
    n = A.shape[0]
    m = M.shape[1]
    out = np.zeros((n, m), dtype=np.uint8)
    for l in range(A.shape[1]):
        col = A[:, l]
        if not col.any():
            continue
        out = add[out, mul[col[:, None], M[l][None, :]]]
    return out


class PolarSpace:
    """An enumerated rank-3 polar space with its line-pair relation table."""

    def __init__(self, form, points, line_bases, plane_bases, labels=None):
        self.form = form
        self.family = form.family
        self.q = form.q
        self.e2 = form.e2
        self.field = form.field
        self.qe = q_to_e_power(self.q, self.e2)
        self.d = form.d

        self.points = [tuple(p) for p in points]
        self.point_index = {p: i for i, p in enumerate(self.points)}
        self.pts_arr = np.array(self.points, dtype=np.uint8)

        self._check_counts_predicted(len(line_bases), len(plane_bases))

        f = self.field
        self.line_basis = [tuple(tuple(r) for r in b) for b in line_bases]
        self.line_points = [self._span_points_2(b) for b in self.line_basis]
        self.plane_basis = [tuple(tuple(r) for r in b) for b in plane_bases]
        self.plane_points = [self._span_points_3(b) for b in self.plane_basis]

        n = len(self.line_basis)
        self.n_lines = n
        self.point_lines = [[] for _ in self.points]
        pair_to_line = {}
        for li, pts in enumerate(self.line_points):
            for a in pts:
                self.point_lines[a].append(li)
            for a, b in itertools.combinations(pts, 2):
                pair_to_line[(a, b)] = li
        self.point_lines = [tuple(v) for v in self.point_lines]
        self._pair_to_line = pair_to_line

        self.plane_lines = []
        self.line_planes = [[] for _ in range(n)]
        for pi, pts in enumerate(self.plane_points):
            seen = set()
            for a, b in itertools.combinations(pts, 2):
                seen.add(pair_to_line[(a, b)])
            lines = tuple(sorted(seen))
            self.plane_lines.append(lines)
            for li in lines:
                self.line_planes[li].append(pi)
        self.line_planes = [tuple(v) for v in self.line_planes]

        self.point_planes = [[] for _ in self.points]
        for pi, pts in enumerate(self.plane_points):
            for a in pts:
                self.point_planes[a].append(pi)
        self.point_planes = [tuple(v) for v in self.point_planes]

        self._check_incidence_constants()

        self.line_key_index = {_basis_key(b): i for i, b in enumerate(self.line_basis)}
        self.plane_key_index = {_basis_key(b): i for i, b in enumerate(self.plane_basis)}

        self.perp_points = self._point_perp_matrix()
        self.labels = self._label_table() if labels is None else labels
        self.fingerprint = self._fingerprint()

    # -- construction helpers -------------------------------------------------

    def _check_counts_predicted(self, nlines, nplanes):
        q, s = self.q, self.qe
        theta = q * q + q + 1
        want_points = (s * q * q + 1) * theta
        want_lines = (s * q + 1) * (s * q * q + 1) * theta
        want_planes = (s + 1) * (s * q + 1) * (s * q * q + 1)
        got = (len(self.points), nlines, nplanes)
        want = (want_points, want_lines, want_planes)
        if got != want:
            raise GeometryError(f"{self.family}/q={q}: object counts {got} != predicted {want}")

    def _span_points_2(self, basis):
        f = self.field
        u, w = basis
        pts = [self.point_index[_normalize(f, u)]]
        for a in range(f.q):
            v = f.add_vec(f.scale(a, u), w)
            pts.append(self.point_index[_normalize(f, v)])
        return tuple(sorted(pts))

    def _span_points_3(self, basis):
        f = self.field
        u, v, w = basis
        pts = set(self._span_points_2((u, v)))
        for a in range(f.q):
            au = f.scale(a, u)
            for b in range(f.q):
                x = f.add_vec(f.add_vec(au, f.scale(b, v)), w)
                pts.add(self.point_index[_normalize(f, x)])
        return tuple(sorted(pts))

    def _check_incidence_constants(self):
        q, s = self.q, self.qe
        per_point = (q + 1) * (s * q + 1)
        per_line = s + 1
        per_plane = q * q + q + 1
        if any(len(v) != per_point for v in self.point_lines):
            raise GeometryError("lines through a point is not the predicted constant")
        if any(len(v) != per_line for v in self.line_planes):
            raise GeometryError("planes through a line is not the predicted constant")
        if any(len(v) != per_plane for v in self.plane_lines):
            raise GeometryError("lines in a plane is not the predicted constant")

    def _point_perp_matrix(self):
        form, f = self.form, self.field
        pts = self.pts_arr
        if form.kind == "hermitian":
            right = f.CONJ[pts]
        else:
            right = pts
        gram = np.array(form.gram, dtype=np.uint8)
        transformed = _table_matmul(f, right, gram.T)
        npts = len(self.points)
        vals = np.zeros((npts, npts), dtype=np.uint8)
        for k in range(self.d):
            col = pts[:, k]
            if not col.any():
                continue
            vals = f.ADD[vals, f.MUL[col[:, None], transformed[:, k][None, :]]]
        return vals == 0

    def _label_table(self):
        """n x n uint8 relation table from point-set and perp incidences."""
        q = self.q
        n = self.n_lines
        npts = len(self.points)
        lp = np.zeros((n, npts), dtype=np.float32)
        for li, pts in enumerate(self.line_points):
            lp[li, list(pts)] = 1.0
        mp = np.zeros((n, npts), dtype=np.float32)
        for li, pts in enumerate(self.line_points):
            mask = self.perp_points[pts[0]] & self.perp_points[pts[1]]
            mp[li] = mask
        labels = np.zeros((n, n), dtype=np.uint8)
        block = max(1, 2**24 // max(n, 1))
        for lo in range(0, n, block):
            hi = min(n, lo + block)
            scount = np.rint(lp[lo:hi] @ lp.T).astype(np.int32)
            tcount = np.rint(lp[lo:hi] @ mp.T).astype(np.int32)
            blk = np.full(scount.shape, 255, dtype=np.uint8)
            same = scount == q + 1
            s1 = scount == 1
            s0 = scount == 0
            t2 = tcount == q + 1
            t1 = tcount == 1
            t0 = tcount == 0
            blk[same & t2] = 0
            blk[s1 & t2] = 1
            blk[s1 & t1] = 2
            blk[s0 & t1] = 3
            blk[s0 & t0] = 4
            if (blk == 255).any():
                i, j = np.argwhere(blk == 255)[0]
                raise GeometryError(
                    f"illegal (s,t) pair for lines {lo + i},{j}: "
                    f"s-count={scount[i, j]}, t-count={tcount[i, j]}"
                )
            labels[lo:hi] = blk
        if not (labels == labels.T).all():
            raise GeometryError("relation table is not symmetric")
        return labels

    def _fingerprint(self):
        h = hashlib.sha256()
        f = self.field
        h.update(
            f"polarlines-space-v{SPACE_FORMAT_VERSION}|{self.family}|p{f.p}|h{f.h}|e2{self.e2}".encode()
        )
        for b in self.line_basis:
            for row in b:
                h.update(bytes(row))
        return h.hexdigest()[:16]

    # -- queries ---------------------------------------------------------------

    @property
    def theta(self):
        return self.q * self.q + self.q + 1

    def line_subspace(self, li):
        return Subspace(self.field, self.d, self.line_basis[li])

    def plane_subspace(self, pi):
        return Subspace(self.field, self.d, self.plane_basis[pi])

    def point_vector(self, i):
        return self.points[i]

    def classify_pair(self, li, mi):
        """Relation tag of an ordered line pair, from the precomputed table."""
        return REL_TAGS[int(self.labels[li, mi])]

    def classify_pair_geometric(self, li, mi):
        """Relation tag recomputed from scratch (independent of the table)."""
        lsub = self.line_subspace(li)
        msub = self.line_subspace(mi)
        s = intersect(lsub, msub)[1]
        t = intersect(lsub, self.perp(msub))[1]
        table = {(2, 2): "00", (1, 2): "10", (1, 1): "11", (0, 1): "20", (0, 0): "21"}
        if (s, t) not in table:
            raise GeometryError(f"illegal (s,t)=({s},{t}) for lines {li},{mi}")
        return table[(s, t)]

    def perp(self, sub):
        """S^perp with respect to the space's form."""
        rows = [self.form.perp_functional(s) for s in sub.basis]
        return kernel(rows, self.field, self.d)

    def valency_census(self, li):
        """Count of lines in each relation to line li."""
        return tuple(int(c) for c in np.bincount(self.labels[li], minlength=5))


def predicted_line_count(family, q):
    _, e2, _ = FAMILIES[family]
    s = q_to_e_power(q, e2)
    return (s * q + 1) * (s * q * q + 1) * (q * q + q + 1)


def build_space(family, q, max_lines=DEFAULT_MAX_LINES):
    """Enumerate the polar space of the given family over GF(q)."""
    form = FormSpec(family, q)
    n_pred = predicted_line_count(family, q)
    if n_pred > max_lines:
        raise ValueError(
            f"{family}/q={q} has {n_pred} lines, over the enumeration budget of {max_lines}"
        )
    f = form.field

    points = [p for p in _projective_points(f, form.d) if form.is_singular(p)]
    index = {p: i for i, p in enumerate(points)}

    # pairwise perpendicularity of points
    pts_arr = np.array(points, dtype=np.uint8)
    gram = np.array(form.gram, dtype=np.uint8)
    right = f.CONJ[pts_arr] if form.kind == "hermitian" else pts_arr
    transformed = _table_matmul(f, right, gram.T)
    npts = len(points)
    vals = np.zeros((npts, npts), dtype=np.uint8)
    for k in range(form.d):
        col = pts_arr[:, k]
        if not col.any():
            continue
        vals = f.ADD[vals, f.MUL[col[:, None], transformed[:, k][None, :]]]
    perp = vals == 0

    # lines: totally isotropic spans of perpendicular point pairs
    seen_lines = {}
    for i in range(npts):
        row = np.nonzero(perp[i])[0]
        for j in row:
            if j <= i:
                continue
            pset = _span_key(f, points[i], points[j], index)
            if pset in seen_lines:
                continue
            basis, _ = rref([points[i], points[j]], f)
            seen_lines[pset] = basis
    line_bases = sorted(seen_lines.values(), key=_basis_key)

    # planes: extend each line by a perpendicular singular point
    seen_planes = {}
    for basis in line_bases:
        u, w = basis
        iu = index[_normalize(f, u)]
        iw = index[_normalize(f, w)]
        on_line = set()
        pts = [index[_normalize(f, u)]]
        for a in range(f.q):
            pts.append(index[_normalize(f, f.add_vec(f.scale(a, u), w))])
        on_line.update(pts)
        cand = np.nonzero(perp[iu] & perp[iw])[0]
        for x in cand:
            if int(x) in on_line:
                continue
            b3, _ = rref([u, w, points[int(x)]], f)
            key = _basis_key(b3)
            if key not in seen_planes:
                seen_planes[key] = b3
    plane_bases = sorted(seen_planes.values(), key=_basis_key)

    return PolarSpace(form, points, line_bases, plane_bases)


def _span_key(field, u, w, index):
    pts = [index[_normalize(field, u)]]
    for a in range(field.q):
        pts.append(index[_normalize(field, field.add_vec(field.scale(a, u), w))])
    return tuple(sorted(pts))


def _basis_key(basis):
    return b"".join(bytes(r) for r in basis)


# -- cache file format --------------------------------------------------------


def save_space(space, path):
    """Write the space cache file (JSON header + canonical bases in index order)."""
    f = space.field
    doc = {
        "format_version": SPACE_FORMAT_VERSION,
        "family": space.family,
        "p": f.p,
        "h": f.h,
        "e2": space.e2,
        "counts": {
            "points": len(space.points),
            "lines": space.n_lines,
            "planes": len(space.plane_basis),
        },
        "fingerprint": space.fingerprint,
        "points": [list(p) for p in space.points],
        "lines": [[list(r) for r in b] for b in space.line_basis],
        "planes": [[list(r) for r in b] for b in space.plane_basis],
    }
    path = str(path)
    with open(path, "w") as fh:
        json.dump(doc, fh)
    np.save(path + ".labels.npy", space.labels)


def load_space(path):
    """Reload a cached space; indices are bit-exact with the original build."""
    path = str(path)
    with open(path) as fh:
        doc = json.load(fh)
    if doc.get("format_version") != SPACE_FORMAT_VERSION:
        raise ValueError(f"unsupported space cache version {doc.get('format_version')!r}")
    q = doc["p"] ** doc["h"]
    form = FormSpec(doc["family"], q)
    labels = None
    try:
        labels = np.load(path + ".labels.npy")
    except OSError:
        labels = None
    space = PolarSpace(
        form,
        [tuple(p) for p in doc["points"]],
        [tuple(tuple(r) for r in b) for b in doc["lines"]],
        [tuple(tuple(r) for r in b) for b in doc["planes"]],
        labels=labels,
    )
    if space.fingerprint != doc["fingerprint"]:
        raise ValueError("space cache fingerprint mismatch; file corrupt or stale")
    counts = doc["counts"]
    if (len(space.points), space.n_lines, len(space.plane_basis)) != (
        counts["points"],
        counts["lines"],
        counts["planes"],
    ):
        raise ValueError("space cache counts mismatch; file corrupt or stale")
    return space
