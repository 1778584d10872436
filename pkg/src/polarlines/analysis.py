"""Line-set analysis: distributions, regularity, divisibility, profiles.

All statistics are exact.  The inner distribution of a set Y counts ordered
pairs per relation, a_i = #{(x,y) in R_i : x,y in Y} / |Y|; the dual
distribution is aQ, and (aQ)_j = 0 exactly when the characteristic vector of
Y is orthogonal to the eigenspace V_j.  A set is regular (intriguing) when at
most one nontrivial (aQ)_j survives, equivalently when its inside/outside
degrees are constant in every relation graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .spaces import REL_TAGS, GeometryError, q_to_e_power

EIGEN_TAGS = REL_TAGS  # eigenspaces carry the same labels, in the same order
NONTRIVIAL = ("10", "11", "20", "21")


@dataclass(frozen=True)
class LineSet:
    """A subset of the lines of one space, held as sorted indices."""

    indices: tuple
    fingerprint: str
    name: str = ""

    def __len__(self):
        return len(self.indices)


def make_lineset(space, indices, name=""):
    idx = tuple(sorted(set(int(i) for i in indices)))
    if idx and (idx[0] < 0 or idx[-1] >= space.n_lines):
        raise ValueError("line index out of range")
    return LineSet(indices=idx, fingerprint=space.fingerprint, name=name)


def _as_indices(space, y):
    if isinstance(y, LineSet):
        if y.fingerprint != space.fingerprint:
            raise ValueError("line set belongs to a different space")
        return list(y.indices)
    idx = sorted(set(int(i) for i in y))
    if idx and (idx[0] < 0 or idx[-1] >= space.n_lines):
        raise ValueError("line index out of range")
    return idx


def complement(space, y):
    idx = set(_as_indices(space, y))
    return make_lineset(space, [i for i in range(space.n_lines) if i not in idx])


def inner_distribution(space, y):
    """The 5-vector a with a_i = (ordered pairs of Y in relation i) / |Y|."""
    idx = _as_indices(space, y)
    if not idx:
        raise ValueError("inner distribution undefined for the empty set")
    sub = space.labels[np.ix_(idx, idx)]
    counts = np.bincount(sub.ravel(), minlength=5)
    return tuple(Fraction(int(c), len(idx)) for c in counts)


def dual_distribution(space, tables, y):
    """aQ, exactly; Delsarte nonnegativity is asserted as a sanity check."""
    a = inner_distribution(space, y)
    aq = tuple(sum(a[i] * tables.Q[i][j] for i in range(5)) for j in range(5))
    if any(v < 0 for v in aq):
        raise GeometryError("negative dual distribution entry for a genuine subset")
    return aq


def eigenspace_support(space, tables, y):
    """The nontrivial eigenspaces j with (aQ)_j != 0, as a frozenset of tags."""
    aq = dual_distribution(space, tables, y)
    return frozenset(EIGEN_TAGS[j] for j in range(1, 5) if aq[j] != 0)


def weighted_dual_distribution(space, tables, weights):
    """aQ generalized to an integer weight vector w: b_j = sum_i (w^T A_i w) Q[i][j].

    b_j is a nonnegative multiple of |E_j w|^2, so b_j = 0 exactly when w is
    orthogonal to V_j.
    """
    w = np.asarray(weights, dtype=np.int64)
    if w.shape != (space.n_lines,):
        raise ValueError("weight vector has wrong length")
    if np.abs(w).max(initial=0) ** 2 * space.n_lines >= 2**62:
        raise OverflowError("weights too large for exact int64 arithmetic")
    quad = []
    labels = space.labels
    for i in range(5):
        acc = 0
        block = max(1, 2**24 // space.n_lines)
        for lo in range(0, space.n_lines, block):
            hi = min(space.n_lines, lo + block)
            acc += int(w[lo:hi] @ ((labels[lo:hi] == i) @ w))
        quad.append(acc)
    return tuple(sum(Fraction(quad[i]) * tables.Q[i][j] for i in range(5)) for j in range(5))


def weighted_support(space, tables, weights):
    b = weighted_dual_distribution(space, tables, weights)
    return frozenset(EIGEN_TAGS[j] for j in range(1, 5) if b[j] != 0)


@dataclass(frozen=True)
class RegularSetReport:
    is_regular: bool
    eigenspace: str | None
    size: int
    support: frozenset
    inside_degrees: tuple | None
    outside_degrees: tuple | None
    witness: tuple | None  # (line, relation tag, observed, expected-set) on failure


def expected_degrees(tables, j, size):
    """Inside/outside degree per relation for a regular set of given size.

    inside_i  = |Y| (P[0][i] - P[j][i]) / n + P[j][i]
    outside_i = |Y| (P[0][i] - P[j][i]) / n
    """
    inside, outside = [], []
    for i in range(5):
        base = Fraction(size * (tables.P[0][i] - tables.P[j][i]), tables.n)
        outside.append(base)
        inside.append(base + tables.P[j][i])
    return tuple(inside), tuple(outside)


def regular_set_check(space, tables, y):
    """Two-route regularity verdict: eigenspace support and vertexwise degrees.

    The routes must agree; disagreement raises, since it would mean the scheme
    tables and the enumerated geometry contradict each other.
    """
    idx = _as_indices(space, y)
    if not idx:
        raise ValueError("regularity undefined for the empty set")
    if len(idx) == space.n_lines:
        raise ValueError("regularity undefined for the full line set")

    support = eigenspace_support(space, tables, y)
    support_route = len(support) == 1
    j_tag = next(iter(support)) if support_route else None

    labels = space.labels[:, idx]
    counts = np.stack([(labels == i).sum(axis=1) for i in range(5)], axis=1)
    in_mask = np.zeros(space.n_lines, dtype=bool)
    in_mask[idx] = True

    degree_route = False
    inside = outside = None
    witness = None
    for j in range(1, 5):
        want_in, want_out = expected_degrees(tables, j, len(idx))
        if any(v.denominator != 1 for v in want_in + want_out):
            continue
        win = np.array([int(v) for v in want_in])
        wout = np.array([int(v) for v in want_out])
        if (counts[in_mask] == win).all() and (counts[~in_mask] == wout).all():
            degree_route = True
            inside, outside = want_in, want_out
            degree_j = EIGEN_TAGS[j]
            break

    if degree_route != support_route or (degree_route and degree_j != j_tag):
        raise GeometryError("support-based and degree-based regularity verdicts disagree")

    if not degree_route:
        # record one deviating vertex for the report
        bad = None
        for j in range(1, 5):
            want_in, want_out = expected_degrees(tables, j, len(idx))
            for x in range(space.n_lines):
                want = want_in if in_mask[x] else want_out
                for i in range(5):
                    if counts[x, i] != want[i]:
                        bad = (x, REL_TAGS[i], int(counts[x, i]), str(want[i]))
                        break
                if bad:
                    break
            if bad:
                break
        witness = bad

    return RegularSetReport(
        is_regular=support_route,
        eigenspace=j_tag,
        size=len(idx),
        support=support,
        inside_degrees=tuple(int(v) for v in inside) if inside else None,
        outside_degrees=tuple(int(v) for v in outside) if outside else None,
        witness=witness,
    )


# -- divisibility conditions ---------------------------------------------------


@dataclass(frozen=True)
class DivisibilityReport:
    consistent: bool
    eigenspace: str
    size: int
    modulus: Fraction
    m: Fraction | None
    excluded: tuple
    reason: str


def divisibility_report(size, j, q, e2):
    """Size admissibility for a regular set in the eigenspace tagged j.

    Cases, with m the integer multiplier of the stated modulus:
      j=10: |Y| = m (q^{e+1}+1)(q^2+q+1), m not in {1, q^{e+2}}
      j=11: |Y| = m (q^{e+1}+1)(q^{e+2}+1)
      j=20: q even, e != 1:  |Y| = m (q^2+q+1)(q^{e+2}+1)
            q odd,  e != 1:  |Y| = m (q^2+q+1)(q^{e+2}+1)/2, m not in {1, 2q^{e+2}+1}
            e = 1:           |Y| = m (q^4+q^2+1), m in {0} u [q+1, q^2(q+1)] u {(q^2+1)(q+1)}
      j=21: |Y| in {0, n}
    """
    if j not in NONTRIVIAL:
        raise ValueError(f"eigenspace must be one of {NONTRIVIAL}")
    s = q_to_e_power(q, e2)
    theta = q * q + q + 1
    n = (s * q + 1) * (s * q * q + 1) * theta
    excluded = ()
    interval = None
    if j == "10":
        modulus = Fraction((s * q + 1) * theta)
        excluded = (1, s * q * q)
    elif j == "11":
        modulus = Fraction((s * q + 1) * (s * q * q + 1))
    elif j == "20":
        if e2 != 2 and q % 2 == 0:
            modulus = Fraction(theta * (s * q * q + 1))
        elif e2 != 2:
            modulus = Fraction(theta * (s * q * q + 1), 2)
            excluded = (1, 2 * s * q * q + 1)
        else:
            modulus = Fraction(q**4 + q * q + 1)
            interval = (q + 1, q * q * (q + 1), (q * q + 1) * (q + 1))
    else:
        ok = size in (0, n)
        return DivisibilityReport(
            consistent=ok,
            eigenspace=j,
            size=size,
            modulus=Fraction(n),
            m=Fraction(size, n) if ok else None,
            excluded=(),
            reason="only the empty and full sets lie in this eigenspace"
            if ok
            else f"size must be 0 or {n}",
        )

    if size < 0 or size > n:
        return DivisibilityReport(False, j, size, modulus, None, excluded, f"size outside [0, {n}]")
    m = Fraction(size) / modulus
    if m.denominator != 1:
        return DivisibilityReport(
            False, j, size, modulus, None, excluded, f"size not a multiple of {modulus}"
        )
    m = int(m)
    if m in excluded:
        return DivisibilityReport(
            False, j, size, modulus, Fraction(m), excluded, f"multiplier m={m} is excluded"
        )
    if interval is not None:
        lo, hi, full = interval
        if not (m == 0 or lo <= m <= hi or m == full):
            return DivisibilityReport(
                False,
                j,
                size,
                modulus,
                Fraction(m),
                excluded,
                f"multiplier m={m} outside {{0}} u [{lo}, {hi}] u {{{full}}}",
            )
    return DivisibilityReport(True, j, size, modulus, Fraction(m), excluded, "admissible")


def span_orthogonal_divisor(S, q, e2, uncovered_point=False, has_spread=False):
    """Divisibility modulus for |Z| when chi_Z is orthogonal to sum of V_s, s in S.

    Each covered case is one intersection-based divisibility condition; an
    uncovered combination raises ValueError("no divisor known").
    """
    S = frozenset(S)
    s = q_to_e_power(q, e2)
    theta = q * q + q + 1
    if S == frozenset({"10", "20"}):
        return Fraction((s * q + 1) * (s * q * q + 1))
    if S == frozenset({"10", "11"}):
        if e2 != 2 and q % 2 == 0:
            return Fraction(theta * (s * q * q + 1))
        if e2 != 2:
            return Fraction(theta * (s * q * q + 1), 2)
        return Fraction(q**4 + q * q + 1)
    if S == frozenset({"10"}) and uncovered_point:
        if e2 in (0, 4) and q % 2 == 0:
            return Fraction(s * q * q + 1)
        if e2 in (0, 4):
            return Fraction(s * q * q + 1, 2)
        if e2 in (1, 3):
            return Fraction(s * q * q + 1, s + 1)
        return Fraction(q * q - q + 1)
    if S == frozenset({"11"}):
        if e2 in (0, 2, 4) or (e2 == 3 and q % 3 in (0, 1)):
            return Fraction((s * q + 1) * (s * q * q + 1))
        if e2 == 1:
            return Fraction((s + 1) * (s * q * q + 1))
        return Fraction((s * q + 1) * (s * q * q + 1), 3)
    if S == frozenset({"20"}) and has_spread:
        return Fraction(s * q + 1)
    raise ValueError("no divisor known for this eigenspace combination")


# -- geometric profiles ---------------------------------------------------------


@dataclass(frozen=True)
class PlaneProfile:
    histogram: dict
    pencil_ok: bool

    @property
    def sizes(self):
        return frozenset(self.histogram)


def plane_profile(space, y):
    """Histogram of |Y n plane| over all planes, with the pencil condition.

    pencil_ok is True when in every plane meeting Y in exactly q+1 lines those
    lines share a common point.
    """
    idx = set(_as_indices(space, y))
    hist = {}
    pencil_ok = True
    for lines in space.plane_lines:
        inside = [li for li in lines if li in idx]
        c = len(inside)
        hist[c] = hist.get(c, 0) + 1
        if c == space.q + 1:
            common = set(space.line_points[inside[0]])
            for li in inside[1:]:
                common &= set(space.line_points[li])
            if len(common) != 1:
                pencil_ok = False
    return PlaneProfile(histogram=hist, pencil_ok=pencil_ok)


@dataclass(frozen=True)
class DesignReport:
    is_design: bool
    level: str
    m: int | None
    size_formula_ok: bool | None
    support_ok: bool | None


def design_check(space, tables, y, level):
    """Constant-incidence check against points or planes.

    A point-design has every point on exactly m lines of Y, forces
    |Y| = m (q^{e+2}+1)(q^2+q+1)/(q+1) and support within {20, 21}; a
    plane-design has every plane containing exactly m lines of Y, forces
    |Y| = m (q^{e+1}+1)(q^{e+2}+1) and support within {11, 21}.
    """
    if level not in ("points", "planes"):
        raise ValueError("level must be 'points' or 'planes'")
    idx = set(_as_indices(space, y))
    incident = space.point_lines if level == "points" else space.plane_lines
    counts = {sum(1 for li in lines if li in idx) for lines in incident}
    if len(counts) != 1:
        return DesignReport(False, level, None, None, None)
    m = counts.pop()
    q, s = space.q, space.qe
    if level == "points":
        want = Fraction(m * (s * q * q + 1) * space.theta, q + 1)
        allowed = {"20", "21"}
    else:
        want = Fraction(m * (s * q + 1) * (s * q * q + 1))
        allowed = {"11", "21"}
    size_ok = Fraction(len(idx)) == want
    if idx:
        support_ok = eigenspace_support(space, tables, sorted(idx)) <= allowed
    else:
        support_ok = True
    return DesignReport(True, level, m, size_ok, support_ok)
