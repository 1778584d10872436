"""Exhaustive and budgeted searches over line sets.

All searches run depth-first with exact integer propagation and report
honestly: a completeness flag distinguishes an exhausted search from one
stopped by a node budget.  Every returned set is re-verified through the
analysis layer, independently of the search's own bookkeeping.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .analysis import (
    divisibility_report,
    eigenspace_support,
    expected_degrees,
    make_lineset,
    regular_set_check,
)
from .spaces import REL_TAGS


class _BudgetExceeded(Exception):
    pass


@dataclass(frozen=True)
class SearchResult:
    sets: tuple
    complete: bool
    nodes: int
    note: str = ""


@dataclass(frozen=True)
class ProbeResult:
    status: str  # "witness" | "none" | "unknown"
    witness: tuple | None
    nodes: int
    note: str = ""


@dataclass(frozen=True)
class SpreadResult:
    lines: tuple | None
    complete: bool
    nodes: int


@dataclass(frozen=True)
class PointSetResult:
    points: tuple | None
    complete: bool
    nodes: int


@dataclass(frozen=True)
class PackingResult:
    count: int
    sections: tuple
    line_sets: tuple
    complete: bool
    nodes: int


def _neighbor_lists(space, line_pool=None):
    """Per relation, per line: the neighbor indices (restricted to a pool)."""
    if line_pool is None:
        line_pool = range(space.n_lines)
    pool = np.array(sorted(line_pool))
    sub = space.labels[np.ix_(pool, pool)]
    per_rel = []
    for i in range(1, 5):
        rows = []
        mask = sub == i
        for r in range(len(pool)):
            rows.append(np.nonzero(mask[r])[0])
        per_rel.append(rows)
    return pool, per_rel


def _orbit_constraints(space, tables, j, size):
    """Exact block-intersection targets implied by the eigenspace.

    Plane line sets span <j> + V10 + V20 and point-pencils span
    <j> + V10 + V11, so a regular set in an eigenspace outside the span meets
    every member of the orbit in exactly size * |member| / n lines.  A
    non-integral target is an immediate infeasibility certificate.
    """
    orbits = []
    if j in ("11", "21"):
        orbits.append([lines for lines in space.plane_lines])
    if j in ("20", "21"):
        orbits.append([lines for lines in space.point_lines])
    out = []
    for members in orbits:
        target = Fraction(size * len(members[0]), tables.n)
        if target.denominator != 1:
            return None  # eigenspace forces an impossible intersection count
        out.append((members, int(target)))
    return out


class _DegreeSearch:
    """DFS over line memberships with exact per-vertex degree targets.

    Optional orbit constraints add exact block counts (every plane, every
    pencil) with their own unit propagation.
    """

    def __init__(self, space, tables, j, size, budget):
        self.space = space
        self.size = size
        self.budget = budget
        self.nodes = 0
        jidx = REL_TAGS.index(j)
        inside, outside = expected_degrees(tables, jidx, size)
        if any(v.denominator != 1 or v < 0 for v in inside + outside):
            self.feasible = False
            return
        constraints = _orbit_constraints(space, tables, j, size)
        if constraints is None:
            self.feasible = False
            return
        self.feasible = True
        self.t_in = np.array([int(v) for v in inside[1:]])
        self.t_out = np.array([int(v) for v in outside[1:]])
        n = space.n_lines
        self.n = n
        _, self.nbr = _neighbor_lists(space)
        self.status = np.full(n, -1, dtype=np.int8)  # -1 undecided, 0 out, 1 in
        self.cnt = np.zeros((4, n), dtype=np.int32)
        self.und = np.stack(
            [np.array([len(self.nbr[i][x]) for x in range(n)], dtype=np.int32) for i in range(4)]
        )
        self.n_in = 0
        self.n_und = n
        self.solutions = []

        blocks = []  # (member tuple, target)
        line_blocks = [[] for _ in range(n)]
        for members, target in constraints:
            for lines in members:
                bi = len(blocks)
                blocks.append((lines, target))
                for li in lines:
                    line_blocks[li].append(bi)
        self.blocks = blocks
        self.line_blocks = [np.array(v, dtype=np.int64) for v in line_blocks]
        self.b_target = np.array([t for _, t in blocks], dtype=np.int32)
        self.b_in = np.zeros(len(blocks), dtype=np.int32)
        self.b_und = np.array([len(b[0]) for b in blocks], dtype=np.int32)

    def _apply(self, x, val):
        self.status[x] = val
        self.n_und -= 1
        if val:
            self.n_in += 1
        for i in range(4):
            idx = self.nbr[i][x]
            self.und[i][idx] -= 1
            if val:
                self.cnt[i][idx] += 1
        self.b_und[self.line_blocks[x]] -= 1
        if val:
            self.b_in[self.line_blocks[x]] += 1

    def _undo(self, x):
        val = self.status[x]
        self.status[x] = -1
        self.n_und += 1
        if val:
            self.n_in -= 1
        for i in range(4):
            idx = self.nbr[i][x]
            self.und[i][idx] += 1
            if val:
                self.cnt[i][idx] -= 1
        self.b_und[self.line_blocks[x]] += 1
        if val:
            self.b_in[self.line_blocks[x]] -= 1

    def _scan(self):
        """Vectorized feasibility; returns (ok, forced list of (x, val))."""
        if self.n_in > self.size or self.n_in + self.n_und < self.size:
            return False, ()
        cnt, und = self.cnt, self.und
        reach = cnt + und
        ok_in = ((cnt <= self.t_in[:, None]) & (reach >= self.t_in[:, None])).all(axis=0)
        ok_out = ((cnt <= self.t_out[:, None]) & (reach >= self.t_out[:, None])).all(axis=0)
        stat = self.status
        if ((stat == 1) & ~ok_in).any() or ((stat == 0) & ~ok_out).any():
            return False, ()
        undec = stat == -1
        dead = undec & ~ok_in & ~ok_out
        if dead.any():
            return False, ()
        forced = []
        for x in np.nonzero(undec & (ok_in ^ ok_out))[0]:
            forced.append((int(x), 1 if ok_in[x] else 0))
        if len(self.blocks):
            b_in, b_und, target = self.b_in, self.b_und, self.b_target
            if ((b_in > target) | (b_in + b_und < target)).any():
                return False, ()
            active = b_und > 0
            for bi in np.nonzero(active & (b_in == target))[0]:
                forced.extend((li, 0) for li in self.blocks[bi][0] if stat[li] == -1)
            for bi in np.nonzero(active & (b_in + b_und == target))[0]:
                forced.extend((li, 1) for li in self.blocks[bi][0] if stat[li] == -1)
        # global cardinality forcing
        if self.n_in == self.size:
            forced.extend((int(x), 0) for x in np.nonzero(undec & ok_in & ok_out)[0])
        elif self.n_in + self.n_und == self.size:
            forced.extend((int(x), 1) for x in np.nonzero(undec & ok_in & ok_out)[0])
        return True, forced

    def run(self, stop_after=None):
        if not self.feasible:
            return SearchResult(
                (), True, 0, "degree or block targets are not nonnegative integers"
            )
        try:
            self._dfs(stop_after)
            complete = True
        except _BudgetExceeded:
            complete = False
        note = "" if complete else "node budget exhausted"
        return SearchResult(tuple(self.solutions), complete, self.nodes, note)

    def _dfs(self, stop_after):
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise _BudgetExceeded
        trail = []
        while True:
            ok, forced = self._scan()
            if not ok:
                for x in reversed(trail):
                    self._undo(x)
                return
            if not forced:
                break
            for x, val in forced:
                if self.status[x] == -1:
                    self._apply(x, val)
                    trail.append(x)
                elif self.status[x] != val:
                    for t in reversed(trail):
                        self._undo(t)
                    return
        undec = np.nonzero(self.status == -1)[0]
        if len(undec) == 0:
            if self.n_in == self.size:
                self.solutions.append(tuple(int(i) for i in np.nonzero(self.status == 1)[0]))
                if stop_after is not None and len(self.solutions) >= stop_after:
                    for x in reversed(trail):
                        self._undo(x)
                    raise _BudgetExceeded
            for x in reversed(trail):
                self._undo(x)
            return
        x = int(undec[0])
        for val in (1, 0):
            self._apply(x, val)
            try:
                self._dfs(stop_after)
            finally:
                self._undo(x)
        for t in reversed(trail):
            self._undo(t)


def enumerate_regular_sets(space, tables, j, size, budget=None, stop_after=None):
    """All regular sets with chi_Y in <j> + V_j of the given size.

    Sizes failing the divisibility conditions are rejected without search;
    sizes above n/2 are searched through their complements (a set is regular
    for V_j exactly when its complement is).  Every found set is re-checked
    through regular_set_check.
    """
    if j not in REL_TAGS[1:]:
        raise ValueError(f"eigenspace must be one of {REL_TAGS[1:]}")
    report = divisibility_report(size, j, space.q, space.e2)
    if not report.consistent:
        return SearchResult((), True, 0, f"size rejected: {report.reason}")
    if size in (0, space.n_lines):
        return SearchResult((), True, 0, "only proper nonempty sets are searched")
    complemented = size > space.n_lines // 2
    target_size = space.n_lines - size if complemented else size
    search = _DegreeSearch(space, tables, j, target_size, budget)
    result = search.run(stop_after)
    sets = result.sets
    if complemented:
        full = set(range(space.n_lines))
        sets = tuple(tuple(sorted(full - set(s))) for s in sets)
        note = (result.note + "; " if result.note else "") + "searched via complements"
        result = SearchResult(sets, result.complete, result.nodes, note)
    for sol in result.sets:
        rep = regular_set_check(space, tables, sol)
        if not rep.is_regular or rep.eigenspace != j:
            raise RuntimeError("search returned a set that fails independent verification")
    return result


class _ProbeSearch:
    """DFS for sets with eigenspace support within S, via projector intervals."""

    def __init__(self, space, tables, support, size, budget):
        self.space = space
        self.size = size
        self.budget = budget
        self.nodes = 0
        n = space.n_lines
        self.n = n
        _, self.nbr = _neighbor_lists(space)
        # integer projector rows: for each forbidden eigenspace j,
        # (M_j chi)_x = c0 * [x in Y] + sum_i c_i * cnt_i(x) must vanish
        self.projs = []
        for jtag in REL_TAGS[1:]:
            if jtag in support:
                continue
            j = REL_TAGS.index(jtag)
            den = 1
            for i in range(5):
                den = den * tables.Q[i][j].denominator // np.gcd(
                    den, tables.Q[i][j].denominator
                )
            coefs = [int(tables.Q[i][j] * den) for i in range(5)]
            self.projs.append((coefs[0], np.array(coefs[1:], dtype=np.int64)))
        self.status = np.full(n, -1, dtype=np.int8)
        self.cnt = np.zeros((4, n), dtype=np.int64)
        self.und = np.stack(
            [np.array([len(self.nbr[i][x]) for x in range(n)], dtype=np.int64) for i in range(4)]
        )
        self.n_in = 0
        self.n_und = n
        self.witness = None

    def _apply(self, x, val):
        self.status[x] = val
        self.n_und -= 1
        if val:
            self.n_in += 1
        for i in range(4):
            idx = self.nbr[i][x]
            self.und[i][idx] -= 1
            if val:
                self.cnt[i][idx] += 1

    def _undo(self, x):
        val = self.status[x]
        self.status[x] = -1
        self.n_und += 1
        if val:
            self.n_in -= 1
        for i in range(4):
            idx = self.nbr[i][x]
            self.und[i][idx] += 1
            if val:
                self.cnt[i][idx] -= 1

    def _ok(self):
        if self.n_in > self.size or self.n_in + self.n_und < self.size:
            return False
        stat = self.status
        undec = stat == -1
        inset = stat == 1
        for c0, ci in self.projs:
            now = np.zeros(self.n, dtype=np.int64)
            lo = np.zeros(self.n, dtype=np.int64)
            hi = np.zeros(self.n, dtype=np.int64)
            for i in range(4):
                now += ci[i] * self.cnt[i]
                extent = ci[i] * self.und[i]
                lo += np.minimum(0, extent)
                hi += np.maximum(0, extent)
            now += c0 * inset
            if c0 >= 0:
                hi += c0 * undec
            else:
                lo += c0 * undec
            if ((now + lo > 0) | (now + hi < 0)).any():
                return False
        return True

    def run(self):
        try:
            self._dfs()
            return ProbeResult("none", None, self.nodes)
        except _BudgetExceeded:
            if self.witness is not None:
                return ProbeResult("witness", self.witness, self.nodes)
            return ProbeResult("unknown", None, self.nodes, "node budget exhausted")

    def _dfs(self):
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise _BudgetExceeded
        if not self._ok():
            return
        undec = np.nonzero(self.status == -1)[0]
        if len(undec) == 0:
            if self.n_in == self.size:
                self.witness = tuple(int(i) for i in np.nonzero(self.status == 1)[0])
                raise _BudgetExceeded  # stop at the first witness
            return
        x = int(undec[0])
        for val in (1, 0):
            self._apply(x, val)
            try:
                self._dfs()
            finally:
                self._undo(x)


def _find_disjoint_members(pool, k):
    """First k pairwise-disjoint frozensets from the pool, or None."""
    chosen = []

    def dfs(start, used):
        if len(chosen) == k:
            return True
        for idx in range(start, len(pool)):
            s = pool[idx]
            if not (s & used):
                chosen.append(idx)
                if dfs(idx + 1, used | s):
                    return True
                chosen.pop()
        return False

    if dfs(0, frozenset()):
        return [pool[i] for i in chosen]
    return None


def _catalog_witness(space, tables, support, size):
    """Try to assemble a witness from known structured families."""
    from .constructions import hyperplane_sections, hyperplane_section_lines

    q, s = space.q, space.qe
    theta = space.theta
    candidates = []
    if size % theta == 0 and ("10" in support or "20" in support):
        # union of pairwise line-disjoint planes
        pool = [frozenset(lines) for lines in space.plane_lines]
        hit = _find_disjoint_members(pool, size // theta)
        if hit is not None:
            candidates.append(sorted(set().union(*hit)))
    pencil_size = (q + 1) * (s * q + 1)
    if size % pencil_size == 0 and ("10" in support or "11" in support):
        pool = [frozenset(lines) for lines in space.point_lines]
        hit = _find_disjoint_members(pool, size // pencil_size)
        if hit is not None:
            candidates.append(sorted(set().union(*hit)))
    gq_size = (s * q + 1) * (s * q * q + 1)
    if size % gq_size == 0 and "11" in support and space.family in ("O6plus", "U6", "O7"):
        pool = [
            frozenset(hyperplane_section_lines(space, sec).indices)
            for sec in hyperplane_sections(space)
            if sec.kind == "gq"
        ]
        hit = _find_disjoint_members(pool, size // gq_size)
        if hit is not None:
            candidates.append(sorted(set().union(*hit)))
    for cand in candidates:
        if len(cand) == size and eigenspace_support(space, tables, cand) <= support:
            return tuple(cand)
    return None


def feasibility_probe(space, tables, support, size, budget=None, prefilter=True, catalog=True):
    """Search for a set of the given size with eigenspace support within S.

    With prefilter, safe divisibility conditions reject sizes without search;
    with catalog, structured candidates (disjoint unions of planes, pencils,
    quadrangle sections) are tried before the exhaustive search.  A
    conclusive "none" is only reported when the search space was exhausted.
    """
    support = frozenset(str(t).upper().lstrip("R") for t in support)
    if not support <= set(REL_TAGS[1:]):
        raise ValueError("support must be a subset of the nontrivial eigenspaces")
    if size == 0:
        return ProbeResult("witness", (), 0, "empty set")
    q, s = space.q, space.qe
    if prefilter:
        if len(support) == 1:
            rep = divisibility_report(size, next(iter(support)), q, space.e2)
            if not rep.consistent:
                return ProbeResult("none", None, 0, f"divisibility prefilter: {rep.reason}")
        if support <= {"11", "21"}:
            modulus = (s * q + 1) * (s * q * q + 1)
            if size % modulus:
                return ProbeResult(
                    "none", None, 0, f"divisibility prefilter: size not a multiple of {modulus}"
                )
        if support <= {"20", "21"}:
            modulus = Fraction((q * q + q + 1) * (s * q * q + 1))
            if space.e2 == 2:
                modulus = Fraction(q**4 + q * q + 1)
            elif q % 2:
                modulus = modulus / 2
            if Fraction(size) % modulus != 0:
                return ProbeResult(
                    "none", None, 0, f"divisibility prefilter: size not a multiple of {modulus}"
                )
    if catalog and len(support) > 1:
        witness = _catalog_witness(space, tables, support, size)
        if witness is not None:
            return ProbeResult("witness", witness, 0, "catalog construction")
    if len(support) == 1:
        # support {j} on a proper nonempty set is exactly V_j-regularity, where
        # per-vertex degree targets prune far harder than projector intervals
        search = _DegreeSearch(space, tables, next(iter(support)), size, budget)
        result = search.run(stop_after=1)
        if result.sets:
            witness = result.sets[0]
            got = eigenspace_support(space, tables, witness)
            if not got <= support:
                raise RuntimeError("probe witness fails independent support verification")
            return ProbeResult("witness", witness, result.nodes)
        if result.complete:
            return ProbeResult("none", None, result.nodes, result.note)
        return ProbeResult("unknown", None, result.nodes, "node budget exhausted")
    probe = _ProbeSearch(space, tables, support, size, budget)
    result = probe.run()
    if result.status == "witness" and result.witness:
        got = eigenspace_support(space, tables, result.witness)
        if not got <= support:
            raise RuntimeError("probe witness fails independent support verification")
    return result


# -- exact cover: line spreads ---------------------------------------------------


def line_spread_search(space, point_indices=None, line_indices=None, budget=None):
    """Partition the (sub)geometry's points into lines, by exact cover.

    Defaults to the whole space; pass the points and lines of a section to
    search a spread of an embedded quadric or quadrangle.
    """
    if point_indices is None:
        point_indices = range(len(space.points))
    if line_indices is None:
        line_indices = range(space.n_lines)
    pts = sorted(set(point_indices))
    pos = {p: k for k, p in enumerate(pts)}
    if len(pts) % (space.q + 1):
        raise ValueError("point count is not divisible by the line size q+1")
    cand = []
    for li in sorted(set(line_indices)):
        if all(p in pos for p in space.line_points[li]):
            mask = 0
            for p in space.line_points[li]:
                mask |= 1 << pos[p]
            cand.append((li, mask))
    covers = [[] for _ in pts]
    for ci, (_, mask) in enumerate(cand):
        m = mask
        while m:
            b = m & -m
            covers[b.bit_length() - 1].append(ci)
            m ^= b
    full = (1 << len(pts)) - 1
    nodes = 0
    chosen = []

    def dfs(covered):
        nonlocal nodes
        nodes += 1
        if budget is not None and nodes > budget:
            raise _BudgetExceeded
        if covered == full:
            return True
        # most-constrained uncovered point
        best_p, best_opts = None, None
        m = full & ~covered
        while m:
            b = m & -m
            p = b.bit_length() - 1
            opts = [ci for ci in covers[p] if not (cand[ci][1] & covered)]
            if best_opts is None or len(opts) < len(best_opts):
                best_p, best_opts = p, opts
                if not opts:
                    return False
            m ^= b
        for ci in best_opts:
            chosen.append(cand[ci][0])
            if dfs(covered | cand[ci][1]):
                return True
            chosen.pop()
        return False

    try:
        found = dfs(0)
        complete = True
    except _BudgetExceeded:
        found = False
        complete = False
    if found:
        return SpreadResult(tuple(sorted(chosen)), True, nodes)
    return SpreadResult(None, complete, nodes)


def m_ovoid_search(space, point_indices, line_indices, m, budget=None):
    """Point set meeting every listed line in exactly m points, by DFS.

    Propagation forces the rest of a line once m points are in or the
    complementary count is out; the first solution in lexicographic order is
    returned.  Used to find m-ovoids (m = (q+1)/2 gives hemisystems) of an
    embedded quadrangle section.
    """
    pts = sorted(set(point_indices))
    pos = {p: k for k, p in enumerate(pts)}
    lines = []
    for li in sorted(set(line_indices)):
        if not all(p in pos for p in space.line_points[li]):
            raise ValueError("section lines must lie inside the section points")
        lines.append([pos[p] for p in space.line_points[li]])
    per_line = space.q + 1
    if not 0 <= m <= per_line:
        raise ValueError(f"m must be between 0 and {per_line}")
    n = len(pts)
    point_lines = [[] for _ in range(n)]
    for k, ln in enumerate(lines):
        for p in ln:
            point_lines[p].append(k)
    status = [-1] * n
    cin = [0] * len(lines)
    cout = [0] * len(lines)
    nodes = 0

    def assign(p, v, trail):
        status[p] = v
        trail.append(p)
        for k in point_lines[p]:
            if v:
                cin[k] += 1
            else:
                cout[k] += 1

    def undo(trail, upto):
        while len(trail) > upto:
            p = trail.pop()
            v = status[p]
            status[p] = -1
            for k in point_lines[p]:
                if v:
                    cin[k] -= 1
                else:
                    cout[k] -= 1

    def propagate(trail):
        changed = True
        while changed:
            changed = False
            for k, ln in enumerate(lines):
                if cin[k] > m or cout[k] > per_line - m:
                    return False
                if cin[k] == m:
                    for p in ln:
                        if status[p] == -1:
                            assign(p, 0, trail)
                            changed = True
                elif cout[k] == per_line - m:
                    for p in ln:
                        if status[p] == -1:
                            assign(p, 1, trail)
                            changed = True
        return True

    def dfs():
        nonlocal nodes
        nodes += 1
        if budget is not None and nodes > budget:
            raise _BudgetExceeded
        trail = []
        if not propagate(trail):
            undo(trail, 0)
            return None
        und = next((p for p in range(n) if status[p] == -1), None)
        if und is None:
            sol = tuple(pts[p] for p in range(n) if status[p] == 1)
            undo(trail, 0)
            return sol
        for v in (1, 0):
            mark = len(trail)
            assign(und, v, trail)
            r = dfs()
            undo(trail, mark)
            if r is not None:
                undo(trail, 0)
                return r
        undo(trail, 0)
        return None

    try:
        found = dfs()
        complete = True
    except _BudgetExceeded:
        found = None
        complete = False
    return PointSetResult(points=found, complete=complete, nodes=nodes)


# -- maximum clique and section packings ------------------------------------------


def max_clique(adj, budget=None):
    """Exact maximum clique by branch and bound with greedy coloring bounds.

    adj is a boolean numpy matrix.  Returns (clique tuple, complete, nodes).
    """
    n = adj.shape[0]
    masks = []
    for i in range(n):
        m = 0
        for j in np.nonzero(adj[i])[0]:
            if j != i:
                m |= 1 << int(j)
        masks.append(m)
    best = []
    nodes = 0

    def color_order(cand):
        order, bounds = [], []
        color = 0
        rest = cand
        while rest:
            color += 1
            avail = rest
            while avail:
                b = avail & -avail
                v = b.bit_length() - 1
                order.append(v)
                bounds.append(color)
                avail &= ~masks[v]
                avail ^= b
                rest ^= b
        return order, bounds

    def expand(current, cand):
        nonlocal nodes, best
        nodes += 1
        if budget is not None and nodes > budget:
            raise _BudgetExceeded
        order, bounds = color_order(cand)
        for k in range(len(order) - 1, -1, -1):
            if len(current) + bounds[k] <= len(best):
                return
            v = order[k]
            current.append(v)
            nxt = cand & masks[v]
            if nxt:
                expand(current, nxt)
            elif len(current) > len(best):
                best = list(current)
            current.pop()
            cand &= ~(1 << v)

    try:
        expand([], (1 << n) - 1)
        complete = True
    except _BudgetExceeded:
        complete = False
    return tuple(sorted(best)), complete, nodes


def disjoint_section_packing(space, budget=None):
    """Largest family of pairwise line-disjoint GQ hyperplane sections.

    Vertices are the nondegenerate hyperplane sections (all of GQ kind in
    O6plus); two are adjacent when their line sets share no line.  Budget
    exhaustion downgrades the result to a lower bound, flagged incomplete.
    """
    from .constructions import hyperplane_sections, hyperplane_section_lines

    if space.family != "O6plus":
        raise ValueError("section packings are computed for O6plus")
    sections = [s for s in hyperplane_sections(space) if s.kind == "gq"]
    line_sets = [frozenset(hyperplane_section_lines(space, s).indices) for s in sections]
    k = len(sections)
    adj = np.zeros((k, k), dtype=bool)
    for i in range(k):
        for j in range(i + 1, k):
            if not (line_sets[i] & line_sets[j]):
                adj[i, j] = adj[j, i] = True
    clique, complete, nodes = max_clique(adj, budget=budget)
    return PackingResult(
        count=len(clique),
        sections=tuple(sections[i] for i in clique),
        line_sets=tuple(sorted(line_sets[i]) for i in clique),
        complete=complete,
        nodes=nodes,
    )


def packing_union(space, packing):
    lines = []
    for ls in packing.line_sets:
        lines.extend(ls)
    return make_lineset(space, lines, name=f"packing_union[{packing.count}]")
