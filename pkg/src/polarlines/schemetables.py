"""Exact eigenvalue tables of the 5-class line scheme and their verification.

P is the 5x5 integer eigenvalue matrix (rows indexed by eigenspaces, columns
by relations, both in the order 00, 10, 11, 20, 21) and Q = n * P^(-1) is the
dual eigenvalue matrix.  Everything is exact: P entries are integers (q^e is
an integer because the Hermitian families force square q), Q entries are
Fractions.  Q is computed twice, from the closed form and by inverting P, and
the two must agree entrywise.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .spaces import REL_TAGS, q_to_e_power


def p_matrix(q, e2):
    """Eigenvalue matrix P for parameters (q, e), rows 00,10,11,20,21."""
    s = q_to_e_power(q, e2)
    return (
        (1, q * (q + 1) * (s + 1), s * q * q * (q + 1), s * q**3 * (q + 1) * (s + 1), s * s * q**5),
        (1, s * q + q * q + q - 1, q * (s * q - 1), q * (s * q * q - s * q - s - q), -s * q**3),
        (1, -(s + 1), s * (q * q + 1), -s * q * q * (s + 1), s * s * q * q),
        (1, (q - 1) * (q + 1), -q * (q + 1), -(q - 1) * q * (q + 1), q**3),
        (1, -(s + 1), s - q, q * (s + 1), -s * q),
    )


def _q_matrix_closed_form(q, e2):
    """Dual eigenvalue matrix Q, rows = relations, columns = eigenspaces."""
    s = q_to_e_power(q, e2)
    F = Fraction
    theta = q * q + q + 1
    eta = s * q + q * q + q - 1
    nu = s * q * q + 1
    return (
        (
            F(1),
            F(s * q * theta * (s * q + 1), s + q),
            F(q * q * (q + 1) * nu, s + q),
            F(s * s * q * theta * nu, s + q * q),
            F(s * q**3 * theta * nu, s + q * q),
        ),
        (
            F(1),
            F(s * theta * eta * (s * q + 1), (q + 1) * (s + 1) * (s + q)),
            F(-q * nu, s + q),
            F((q - 1) * s * s * theta * nu, (s + 1) * (s + q * q)),
            F(-s * q * q * theta * nu, (q + 1) * (s + q * q)),
        ),
        (
            F(1),
            F(theta * (s * q - 1) * (s * q + 1), (q + 1) * (s + q)),
            F((q * q + 1) * nu, s + q),
            F(-s * theta * nu, s + q * q),
            F(q * theta * (s - q) * nu, (q + 1) * (s + q * q)),
        ),
        (
            F(1),
            # numerator polynomial is q^(e+2) - q^(e+1) - q^e - q, matching
            # Q[i][j] = m_j P[j][i] / v_i; eta here would break P.Q = n.I
            F(theta * (s * q + 1) * (s * q * q - s * q - s - q), q * (q + 1) * (s + 1) * (s + q)),
            F(-q * nu, s + q),
            F(-(q - 1) * s * theta * nu, q * (s + 1) * (s + q * q)),
            F(q * theta * nu, (q + 1) * (s + q * q)),
        ),
        (
            F(1),
            F(-theta * (s * q + 1), q * (s + q)),
            F((q + 1) * nu, q * (s + q)),
            F(theta * nu, q * (s + q * q)),
            F(-theta * nu, q * (s + q * q)),
        ),
    )


def _invert_rational(mat):
    """Exact inverse of a square Fraction matrix by Gauss-Jordan elimination."""
    k = len(mat)
    aug = [[Fraction(x) for x in row] + [Fraction(i == j) for j in range(k)] for i, row in enumerate(mat)]
    for col in range(k):
        piv = next(r for r in range(col, k) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(k):
            if r != col and aug[r][col]:
                c = aug[r][col]
                aug[r] = [x - c * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[k:]) for row in aug)


@dataclass(frozen=True)
class SchemeTables:
    q: int
    e2: int
    qe: int
    n: int
    P: tuple
    Q: tuple
    multiplicities: tuple

    @property
    def valencies(self):
        return self.P[0]

    def relation_index(self, tag):
        return REL_TAGS.index(tag)


def make_tables(q, e2):
    """Exact scheme tables for parameters (q, e = e2/2)."""
    s = q_to_e_power(q, e2)
    n = (s * q + 1) * (s * q * q + 1) * (q * q + q + 1)
    P = p_matrix(q, e2)
    Q = _q_matrix_closed_form(q, e2)
    Q_inv = tuple(tuple(n * x for x in row) for row in _invert_rational(P))
    if Q != Q_inv:
        raise RuntimeError(
            f"dual eigenvalue matrix mismatch at (q={q}, e2={e2}): closed form != n*P^-1"
        )
    mult = Q[0]
    if any(m.denominator != 1 or m <= 0 for m in mult):
        raise RuntimeError(f"multiplicities not positive integers at (q={q}, e2={e2})")
    if sum(mult) != n:
        raise RuntimeError(f"multiplicities do not sum to n at (q={q}, e2={e2})")
    if sum(P[0]) != n or any(sum(row) != 0 for row in P[1:]):
        raise RuntimeError(f"P row sums wrong at (q={q}, e2={e2})")
    return SchemeTables(
        q=q, e2=e2, qe=s, n=n, P=P, Q=Q, multiplicities=tuple(int(m) for m in mult)
    )


def tables_for_space(space):
    tables = make_tables(space.q, space.e2)
    if tables.n != space.n_lines:
        raise RuntimeError("line count disagrees with the scheme order")
    return tables


# -- randomized-exact verification against an enumerated space ----------------

_INT64_LIMIT = 2**62


def _relation_matvec(labels, rel, x):
    """A_rel . x for an integer vector x, blocked to bound memory."""
    n = labels.shape[0]
    if abs(int(np.abs(x).max(initial=0))) * n >= _INT64_LIMIT:
        raise OverflowError("matvec operand too large for exact int64 arithmetic")
    out = np.zeros(n, dtype=np.int64)
    block = max(1, 2**24 // n)
    for lo in range(0, n, block):
        hi = min(n, lo + block)
        out[lo:hi] = (labels[lo:hi] == rel) @ x
    return out


def _lcm(values):
    out = 1
    for v in values:
        g = np.gcd(out, v)
        out = out // g * v
    return int(out)


def project_scaled(labels, tables, j, x):
    """(D * E_j x, D) with D chosen so the projection is an integer vector."""
    L = _lcm([tables.Q[i][j].denominator for i in range(5)])
    coefs = [int(tables.Q[i][j] * L) for i in range(5)]
    z = np.zeros(labels.shape[0], dtype=np.int64)
    for i in range(5):
        if coefs[i]:
            z = z + coefs[i] * _relation_matvec(labels, i, x)
    return z, tables.n * L


def verify_scheme(space, tables, k=5, seed=0x5EED):
    """Check A_i E_j x = P[j][i] E_j x exactly on k random integer vectors.

    Also checks that the projections sum back to x.  Returns a report dict;
    report["ok"] is True iff all 25 (relation, eigenspace) pairs pass on all
    vectors.
    """
    if tables.n != space.n_lines:
        raise ValueError("tables do not match the space")
    rng = np.random.default_rng(seed)
    n = space.n_lines
    labels = space.labels
    pair_ok = {(i, j): True for i in range(5) for j in range(5)}
    resolution_ok = True
    for _ in range(k):
        x = rng.integers(-9, 10, size=n).astype(np.int64)
        parts = []
        for j in range(5):
            z, D = project_scaled(labels, tables, j, x)
            parts.append((z, D))
            for i in range(5):
                if not np.array_equal(_relation_matvec(labels, i, z), tables.P[j][i] * z):
                    pair_ok[(i, j)] = False
        D_all = _lcm([D for _, D in parts])
        total = np.zeros(n, dtype=np.int64)
        for z, D in parts:
            total += z * (D_all // D)
        if not np.array_equal(total, D_all * x):
            resolution_ok = False
    ok = resolution_ok and all(pair_ok.values())
    return {
        "ok": ok,
        "pairs": {
            (REL_TAGS[i], REL_TAGS[j]): pair_ok[(i, j)] for i in range(5) for j in range(5)
        },
        "resolution_of_identity": resolution_ok,
        "vectors": k,
        "seed": seed,
    }


def empirical_valencies(space):
    """Per-line relation census; raises if it is not constant over lines."""
    counts = np.stack([np.bincount(row, minlength=5) for row in space.labels])
    first = counts[0]
    if not (counts == first).all():
        bad = int(np.nonzero((counts != first).any(axis=1))[0][0])
        raise RuntimeError(f"valency census is not constant; first deviation at line {bad}")
    return tuple(int(c) for c in first)
