"""Exact Delsarte LP bounds for line families with forbidden relations.

The LP maximizes the size of an inner distribution with selected relations
zeroed out, subject to all dual-distribution entries staying nonnegative.
The solver enumerates the vertices of the tiny polytope in exact rational
arithmetic and certifies every optimum with nonnegative dual multipliers, so
a printed bound is a theorem, not an approximation.
"""

from fractions import Fraction

from polarlines import delsarte_lp_bound

CASES = [
    ("no two lines coplanar-concurrent", ["R10"]),
    ("no two lines concurrent non-coplanar", ["R11"]),
    ("no two lines disjoint-collinear", ["R20"]),
    ("no two lines meeting", ["R10", "R11"]),
    ("pairwise coplanar or opposite", ["R11", "R20"]),
    ("pairwise in a common plane", ["R11", "R21"]),
    ("pairwise opposite (partial 1-system)", ["R10", "R11", "R20"]),
    ("pencil-like families", ["R10", "R20", "R21"]),
]

for q, e in [(2, Fraction(0)), (2, Fraction(1)), (3, Fraction(1)), (4, Fraction(1, 2))]:
    e2 = int(2 * e)
    print(f"(q, e) = ({q}, {e}):")
    for label, forbidden in CASES:
        r = delsarte_lp_bound(q, e2, forbidden)
        tight = ",".join(sorted(r.tight)) or "-"
        print(f"  forbid {{{','.join(forbidden)}}}: |Y| <= {r.optimum}   [tight: {tight}]  ({label})")
    print()

print("a bound that is almost never an integer: forbid {R10, R21}")
for q in (2, 3, 4, 5, 7, 8, 9):
    r = delsarte_lp_bound(q, 2, ["R10", "R21"])
    note = "integer!" if r.optimum.denominator == 1 else ""
    print(f"  e=1, q={q}: {r.optimum} {note}")
