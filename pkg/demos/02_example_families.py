"""Tour of the structured line families and their exact distributions.

Each construction validates itself on the way out: its inner distribution
must equal the known closed form.  Here we also print the dual distribution
aQ, whose zero pattern tells which eigenspaces the set projects onto, and ask
the regularity checker for a verdict.
"""

from polarlines import (
    build_space,
    dual_distribution,
    elliptic_ovoid,
    find_section,
    hexagon_lines,
    hyperplane_section_lines,
    inner_distribution,
    m_ovoid_lift,
    pencil_union,
    plane_lines,
    point_pencil,
    regular_set_check,
    symplectic_spread_lines,
    tables_for_space,
)


def show(space, tables, y, label):
    a = inner_distribution(space, y)
    aq = dual_distribution(space, tables, y)
    rep = regular_set_check(space, tables, y)
    verdict = f"regular in V{rep.eigenspace}" if rep.is_regular else f"support {sorted(rep.support)}"
    print(f"  {label}: {len(y)} lines")
    print(f"    a  = ({', '.join(str(x) for x in a)})")
    print(f"    aQ = ({', '.join(str(x) for x in aq)})   -> {verdict}")


print("O+(6,2), the hyperbolic quadric:")
o6 = build_space("O6plus", 2)
t6 = tables_for_space(o6)
show(o6, t6, plane_lines(o6, 0), "lines of one plane")
show(o6, t6, point_pencil(o6, 0), "point pencil")
show(o6, t6, point_pencil(o6, 0, "perp_avoiding"), "lines in the perp, avoiding the point")
show(o6, t6, hyperplane_section_lines(o6, find_section(o6, "gq")), "O(5,2) quadrangle section")
ovoid = elliptic_ovoid(o6)
print(f"  elliptic ovoid: points {ovoid}, one per plane")
show(o6, t6, pencil_union(o6, ovoid), "union of the 5 ovoid pencils")

print("\nSp(6,2), the symplectic space:")
sp = build_space("Sp6", 2)
ts = tables_for_space(sp)
show(sp, ts, symplectic_spread_lines(sp), "lines inside the 9 spread planes")
show(sp, ts, hexagon_lines(sp), "split Cayley hexagon")

print("\nO+(6,3): a lift through a 1-ovoid of the O(5,3) section (odd q only):")
o63 = build_space("O6plus", 3)
t63 = tables_for_space(o63)
section = find_section(o63, "gq")
ovoid3 = elliptic_ovoid(o63, fixed_duals=[section.dual_point])
show(o63, t63, m_ovoid_lift(o63, section, ovoid3), "lines meeting the section once, in the ovoid")
