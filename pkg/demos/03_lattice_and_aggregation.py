"""Lattice structure and weighted aggregation.

Under either linear order, finite collections of values have least upper and
greatest lower bounds.  A two-pass scan summarizes a collection (extreme
scores, whether they are attained, and the memberships realizing them) and
reconstructs both bounds from that summary alone.  Separately, the algebraic
sum/product operations give weighted averaging and geometric aggregators.
"""

from ifvkit import (
    LatticeScan,
    ifwa,
    ifwg,
    inf_finite,
    inf_from_scan,
    make_ifv,
    scan_of,
    sup_finite,
    sup_from_scan,
)

omega = [make_ifv(0.5, 0.2), make_ifv(0.3, 0.3), make_ifv(0.4, 0.5)]
print("collection:", ", ".join(map(str, omega)))
print(f"infimum  = {inf_finite(omega)}")
print(f"supremum = {sup_finite(omega)}")
print()

scan = scan_of(omega)
print(f"scan: score range [{scan.xi:+.2f}, {scan.eta:+.2f}], "
      f"attained=({scan.xi_attained}, {scan.eta_attained}), "
      f"memberships ({scan.mu_hat}, {scan.mu_tilde})")
print(f"rebuilt from scan: inf = {inf_from_scan(scan)}, sup = {sup_from_scan(scan)}")
print()

# When an extreme score is only approached, not attained, the bound lies
# outside the collection; the reconstruction handles that branch too.
open_scan = LatticeScan(0.0, 0.5, False, True, mu_tilde=0.75)
print(f"non-attained lower score: inf = {inf_from_scan(open_scan)}")
print()

weights = [0.5, 0.3, 0.2]
print(f"weighted average:   {ifwa(omega, weights)}")
print(f"weighted geometric: {ifwg(omega, weights)}")
