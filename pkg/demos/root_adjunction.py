"""Adjoin a (p-1)-st root of v1 to ell_p and look at the weight pieces."""

import sys

from rootadj.basis import enumerate_basis, table_diff
from rootadj.regrading import weight_slice
from rootadj.roots import RootAdjunctionRequest, adjoin_root, check_hypothesis, preset

p = int(sys.argv[1]) if len(sys.argv) > 1 else 5
ell, v1 = preset(f"ell({p})")
req = RootAdjunctionRequest(ell, v1, p - 1, 2)
print(check_hypothesis(req).to_json())

ku = adjoin_root(req)
window = (0, 40)
table = enumerate_basis(ku, window)
print(table.render())

base = enumerate_basis(ell, window)
for i in range(p - 1):
    same = table_diff(weight_slice(table, i), base.shifted(2 * i)) == []
    print(f"weight {i}: base shifted by {2 * i}: {same}")
