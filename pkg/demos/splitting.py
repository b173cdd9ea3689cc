"""Frobenius orbits on the weights and the assembled HH table after a root."""

from rootadj.roots import preset
from rootadj.splitting import frobenius_orbits, tc_k_summand_report, thh_after_root_check

for m, p in [(4, 5), (4, 3), (24, 5)]:
    print(frobenius_orbits(m, p).render())
    print(tc_k_summand_report(m, p)["note"])

ell, _ = preset("ell(7)")
report, assembled, direct = thh_after_root_check(ell, "v1", 6, (0, 40))
print(report.verdict)
print(assembled.render())
