"""HKR and log HKR models, the cofiber sequence and the weight-0 check."""

from rootadj.algebra import make_algebra
from rootadj.hkr import cofiber_check, hh, log_hh, weight_zero_iso_check

A = make_algebra({"coeffs": {"kind": "ZpLocal", "p": 5},
                  "gens": [{"name": "v1", "deg": 8}, {"name": "s4", "deg": 4}]})
print(hh(A).table((0, 20)).render())
print(log_hh(A, "v1").table((0, 20)).render())
print(cofiber_check(A, "v1", (0, 30)).render())

for m, k, p in [(4, 2, 5), (3, 2, 3)]:
    r = weight_zero_iso_check(m, k, p, (0, 30))
    print((m, k, p), r.verdict, r.notes.get("offending", [])[:1])
