"""Mod (p, v1) K-theory tables of ku_p and ko_p and the even-weight comparison."""

from rootadj.ktables import ko_check, table_K_ko, table_K_ku

p = 5
print(table_K_ku(p).render())
print(table_K_ko(p).render())
r = ko_check(p, (-10, 200))
print(r.verdict, r.notes.get("bidegreesChecked"))
