"""V(1)-homotopy tables of K(ku_p) and K(ko_p) as weighted module skeletons.

Each table is a sum of free ``F_p[b]`` (or ``F_p[b^2]``) modules on named
classes, possibly tensored with an exterior algebra, plus a few single
classes.  Weights live in ``Z/(p-1)``.  Classes carry no products beyond
the polynomial action.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .basis import BasisTable
from .coefficients import is_prime
from .errors import BadWeight, SmallPrime
from .reports import CheckReport


@dataclass(frozen=True)
class NamedClass:
    name: str
    deg: int
    wt: int


@dataclass(frozen=True)
class Summand:
    poly: NamedClass | None
    exterior: tuple = ()
    generators: tuple = ()


@dataclass(frozen=True)
class NamedModuleTable:
    name: str
    p: int
    summands: tuple
    singletons: tuple = ()

    @property
    def modulus(self) -> int:
        return self.p - 1

    def classes(self) -> list:
        """Every named class in display order, without repeats."""
        out, seen = [], set()
        for s in self.summands:
            for c in ((s.poly,) if s.poly else ()) + s.exterior + s.generators:
                if c.name not in seen:
                    seen.add(c.name)
                    out.append(c)
        for c in self.singletons:
            if c.name not in seen:
                seen.add(c.name)
                out.append(c)
        return out

    def render(self) -> str:
        lines = [f"# {self.name}, weights mod {self.modulus}",
                 f"{'class':<24} {'deg':>6} {'wt':>4}"]
        for c in self.classes():
            lines.append(f"{c.name:<24} {c.deg:>6} {c.wt % self.modulus:>4}")
        return "\n".join(lines) + "\n"


def _check_prime(p):
    if not is_prime(p) or p <= 3:
        raise SmallPrime(f"tables need a prime p > 3, got {p}")


def _common(p):
    lam1 = NamedClass("lambda1", 2 * p - 1, 0)
    lam2 = NamedClass(f"lambda2*t^{p * p - p}", 2 * p - 1, 0)
    tdl = tuple(NamedClass(f"t^{d}*lambda1", 2 * p - 1 - 2 * d, 0) for d in range(1, p))
    s = NamedClass("s", 2 * p - 3, 0)
    return lam1, lam2, tdl, s


def table_K_ku(p: int) -> NamedModuleTable:
    _check_prime(p)
    m = p - 1
    lam1, lam2, tdl, s = _common(p)
    b = NamedClass("b", 2 * p + 2, 1)
    a1 = NamedClass("a1", 2 * p + 3, 1)
    one = NamedClass("1", 0, 0)
    dels = (
        NamedClass("del*lambda1", 2 * p - 2, 0),
        NamedClass("del*b", 2 * p + 1, 1),
        NamedClass("del*a1", 2 * p + 2, 1),
        NamedClass("del*lambda1*a1", 4 * p + 1, 1),
    )
    sigmas = tuple(NamedClass(f"sigma{n}", 2 * n + 1, n % m) for n in range(1, p - 1))
    return NamedModuleTable(f"V(1)_*K(ku_{p})", p, (
        Summand(b, (lam1, a1), (one,)),
        Summand(b, (), dels),
        Summand(b, (a1,), tdl),
        Summand(b, (lam1,), sigmas + (lam2,)),
    ), (s,))


def table_K_ko(p: int) -> NamedModuleTable:
    _check_prime(p)
    m = p - 1
    lam1, lam2, tdl, s = _common(p)
    b2 = NamedClass("(b^2)", 4 * p + 4, 2 % m)
    ba1 = NamedClass("b*a1", 4 * p + 5, 2 % m)
    one = NamedClass("1", 0, 0)
    dels = (
        NamedClass("del*lambda1", 2 * p - 2, 0),
        NamedClass("b*del*b", 4 * p + 3, 2 % m),
        NamedClass("b*del*a1", 4 * p + 4, 2 % m),
        NamedClass("b*del*lambda1*a1", 6 * p + 3, 2 % m),
    )
    sigmas = []
    for n in range(1, p - 1):
        if n % 2:
            sigmas.append(NamedClass(f"b*sigma{n}", 2 * n + 1 + 2 * p + 2, (n + 1) % m))
        else:
            sigmas.append(NamedClass(f"sigma{n}", 2 * n + 1, n % m))
    return NamedModuleTable(f"V(1)_*K(ko_{p})", p, (
        Summand(b2, (lam1, ba1), (one,)),
        Summand(b2, (), dels),
        Summand(b2, (ba1,), tdl),
        Summand(b2, (lam1,), tuple(sigmas) + (lam2,)),
    ), (s,))


def _label(parts) -> str:
    parts = [x for x in parts if x and x != "1"]
    return "*".join(parts) or "1"


def enumerate_table(t: NamedModuleTable, window) -> BasisTable:
    lo, hi = window
    m = t.modulus
    entries: dict = {}

    def put(deg, wt, label):
        if lo <= deg <= hi:
            entries.setdefault((deg, wt % m), []).append(label)

    for s in t.summands:
        for r in range(len(s.exterior) + 1):
            for ext in combinations(s.exterior, r):
                for g in s.generators:
                    deg = g.deg + sum(c.deg for c in ext)
                    wt = g.wt + sum(c.wt for c in ext)
                    names = [c.name for c in ext] + [g.name]
                    if s.poly is None:
                        put(deg, wt, _label(names))
                        continue
                    j = 0 if deg >= lo else -(-(lo - deg) // s.poly.deg)
                    while deg + j * s.poly.deg <= hi:
                        power = "" if j == 0 else s.poly.name if j == 1 else f"{s.poly.name}^{j}"
                        put(deg + j * s.poly.deg, wt + j * s.poly.wt, _label([power] + names))
                        j += 1
    for c in t.singletons:
        put(c.deg, c.wt, c.name)
    return BasisTable.from_mapping(tuple(window), m, entries)


def _check_weights(t: NamedModuleTable, weights):
    for w in weights:
        if not 0 <= w < t.modulus:
            raise BadWeight(f"weight {w} is not in Z/{t.modulus}")


def weight_piece(t: NamedModuleTable, i: int, window) -> BasisTable:
    _check_weights(t, [i])
    full = enumerate_table(t, window)
    return BasisTable(full.window, full.modulus, tuple(e for e in full.entries if e[0].wt == i))


def reassemble(t: NamedModuleTable, weights, window) -> BasisTable:
    """Keep the listed weights.  If they form the subgroup ``dZ/(p-1)`` the
    weights are relabelled ``w -> w/d`` modulo ``(p-1)/d``."""
    weights = sorted(set(weights))
    _check_weights(t, weights)
    m = t.modulus
    full = enumerate_table(t, window)
    kept = tuple(e for e in full.entries if e[0].wt in weights)
    d = weights[1] if len(weights) > 1 else m
    if weights and weights == list(range(0, m, d)) and m % d == 0:
        return BasisTable(full.window, m // d,
                          tuple(((bd.deg, bd.wt // d), labels) for bd, labels in kept))
    return BasisTable(full.window, m, kept)


def even_weights(p: int) -> list:
    return list(range(0, p - 1, 2))


def ko_check(p: int, window=(-10, 200)) -> CheckReport:
    """Even-weight part of the ku table against the ko table, bidegree by
    bidegree, plus the parity of every ko class."""
    ku, ko = table_K_ku(p), table_K_ko(p)
    report = CheckReport("ko-reassembly", {"p": p}, tuple(window))
    ko_full = enumerate_table(ko, window)
    odd = [label for bd, labels in ko_full.entries if bd.wt % 2 for label in labels]
    odd += [c.name for c in ko.classes() if c.wt % 2]
    lhs = reassemble(ku, even_weights(p), window).ranks()
    rhs = reassemble(ko, even_weights(p), window).ranks()
    for bd in sorted(set(lhs) | set(rhs)):
        report.add(bd.deg, bd.wt, lhs.get(bd, 0), rhs.get(bd, 0))
    if odd:
        report.notes["failures"] = [f"odd-weight ko class {name}" for name in odd]
    report.notes["bidegreesChecked"] = len(report.rows)
    return report


def t2_presentation(p: int, which: str = "ku") -> dict:
    """Quotient presentations of T(2)-local K-theory over that of ell_p."""
    _check_prime(p)
    m = p - 1
    if which == "ku":
        gen, deg, power = "b", 2 * p + 2, m
    elif which == "ko":
        gen, deg, power = "(b^2)", 4 * p + 4, m // 2
    else:
        raise ValueError(f"unknown table {which!r}; use 'ku' or 'ko'")
    relation = f"{gen}^{power} + v2 = 0"
    return {
        "name": f"T(2)_*K({which}_{p})",
        "over": f"T(2)_*K(ell_{p})",
        "generator": {"name": gen, "deg": deg},
        "presentation": f"T(2)_*K(ell_{p})[{gen}]/({gen}^{power} + v2)",
        "relation": relation,
        "note": f"{gen}^{power} = -v2, recorded as metadata; v2 is not a table class",
    }
