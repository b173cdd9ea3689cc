"""Weight-splitting bookkeeping for TC and K-theory of root adjunctions.

The cyclotomic Frobenius multiplies weights by ``p``.  When ``p`` is prime
to ``m`` it permutes ``Z/m`` and ``TC`` splits along its orbits; otherwise
only weight 0 is separated from the rest.  Nothing here computes TC or K
groups: the reports say which splittings apply and how many summands they
give.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .basis import BasisTable, merge_tables
from .errors import InputNotWeightZero
from .hkr import hh, log_hh
from .reports import compare_tables
from .roots import RootAdjunctionRequest, adjoin_root, plain_presentation


@dataclass(frozen=True)
class OrbitPartition:
    m: int
    p: int
    blocks: tuple  # sorted tuples of weights, ordered by least element

    @property
    def permutes(self) -> bool:
        return gcd(self.m, self.p) == 1

    def as_sets(self) -> set:
        return {frozenset(b) for b in self.blocks}

    def to_json(self) -> dict:
        return {"m": self.m, "p": self.p, "blocks": [list(b) for b in self.blocks]}

    def render(self) -> str:
        text = " ".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks)
        if self.p % self.m == 1 % self.m:
            note = "full splitting: p ≡ 1 mod m"
        elif self.permutes:
            note = "splitting along Frobenius orbits"
        else:
            note = "p divides m: only weight 0 splits off"
        return f"{text}\n{note}\n"


def frobenius_orbits(m: int, p: int) -> OrbitPartition:
    if m < 1:
        raise ValueError(f"m must be at least 1, got {m}")
    if gcd(m, p) != 1:
        rest = tuple(range(1, m))
        return OrbitPartition(m, p, ((0,),) + ((rest,) if rest else ()))
    seen, blocks = set(), []
    for w in range(m):
        if w in seen:
            continue
        orbit, x = [], w
        while x not in orbit:
            orbit.append(x)
            x = x * p % m
        seen.update(orbit)
        blocks.append(tuple(sorted(orbit)))
    return OrbitPartition(m, p, tuple(blocks))


def tc_k_summand_report(m: int, p: int, deg_a_positive: bool = True,
                        connective: bool = True) -> dict:
    """Which splitting statements apply to TC and K of ``A(root of a)``."""
    orbits = frobenius_orbits(m, p)
    doc = {"m": m, "p": p, "tame": m % p != 0, "orbits": orbits.to_json()["blocks"]}
    if m % p == 0:
        doc.update(tcSplits=False, kSummandInclusion=False, summands=1,
                   note="p divides m: no splitting claimed")
        return doc
    if connective:
        count = len(orbits.blocks)
        doc.update(
            tcSplits=True,
            kSummandInclusion=deg_a_positive,
            summands=count,
            tLocalOnly=False,
            note=(f"TC splits into {count} summands along Frobenius orbits; "
                  + ("K(A) is the weight-0 summand of K(A(root))" if deg_a_positive
                     else "deg(a) = 0, so no K-theory summand is claimed")),
        )
    else:
        # without connectivity only the weight-0 summand is split off, and
        # only after T(i)-localization for i >= 2
        count = 2 if m > 1 else 1
        doc.update(
            tcSplits=False,
            kSummandInclusion=True,
            summands=count,
            tLocalOnly=True,
            note=f"{count} summands T(i)-locally for every i >= 2",
        )
    return doc


def assemble_thh_table(thhA: BasisTable, logthhA: BasisTable, m: int, k: int,
                       window=None) -> BasisTable:
    """Weight 0 is ``thhA``; weight ``i`` is ``logthhA`` suspended ``i*k`` times.

    ``logthhA`` should cover the window extended down by ``(m-1)*k``.
    """
    for t in (thhA, logthhA):
        if not t.is_weight_zero():
            raise InputNotWeightZero("inputs must be concentrated in weight 0")
    window = tuple(window or thhA.window)
    pieces = [BasisTable(window, m, thhA.entries)]
    for i in range(1, m):
        pieces.append(logthhA.shifted(i * k, i, modulus=m).with_window(window))
    return merge_tables(pieces, window, m)


def thh_after_root_check(base, g: str, m: int, window=(0, 80)):
    """Compare the assembled table with HH of the adjoined algebra itself."""
    adjoined = adjoin_root(RootAdjunctionRequest(base, base.gen(g), m))
    k = adjoined.gen_spec("z").deg
    lo, hi = window
    assembled = assemble_thh_table(
        hh(base).table(window), log_hh(base, g).table((lo - (m - 1) * k, hi)), m, k, window)
    direct = hh(plain_presentation(adjoined)).table(window)
    report = compare_tables("thh-after-root", {"gen": g, "m": m, "k": k}, assembled, direct)
    return report, assembled, direct
