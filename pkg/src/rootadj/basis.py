"""Bigraded basis tables and monomial enumeration.

A :class:`BasisTable` records, for every bidegree ``(deg, wt)`` in a finite
degree window, the ordered list of basis labels living there.  It is the
exchange format between every module of the package.
"""

from __future__ import annotations

import json
import math
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Mapping

from .algebra import (
    EXTERIOR,
    LAURENT,
    TRUNCATED,
    Bidegree,
    PresentedAlgebra,
    reduce_weight,
)
from .errors import InfiniteSlice, WindowMismatch


@dataclass(frozen=True)
class BasisTable:
    window: tuple
    modulus: int = 0
    entries: tuple = ()  # ((Bidegree, (label, ...)), ...) sorted by bidegree

    def __post_init__(self):
        lo, hi = self.window
        if lo > hi:
            raise ValueError(f"empty window {self.window}")
        object.__setattr__(self, "window", (int(lo), int(hi)))
        clean = []
        for bd, labels in self.entries:
            bd = Bidegree(bd[0], reduce_weight(bd[1], self.modulus))
            if lo <= bd.deg <= hi and labels:
                clean.append((bd, tuple(labels)))
        clean.sort(key=lambda item: item[0])
        for (a, _), (b, _) in zip(clean, clean[1:]):
            if a == b:
                raise ValueError(f"bidegree {a} listed twice")
        object.__setattr__(self, "entries", tuple(clean))

    @classmethod
    def from_mapping(cls, window, modulus: int, entries: Mapping) -> BasisTable:
        merged: dict = defaultdict(list)
        for bd, labels in entries.items():
            merged[Bidegree(bd[0], reduce_weight(bd[1], modulus))].extend(labels)
        return cls(tuple(window), modulus, tuple(merged.items()))

    def as_dict(self) -> dict:
        return dict(self.entries)

    def ranks(self) -> dict:
        return {bd: len(labels) for bd, labels in self.entries}

    def rank(self, deg: int, wt: int) -> int:
        return len(self.as_dict().get(Bidegree(deg, reduce_weight(wt, self.modulus)), ()))

    def labels(self, deg: int, wt: int) -> tuple:
        return self.as_dict().get(Bidegree(deg, reduce_weight(wt, self.modulus)), ())

    def weights(self) -> list:
        return sorted({bd.wt for bd, _ in self.entries})

    def total_rank(self) -> int:
        return sum(len(labels) for _, labels in self.entries)

    def degree_ranks(self) -> dict:
        out: dict = defaultdict(int)
        for bd, labels in self.entries:
            out[bd.deg] += len(labels)
        return dict(out)

    def all_labels(self) -> list:
        return [label for _, labels in self.entries for label in labels]

    def is_weight_zero(self) -> bool:
        return all(bd.wt == 0 for bd, _ in self.entries)

    def with_window(self, window) -> BasisTable:
        return BasisTable(tuple(window), self.modulus, self.entries)

    def shifted(self, deg_shift: int, wt_shift: int = 0, modulus: int | None = None,
                prefix: str = "") -> BasisTable:
        """Suspend by ``deg_shift`` and move weights by ``wt_shift``."""
        modulus = self.modulus if modulus is None else modulus
        return BasisTable.from_mapping(
            self.window, modulus,
            {(bd.deg + deg_shift, bd.wt + wt_shift):
             [prefix + label for label in labels] for bd, labels in self.entries})

    # -- documents ------------------------------------------------------
    def to_json(self) -> dict:
        return {
            "window": list(self.window),
            "m": self.modulus,
            "entries": [
                {"deg": bd.deg, "wt": bd.wt, "labels": list(labels)}
                for bd, labels in self.entries
            ],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1, ensure_ascii=False)

    @classmethod
    def from_json(cls, doc: Mapping) -> BasisTable:
        return cls(
            tuple(doc["window"]),
            int(doc.get("m", 0)),
            tuple((Bidegree(e["deg"], e["wt"]), tuple(e["labels"]))
                  for e in doc.get("entries", ())),
        )

    def render(self) -> str:
        """Fixed-width text view: one line per bidegree."""
        lines = [f"# window [{self.window[0]}, {self.window[1]}]  weights mod {self.modulus}",
                 f"{'deg':>6} {'wt':>4} {'rank':>5}  labels"]
        for bd, labels in self.entries:
            lines.append(f"{bd.deg:>6} {bd.wt:>4} {len(labels):>5}  {' '.join(labels)}")
        return "\n".join(lines) + "\n"


def empty_table(window, modulus: int = 0) -> BasisTable:
    return BasisTable(tuple(window), modulus)


def merge_tables(tables: Iterable[BasisTable], window=None, modulus=None) -> BasisTable:
    """Direct sum: concatenate labels bidegree by bidegree."""
    tables = list(tables)
    window = window or tables[0].window
    modulus = tables[0].modulus if modulus is None else modulus
    merged: dict = defaultdict(list)
    for t in tables:
        for bd, labels in t.entries:
            merged[(bd.deg, bd.wt)].extend(labels)
    return BasisTable.from_mapping(window, modulus, merged)


# -- enumeration -----------------------------------------------------------

def _exponent_range(alg: PresentedAlgebra, i: int):
    """(lo, hi) exponent bounds of generator ``i``; None marks unbounded."""
    g = alg.gens[i]
    root = alg.root_of(g.name)
    if root is not None:
        return 0, root.power - 1
    if g.kind == EXTERIOR:
        return 0, 1
    if g.kind == TRUNCATED:
        return 0, g.height - 1
    if g.deg == 0:
        return (-g.cap if g.kind == LAURENT else 0), g.cap
    if g.kind == LAURENT:
        return None, None
    return 0, None


def check_finite(alg: PresentedAlgebra):
    """Raise InfiniteSlice if some bidegree would be infinite-dimensional.

    That happens exactly when two different unbounded generators can move the
    degree in opposite directions.
    """
    directions = []
    for i, g in enumerate(alg.gens):
        lo, hi = _exponent_range(alg, i)
        signs = set()
        if hi is None:
            signs.add(1 if g.deg > 0 else -1)
        if lo is None:
            signs.add(-1 if g.deg > 0 else 1)
        if signs:
            directions.append((g.name, signs))
    for a in range(len(directions)):
        for b in range(a + 1, len(directions)):
            (na, sa), (nb, sb) = directions[a], directions[b]
            if any(-s in sb for s in sa):
                raise InfiniteSlice(
                    f"generators {na} and {nb} cancel in degree; add a cap or drop one")


def enumerate_monomials(alg: PresentedAlgebra, window) -> dict:
    """Map Bidegree -> sorted list of normal-form exponent vectors."""
    lo, hi = window
    if lo > hi:
        raise ValueError(f"empty window {window}")
    check_finite(alg)
    n = len(alg.gens)
    ranges = [_exponent_range(alg, i) for i in range(n)]

    def contribution(i):
        d = alg.gens[i].deg
        elo, ehi = ranges[i]
        ends = [(-math.inf if d > 0 else math.inf) if elo is None else elo * d,
                (math.inf if d > 0 else -math.inf) if ehi is None else ehi * d]
        if d == 0:
            ends = [0, 0]
        return min(ends), max(ends)

    sufmin = [0] * (n + 1)
    sufmax = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        cmin, cmax = contribution(i)
        sufmin[i] = sufmin[i + 1] + cmin
        sufmax[i] = sufmax[i + 1] + cmax

    out: dict = defaultdict(list)
    vec = [0] * n

    def walk(i, acc):
        if i == n:
            if lo <= acc <= hi:
                mono = tuple(vec)
                out[alg.mono_bidegree(mono)].append(mono)
            return
        d = alg.gens[i].deg
        elo, ehi = ranges[i]
        need_lo = lo - acc - sufmax[i + 1]
        need_hi = hi - acc - sufmin[i + 1]
        if d == 0:
            if need_lo > 0 or need_hi < 0:
                return
            a, b = elo, ehi
        else:
            if d > 0:
                a, b = need_lo / d, need_hi / d
            else:
                a, b = need_hi / d, need_lo / d
            a = -math.inf if a == -math.inf else math.ceil(a)
            b = math.inf if b == math.inf else math.floor(b)
            if elo is not None:
                a = max(a, elo)
            if ehi is not None:
                b = min(b, ehi)
        if a == -math.inf or b == math.inf:
            raise InfiniteSlice(f"unbounded exponent range for {alg.gens[i].name}")
        for e in range(int(a), int(b) + 1):
            vec[i] = e
            walk(i + 1, acc + e * d)
        vec[i] = 0

    walk(0, 0)
    return {bd: sorted(monos) for bd, monos in out.items()}


def enumerate_basis(alg: PresentedAlgebra, window) -> BasisTable:
    monos = enumerate_monomials(alg, window)
    return BasisTable(
        tuple(window), alg.modulus,
        tuple((bd, tuple(alg.mono_label(m) for m in ms)) for bd, ms in monos.items()))


def poincare_per_weight(table: BasisTable) -> dict:
    """weight -> [(degree, rank), ...] in increasing degree."""
    out: dict = defaultdict(list)
    for bd, labels in table.entries:
        out[bd.wt].append((bd.deg, len(labels)))
    return {wt: sorted(v) for wt, v in sorted(out.items())}


def table_diff(a: BasisTable, b: BasisTable) -> list:
    """Bidegrees where the two tables have different rank."""
    if a.window != b.window:
        raise WindowMismatch(f"windows {a.window} and {b.window} differ")
    ra, rb = a.ranks(), b.ranks()
    return sorted(bd for bd in set(ra) | set(rb) if ra.get(bd, 0) != rb.get(bd, 0))
