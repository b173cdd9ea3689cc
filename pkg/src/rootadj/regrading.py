"""Changes of weight grading.

Tables carry weights in ``Z`` (modulus 0) or ``Z/m``.  The operations here
move between gradings: collapsing ``Z/sn -> Z/n`` (or ``Z -> Z/n``) by
summing slices, dilating ``Z -> Z`` by ``i -> s*i`` and its restriction
adjoint, the weight-zero evaluation/inclusion pair, the weight connective
cover and the weight-zero truncation.  Collapse and dilation also act on
presentations by reweighting generators.
"""

from __future__ import annotations

from collections import defaultdict

from .algebra import GeneratorSpec, PresentedAlgebra, RootRelation
from .basis import BasisTable
from .errors import (
    IncompatibleModulus,
    NonZeroModulus,
    NotConcentrated,
    ZeroDilation,
)


def collapse_weights(t: BasisTable, n: int) -> BasisTable:
    """Left Kan extension along ``Z/m -> Z/n``: slice i is the sum of all
    slices j with j = i mod n."""
    if n <= 0:
        raise IncompatibleModulus(f"target modulus must be positive, got {n}")
    if t.modulus % n != 0:
        raise IncompatibleModulus(f"cannot collapse weights mod {t.modulus} to mod {n}")
    merged: dict = defaultdict(list)
    for bd, labels in t.entries:
        merged[(bd.deg, bd.wt % n)].extend(labels)
    return BasisTable.from_mapping(t.window, n, merged)


def dilate_weights(t: BasisTable, s: int) -> BasisTable:
    if t.modulus != 0:
        raise NonZeroModulus("dilation needs integer weights")
    if s == 0:
        raise ZeroDilation("dilation factor must be nonzero")
    return BasisTable(t.window, 0, tuple(((bd.deg, s * bd.wt), labels)
                                         for bd, labels in t.entries))


def restrict_weights(t: BasisTable, s: int) -> BasisTable:
    """Keep the weights divisible by ``s``, relabelled ``s*i -> i``."""
    if t.modulus != 0:
        raise NonZeroModulus("restriction needs integer weights")
    if s == 0:
        raise ZeroDilation("restriction factor must be nonzero")
    return BasisTable(t.window, 0, tuple(((bd.deg, bd.wt // s), labels)
                                         for bd, labels in t.entries if bd.wt % s == 0))


def weight_zero_part(t: BasisTable) -> BasisTable:
    """The weight-zero slice, returned as a table concentrated in weight 0."""
    return BasisTable(t.window, 0, tuple(e for e in t.entries if e[0].wt == 0))


def weight_slice(t: BasisTable, i: int) -> BasisTable:
    """The weight-``i`` slice as an ungraded (weight-0, modulus-0) table."""
    i = i % t.modulus if t.modulus else i
    return BasisTable(t.window, 0, tuple(((bd.deg, 0), labels)
                                         for bd, labels in t.entries if bd.wt == i))


def include_weight_zero(t: BasisTable, m: int) -> BasisTable:
    if not t.is_weight_zero():
        raise NotConcentrated("table has entries in nonzero weight")
    return BasisTable(t.window, m, t.entries)


def weight_connective_cover(t: BasisTable) -> BasisTable:
    if t.modulus != 0:
        raise NonZeroModulus("connective cover needs integer weights")
    return BasisTable(t.window, 0, tuple(e for e in t.entries if e[0].wt >= 0))


def weight_zero_truncation(t: BasisTable) -> BasisTable:
    if t.modulus != 0:
        raise NonZeroModulus("weight truncation needs integer weights")
    return weight_zero_part(t)


# -- action on presentations ------------------------------------------------

def _reweighted(alg: PresentedAlgebra, modulus: int, weight) -> PresentedAlgebra:
    gens = tuple(GeneratorSpec(g.name, g.deg, weight(g.wt), g.kind, g.height, g.cap)
                 for g in alg.gens)
    return alg.with_changes(modulus=modulus, gens=gens,
                            roots=tuple(RootRelation(r.gen, r.power, r.target)
                                        for r in alg.roots))


def collapse_algebra(alg: PresentedAlgebra, n: int) -> PresentedAlgebra:
    if n <= 0 or alg.modulus % n != 0:
        raise IncompatibleModulus(f"cannot collapse weights mod {alg.modulus} to mod {n}")
    return _reweighted(alg, n, lambda w: w % n)


def dilate_algebra(alg: PresentedAlgebra, s: int) -> PresentedAlgebra:
    if alg.modulus != 0:
        raise NonZeroModulus("dilation needs integer weights")
    if s == 0:
        raise ZeroDilation("dilation factor must be nonzero")
    return _reweighted(alg, 0, lambda w: s * w)
