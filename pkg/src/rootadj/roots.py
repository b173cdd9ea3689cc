"""Root adjunction ``A -> A(z)/(z^m = a)`` on homotopy rings, quotients by a
generator, and named presets.

The base is concentrated in weight 0; the root ``z`` sits in bidegree
``(k, 1)`` with ``deg(a) = m*k``, so the result is ``Z/m``-graded and its
weight-``i`` slice is the base shifted up by ``i*k``.  Only the homotopy
ring is modeled: the output does not see which ``S[sigma_mk]``-algebra
structure on the base a spectrum-level construction would use.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .algebra import (
    LAURENT,
    POLYNOMIAL,
    Element,
    GeneratorSpec,
    PresentedAlgebra,
    RootRelation,
)
from .coefficients import Fp, ZpLocal
from .errors import (
    HypothesisFailed,
    UnknownPreset,
    UnsupportedDivisor,
)


@dataclass(frozen=True)
class RootAdjunctionRequest:
    base: PresentedAlgebra
    a: Element
    m: int
    k: int | None = None  # derived from deg(a)/m when omitted
    name: str = "z"


@dataclass
class HypothesisReport:
    accepted: bool
    k: int | None
    tame: bool
    positive_degree: bool
    connective: bool
    reasons: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "accepted": self.accepted,
            "k": self.k,
            "tame": self.tame,
            "positiveDegree": self.positive_degree,
            "connective": self.connective,
            "reasons": list(self.reasons),
        }


def is_connective(alg: PresentedAlgebra) -> bool:
    return all(g.deg >= 0 and not (g.kind == LAURENT and g.deg != 0) for g in alg.gens)


def check_hypothesis(req: RootAdjunctionRequest) -> HypothesisReport:
    base, a, m = req.base, req.a, req.m
    reasons = []
    if any(g.wt != 0 for g in base.gens) or base.roots:
        reasons.append("base is not a plain presentation concentrated in weight 0")
    if m <= 0:
        reasons.append(f"m = {m} is not positive")
    bd = base.homogeneous_bidegree(a)
    k = None
    if bd is None:
        reasons.append("a is zero or not homogeneous")
    else:
        if bd.wt != 0:
            reasons.append(f"a has weight {bd.wt}, not 0")
        if m > 0:
            if bd.deg % m:
                reasons.append(f"deg(a) = {bd.deg} is not divisible by m = {m}")
            else:
                k = bd.deg // m
                if k < 0 or k % 2:
                    reasons.append(f"k = deg(a)/m = {k} is not an even non-negative integer")
        if req.k is not None and k is not None and req.k != k:
            reasons.append(f"requested k = {req.k} but deg(a)/m = {k}")
    if req.name in base.index:
        reasons.append(f"root name {req.name!r} already used")
    return HypothesisReport(
        accepted=not reasons,
        k=k,
        tame=m > 0 and m % base.p != 0,
        positive_degree=bd is not None and bd.deg > 0,
        connective=is_connective(base),
        reasons=reasons,
    )


def adjoin_root(req: RootAdjunctionRequest) -> PresentedAlgebra:
    report = check_hypothesis(req)
    if not report.accepted:
        raise HypothesisFailed("; ".join(report.reasons))
    base = req.base
    z = GeneratorSpec(req.name, report.k, 1, POLYNOMIAL)
    target = Element(tuple((mono + (0,), c) for mono, c in req.a.terms))
    meta = dict(base.meta)
    meta.update(root_of=base.format(req.a), root_degree=report.k)
    return PresentedAlgebra(base.coeffs, req.m, base.gens + (z,),
                            (RootRelation(req.name, req.m, target),), meta)


def _single_generator(alg: PresentedAlgebra, a: Element):
    """Index of g if ``a`` is a unit times a generator ``g``, else None."""
    if len(a.terms) != 1:
        return None
    mono, c = a.terms[0]
    if not alg.coeffs.is_unit(c) or sorted(mono)[-1:] != [1] or sum(map(abs, mono)) != 1:
        return None
    return mono.index(1)


def _drop_generators(alg: PresentedAlgebra, drop: set) -> PresentedAlgebra:
    keep = [i for i, g in enumerate(alg.gens) if g.name not in drop]
    roots = []
    for r in alg.roots:
        if r.gen in drop:
            continue
        target = Element(tuple((tuple(mono[i] for i in keep), c) for mono, c in r.target.terms))
        roots.append(RootRelation(r.gen, r.power, target))
    return alg.with_changes(gens=tuple(alg.gens[i] for i in keep), roots=tuple(roots))


def _mentioned_in_roots(alg: PresentedAlgebra, i: int) -> bool:
    return any(mono[i] for r in alg.roots for mono, _ in r.target.terms)


def quotient_by(alg: PresentedAlgebra, a: Element) -> PresentedAlgebra:
    """``alg / (g)`` for ``a`` a unit times a polynomial generator ``g``.

    Killing a root generator ``z`` with ``z^m = c*h`` also kills ``h``; this
    needs ``h`` to be a single polynomial generator as well.
    """
    i = _single_generator(alg, a)
    if i is None:
        raise UnsupportedDivisor("can only divide by a unit multiple of a generator")
    g = alg.gens[i]
    if g.kind != POLYNOMIAL:
        raise UnsupportedDivisor(f"{g.name} is {g.kind}; only polynomial generators are supported")
    drop = {g.name}
    root = alg.root_of(g.name)
    if root is not None:
        j = _single_generator(alg, root.target)
        if j is None or alg.gens[j].kind != POLYNOMIAL:
            raise UnsupportedDivisor(
                f"killing {g.name} kills {alg.format(root.target)}, which is not a generator")
        if _mentioned_in_roots(alg.with_changes(roots=tuple(
                r for r in alg.roots if r.gen != g.name)), j):
            raise UnsupportedDivisor(f"{alg.gens[j].name} occurs in another root relation")
        drop.add(alg.gens[j].name)
    elif _mentioned_in_roots(alg, i):
        raise UnsupportedDivisor(f"{g.name} occurs in a root relation")
    return _drop_generators(alg, drop)


def plain_presentation(alg: PresentedAlgebra) -> PresentedAlgebra:
    """Rewrite away root relations ``z^m = c*g`` with ``g`` a generator.

    The generator ``g`` is dropped and ``z`` takes over its kind, so e.g.
    ``Z_(p)[v1][z]/(z^m = v1)`` becomes ``Z_(p)[z]`` and a Laurent ``v_n``
    makes ``z`` Laurent.  The result has the same monomial basis up to
    relabeling ``g^j z^r <-> z^(jm + r)``.
    """
    while alg.roots:
        r = alg.roots[-1]
        j = _single_generator(alg, r.target)
        if j is None:
            raise UnsupportedDivisor(
                f"cannot eliminate {r.gen}^{r.power} = {alg.format(r.target)}")
        g = alg.gens[j]
        rest = alg.with_changes(roots=alg.roots[:-1])
        if _mentioned_in_roots(rest, j) or g.name in {s.gen for s in rest.roots}:
            raise UnsupportedDivisor(f"{g.name} is tied to another root relation")
        z = alg.gen_spec(r.gen)
        cap = None
        if z.deg == 0:
            cap = (g.cap or 0) * r.power + r.power - 1
        new_z = GeneratorSpec(z.name, z.deg, z.wt, g.kind, None, cap)
        alg = _drop_generators(rest, {g.name})
        alg = alg.with_changes(gens=tuple(new_z if h.name == z.name else h for h in alg.gens))
    return alg


# -- presets -------------------------------------------------------------

def _ell(p):
    alg = PresentedAlgebra(ZpLocal(p), 0, (GeneratorSpec("v1", 2 * p - 2),),
                           meta={"preset": f"ell({p})", "rank_multiplier": 1})
    return alg, alg.gen("v1")


def _root_preset(base, a, m, name, label, **meta):
    alg = adjoin_root(RootAdjunctionRequest(base, a, m, name=name))
    alg = alg.with_changes(meta={**alg.meta, "preset": label, **meta})
    return alg, alg.gen(name)


def _ku(p):
    base, v1 = _ell(p)
    return _root_preset(base, v1, p - 1, "u", f"ku({p})")


def _ko(p):
    base, v1 = _ell(p)
    return _root_preset(base, v1, (p - 1) // 2, "alpha", f"ko({p})")


def _kn(n, p):
    name = f"v{n}"
    alg = PresentedAlgebra(Fp(p), 0, (GeneratorSpec(name, 2 * p ** n - 2),),
                           meta={"preset": f"kn({n},{p})", "rank_multiplier": 1})
    return alg, alg.gen(name)


def _Kn(n, p):
    name = f"v{n}"
    alg = PresentedAlgebra(
        Fp(p), 0, (GeneratorSpec(name, 2 * p ** n - 2, 0, LAURENT),),
        meta={"preset": f"Kn({n},{p})",
              # coefficients are F_{p^n}; ranks are reported over F_p
              "rank_multiplier": n})
    return alg, alg.gen(name)


def _En_hat(n, p, cap):
    gens = tuple(GeneratorSpec(f"u{i}", 0, 0, POLYNOMIAL, cap=cap) for i in range(1, n))
    name = f"v{n}"
    gens += (GeneratorSpec(name, 2 * p ** n - 2, 0, LAURENT),)
    alg = PresentedAlgebra(ZpLocal(p), 0, gens,
                           meta={"preset": f"En_hat({n},{p},{cap})", "rank_multiplier": 1})
    return alg, alg.gen(name)


_DEGREE_NOTE = ("stored u has degree +2 and u^(p^n-1) = v_n; the usual periodicity "
                "generator of degree -2 is u^-1")


def _two_periodic_K(n, p):
    base, vn = _Kn(n, p)
    return _root_preset(base, vn, p ** n - 1, "u", f"two_periodic_K({n},{p})",
                        degree_convention=_DEGREE_NOTE)


def _En_hGal(n, p, cap):
    base, vn = _En_hat(n, p, cap)
    return _root_preset(base, vn, p ** n - 1, "u", f"En_hGal({n},{p},{cap})",
                        degree_convention=_DEGREE_NOTE)


PRESETS = {
    "ell": lambda p, n, cap: _ell(p),
    "ku": lambda p, n, cap: _ku(p),
    "ko": lambda p, n, cap: _ko(p),
    "kn": lambda p, n, cap: _kn(n, p),
    "Kn": lambda p, n, cap: _Kn(n, p),
    "En_hat": lambda p, n, cap: _En_hat(n, p, cap),
    "En_hGal": lambda p, n, cap: _En_hGal(n, p, cap),
    "two_periodic_K": lambda p, n, cap: _two_periodic_K(n, p),
}


def preset(name: str, p: int | None = None, n: int = 1, cap: int = 2):
    """Return ``(algebra, distinguished element)`` for a named model.

    ``name`` may carry its arguments, as in ``"ku(5)"`` or ``"Kn(2,5)"``
    (order ``(p)``, ``(n,p)`` or ``(n,p,cap)`` as for the function).
    """
    m = re.fullmatch(r"(\w+)\(([\d,\s]+)\)", name)
    if m:
        name = m.group(1)
        args = [int(x) for x in m.group(2).split(",")]
        if len(args) == 1:
            p = args[0]
        else:
            n, p = args[0], args[1]
            if len(args) > 2:
                cap = args[2]
    if name not in PRESETS:
        raise UnknownPreset(f"unknown preset {name!r}; known: {', '.join(PRESETS)}")
    if p is None:
        raise UnknownPreset(f"preset {name} needs a prime p")
    if n < 1:
        raise UnknownPreset("height n must be at least 1")
    return PRESETS[name](p, n, cap)

