"""Maps of presented algebras, given by their values on generators."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .algebra import (
    EXTERIOR,
    LAURENT,
    TRUNCATED,
    Element,
    PresentedAlgebra,
    reduce_weight,
)
from .errors import DegreeMismatch, UnknownGenerator


def _weight_compatible(src_mod: int, tgt_mod: int) -> bool:
    if tgt_mod == 0:
        return src_mod == 0
    return src_mod % tgt_mod == 0


def invert_monomial(alg: PresentedAlgebra, x: Element) -> Element | None:
    """Inverse of a unit multiple of a Laurent monomial, else None."""
    if len(x.terms) != 1:
        return None
    mono, c = x.terms[0]
    if not alg.coeffs.is_unit(c):
        return None
    for e, g in zip(mono, alg.gens):
        if e and g.kind != LAURENT:
            return None
    return alg.monomial(tuple(-e for e in mono), alg.coeffs.inv(c))


@dataclass(frozen=True)
class AlgebraMap:
    source: PresentedAlgebra
    target: PresentedAlgebra
    assignment: Mapping = field(hash=False)

    def __post_init__(self):
        src, tgt = self.source, self.target
        if not _weight_compatible(src.modulus, tgt.modulus):
            raise DegreeMismatch(
                f"weights mod {src.modulus} do not map to weights mod {tgt.modulus}")
        full = {}
        for g in src.gens:
            image = self.assignment.get(g.name)
            if image is None:
                raise UnknownGenerator(f"no image assigned to {g.name}")
            if isinstance(image, str):
                image = tgt.parse(image)
            full[g.name] = image
            if image.is_zero():
                if g.kind == LAURENT:
                    raise DegreeMismatch(f"unit {g.name} cannot map to 0")
                continue
            bd = tgt.homogeneous_bidegree(image)
            want = (g.deg, reduce_weight(g.wt, tgt.modulus))
            if bd is None or tuple(bd) != want:
                raise DegreeMismatch(
                    f"{g.name} has bidegree {want} but its image has {bd}")
            if g.kind == LAURENT and invert_monomial(tgt, image) is None:
                raise DegreeMismatch(f"image of unit {g.name} is not invertible")
            if g.kind == TRUNCATED and not tgt.power(image, g.height).is_zero():
                raise DegreeMismatch(f"image of {g.name} violates {g.name}^{g.height} = 0")
            if g.kind == EXTERIOR and not tgt.mul(image, image).is_zero():
                raise DegreeMismatch(f"image of {g.name} does not square to zero")
        extra = set(self.assignment) - set(src.names)
        if extra:
            raise UnknownGenerator(f"assignment names unknown generators {sorted(extra)}")
        object.__setattr__(self, "assignment", full)
        for r in src.roots:
            lhs = tgt.power(full[r.gen], r.power)
            rhs = self._apply(r.target)
            if lhs != rhs:
                raise DegreeMismatch(
                    f"map does not respect {r.gen}^{r.power} = {src.format(r.target)}")

    def _apply(self, x: Element) -> Element:
        tgt = self.target
        out = tgt.zero()
        images = [self.assignment[g.name] for g in self.source.gens]
        for mono, c in x.terms:
            term = tgt.scalar(c)
            for e, image in zip(mono, images):
                if e > 0:
                    term = tgt.mul(term, tgt.power(image, e))
                elif e < 0:
                    term = tgt.mul(term, tgt.power(invert_monomial(tgt, image), -e))
            out = tgt.add(out, term)
        return out

    def __call__(self, x: Element) -> Element:
        return self._apply(x)


def identity_map(alg: PresentedAlgebra) -> AlgebraMap:
    return AlgebraMap(alg, alg, {g.name: alg.gen(g.name) for g in alg.gens})


def apply_map(f: AlgebraMap, x: Element) -> Element:
    return f(x)
