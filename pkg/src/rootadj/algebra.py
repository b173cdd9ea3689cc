"""Presented graded-commutative algebras over F_p or Z_(p).

A presentation is an ordered list of generators, each with a bidegree
``(deg, wt)`` and a kind, plus optional root relations ``z^m = a`` that are
applied as rewrite rules.  Weights live in ``Z`` (modulus 0) or ``Z/m``.
Signs follow the Koszul rule on homotopy degree only; weights never enter a
sign.

Elements are immutable sparse maps from exponent vectors to coefficients.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, NamedTuple

from .coefficients import CoefficientRing
from .errors import (
    BadPresentation,
    BadRootRelation,
    DuplicateName,
    EvenDegreeExterior,
    MissingCap,
    OddDegreeNonExterior,
    UnknownGenerator,
)

POLYNOMIAL = "polynomial"
LAURENT = "laurent"
EXTERIOR = "exterior"
TRUNCATED = "truncated"
KINDS = (POLYNOMIAL, LAURENT, EXTERIOR, TRUNCATED)

Monomial = tuple  # exponent vector, one int per generator


def reduce_weight(w: int, modulus: int) -> int:
    return w % modulus if modulus else w


class Bidegree(NamedTuple):
    deg: int
    wt: int

    def __str__(self):
        return f"({self.deg}, {self.wt})"


@dataclass(frozen=True)
class GeneratorSpec:
    name: str
    deg: int
    wt: int = 0
    kind: str = POLYNOMIAL
    height: int | None = None  # truncated(e): g^e = 0
    cap: int | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise BadPresentation(f"unknown generator kind {self.kind!r}")
        if self.kind == TRUNCATED and (self.height is None or self.height < 2):
            raise BadPresentation(f"truncated generator {self.name} needs height >= 2")
        if self.cap is not None and self.cap < 0:
            raise BadPresentation(f"negative cap on {self.name}")

    @property
    def is_odd(self) -> bool:
        return self.deg % 2 != 0

    def to_json(self) -> dict:
        doc = {"name": self.name, "deg": self.deg, "wt": self.wt, "kind": self.kind}
        if self.kind == TRUNCATED:
            doc["e"] = self.height
        if self.cap is not None:
            doc["cap"] = self.cap
        return doc

    @classmethod
    def from_json(cls, doc: Mapping) -> GeneratorSpec:
        kind = doc.get("kind", POLYNOMIAL)
        height = doc.get("e")
        m = re.fullmatch(r"truncated\((\d+)\)", kind)
        if m:
            kind, height = TRUNCATED, int(m.group(1))
        try:
            return cls(
                name=str(doc["name"]),
                deg=int(doc["deg"]),
                wt=int(doc.get("wt", 0)),
                kind=kind,
                height=None if height is None else int(height),
                cap=None if doc.get("cap") is None else int(doc["cap"]),
            )
        except KeyError as exc:
            raise BadPresentation(f"generator document missing {exc}") from exc


@dataclass(frozen=True)
class Element:
    """Finite sum of ``coefficient * monomial``; zero coefficients dropped."""

    terms: tuple = ()  # sorted ((monomial, coeff), ...)

    @classmethod
    def from_dict(cls, d: Mapping) -> Element:
        return cls(tuple(sorted((tuple(k), v) for k, v in d.items() if v != 0)))

    def as_dict(self) -> dict:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def monomials(self):
        return [mono for mono, _ in self.terms]

    def coefficient(self, mono) -> int | Fraction:
        return self.as_dict().get(tuple(mono), 0)

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)


@dataclass(frozen=True)
class RootRelation:
    """Rewrite rule ``gen^power -> target``."""

    gen: str
    power: int
    target: Element


@dataclass(frozen=True)
class PresentedAlgebra:
    coeffs: CoefficientRing
    modulus: int = 0
    gens: tuple = ()
    roots: tuple = ()
    meta: Mapping = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        if self.modulus < 0:
            raise BadPresentation("weight modulus must be >= 0")
        gens = tuple(
            g if g.wt == reduce_weight(g.wt, self.modulus)
            else GeneratorSpec(g.name, g.deg, reduce_weight(g.wt, self.modulus),
                               g.kind, g.height, g.cap)
            for g in self.gens
        )
        object.__setattr__(self, "gens", gens)
        object.__setattr__(self, "roots", tuple(self.roots))
        self._validate()

    # -- validation -------------------------------------------------------
    def _validate(self):
        seen = set()
        for g in self.gens:
            if g.name in seen:
                raise DuplicateName(f"generator name {g.name!r} repeated")
            seen.add(g.name)
        rooted = {r.gen for r in self.roots}
        for g in self.gens:
            if g.kind == EXTERIOR and not g.is_odd:
                raise EvenDegreeExterior(
                    f"exterior generator {g.name} has even degree {g.deg}")
            if g.kind != EXTERIOR and g.is_odd:
                raise OddDegreeNonExterior(
                    f"{g.kind} generator {g.name} has odd degree {g.deg}")
            if (g.deg == 0 and g.kind in (POLYNOMIAL, LAURENT)
                    and g.cap is None and g.name not in rooted):
                raise MissingCap(f"degree-0 generator {g.name} needs a cap")
        for r in self.roots:
            self._validate_root(r)

    def _validate_root(self, r: RootRelation):
        if r.gen not in self.index:
            raise BadRootRelation(f"root relation on unknown generator {r.gen!r}")
        i = self.index[r.gen]
        g = self.gens[i]
        if g.kind != POLYNOMIAL:
            raise BadRootRelation(f"root generator {g.name} must be polynomial")
        if r.power < 1:
            raise BadRootRelation("root exponent must be positive")
        if sum(1 for s in self.roots if s.gen == r.gen) > 1:
            raise BadRootRelation(f"two root relations on {r.gen}")
        for mono, _ in r.target.terms:
            if len(mono) != len(self.gens) or any(mono[j] for j in range(i, len(mono))):
                raise BadRootRelation(
                    f"target of {r.gen}^{r.power} must only involve earlier generators")
        if r.target.is_zero():
            raise BadRootRelation(f"target of {r.gen}^{r.power} is zero")
        bideg = self.homogeneous_bidegree(r.target)
        if bideg is None:
            raise BadRootRelation(f"target of {r.gen}^{r.power} is not homogeneous")
        want = Bidegree(r.power * g.deg, reduce_weight(r.power * g.wt, self.modulus))
        if bideg != want:
            raise BadRootRelation(
                f"{r.gen}^{r.power} has bidegree {want} but target has {bideg}")

    # -- lookup -----------------------------------------------------------
    @cached_property
    def index(self) -> dict:
        return {g.name: i for i, g in enumerate(self.gens)}

    @cached_property
    def _odd(self) -> tuple:
        return tuple(i for i, g in enumerate(self.gens) if g.is_odd)

    @cached_property
    def _root_rules(self) -> dict:
        return {self.index[r.gen]: (r.power, r.target) for r in self.roots}

    def gen_spec(self, name: str) -> GeneratorSpec:
        try:
            return self.gens[self.index[name]]
        except KeyError:
            raise UnknownGenerator(f"no generator named {name!r}") from None

    @property
    def names(self) -> tuple:
        return tuple(g.name for g in self.gens)

    @property
    def p(self) -> int:
        return self.coeffs.p

    def root_of(self, name: str) -> RootRelation | None:
        for r in self.roots:
            if r.gen == name:
                return r
        return None

    # -- degrees ----------------------------------------------------------
    def mono_bidegree(self, mono) -> Bidegree:
        deg = sum(e * g.deg for e, g in zip(mono, self.gens))
        wt = sum(e * g.wt for e, g in zip(mono, self.gens))
        return Bidegree(deg, reduce_weight(wt, self.modulus))

    def homogeneous_bidegree(self, x: Element) -> Bidegree | None:
        """Common bidegree of the terms of ``x``; None if mixed or zero."""
        degs = {self.mono_bidegree(mono) for mono, _ in x.terms}
        return degs.pop() if len(degs) == 1 else None

    def mono_label(self, mono) -> str:
        parts = []
        for e, g in zip(mono, self.gens):
            if e == 1:
                parts.append(g.name)
            elif e:
                parts.append(f"{g.name}^{e}")
        return "*".join(parts) or "1"

    def format(self, x: Element) -> str:
        if x.is_zero():
            return "0"
        out = []
        for mono, c in x.terms:
            label = self.mono_label(mono)
            if c == 1:
                out.append(label)
            elif label == "1":
                out.append(str(c))
            else:
                out.append(f"{c}*{label}")
        return " + ".join(out)

    # -- construction of elements ------------------------------------------
    def zero(self) -> Element:
        return Element()

    def one(self) -> Element:
        return Element((((0,) * len(self.gens), self.coeffs.one()),))

    def monomial(self, exps: Mapping | Iterable = (), coeff=1) -> Element:
        """Element ``coeff * prod g^e``, normalized through the relations."""
        if isinstance(exps, Mapping):
            vec = [0] * len(self.gens)
            for name, e in exps.items():
                self.gen_spec(name)
                vec[self.index[name]] = e
        else:
            vec = list(exps)
        return self._normalize_term(tuple(vec), self.coeffs(coeff))

    def gen(self, name: str) -> Element:
        return self.monomial({name: 1})

    def scalar(self, c) -> Element:
        return self.scale(self.one(), c)

    def parse(self, text: str) -> Element:
        """Parse ``"2*v1^2 - 1/3*u + 1"`` style input."""
        text = text.replace(" ", "").replace("^-", "^~").replace("^(-", "^(~")
        if not text or text == "0":
            return self.zero()
        result = self.zero()
        for sign, body in re.findall(r"([+-]?)([^+-]+)", text):
            body = body.replace("~", "-")
            coeff = Fraction(-1 if sign == "-" else 1)
            exps: dict = {}
            for factor in body.split("*"):
                if re.fullmatch(r"\d+(/\d+)?", factor):
                    coeff *= Fraction(factor)
                    continue
                m = re.fullmatch(r"([^\^]+)(?:\^\(?(-?\d+)\)?)?", factor)
                if not m:
                    raise BadPresentation(f"cannot parse factor {factor!r}")
                name, e = m.group(1), int(m.group(2) or 1)
                self.gen_spec(name)
                exps[name] = exps.get(name, 0) + e
            result = self.add(result, self.monomial(exps, coeff))
        return result

    # -- arithmetic ---------------------------------------------------------
    def add(self, x: Element, y: Element) -> Element:
        out = x.as_dict()
        for mono, c in y.terms:
            out[mono] = self.coeffs.add(out.get(mono, 0), c)
        return Element.from_dict(out)

    def sub(self, x: Element, y: Element) -> Element:
        return self.add(x, self.scale(y, -1))

    def scale(self, x: Element, c) -> Element:
        c = self.coeffs(c)
        return Element.from_dict({mono: self.coeffs.mul(c, v) for mono, v in x.terms})

    def _mono_mul(self, m1, m2):
        """Product of two exponent vectors before relations: (sign, vector)."""
        swaps = 0
        for j in self._odd:
            if m2[j]:
                if m1[j]:
                    return 0, None
                swaps += sum(1 for i in self._odd if i > j and m1[i])
        return (-1) ** swaps, tuple(a + b for a, b in zip(m1, m2))

    def _normalize_term(self, mono, c) -> Element:
        """Apply truncations, exterior vanishing and root rewrites to one term."""
        if c == 0:
            return Element()
        for e, g in zip(mono, self.gens):
            if e < 0 and g.kind != LAURENT:
                raise ValueError(f"negative exponent on non-Laurent generator {g.name}")
            if g.kind == EXTERIOR and e > 1:
                return Element()
            if g.kind == TRUNCATED and e >= g.height:
                return Element()
        for i in sorted(self._root_rules, reverse=True):
            power, target = self._root_rules[i]
            if mono[i] >= power:
                q, r = divmod(mono[i], power)
                rest = list(mono)
                rest[i] = r
                head = Element(((tuple(rest), c),))
                return self.mul(head, self.power(target, q))
        return Element(((tuple(mono), c),))

    def mul(self, x: Element, y: Element) -> Element:
        out: dict = {}
        for m1, c1 in x.terms:
            for m2, c2 in y.terms:
                sign, mono = self._mono_mul(m1, m2)
                if not sign:
                    continue
                c = self.coeffs.mul(self.coeffs.mul(c1, c2), sign)
                for m, v in self._normalize_term(mono, c).terms:
                    out[m] = self.coeffs.add(out.get(m, 0), v)
        return Element.from_dict(out)

    def power(self, x: Element, n: int) -> Element:
        if n < 0:
            raise ValueError("negative powers are only defined on monomials")
        result = self.one()
        base = x
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    # -- serialization ------------------------------------------------------
    def to_json(self) -> dict:
        return {
            "coeffs": self.coeffs.to_json(),
            "m": self.modulus,
            "gens": [g.to_json() for g in self.gens],
            "roots": [
                {"gen": r.gen, "m": r.power, "target": self.format(r.target)}
                for r in self.roots
            ],
        }

    def with_changes(self, **kw) -> PresentedAlgebra:
        """Copy with some fields replaced; ``meta`` is carried over by default."""
        fields = dict(coeffs=self.coeffs, modulus=self.modulus, gens=self.gens,
                      roots=self.roots, meta=self.meta)
        fields.update(kw)
        return PresentedAlgebra(**fields)


def multiply(alg: PresentedAlgebra, x: Element, y: Element) -> Element:
    return alg.mul(x, y)


def make_algebra(spec: Mapping) -> PresentedAlgebra:
    """Build and validate an algebra from a presentation document.

    ``{coeffs: {kind, p}, m, gens: [{name, deg, wt, kind, cap?}],
    roots: [{gen, m, target}]}``; ``target`` is a string such as ``"v1"``.
    """
    if not isinstance(spec, Mapping):
        raise BadPresentation("presentation must be a mapping")
    try:
        coeffs = CoefficientRing.from_json(spec["coeffs"])
    except KeyError:
        raise BadPresentation("presentation needs 'coeffs'") from None
    modulus = int(spec.get("m", 0))
    gens = tuple(GeneratorSpec.from_json(g) for g in spec.get("gens", ()))
    rooted = {r.get("gen") for r in spec.get("roots", ())}
    # validate generators before parsing root targets against them; a root
    # generator of degree 0 is bounded by its relation, not by a cap
    bare = PresentedAlgebra(coeffs, modulus, tuple(
        GeneratorSpec(g.name, g.deg, g.wt, g.kind, g.height, 0)
        if g.name in rooted and g.cap is None and g.deg == 0 else g
        for g in gens))
    roots = []
    for r in spec.get("roots", ()):
        try:
            target = r["target"]
            power = int(r["m"])
            name = r["gen"]
        except KeyError as exc:
            raise BadPresentation(f"root document missing {exc}") from exc
        if isinstance(target, str):
            try:
                target = bare.parse(target)
            except UnknownGenerator as exc:
                raise BadRootRelation(str(exc)) from exc
        roots.append(RootRelation(name, power, target))
    return PresentedAlgebra(coeffs, modulus, gens, tuple(roots), spec.get("meta", {}))
