"""Exact ground rings: the prime field F_p and the local ring Z_(p)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import BadPresentation

FP = "Fp"
ZP_LOCAL = "ZpLocal"


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class CoefficientRing:
    """``Fp(p)`` holds residues ``0..p-1``; ``ZpLocal(p)`` holds fractions
    whose denominator is prime to ``p``."""

    kind: str
    p: int

    def __post_init__(self):
        if self.kind not in (FP, ZP_LOCAL):
            raise BadPresentation(f"unknown coefficient kind {self.kind!r}")
        if not is_prime(self.p) or self.p < 3:
            raise BadPresentation(f"p must be an odd prime, got {self.p}")

    def __str__(self):
        return f"F_{self.p}" if self.kind == FP else f"Z_({self.p})"

    @property
    def is_field(self) -> bool:
        return self.kind == FP

    def __call__(self, x) -> int | Fraction:
        """Coerce an int, Fraction or ``"a/b"`` string into the ring."""
        x = Fraction(x)
        if x.denominator % self.p == 0:
            raise ValueError(f"{x} is not {self.p}-local")
        if self.kind == FP:
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return x

    def zero(self):
        return self(0)

    def one(self):
        return self(1)

    def add(self, x, y):
        s = x + y
        return s % self.p if self.kind == FP else s

    def mul(self, x, y):
        s = x * y
        return s % self.p if self.kind == FP else s

    def neg(self, x):
        return -x % self.p if self.kind == FP else -x

    def is_zero(self, x) -> bool:
        return x == 0

    def is_unit(self, x) -> bool:
        if self.kind == FP:
            return x % self.p != 0
        return Fraction(x).numerator % self.p != 0

    def inv(self, x):
        if not self.is_unit(x):
            raise ZeroDivisionError(f"{x} is not a unit in {self}")
        if self.kind == FP:
            return pow(int(x), -1, self.p)
        return 1 / Fraction(x)

    def residue(self, x) -> int:
        """Image of ``x`` in the residue field F_p."""
        x = Fraction(x)
        return x.numerator * pow(x.denominator, -1, self.p) % self.p

    def to_json(self) -> dict:
        return {"kind": self.kind, "p": self.p}

    @classmethod
    def from_json(cls, doc: dict) -> CoefficientRing:
        try:
            return cls(doc["kind"], int(doc["p"]))
        except (KeyError, TypeError) as exc:
            raise BadPresentation(f"bad coefficient document {doc!r}") from exc


def Fp(p: int) -> CoefficientRing:
    return CoefficientRing(FP, p)


def ZpLocal(p: int) -> CoefficientRing:
    return CoefficientRing(ZP_LOCAL, p)


def format_coefficient(c) -> str:
    return str(c)
