"""Seeded random homogeneous elements for the property suites."""

import random
from collections import defaultdict

from rootadj.algebra import Element, make_algebra
from rootadj.basis import enumerate_monomials
from rootadj.hkr import hh, log_hh
from rootadj.roots import plain_presentation, preset


def _alg(p, kind, gens, m=0, roots=()):
    return make_algebra({"coeffs": {"kind": kind, "p": p}, "m": m, "gens": gens,
                         "roots": list(roots)})


def hkr_pool():
    """HKR modules with a Connes operator, used for d^2 and Leibniz."""
    return [
        hh(_alg(5, "ZpLocal", [{"name": "x", "deg": 2, "wt": 1},
                               {"name": "y", "deg": 4, "wt": -1}])),
        log_hh(_alg(3, "ZpLocal", [{"name": "s2", "deg": 2, "wt": 1},
                                   {"name": "t4", "deg": 4, "wt": 2}]), "s2"),
        hh(plain_presentation(preset("two_periodic_K(1,5)")[0])),
        hh(plain_presentation(preset("ku(7)")[0])),
        hh(_alg(7, "Fp", [{"name": "u1", "deg": 0, "cap": 2},
                          {"name": "v", "deg": 6, "kind": "laurent"}])),
    ]


def ring_pool():
    """Algebras with root relations, truncations and exterior classes."""
    return [
        preset("ku(5)")[0],
        preset("En_hGal(2,5,1)")[0],
        _alg(7, "Fp", [{"name": "a", "deg": 1, "wt": 1, "kind": "exterior"},
                       {"name": "b", "deg": 3, "wt": 2, "kind": "exterior"},
                       {"name": "c", "deg": 5, "wt": 0, "kind": "exterior"},
                       {"name": "x", "deg": 2, "wt": 3, "kind": "truncated(4)"}], m=6),
        _alg(5, "ZpLocal", [{"name": "v1", "deg": 8},
                            {"name": "lam", "deg": 9, "kind": "exterior"},
                            {"name": "z", "deg": 2, "wt": 1}],
             m=4, roots=[{"gen": "z", "m": 4, "target": "v1"}]),
    ]


class ElementSampler:
    def __init__(self, alg, window=(-16, 24)):
        self.alg = alg
        self.slices = enumerate_monomials(alg, window)
        self.bidegrees = sorted(self.slices)

    def sample(self, rng: random.Random) -> Element:
        bd = rng.choice(self.bidegrees)
        monos = self.slices[bd]
        picks = rng.sample(monos, rng.randint(1, min(3, len(monos))))
        out = defaultdict(int)
        for mono in picks:
            out[mono] = self.alg.coeffs(rng.choice([1, 2, -1, 3, 4, -2]))
        x = Element.from_dict(out)
        return x if not x.is_zero() else self.alg.monomial(monos[0])

    def degree(self, x: Element) -> int:
        return self.alg.mono_bidegree(x.terms[0][0]).deg
