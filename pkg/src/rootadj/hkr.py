"""HKR models of Hochschild homology and its logarithmic variant.

For a polynomial or Laurent algebra ``R`` on even generators, ``HH(R)`` is
``R ⊗ Λ(dg)`` with ``dg`` in bidegree ``(deg g + 1, wt g)`` and the Connes
operator acting as the derivation ``g -> dg``.  Logging a generator ``g``
replaces ``dg`` by ``dlog g`` in bidegree ``(1, 0)`` with ``dg = g dlog g``.

These are E2-page models.  For the polynomial and Laurent inputs handled
here the Bökstedt spectral sequence collapses, so ranks agree with the
homotopy of THH and log THH after base change to the ground ring; outside
that range the numbers are not THH groups.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .algebra import (
    EXTERIOR,
    LAURENT,
    POLYNOMIAL,
    Element,
    GeneratorSpec,
    PresentedAlgebra,
)
from .basis import BasisTable, enumerate_basis, enumerate_monomials
from .coefficients import ZpLocal
from .errors import UnsupportedPresentation, WildPrime
from .maps import AlgebraMap
from .regrading import weight_slice
from .reports import CheckReport, compare_tables
from .roots import RootAdjunctionRequest, adjoin_root, plain_presentation, quotient_by


def form_name(g: str, log: bool = False) -> str:
    return f"dlog{g}" if log else f"d{g}"


@dataclass(frozen=True)
class HKRModule:
    base: PresentedAlgebra
    log_flags: tuple = ()

    @cached_property
    def algebra(self) -> PresentedAlgebra:
        """Base generators followed by one exterior form per generator."""
        forms = []
        for g in self.base.gens:
            if g.name in self.log_flags:
                forms.append(GeneratorSpec(form_name(g.name, True), 1, 0, EXTERIOR))
            else:
                forms.append(GeneratorSpec(form_name(g.name), g.deg + 1, g.wt, EXTERIOR))
        return self.base.with_changes(gens=self.base.gens + tuple(forms))

    @property
    def n_base(self) -> int:
        return len(self.base.gens)

    def form(self, g: str) -> Element:
        self.base.gen_spec(g)
        return self.algebra.gen(form_name(g, g in self.log_flags))

    def embed(self, x: Element) -> Element:
        """View an element of the base inside the module."""
        pad = (0,) * self.n_base
        return Element(tuple((mono + pad, c) for mono, c in x.terms))

    def table(self, window) -> BasisTable:
        return enumerate_basis(self.algebra, window)

    def d(self, x: Element) -> Element:
        return connes_d(self, x)


def _check_admissible(alg: PresentedAlgebra):
    if alg.roots:
        raise UnsupportedPresentation(
            "root relations present; rewrite with plain_presentation first")
    for g in alg.gens:
        if g.kind not in (POLYNOMIAL, LAURENT):
            raise UnsupportedPresentation(
                f"{g.kind} generator {g.name}: HKR needs polynomial or Laurent generators")


def hh(alg: PresentedAlgebra) -> HKRModule:
    _check_admissible(alg)
    return HKRModule(alg)


def log_hh(alg: PresentedAlgebra, g: str) -> HKRModule:
    _check_admissible(alg)
    alg.gen_spec(g)
    return HKRModule(alg, (g,))


def connes_d(h: HKRModule, x: Element) -> Element:
    """Connes operator: the derivation with ``d(g) = dg`` and ``d(form) = 0``.

    All base generators are even, so ``d`` of a monomial is a sum over its
    base factors with the new form inserted just before the existing forms.
    """
    alg = h.algebra
    n = h.n_base
    out = alg.zero()
    for mono, c in x.terms:
        forms = Element((((0,) * n + mono[n:], alg.coeffs.one()),))
        for i in range(n):
            e = mono[i]
            if not e:
                continue
            g = h.base.gens[i]
            head = list(mono[:n]) + [0] * n
            if g.name not in h.log_flags:
                head[i] -= 1
            term = Element(((tuple(head), alg.coeffs.mul(c, alg.coeffs(e))),))
            term = alg.mul(alg.mul(term, h.form(g.name)), forms)
            out = alg.add(out, term)
    return out


def _dlog_image(h: HKRModule, x: Element) -> Element:
    """``dlog`` of a unit multiple of a monomial in the base of ``h``."""
    if len(x.terms) != 1:
        raise UnsupportedPresentation("dlog is only defined on monomials here")
    mono, _ = x.terms[0]
    alg = h.algebra
    out = alg.zero()
    for i, e in enumerate(mono[:h.n_base]):
        if not e:
            continue
        g = h.base.gens[i]
        if g.name in h.log_flags:
            piece = h.form(g.name)
        elif g.kind == LAURENT:
            piece = alg.mul(alg.monomial({g.name: -1}), h.form(g.name))
        else:
            raise UnsupportedPresentation(f"dlog of {g.name} needs it logged or invertible")
        out = alg.add(out, alg.scale(piece, e))
    return out


def induced_hh_map(f: AlgebraMap, source: HKRModule | None = None,
                   target: HKRModule | None = None) -> AlgebraMap:
    """Extend ``f`` to HKR models by ``dg -> d(f(g))`` and
    ``dlog g -> dlog f(g)``."""
    source = source or hh(f.source)
    target = target or hh(f.target)
    assignment = {}
    for g in f.source.gens:
        image = target.embed(f.assignment[g.name])
        assignment[g.name] = image
        if g.name in source.log_flags:
            assignment[form_name(g.name, True)] = _dlog_image(target, image)
        else:
            assignment[form_name(g.name)] = connes_d(target, image)
    return AlgebraMap(source.algebra, target.algebra, assignment)


def hh_to_log_map(alg: PresentedAlgebra, g: str) -> AlgebraMap:
    """The comparison ``HH(A) -> HH(A | g)``, sending ``dg`` to ``g dlog g``."""
    source, target = hh(alg), log_hh(alg, g)
    assignment = {x.name: target.embed(alg.gen(x.name)) for x in alg.gens}
    for x in alg.gens:
        if x.name == g:
            assignment[form_name(g)] = target.algebra.mul(
                target.embed(alg.gen(g)), target.form(g))
        else:
            assignment[form_name(x.name)] = target.form(x.name)
    return AlgebraMap(source.algebra, target.algebra, assignment)


# -- theorem checks ------------------------------------------------------

def _det(rows) -> Fraction:
    m = [[Fraction(v) for v in row] for row in rows]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        for r in range(col + 1, n):
            factor = m[r][col] / m[col][col]
            for c in range(col, n):
                m[r][c] -= factor * m[col][c]
    return det


def weight_zero_iso_check(m: int, k: int, p: int, window=(0, 100), cap: int = 6) -> CheckReport:
    """Check that ``sigma_mk -> sigma_k^m`` induces an isomorphism from
    ``HH(Z_(p)[sigma_mk])`` onto the weight-0 part of ``HH(Z_(p)[sigma_k])``.

    ``sigma_k`` has weight 1 mod m.  Per bidegree the map is a square matrix
    over Z_(p); it is an isomorphism iff its determinant is a p-local unit.
    ``cap`` bounds the exponents when ``k = 0``.
    """
    coeffs = ZpLocal(p)
    src_name = f"sigma{m * k}"
    tgt_name = f"sigma{k}" if m != 1 else f"tau{k}"
    src_cap = cap if k == 0 else None
    tgt_cap = cap * m + m - 1 if k == 0 else None
    S = PresentedAlgebra(coeffs, m, (GeneratorSpec(src_name, m * k, 0, cap=src_cap),))
    T = PresentedAlgebra(coeffs, m, (GeneratorSpec(tgt_name, k, 1, cap=tgt_cap),))
    f = AlgebraMap(S, T, {src_name: T.monomial({tgt_name: m})})
    hs, ht = hh(S), hh(T)
    phi = induced_hh_map(f, hs, ht)
    src_monos = enumerate_monomials(hs.algebra, window)
    tgt_monos = enumerate_monomials(ht.algebra, window)
    report = CheckReport("weight-zero-iso", {"m": m, "k": k, "p": p}, tuple(window))
    sample, offending = [], []
    for bd in sorted(set(src_monos) | {b for b in tgt_monos if b.wt == 0}):
        cols = src_monos.get(bd, [])
        rows = tgt_monos.get(bd, [])
        ok = len(cols) == len(rows)
        if ok and cols:
            index = {mono: r for r, mono in enumerate(rows)}
            matrix = [[0] * len(cols) for _ in rows]
            for j, mono in enumerate(cols):
                image = phi(Element(((mono, coeffs.one()),)))
                for tmono, c in image.terms:
                    matrix[index[tmono]][j] = c
                if len(sample) < 6:
                    sample.append(f"{hs.algebra.mono_label(mono)} -> {ht.algebra.format(image)}")
            det = _det(matrix)
            ok = coeffs.is_unit(det)
            if not ok:
                for j, mono in enumerate(cols):
                    for r in range(len(rows)):
                        c = matrix[r][j]
                        if c and not coeffs.is_unit(c):
                            offending.append({
                                "source": hs.algebra.mono_label(mono),
                                "target": ht.algebra.mono_label(rows[r]),
                                "coefficient": str(c),
                                "residue": coeffs.residue(c),
                                "message": f"{c} ≡ 0 mod {p}",
                            })
        report.add(bd.deg, bd.wt, len(cols), len(rows), ok)
    report.notes["basisMatrixSample"] = sample
    report.notes["iso"] = all(row["ok"] for row in report.rows)
    if offending:
        report.notes["offending"] = offending
    return report


def cofiber_check(alg: PresentedAlgebra, g: str, window=(0, 60)) -> CheckReport:
    """Check ``HH(A) -> HH(A | g) -> Σ HH(A/g)`` degreewise.

    The comparison map sends basis monomials to unit multiples of distinct
    monomials, so it is split injective with cokernel spanned by the
    monomials it misses; those must be exactly ``dlog g`` times the basis of
    ``HH(A/g)``.
    """
    alg.gen_spec(g)
    f = hh_to_log_map(alg, g)
    source, target = hh(alg), log_hh(alg, g)
    quotient = hh(quotient_by(alg, alg.gen(g)))
    src = enumerate_monomials(source.algebra, window)
    tgt = enumerate_monomials(target.algebra, window)
    lo, hi = window
    quo = enumerate_monomials(quotient.algebra, (lo - 1, hi - 1))
    dlog_index = target.algebra.index[form_name(g, True)]
    report = CheckReport("cofiber", {"gen": g}, tuple(window))
    for bd in sorted(set(src) | set(tgt) | {(b.deg + 1, b.wt) for b in quo}):
        images = set()
        split = True
        for mono in src.get(bd, []):
            image = f(Element(((mono, alg.coeffs.one()),)))
            if len(image.terms) != 1 or not alg.coeffs.is_unit(image.terms[0][1]):
                split = False
            images.update(image.monomials())
        split = split and len(images) == len(src.get(bd, []))
        missed = [mono for mono in tgt.get(bd, []) if mono not in images]
        shifted = quo.get((bd[0] - 1, bd[1]), [])
        # cokernel monomials: dlog g times a monomial free of g
        g_index = alg.index[g]
        shape = all(mono[dlog_index] == 1 and mono[g_index] == 0 for mono in missed)
        lhs = len(tgt.get(bd, []))
        rhs = len(src.get(bd, [])) + len(shifted)
        report.add(bd[0], bd[1], lhs, rhs,
                   lhs == rhs and split and shape and len(missed) == len(shifted))
    return report


def log_etale_check(base: PresentedAlgebra, g: str, m: int, window=(0, 60),
                    p: int | None = None) -> CheckReport:
    """Slice ``i`` of ``HH(A(root of g) | root)`` against ``Σ^{ik} HH(A | g)``."""
    p = p or base.p
    if m % p == 0:
        raise WildPrime(f"p = {p} divides m = {m}")
    adjoined = adjoin_root(RootAdjunctionRequest(base, base.gen(g), m))
    k = adjoined.gen_spec("z").deg
    lo, hi = window
    top = log_hh(plain_presentation(adjoined), "z").table(window)
    bottom = log_hh(base, g).table((lo - (m - 1) * k, hi))
    report = CheckReport("log-etale", {"gen": g, "m": m, "k": k, "p": p}, tuple(window))
    for i in range(m):
        lhs = weight_slice(top, i)
        rhs = bottom.shifted(i * k).with_window(window)
        for row in compare_tables("slice", {}, lhs, rhs).rows:
            report.add(row["deg"], i, row["lhsRank"], row["rhsRank"])
    return report


def hh_log_iso_check(alg: PresentedAlgebra, g: str, window=(-40, 40)) -> CheckReport:
    """Rank comparison of ``HH(A)`` and ``HH(A | g)``; equal when g is a unit."""
    report = compare_tables("hh-vs-loghh", {"gen": g},
                            log_hh(alg, g).table(window), hh(alg).table(window))
    return report
