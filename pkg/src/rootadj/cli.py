"""Command-line front end: ``python3 -m rootadj VERB [options]``.

Exit status is 0 on success or a passing check, 1 on a failing check and 2
on usage or validation errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import make_algebra
from .basis import enumerate_basis
from .errors import RootAdjError
from .hkr import cofiber_check, hh, log_etale_check, log_hh, weight_zero_iso_check
from .ktables import enumerate_table, ko_check, t2_presentation, table_K_ko, table_K_ku
from .reports import CheckReport
from .roots import RootAdjunctionRequest, adjoin_root, plain_presentation, preset
from .splitting import frobenius_orbits, tc_k_summand_report, thh_after_root_check

VERBS = ("basis", "adjoin", "hh", "loghh", "hhmap-check", "cofiber-check",
         "logetale-check", "split-thh", "tc-orbits", "ku-table", "ko-check", "t2")


class UsageError(Exception):
    pass


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="rootadj", description=__doc__.splitlines()[0])
    ap.add_argument("verb", choices=VERBS)
    ap.add_argument("--preset", help="ell, ku, ko, kn, Kn, En_hat, En_hGal, two_periodic_K")
    ap.add_argument("--input", metavar="PATH", help="presentation document (JSON)")
    ap.add_argument("--p", type=int)
    ap.add_argument("--n", type=int, default=1, help="height for kn/Kn/En presets")
    ap.add_argument("--cap", type=int, default=2, help="exponent cap for degree-0 generators")
    ap.add_argument("--m", type=int)
    ap.add_argument("--k", type=int)
    ap.add_argument("--gen", help="generator or element, e.g. v1")
    ap.add_argument("--table", choices=("ku", "ko"), default="ku", help="for t2")
    ap.add_argument("--window", nargs=2, type=int, metavar=("LO", "HI"))
    ap.add_argument("--format", choices=("json", "text"), default="json")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", metavar="PATH")
    return ap


def _window(args, required=True):
    if args.window is None:
        if required:
            raise UsageError(f"{args.verb} needs --window LO HI")
        return None
    lo, hi = args.window
    if lo > hi:
        raise UsageError(f"--window {lo} {hi}: expected LO <= HI")
    return lo, hi


def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"{args.verb} needs --{name}")
    if args.m is not None and args.m < 1:
        raise UsageError(f"--m {args.m}: expected a positive integer")


def _load(args):
    """(algebra, distinguished element) from --input or --preset."""
    if args.input:
        with open(args.input, encoding="utf-8") as fh:
            doc = json.load(fh)
        alg = make_algebra(doc)
        distinguished = None
    elif args.preset:
        _need(args, "p")
        alg, distinguished = preset(args.preset, args.p, args.n, args.cap)
    else:
        raise UsageError(f"{args.verb} needs --preset NAME or --input PATH")
    if args.gen:
        distinguished = alg.parse(args.gen)
    return alg, distinguished


def _gen_name(alg, x, args) -> str:
    if x is None:
        raise UsageError(f"{args.verb} needs --gen NAME")
    if len(x.terms) != 1 or sorted(x.terms[0][0]) != [0] * (len(alg.gens) - 1) + [1]:
        raise UsageError(f"--gen {args.gen}: expected a single generator")
    return alg.gens[x.terms[0][0].index(1)].name


def _hkr_ready(alg):
    return plain_presentation(alg) if alg.roots else alg


def _run(args):
    """Return (document, text, exit code)."""
    v = args.verb
    if v == "basis":
        alg, _ = _load(args)
        t = enumerate_basis(alg, _window(args))
        return t.to_json(), t.render(), 0
    if v == "adjoin":
        _need(args, "m")
        alg, a = _load(args)
        if a is None:
            raise UsageError("adjoin needs --gen or a preset with a distinguished class")
        t = enumerate_basis(adjoin_root(RootAdjunctionRequest(alg, a, args.m, args.k)),
                            _window(args))
        return t.to_json(), t.render(), 0
    if v == "hh":
        alg, _ = _load(args)
        t = hh(_hkr_ready(alg)).table(_window(args))
        return t.to_json(), t.render(), 0
    if v == "loghh":
        alg, x = _load(args)
        alg = _hkr_ready(alg)
        g = _gen_name(alg, alg.parse(args.gen) if args.gen else None, args)
        t = log_hh(alg, g).table(_window(args))
        return t.to_json(), t.render(), 0
    if v == "hhmap-check":
        _need(args, "m", "k", "p")
        r = weight_zero_iso_check(args.m, args.k, args.p, _window(args), cap=args.cap)
        return _report(r)
    if v == "cofiber-check":
        alg, x = _load(args)
        return _report(cofiber_check(alg, _gen_name(alg, x, args), _window(args)))
    if v == "logetale-check":
        _need(args, "m")
        alg, x = _load(args)
        return _report(log_etale_check(alg, _gen_name(alg, x, args), args.m, _window(args)))
    if v == "split-thh":
        _need(args, "m")
        alg, x = _load(args)
        r, assembled, _ = thh_after_root_check(alg, _gen_name(alg, x, args), args.m,
                                               _window(args))
        doc, text, code = _report(r)
        doc["assembled"] = assembled.to_json()
        return doc, assembled.render() + text, code
    if v == "tc-orbits":
        _need(args, "m", "p")
        orbits = frobenius_orbits(args.m, args.p)
        doc = orbits.to_json()
        doc["summands"] = tc_k_summand_report(args.m, args.p)
        return doc, orbits.render(), 0
    if v == "ku-table":
        _need(args, "p")
        table = table_K_ku(args.p)
        window = _window(args, required=False)
        if window is None:
            return {"name": table.name, "classes": [c.__dict__ for c in table.classes()]}, \
                table.render(), 0
        t = enumerate_table(table, window)
        return t.to_json(), t.render(), 0
    if v == "ko-check":
        _need(args, "p")
        table_K_ko(args.p)
        r = ko_check(args.p, _window(args))
        n = len(r.rows)
        if r.passed:
            msg = (f"PASS: even-weight reassembly of K(ku_{args.p}) table matches "
                   f"K(ko_{args.p}) table at all {n} bidegrees checked")
        else:
            msg = (f"FAIL: even-weight reassembly of K(ku_{args.p}) table differs from "
                   f"K(ko_{args.p}) table at {len(r.failures())} of {n} bidegrees")
        doc = r.to_json()
        doc["message"] = msg
        return doc, (r.render() if not r.passed else "") + msg + "\n", 0 if r.passed else 1
    if v == "t2":
        _need(args, "p")
        doc = t2_presentation(args.p, args.table)
        return doc, f"{doc['presentation']}\n{doc['relation']}\n", 0
    raise UsageError(f"unknown verb {v}")  # pragma: no cover


def _report(r: CheckReport):
    return r.to_json(), r.render(), 0 if r.passed else 1


def run(argv=None) -> int:
    ap = _parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        doc, text, code = _run(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except RootAdjError as exc:
        print(f"error: {exc.name}: {exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    if args.format == "json":
        if isinstance(doc, dict):
            doc.setdefault("seed", args.seed)
        out = json.dumps(doc, indent=1, default=str, ensure_ascii=False) + "\n"
    else:
        out = text
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return code


def main():
    sys.exit(run())
