"""Command-line front end.

Every command prints a verdict ``{status, certificate, trace}``; ``--json``
prints it as one sorted JSON document.  Exit status: 0 for a definite answer,
2 for unknown / needs-extension, 1 for bad input.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import List, Optional

from . import amalgam, automorph, canon, peakred, sampling, zl
from .automorph import IDENTITY, apply, auto_to_json, compose, parse_auto
from .polycore import PolySyntaxError, format_poly, format_unipoly, parse_poly

EXIT_OK, EXIT_INPUT, EXIT_UNKNOWN = 0, 1, 2
UNDECIDED = {"unknown", "needs-extension"}


class Verdict:
    def __init__(self, status: str, certificate: Optional[dict] = None, trace: Optional[list] = None):
        self.status = status
        self.certificate = certificate or {}
        self.trace = trace

    def to_json(self) -> dict:
        return {"status": self.status, "certificate": self.certificate, "trace": self.trace}

    @property
    def exit_code(self) -> int:
        return EXIT_UNKNOWN if self.status in UNDECIDED else EXIT_OK


class WitnessError(RuntimeError):
    """A computed witness failed re-verification; this is a bug, not bad input."""


def _check(ok: bool, what: str) -> None:
    if not ok:
        raise WitnessError(f"{what} failed to verify")


def _pair_json(pair) -> List[str]:
    return [format_unipoly(pair.u), format_unipoly(pair.v)]


def _et_inverse(word: peakred.ETWord) -> List:
    return [m.inverse() for m in reversed(word.moves)]


# -- commands ------------------------------------------------------------------


def cmd_canon(args) -> Verdict:
    p = parse_poly(args.poly)
    out = canon.canonical_model(p)
    if isinstance(out, canon.NeedsExtension):
        return Verdict(
            "needs-extension",
            {"rule": "irrational-shear", "at": format_poly(out.at), "minimal_poly": format_unipoly(out.minimal_poly, "l")},
            out.trace.to_json()["steps"],
        )
    _check(out.trace.replay(p) == out.canonical, "canonical trace")
    return Verdict(
        "ok",
        {"canonical": format_poly(out.canonical), "degree": int(out.degree) if out.degree >= 0 else "-inf",
         "map": auto_to_json(out.trace.automorphism())},
        out.trace.to_json()["steps"],
    )


def cmd_equiv(args) -> Verdict:
    p, q = parse_poly(args.p), parse_poly(args.q)
    budget = canon.Budget(args.budget_len, args.budget_k, args.budget_height)
    out = canon.equivalent(p, q, budget)
    if isinstance(out, canon.Equivalent):
        _check(apply(out.witness, p) == q, "equivalence witness")
        return Verdict("equivalent", dict(out.certificate))
    if isinstance(out, canon.NotEquivalent):
        return Verdict("not-equivalent", dict(out.certificate))
    return Verdict("unknown", {"rule": "budget", "reason": out.reason,
                               "budget": {"length": budget.length, "k": budget.k, "height": budget.height}})


def cmd_is_auto(args) -> Verdict:
    phi = parse_auto(args.map)
    out = automorph.factor_jvdk(phi.img_x, phi.img_y)
    if isinstance(out, automorph.NotAutomorphism):
        return Verdict("no", out.to_json())
    _check(out.evaluate() == phi, "factorization")
    return Verdict("yes", {"rule": "jvdk", "class": automorph.shape_class(phi)}, out.to_json())


def cmd_factor(args) -> Verdict:
    phi = parse_auto(args.map)
    out = automorph.factor_jvdk(phi.img_x, phi.img_y)
    if isinstance(out, automorph.NotAutomorphism):
        return Verdict("no", out.to_json())
    _check(out.evaluate() == phi, "factorization")
    return Verdict("ok", {"rule": "jvdk", "length": len(out), "word": out.to_json()})


def cmd_invert(args) -> Verdict:
    phi = parse_auto(args.map)
    out = automorph.factor_jvdk(phi.img_x, phi.img_y)
    if isinstance(out, automorph.NotAutomorphism):
        return Verdict("no", out.to_json())
    inv = out.inverse().evaluate()
    _check(compose(phi, inv) == IDENTITY and compose(inv, phi) == IDENTITY, "inverse")
    return Verdict("ok", {"inverse": auto_to_json(inv)})


def cmd_reduce_pair(args) -> Verdict:
    pair = peakred.parse_pair(args.pair)
    minimal, word = peakred.reduce_pair(pair)
    _check(word(pair) == minimal, "reduction trace")
    m = peakred.measure(minimal)
    return Verdict("ok", {"minimal": _pair_json(minimal), "measure": [peakred._jsonable_degree(m[0]), m[1]]},
                   word.to_json())


def cmd_pair_equiv(args) -> Verdict:
    p1, p2 = peakred.parse_pair(args.first), peakred.parse_pair(args.second)
    out = peakred.pairs_equivalent(p1, p2)
    if isinstance(out, peakred.PairsUnknown):
        return Verdict("unknown", {"reason": out.reason})
    back = peakred.apply_word(_et_inverse(out.trace2), out.witness(out.trace1(p1)))
    _check(back == p2, "pair equivalence witness")
    return Verdict(
        "equivalent",
        {"rule": "peak-reduction", "witness": out.witness.to_json(),
         "minimal": [_pair_json(out.minimal1), _pair_json(out.minimal2)]},
        [out.trace1.to_json(), out.trace2.to_json()],
    )


def cmd_zl_screen(args) -> Verdict:
    p = parse_poly(args.poly)
    out = zl.zl_screen(p)
    if isinstance(out, zl.RuledOut):
        return Verdict("ruled-out", out.to_json())
    if isinstance(out, zl.Candidates):
        return Verdict("candidates", out.to_json())
    return Verdict("unknown", {"reason": "degenerate-branch", **out.to_json()})


def cmd_zl_decide(args) -> Verdict:
    p = parse_poly(args.poly)
    par = zl.Parametrization.parse(args.param)
    out = zl.zl_decide(p, par)
    if isinstance(out, zl.ZLUnknown):
        return Verdict("unknown", out.to_json())
    rec = out.to_json()
    trace = rec.pop("trace")
    _check(out.trace(par.pair()) == out.minimal, "reduction trace")
    return Verdict("equivalent", {"rule": "standard-form", **rec}, trace)


def cmd_coord(args) -> Verdict:
    p = parse_poly(args.poly)
    out = canon.is_coordinate(p)
    if isinstance(out, canon.Yes):
        _check(out.automorphism.img_x == p and out.word.evaluate() == out.automorphism, "coordinate witness")
        return Verdict("yes", {"rule": "coordinate", "map": auto_to_json(out.automorphism)}, out.word.to_json())
    if isinstance(out, canon.No):
        return Verdict("no", {"rule": "canonical-degree", "reason": out.reason})
    return Verdict("unknown", {"reason": out.reason})


def cmd_normal_form(args) -> Verdict:
    phi = parse_auto(args.map)
    try:
        nf = amalgam.normal_form(phi)
    except automorph.NotAutomorphismError as exc:
        return Verdict("no", exc.verdict.to_json())
    nf.check()
    _check(nf.evaluate() == phi, "normal form")
    return Verdict("ok", nf.to_json())


def cmd_e1e2_nf(args) -> Verdict:
    with open(args.word_file, encoding="utf-8") as fh:
        word = amalgam.parse_shear_word(fh.read())
    nf = amalgam.e1e2_normal_form(word)
    return Verdict("ok", {"identity": nf.is_identity(), "blocks": nf.to_json(), "letters": len(word.letters)})


def cmd_sample(args) -> Verdict:
    rng = random.Random(args.seed)
    if args.kind == "auto":
        word = sampling.random_word(rng, args.length)
        return Verdict("ok", {"seed": args.seed, "map": auto_to_json(word.evaluate())}, word.to_json())
    if args.kind == "pair":
        pair = sampling.random_pair(rng)
        return Verdict("ok", {"seed": args.seed, "pair": _pair_json(pair)})
    word = sampling.random_shear_word(rng, args.length)
    lines = [f"{type(m).__name__} {m.a} {m.k}" for m in word.letters]
    return Verdict("ok", {"seed": args.seed, "word": lines})


# -- plumbing --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="tamepoly", description="Automorphisms of the plane and polynomial equivalence.")
    ap.add_argument("--json", action="store_true", help="print one JSON document")
    ap.add_argument("--seed", type=int, default=0, help="seed for the sample command")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.set_defaults(func=fn)
        return sp

    add("canon", cmd_canon, "canonical model by degree-lowering shears").add_argument("poly")
    sp = add("equiv", cmd_equiv, "search for an automorphism between two polynomials")
    sp.add_argument("p")
    sp.add_argument("q")
    sp.add_argument("--budget-len", type=int, default=4)
    sp.add_argument("--budget-k", type=int, default=4)
    sp.add_argument("--budget-height", type=int, default=5)
    add("is-auto", cmd_is_auto, "is '<x-img>;<y-img>' an automorphism").add_argument("map")
    add("factor", cmd_factor, "factor an automorphism into generators").add_argument("map")
    add("invert", cmd_invert, "inverse automorphism").add_argument("map")
    add("reduce-pair", cmd_reduce_pair, "peak-reduce a pair '<u>;<v>' in t").add_argument("pair")
    sp = add("pair-equiv", cmd_pair_equiv, "compare two pairs after reduction")
    sp.add_argument("first")
    sp.add_argument("second")
    add("zl-screen", cmd_zl_screen, "screen for the x^k - y^l standard form").add_argument("poly")
    sp = add("zl-decide", cmd_zl_decide, "decide the standard form from a parametrization")
    sp.add_argument("poly")
    sp.add_argument("--param", required=True, help="'<u>; <v>' in t with p(u, v) = 0")
    add("coord", cmd_coord, "is the polynomial a coordinate").add_argument("poly")
    add("normal-form", cmd_normal_form, "alternating triangular normal form").add_argument("map")
    add("e1e2-nf", cmd_e1e2_nf, "block normal form of an E1/E2 word file").add_argument("word_file")
    sp = add("sample", cmd_sample, "random automorphism, pair or shear word from --seed")
    sp.add_argument("kind", choices=("auto", "pair", "word"))
    sp.add_argument("--length", type=int, default=4)
    return ap


def _human(v: Verdict) -> str:
    lines = [f"status: {v.status}"]
    for key in sorted(v.certificate):
        lines.append(f"{key}: {json.dumps(v.certificate[key], sort_keys=True)}")
    if v.trace:
        lines.append("trace:")
        lines.extend(f"  {json.dumps(step, sort_keys=True)}" for step in v.trace)
    return "\n".join(lines)


def _input_error(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return EXIT_INPUT


def main(argv: Optional[List[str]] = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        verdict = args.func(args)
    except PolySyntaxError as exc:
        return _input_error(f"{exc.reason} at line {exc.line}, column {exc.column} in {exc.text!r}")
    except zl.FiberError as exc:
        return _input_error(f"parametrization is off the fiber: residual {format_unipoly(exc.residual)}")
    except OSError as exc:
        return _input_error(str(exc))
    except (ValueError, ZeroDivisionError) as exc:
        return _input_error(str(exc))
    if args.json:
        print(json.dumps(verdict.to_json(), sort_keys=True, indent=2))
    else:
        print(_human(verdict))
    return verdict.exit_code


if __name__ == "__main__":
    sys.exit(main())
