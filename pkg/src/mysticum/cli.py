"""Command-line front end.

    mysticum analyze 0 1 inf -1 3 -5 --json
    mysticum verify covariants
    mysticum triinv --p 7/3
    mysticum extensions 0 1 inf 5
    mysticum cspoly --alpha 123 --verify-factorization
    mysticum covariants 0,1,0,0,0,-1,0
    mysticum render 0 1 inf 2 1/2 -1 --out fig.svg

Exit codes: 0 success, 1 domain degeneracy, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import random
import re
import sys
from fractions import Fraction
from math import gcd

from .algebra import GaussianRational
from .forms import BinaryForm, DegreeMismatch, sextic_from_roots
from .hexagram import TRIPLES, Hexad, audit, triple_name
from .plane import P1Point

__all__ = [
    "ParseError",
    "UnknownSuite",
    "CoincidentPoints",
    "parse_scalar",
    "parse_point",
    "format_scalar",
    "format_point",
    "format_form",
    "analyze_document",
    "run_suite",
    "SUITES",
    "main",
]

SCHEMA = "mysticum/1"

EXIT_OK = 0
EXIT_DEGENERATE = 1
EXIT_USAGE = 2


class ParseError(ValueError):
    pass


class UnknownSuite(ValueError):
    pass


class CoincidentPoints(ValueError):
    pass


# -- literals ---------------------------------------------------------------

_RAT = r"[+-]?\d+(?:/\d+)?"
_GAUSS = re.compile(rf"^(?:(?P<re>{_RAT})(?=[+-]))?(?P<im>[+-]?(?:\d+(?:/\d+)?)?)\*?i$")


def _rat(text: str) -> Fraction:
    try:
        q = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational literal {text!r}") from exc
    if not re.fullmatch(_RAT, text):
        raise ParseError(f"bad rational literal {text!r}")
    return q


def parse_scalar(text: str):
    """Integer, "n/d", or Gaussian "a/b+c/d*i" (also "i", "-2*i", "1+i")."""
    s = text.strip().replace(" ", "")
    if not s:
        raise ParseError("empty literal")
    if s.endswith("i"):
        m = _GAUSS.match(s)
        if not m:
            raise ParseError(f"bad Gaussian literal {text!r}")
        re_part = _rat(m.group("re")) if m.group("re") else Fraction(0)
        im = m.group("im")
        if im in ("", "+"):
            im_part = Fraction(1)
        elif im == "-":
            im_part = Fraction(-1)
        else:
            im_part = _rat(im)
        if im_part == 0:
            return re_part
        return GaussianRational(re_part, im_part)
    return _rat(s)


def parse_point(text: str) -> P1Point:
    text = text.strip()
    if text.lower() in ("inf", "infinity", "oo"):
        return P1Point.infinity()
    return P1Point(parse_scalar(text))


def format_scalar(x) -> str:
    if isinstance(x, GaussianRational) and x.im == 0:
        x = x.re
    return str(x)


def format_point(z: P1Point) -> str:
    return "inf" if z.is_infinite else format_scalar(z.u)


def _parts(x):
    if isinstance(x, GaussianRational):
        return Fraction(x.re), Fraction(x.im)
    return Fraction(x), Fraction(0)


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def format_form(form) -> str:
    """Coefficients as "c0,c1,...": first nonzero made positive and
    integral, then unit content."""
    coeffs = form.coeffs if isinstance(form, BinaryForm) else form.form.coeffs
    k = next((i for i, c in enumerate(coeffs) if c != 0), None)
    if k is None:
        return ",".join("0" for _ in coeffs)
    lead = coeffs[k]
    if isinstance(lead, int):
        lead = Fraction(lead)
    scaled = [c / lead if c != 0 else Fraction(0) for c in coeffs]
    parts = [_parts(c) for c in scaled]
    den = 1
    for a, b in parts:
        den = _lcm(den, _lcm(a.denominator, b.denominator))
    ints = [(int(a * den), int(b * den)) for a, b in parts]
    g = 0
    for a, b in ints:
        g = gcd(g, gcd(abs(a), abs(b)))
    ints = [(a // g, b // g) for a, b in ints]
    out = []
    for a, b in ints:
        out.append(format_scalar(GaussianRational(a, b)) if b else str(a))
    return ",".join(out)


def _points(texts) -> list[P1Point]:
    pts = [parse_point(t) for t in texts]
    if len(set(pts)) != len(pts):
        raise CoincidentPoints("points must be distinct")
    return pts


# -- analyze ----------------------------------------------------------------

def analyze_document(points, csc_table: bool = True, alignments: bool = False) -> dict:
    from .covariants import is_tri_involutive_covariant
    from .hexagram import Hexagram
    from .triinv import find_alignments

    h = Hexad(points)
    rep = audit(h)
    hx = Hexagram(h)
    found = find_alignments(points)
    g_lines = {}
    for t in TRIPLES:
        try:
            g = hx.cayley_salmon(t)
        except ValueError:
            g = None
        g_lines[triple_name(t)] = None if g is None else format_form(g.form)
    doc = {
        "schema": SCHEMA,
        "points": [format_point(z) for z in points],
        "tri_involutive": bool(found),
        "theta54_vanishes": is_tri_involutive_covariant(points),
        "alignments": len(found),
        "csc": {
            "holds": rep.csc_holds,
            "checked": rep.csc_checked,
            "skipped": rep.csc_skipped,
        },
        "distinct": rep.distinct,
        "distinct_g_lines": rep.distinct_g_lines,
        "g_lines": g_lines,
        "g_classes": rep.g_classes,
        "undefined_g": rep.undefined_g,
        "degenerate": rep.degenerate,
        "incidences": {k: {"profile": t.profile, "predicted": t.predicted, "actual": t.actual,
                           "extra": t.extra, "missing": t.missing}
                       for k, t in rep.incidences.items()},
        "von_staudt": rep.von_staudt,
    }
    if csc_table:
        doc["csc"]["pairs"] = rep.csc
    if alignments:
        doc["alignment_list"] = [
            {X: format_point(a[X]) for X in "ABCDEF"} for a in found]
    return doc


def _print_analysis(doc: dict, out) -> None:
    c = doc["csc"]
    print(f"points: {' '.join(doc['points'])}", file=out)
    skipped = ", ".join("{" + k.replace("|", ",") + "}" for k in c["skipped"])
    verdict = "passes" if c["holds"] else "fails"
    print(f"CSC: {verdict} ({c['checked']} checked pairs, {len(c['skipped'])} skipped"
          + (f": {skipped})" if skipped else ")"), file=out)
    print(f"tri-involutive: {str(doc['tri_involutive']).lower()}", file=out)
    print(f"theta54 vanishes: {str(doc['theta54_vanishes']).lower()}", file=out)
    print(f"alignments: {doc['alignments']}", file=out)
    print(f"distinct g-lines: {doc['distinct_g_lines']}", file=out)
    for name, g in doc["g_lines"].items():
        print(f"g({name}) = {g if g is not None else 'undefined'}", file=out)
    for k, t in doc["incidences"].items():
        print(f"{k}: {t['profile']}, extra {len(t['extra'])}", file=out)
    if "pairs" in c:
        for k, v in c["pairs"].items():
            print(f"  {k}: {v}", file=out)
    for a in doc.get("alignment_list", []):
        print("  " + " ".join(f"{X}={v}" for X, v in a.items()), file=out)


# -- verification suites ----------------------------------------------------

def _random_points(rng: random.Random, n: int = 6) -> list[P1Point]:
    pts: list[P1Point] = []
    while len(pts) < n:
        z = P1Point(Fraction(rng.randint(-30, 30), rng.randint(1, 9)))
        if z not in pts:
            pts.append(z)
    return pts


_PROFILES = {"K-g": "(60_1,20_3)", "K-k": "(60_3,60_3)", "G-k": "(20_3,60_1)", "G-g": "(20_1,20_1)"}
_COUNTS = {"pascal": 60, "steiner": 20, "kirkman": 60, "cayley_salmon": 20}


def _suite_incidence():
    rng = random.Random(2024)
    for n in range(2):
        pts = _random_points(rng)
        rep = audit(Hexad(pts))
        tag = "{" + ",".join(map(format_point, pts)) + "}"
        yield f"{tag}: counts 60/20/60/20", rep.distinct == _COUNTS
        yield f"{tag}: incidence profiles", all(
            rep.incidences[k].profile == v for k, v in _PROFILES.items())
        yield f"{tag}: no extra incidences", all(not t.extra for t in rep.incidences.values())
        yield f"{tag}: von Staudt pairs conjugate", all(v is True for v in rep.von_staudt.values())


def _suite_csc():
    from .triinv import psi
    pts = [parse_point(x) for x in "0 1 inf -1 3 -5".split()]
    rep = audit(Hexad(pts))
    yield "{0,1,inf,-1,3,-5}: CSC fails", not rep.csc_holds
    for p in (Fraction(3), Fraction(5, 2)):
        rep = audit(psi(p).as_hexad())
        yield f"psi({p}): CSC holds", rep.csc_holds and rep.csc_skipped == ["123|456"]
        yield f"psi({p}): 13 distinct g-lines", rep.distinct_g_lines == 13


def _suite_cspoly():
    from . import cspoly as C
    from .exotic import IndexPerm
    cs = C.cs_polynomial({1, 2, 3})
    yield "CS_123 homogeneous of degree 18", cs.is_homogeneous() and cs.total_degree() == 18
    yield "CS_123 ~ CS_456", C.is_proportional(cs, C.cs_polynomial({4, 5, 6}))
    fam = C.factor_family({1, 2, 3})
    yield "L1 divides CS_123", C.L1.divides(cs)
    yield "CS_123 ~ L1 L2 L3 M4 M5 M6", C.is_proportional(cs, fam.product())
    yield "G_123 action table", all(C.verify_action_table(fam, C.G123_TABLE).values())
    yield "G_124 action table", all(C.verify_action_table(C.factor_family({1, 2, 4}),
                                                          C.G124_TABLE).values())
    yield "beta_(3,4) bijection", C.verify_beta_34()
    yield "(1 6) turns L1 into -L1", C._act(IndexPerm.from_cycles("(1 6)"), C.L1) == -C.L1
    for lab in ("M4", "M5", "M6"):
        yield f"{lab} vanishes on alignments", C.vanishing_on_alignment(fam[lab])
    yield "L1 FLT invariance (5 trials)", C.verify_invariance(C.L1, trials=5)
    yield "L1 + a^3 not invariant", not C.verify_invariance(
        C.L1 + C.MultiPoly.var("a", C.VARIABLES) ** 3, trials=5)
    for name, ok in C.branch_analysis().checks.items():
        yield f"branch: {name}", ok


def _suite_covariants():
    from .covariants import (OCTAHEDRAL_SEXTIC, psi_covariant_profile, syzygy_forms, theta)
    forms = syzygy_forms()
    yield "(θ54,F)₄ = 0", forms["(theta54,F)_4"].is_zero()
    yield "(θ54,θ24)₄ = 0", forms["(theta54,theta24)_4"].is_zero()
    prof = psi_covariant_profile()
    yield "θ24(Ψp) = c f1(p) T²", prof.theta24_is_T_squared_multiple and prof.f1_constant != 0
    yield "θ32(Ψp) multiple of T", prof.theta32_is_T_multiple
    yield "f1 zero set is the six special p", prof.f1_zero_set_ok
    yield "θ24(x1⁵x2 − x1x2⁵) = 0", theta(OCTAHEDRAL_SEXTIC)[0].is_zero()


def _suite_extensions():
    from .triinv import ExtensionCollision, extension_is_tri_involutive, extensions
    for r in (Fraction(2), Fraction(5), Fraction(-3, 2)):
        seed = (P1Point(0), P1Point(1), P1Point.infinity(), P1Point(r))
        tag = "seed {0,1,∞," + format_scalar(r) + "}"
        try:
            es = extensions(seed, strict=False)
        except ExtensionCollision:
            yield f"{tag}: 16 distinct", False
            continue
        yield f"{tag}: 16 distinct", len(es) == 16
        yield f"{tag}: all tri-involutive", all(extension_is_tri_involutive(m) for m in es.members)


SUITES = {
    "incidence": _suite_incidence,
    "csc": _suite_csc,
    "cspoly": _suite_cspoly,
    "covariants": _suite_covariants,
    "extensions": _suite_extensions,
}


def run_suite(name: str, out=None) -> bool:
    if name != "all" and name not in SUITES:
        raise UnknownSuite(name)
    out = out or sys.stdout
    names = list(SUITES) if name == "all" else [name]
    ok = True
    for n in names:
        for check, passed in SUITES[n]():
            print(f"[{n}] {check}: {'PASS' if passed else 'FAIL'}", file=out, flush=True)
            ok = ok and passed
    return ok


# -- commands ---------------------------------------------------------------

def _cmd_analyze(args, out) -> int:
    pts = _points(args.points)
    if len(pts) != 6:
        raise ParseError("analyze needs six points")
    doc = analyze_document(pts, csc_table=args.csc, alignments=args.alignments)
    if args.json:
        print(json.dumps(doc, indent=2), file=out)
    else:
        _print_analysis(doc, out)
    return EXIT_OK


def _cmd_verify(args, out) -> int:
    return EXIT_OK if run_suite(args.suite, out) else EXIT_DEGENERATE


def _cmd_triinv(args, out) -> int:
    from .covariants import is_tri_involutive_covariant
    from .triinv import alignment_group, find_alignments, psi
    p = parse_scalar(args.p)
    s = psi(p)
    doc = {
        "schema": SCHEMA,
        "p": format_scalar(p),
        "points": [format_point(z) for z in s],
        "alignments": len(find_alignments(s)),
        "alignment_group_order": len(alignment_group(p)),
        "theta54_vanishes": is_tri_involutive_covariant(list(s)),
    }
    print(json.dumps(doc, indent=2), file=out)
    return EXIT_OK


def _fmt_complex(pair) -> str:
    u, v = pair
    if abs(v) < 1e-12:
        return "inf"
    z = u / v
    return f"{z.real:.12g}{z.imag:+.12g}i"


def _cmd_extensions(args, out) -> int:
    from .triinv import extension_is_tri_involutive, extensions
    seed = _points(args.points)
    if len(seed) != 4:
        raise ParseError("extensions needs four points")
    es = extensions(seed, tolerance=args.tolerance, strict=False)
    doc = {
        "schema": SCHEMA,
        "seed": [format_point(z) for z in seed],
        "count": len(es),
        "extensions": [
            {
                "assignment": m.assignment,
                "exact": m.exact,
                "new_points": ([format_point(z) for z in m.new_points()] if m.exact
                               else [_fmt_complex(z) for z in m.new_points()]),
                "tri_involutive": extension_is_tri_involutive(m, args.tolerance),
            }
            for m in es.members
        ],
        "collisions": es.collisions,
    }
    print(json.dumps(doc, indent=2), file=out)
    return EXIT_OK


def _cmd_cspoly(args, out) -> int:
    from . import cspoly as C
    digits = args.alpha.strip()
    if not re.fullmatch(r"[1-6]{3}", digits) or len(set(digits)) != 3:
        raise ParseError(f"alpha must be three distinct indices 1..6, got {args.alpha!r}")
    alpha = frozenset(int(c) for c in digits)
    cs = C.cs_polynomial(alpha)
    doc = {
        "schema": SCHEMA,
        "alpha": triple_name(alpha),
        "degree": cs.total_degree(),
        "homogeneous": cs.is_homogeneous(),
        "terms": len(cs.terms),
    }
    if args.verify_factorization:
        fam = C.factor_family(alpha)
        const = C.proportionality_constant(cs, fam.product())
        doc["factors"] = {k: str(v) for k, v in fam.factors.items()}
        doc["each_factor_divides"] = {k: v.divides(cs) for k, v in fam.factors.items()}
        doc["product_constant"] = None if const is None else format_scalar(const)
    print(json.dumps(doc, indent=2), file=out)
    return EXIT_OK


def _cmd_covariants(args, out) -> int:
    from .covariants import theta
    items = args.items
    if len(items) == 1 and "," in items[0]:
        coeffs = [parse_scalar(c) for c in items[0].split(",")]
        if len(coeffs) != 7:
            raise ParseError("a sextic needs seven coefficients")
        f = BinaryForm(coeffs)
    elif len(items) == 7:
        f = BinaryForm([parse_scalar(c) for c in items])
    elif len(items) == 6:
        f = sextic_from_roots(_points(items))
    else:
        raise ParseError("give seven coefficients or six points")
    t24, t32, t54 = theta(f)
    doc = {
        "schema": SCHEMA,
        "sextic": [format_scalar(c) for c in f.coeffs],
        "theta24": [format_scalar(c) for c in t24.coeffs],
        "theta32": [format_scalar(c) for c in t32.coeffs],
        "theta54": [format_scalar(c) for c in t54.coeffs],
        "tri_involutive": t54.is_zero(),
    }
    print(json.dumps(doc, indent=2), file=out)
    return EXIT_OK


def _cmd_render(args, out) -> int:
    from .render import render_svg
    from .triinv import find_alignments
    pts = _points(args.points)
    if len(pts) != 6:
        raise ParseError("render needs six points")
    from .render import _real
    for z in pts:
        _real(z)
    found = find_alignments(pts)
    h = found[0] if found else Hexad(pts)
    svg = render_svg(h, chords=bool(found))
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(svg)
    print(args.out, file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="mysticum", description="Pascal hexagram computations.")
    sub = ap.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="configuration report for six points")
    a.add_argument("points", nargs="+")
    a.add_argument("--json", action="store_true")
    a.add_argument("--csc", action="store_true", help="include the CSC pair table")
    a.add_argument("--alignments", action="store_true", help="list all alignments")
    a.set_defaults(fn=_cmd_analyze)

    v = sub.add_parser("verify", help="run an identity-verification suite")
    v.add_argument("suite")
    v.set_defaults(fn=_cmd_verify)

    t = sub.add_parser("triinv", help="the standard tri-involutive sextuple for p")
    t.add_argument("--p", required=True)
    t.set_defaults(fn=_cmd_triinv)

    e = sub.add_parser("extensions", help="tri-involutive sextuples through four points")
    e.add_argument("points", nargs="+")
    e.add_argument("--tolerance", type=float, default=1e-9)
    e.set_defaults(fn=_cmd_extensions)

    c = sub.add_parser("cspoly", help="symbolic Cayley-Salmon polynomial")
    c.add_argument("--alpha", required=True)
    c.add_argument("--verify-factorization", action="store_true")
    c.set_defaults(fn=_cmd_cspoly)

    cv = sub.add_parser("covariants", help="theta covariants of a sextic")
    cv.add_argument("items", nargs="+", help="7 comma-separated coefficients or 6 points")
    cv.set_defaults(fn=_cmd_covariants)

    r = sub.add_parser("render", help="SVG figure of a real sextuple")
    r.add_argument("points", nargs="+")
    r.add_argument("--out", required=True)
    r.set_defaults(fn=_cmd_render)
    return ap


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    ap = build_parser()
    argv = sys.argv[1:] if argv is None else argv
    try:
        args = ap.parse_args(_protect_negatives(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.fn(args, out)
    except UnknownSuite as exc:
        print(f"error: unknown suite {exc}; choose from {', '.join(list(SUITES) + ['all'])}",
              file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (CoincidentPoints, DegreeMismatch, ArithmeticError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE


def _protect_negatives(argv):
    # a leading space stops argparse reading "-1/2" or "-i" as an option
    return [" " + x if re.match(r"-(\d|i)", x) else x for x in argv]


if __name__ == "__main__":
    sys.exit(main())
