"""Cayley-Salmon polynomials CS_alpha over the coordinates a..f of a hexad,
the cubic factors L1..M6 and their transport, and the branch analyses.

CS_alpha is the second transvectant of the symbolic forms of g(alpha) and
g(complement), with variable-difference and rational content removed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .algebra import (
    I,
    MultiPoly,
    UniPoly,
    UniRatFunc,
    mpoly_letter_substitute,
    strip_difference_content,
)
from .exotic import INDICES, IndexPerm, LetterPerm, group_closure, zeta_inv
from .forms import BinaryForm, linear_form, reduce_form, transvectant
from .hexagram import PascalLabel, complement, triple_name
from .plane import P1Point

__all__ = [
    "VARIABLES",
    "InternalDegeneracy",
    "FactorFamily",
    "L1",
    "L1_SWAPPED_SIGNS",
    "symbolic_pascal",
    "symbolic_kirkman",
    "symbolic_cs_line",
    "cs_polynomial",
    "factor_family",
    "proportionality_constant",
    "is_proportional",
    "action_table",
    "G123_TABLE",
    "G124_TABLE",
    "BETA_34",
    "verify_action_table",
    "verify_beta_34",
    "verify_invariance",
    "ALIGNMENT_SUBSTITUTION",
    "vanishing_on_alignment",
    "restrict",
    "BranchReport",
    "branch_analysis",
    "stabilizer_g",
]

VARIABLES = tuple("abcdef")


class InternalDegeneracy(ArithmeticError):
    pass


_a, _b, _c, _d, _e, _f = MultiPoly.gens(VARIABLES)

# The FLT-invariant cubic whose G_123-orbit gives the six factors of CS_123.
L1 = (_c * _d * _e + _b * _c * _d + _a * _d * _f + _a * _b * _e + _a * _c * _f + _b * _e * _f) \
    - (_a * _c * _d + _b * _d * _e + _c * _d * _f + _b * _c * _e + _a * _b * _f + _a * _e * _f)

# Same cubic with the signs of abf and acf exchanged; not an invariant.
L1_SWAPPED_SIGNS = (_c * _d * _e + _b * _c * _d + _a * _d * _f + _a * _b * _e + _a * _b * _f + _b * _e * _f) \
    - (_a * _c * _d + _b * _d * _e + _c * _d * _f + _b * _c * _e + _a * _c * _f + _a * _e * _f)


# -- symbolic configuration --------------------------------------------------

def _symbolic_point(x: str) -> P1Point:
    return P1Point(MultiPoly.var(x, VARIABLES))


def _conic(x: str) -> BinaryForm:
    lf = linear_form(_symbolic_point(x))
    return lf * lf


def _join(f: BinaryForm, g: BinaryForm) -> BinaryForm:
    t = transvectant(f, g, 1)
    if t.is_zero():
        raise InternalDegeneracy("symbolic join/meet vanished identically")
    return reduce_form(t)


@lru_cache(maxsize=1)
def _base_pascal() -> BinaryForm:
    """k(1,23) of the identity hexad A->a, ..., F->f."""
    P = {x: _conic(x) for x in VARIABLES}
    pts = [_join(_join(P[p], P[q]), _join(P[r], P[s]))
           for (p, q), (r, s) in ((("a", "e"), ("b", "f")), (("a", "d"), ("c", "f")),
                                  (("b", "d"), ("c", "e")))]
    k = _join(pts[0], pts[1])
    if not transvectant(pts[2], k, 2)[0].is_zero():
        raise InternalDegeneracy("symbolic Pascal: third cross-hair point is off the line")
    return k


def _transport(form: BinaryForm, eta: LetterPerm) -> BinaryForm:
    """The form computed for the hexad h o eta, from the one for h."""
    mapping = eta.variable_map()
    return form.map(lambda c: c.rename(mapping) if isinstance(c, MultiPoly) else c)


def symbolic_pascal(label: PascalLabel) -> BinaryForm:
    return _transport(_base_pascal(), zeta_inv(label.standard_sigma()))


@lru_cache(maxsize=None)
def _pascal_cached(x: int, y: int, z: int) -> BinaryForm:
    return symbolic_pascal(PascalLabel(x, y, z))


@lru_cache(maxsize=None)
def symbolic_kirkman(w: int, triple: frozenset) -> BinaryForm:
    x, y, z = sorted(triple)
    return _join(_pascal_cached(w, x, y), _pascal_cached(w, x, z))


@lru_cache(maxsize=None)
def symbolic_cs_line(triple: frozenset) -> BinaryForm:
    w1, w2, _ = sorted(complement(triple))
    return _join(symbolic_kirkman(w1, triple), symbolic_kirkman(w2, triple))


@lru_cache(maxsize=None)
def _cs_cached(triple: frozenset) -> tuple[MultiPoly, tuple]:
    t = min(triple, complement(triple), key=sorted)
    q = symbolic_cs_line(t)
    qq = symbolic_cs_line(complement(t))
    raw = transvectant(q, qq, 2)[0]
    if raw.is_zero():
        raise InternalDegeneracy(f"CS_{triple_name(triple)} vanished identically")
    stripped, removed = strip_difference_content(raw)
    return stripped, tuple(removed)


def cs_polynomial(alpha) -> MultiPoly:
    """CS_alpha, content-stripped; equal for alpha and its complement."""
    return _cs_cached(frozenset(alpha))[0]


# -- proportionality --------------------------------------------------------

def proportionality_constant(p: MultiPoly, q: MultiPoly):
    """The scalar s with p == s * q, or None."""
    if p.is_zero() or q.is_zero():
        raise ValueError("proportionality is undefined for zero polynomials")
    mp, cp = p.leading_term()
    mq, cq = q.leading_term()
    if mp != mq:
        return None
    s = Fraction(cp) / Fraction(cq)
    return s if p == q.scale(s) else None


def is_proportional(p: MultiPoly, q: MultiPoly) -> bool:
    return proportionality_constant(p, q) is not None


# -- factor families --------------------------------------------------------

@dataclass
class FactorFamily:
    alpha: frozenset
    factors: dict  # label -> MultiPoly

    def product(self) -> MultiPoly:
        out = MultiPoly.const(1, VARIABLES)
        for f in self.factors.values():
            out = out * f
        return out

    def __getitem__(self, label: str) -> MultiPoly:
        return self.factors[label]

    def labels(self) -> list[str]:
        return list(self.factors)


def _act(sigma: IndexPerm, poly: MultiPoly) -> MultiPoly:
    return mpoly_letter_substitute(poly, zeta_inv(sigma))


def _ip(cycles: str) -> IndexPerm:
    return IndexPerm.from_cycles(cycles)


@lru_cache(maxsize=1)
def _family_123() -> FactorFamily:
    L2 = _act(_ip("(1 2)"), L1)
    L3 = _act(_ip("(1 3)"), L1)
    u = _ip("(1 4)(2 5)(3 6)")
    fam = {"L1": L1, "L2": L2, "L3": L3, "M4": _act(u, L1), "M5": _act(u, L2), "M6": _act(u, L3)}
    return FactorFamily(frozenset({1, 2, 3}), fam)


def _relabel(label: str, sigma: IndexPerm) -> str:
    return label[0] + str(sigma(int(label[1])))


def factor_family(alpha) -> FactorFamily:
    """F_alpha: transport of F_123 along an index permutation taking
    {1,2,3} to alpha (or to its complement, which has the same family)."""
    alpha = frozenset(alpha)
    if len(alpha) != 3 or not alpha <= set(INDICES):
        raise ValueError("alpha must be a 3-subset of 1..6")
    base = _family_123()
    if alpha == base.alpha:
        return base
    target = alpha if 1 in alpha else complement(alpha)
    if target == base.alpha:
        return FactorFamily(alpha, dict(base.factors))
    sigma = _carry(base.alpha, target)
    fam = {_relabel(k, sigma): _act(sigma, v) for k, v in base.factors.items()}
    return FactorFamily(alpha, fam)


def _carry(src: frozenset, dst: frozenset) -> IndexPerm:
    """A product of disjoint transpositions taking src onto dst, fixing src & dst."""
    out_ = sorted(src - dst)
    in_ = sorted(dst - src)
    perm = IndexPerm()
    for x, y in zip(out_, in_):
        perm = perm * IndexPerm.transposition(x, y)
    return perm


# group action tables: index permutation -> permutation of factor labels
G123_TABLE = {
    "(1 2)": {"L1": "L2", "L2": "L1"},
    "(1 3)": {"L1": "L3", "L3": "L1"},
    "(4 5)": {"M4": "M5", "M5": "M4"},
    "(4 6)": {"M4": "M6", "M6": "M4"},
    "(1 4)(2 5)(3 6)": {"L1": "M4", "M4": "L1", "L2": "M5", "M5": "L2", "L3": "M6", "M6": "L3"},
}

G124_TABLE = {
    "(1 2)": {"L1": "L2", "L2": "L1"},
    "(1 4)": {"L1": "L4", "L4": "L1"},
    "(3 5)": {"M3": "M5", "M5": "M3"},
    "(3 6)": {"M3": "M6", "M6": "M3"},
    "(1 3)(2 5)(4 6)": {"L1": "M3", "M3": "L1", "L2": "M5", "M5": "L2", "L4": "M6", "M6": "L4"},
}

BETA_34 = {"L1": "L1", "L2": "L2", "L3": "L4", "M4": "M3", "M5": "M5", "M6": "M6"}


def action_table(fam: FactorFamily, sigma: IndexPerm) -> dict | None:
    """Where sigma sends each factor (up to scalar), or None if some image
    lies outside the family."""
    out = {}
    for k, v in fam.factors.items():
        img = _act(sigma, v)
        hit = [k2 for k2, v2 in fam.factors.items() if is_proportional(img, v2)]
        if len(hit) != 1:
            return None
        out[k] = hit[0]
    return out


def _as_full(table: dict, labels) -> dict:
    return {k: table.get(k, k) for k in labels}


def verify_action_table(fam: FactorFamily, table: dict) -> dict:
    """Check each listed generator acts as stated; returns generator -> bool."""
    res = {}
    for gen, expected in table.items():
        res[gen] = action_table(fam, _ip(gen)) == _as_full(expected, fam.labels())
    return res


def verify_beta_34() -> bool:
    src, dst = factor_family({1, 2, 3}), factor_family({1, 2, 4})
    v = _ip("(3 4)")
    return all(is_proportional(_act(v, src[k]), dst[t]) for k, t in BETA_34.items())


def stabilizer_g(alpha) -> set:
    """Index permutations preserving the pair {alpha, complement}."""
    alpha = sorted(alpha)
    comp = sorted(complement(alpha))
    gens = [IndexPerm.transposition(x, y) for x, y in combinations(alpha, 2)]
    gens += [IndexPerm.transposition(x, y) for x, y in combinations(comp, 2)]
    gens.append(IndexPerm.from_cycles(list(zip(alpha, comp))))
    return group_closure(gens)


# -- invariance ---------------------------------------------------------------

def verify_invariance(factor: MultiPoly, trials: int = 20, seed: int | None = 0) -> bool:
    """L(mu(a), ..., mu(f)) * prod(r x + s) == (ps - qr)^deg * L for random FLTs mu,
    checked as polynomial identities after clearing denominators."""
    rng = random.Random(seed)
    vs = factor.variables
    gens = MultiPoly.gens(vs)
    degs = {v: factor.degree_in(v) for v in vs}
    deg = factor.total_degree()
    if not factor.is_homogeneous():
        return False
    for _ in range(trials):
        while True:
            p, q, r, s = (Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(4))
            if p * s - q * r != 0:
                break
        num = {v: g.scale(p) + q for v, g in zip(vs, gens)}
        den = {v: g.scale(r) + s for v, g in zip(vs, gens)}
        lhs = MultiPoly.const(0, vs)
        pw_num = {}
        pw_den = {}
        for exps, c in factor.terms.items():
            term = MultiPoly.const(c, vs)
            for v, e in zip(vs, exps):
                if e:
                    key = (v, e)
                    if key not in pw_num:
                        pw_num[key] = num[v] ** e
                    term = term * pw_num[key]
                rest = degs[v] - e
                if rest:
                    key = (v, rest)
                    if key not in pw_den:
                        pw_den[key] = den[v] ** rest
                    term = term * pw_den[key]
            lhs = lhs + term
        rhs = factor.scale((p * s - q * r) ** deg)
        for v in vs:
            if degs[v] > 1:
                rhs = rhs * den[v] ** (degs[v] - 1)
        if lhs != rhs:
            return False
    return True


# -- restriction to the alignment curve --------------------------------------

_T = UniRatFunc.variable("t")
ALIGNMENT_SUBSTITUTION = {
    "a": UniRatFunc(1, var="t"), "b": UniRatFunc(0, var="t"), "c": UniRatFunc(-1, var="t"),
    "d": (1 - _T) / (1 + _T), "e": 1 / (2 * _T - 1), "f": _T / (_T - 2),
}


def restrict(poly: MultiPoly, values: dict) -> UniRatFunc:
    """Evaluate a polynomial in a..f at rational functions of one variable."""
    consts = {k: v for k, v in values.items() if not isinstance(v, UniRatFunc) or v.is_constant()}
    consts = {k: (v.num.coeffs[0] if v.num.coeffs else 0) if isinstance(v, UniRatFunc) else v
              for k, v in consts.items()}
    p = poly.subs(consts) if consts else poly
    rest = {k: v for k, v in values.items() if k not in consts}
    var = next(iter(rest.values())).var if rest else "t"
    # clear denominators: substitute num/den, multiply through by den^deg
    degs = {k: p.degree_in(k) for k in rest}
    total_num = UniPoly((), var)
    cache = {}
    for exps, c in p.terms.items():
        term = UniPoly((c,), var)
        for k, v in rest.items():
            e = exps[VARIABLES.index(k)] if p.variables == VARIABLES else exps[p.variables.index(k)]
            for part, power in ((v.num, e), (v.den, degs[k] - e)):
                if power:
                    key = (id(part), power)
                    if key not in cache:
                        cache[key] = (part, part ** power)
                    term = term * cache[key][1]
        total_num = total_num + term
    den = UniPoly((1,), var)
    for k, v in rest.items():
        den = den * v.den ** degs[k]
    return UniRatFunc(total_num, den)


def vanishing_on_alignment(factor: MultiPoly) -> bool:
    return restrict(factor, ALIGNMENT_SUBSTITUTION).is_zero()


# -- branch analysis ----------------------------------------------------------

@dataclass
class BranchReport:
    checks: dict = field(default_factory=dict)
    cs125_restriction: UniRatFunc | None = None
    cs125_constant: Fraction | None = None
    # ratio restriction / displayed, split as constant * (difference part)
    cs125_extraneous: UniRatFunc | None = None

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def _normalized(poly: MultiPoly) -> MultiPoly:
    """Set a=1, b=0, c=-1."""
    return poly.subs({"a": 1, "b": 0, "c": -1})


def _rf(values: dict):
    return {k: v if isinstance(v, UniRatFunc) else UniRatFunc(v, var="t") for k, v in values.items()}


def _split_difference_part(ratio: UniRatFunc, diffs):
    """Write ratio = const * E where E has numerator and denominator built only
    from factors of the given restricted differences.  Returns (E, const),
    or (None, None) if something else is left over."""
    pieces = [q.monic() for d in diffs if not d.is_zero()
              for q in (d.num, d.den) if q.degree > 0]
    num, den = ratio.num, ratio.den
    out = []
    for part in (num, den):
        changed = True
        while changed and part.degree > 0:
            changed = False
            for q in pieces:
                g = part.gcd(q)
                if g.degree > 0:
                    part = part // g
                    changed = True
        out.append(part)
    if ratio.is_zero() or out[0].degree != 0 or out[1].degree != 0:
        return None, None
    const = Fraction(out[0].coeffs[0]) / Fraction(out[1].coeffs[0])
    return ratio / const, const


def branch_analysis() -> BranchReport:
    from .triinv import find_alignments, is_alignment
    from .hexagram import Hexad

    rep = BranchReport()
    t = _T
    fam124 = factor_family({1, 2, 4})
    vs = VARIABLES
    d_, e_, f_ = (MultiPoly.var(x, vs) for x in "def")
    reduced_L1 = d_ * (1 - e_ + 2 * f_) - f_ * (1 + e_)
    rep.checks["L1 normal form"] = is_proportional(_normalized(L1), reduced_L1)

    # L1' branch
    L1p = _normalized(fam124["L1"])
    rep.checks["L1' normal form"] = is_proportional(L1p, d_ + e_ - f_ - d_ * e_ * f_)
    sol = _rf({"a": 1, "b": 0, "c": -1, "d": t, "e": 2 * t * t / (1 + t * t),
               "f": t * (t + 1) / (2 * t * t - t + 1)})
    rep.checks["L1' solution satisfies L1"] = restrict(L1, sol).is_zero()
    rep.checks["L1' solution satisfies L1'"] = restrict(fam124["L1"], sol).is_zero()
    hexad_of = lambda s, tv: Hexad([P1Point(s[x](tv) if isinstance(s[x], UniRatFunc) else s[x])
                                    for x in "abcdef"])
    ok = True
    for tv in (Fraction(2), Fraction(7), Fraction(-5, 3)):
        A, B, C, D, E, F = (1, 0, tv, -1, sol["f"](tv), sol["e"](tv))
        ok = ok and is_alignment(Hexad([P1Point(x) for x in (A, B, C, D, E, F)]))
    rep.checks["L1' displayed hexad is an alignment"] = ok
    ok = True
    for tv in (Fraction(7), Fraction(3, 11)):
        ok = ok and bool(find_alignments(hexad_of(sol, tv)))
    rep.checks["L1' sextuples are tri-involutive"] = ok

    # L2' branch
    L2p = _normalized(fam124["L2"])
    rep.checks["L2' normal form"] = is_proportional(
        L2p, d_ - d_ * e_ - d_ * f_ + 2 * e_ * f_ - d_ * e_ * f_)
    sol2 = _rf({"a": 1, "b": 0, "c": -1, "d": t / (2 + t), "e": (t - 1) / (t + 3), "f": t})
    rep.checks["L2' solution satisfies L1"] = restrict(L1, sol2).is_zero()
    rep.checks["L2' solution satisfies L2'"] = restrict(fam124["L2"], sol2).is_zero()
    cs = restrict(cs_polynomial({1, 2, 5}), sol2)
    rep.cs125_restriction = cs
    expected = (t - 3) * (3 * t - 1) * (3 * t + 1) * (t * t + 1) ** 2 / ((t + 2) ** 10 * (t + 3) ** 11)
    ratio = cs / expected
    exact = ratio.is_constant() and not ratio.is_zero()
    rep.checks["CS_125 restriction proportional to displayed"] = exact
    if exact:
        rep.cs125_constant = ratio.num.coeffs[0]
    diffs = [restrict(MultiPoly.var(x, vs) - MultiPoly.var(y, vs), sol2)
             for x, y in combinations(vs, 2)]
    extraneous, const = _split_difference_part(ratio, diffs)
    rep.cs125_extraneous = extraneous
    rep.checks["CS_125 restriction agrees up to variable differences"] = const is not None
    if const is not None and rep.cs125_constant is None:
        rep.cs125_constant = const
    ok = True
    for tv in (Fraction(3), Fraction(1, 3), Fraction(-1, 3)):
        ok = ok and bool(find_alignments(hexad_of(sol2, tv)))
    for tv in (I, -I):
        vals = {k: (v(tv) if isinstance(v, UniRatFunc) else v) for k, v in sol2.items()}
        ok = ok and bool(find_alignments(Hexad([P1Point(vals[x]) for x in "abcdef"])))
    rep.checks["L2' special t give tri-involutive sextuples"] = ok
    h13 = Hexad([P1Point(x) for x in (1, Fraction(1, 7), Fraction(-1, 5), 0, Fraction(1, 3), -1)])
    rep.checks["t=1/3 displayed hexad is an alignment"] = is_alignment(h13)
    rep.checks["t=2 is not tri-involutive"] = (cs(Fraction(2)) != 0
                                              and not find_alignments(hexad_of(sol2, Fraction(2))))
    return rep
