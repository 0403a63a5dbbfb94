"""Tri-involutive sextuples: the standard family, alignments, the alignment
group, tri-involutive extensions of four points, and Chasles centres."""

from __future__ import annotations

import cmath
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations

from .algebra import UniPoly, UniRatFunc
from .covariants import SPECIAL_P, is_tri_involutive_covariant, theta54_numeric
from .exotic import LETTERS, LetterPerm
from .hexagram import Hexad
from .plane import (
    INFINITY,
    P1Point,
    PlaneElement,
    Triangle,
    apply_flt,
    chasles_center,
    collinear,
    conic_point,
    cross_ratio,
    flt_to_standard,
    incident,
    invert_matrix,
    join_or_meet,
)

__all__ = [
    "DegenerateParameter",
    "SeedDegenerate",
    "ExtensionCollision",
    "Sextuple",
    "Extension",
    "ExtensionSet",
    "CenterProfile",
    "psi",
    "psi_hexad",
    "is_alignment",
    "find_alignments",
    "alignment_group",
    "rl_generators",
    "linear_extensions_formula",
    "extensions",
    "chasles_converse",
    "involution_centers",
    "special_center_profile",
    "GENERIC",
]

GENERIC = "generic"


class DegenerateParameter(ValueError):
    pass


class SeedDegenerate(ValueError):
    pass


class ExtensionCollision(ValueError):
    pass


class Sextuple:
    """Six distinct points; equality ignores order, iteration keeps it."""

    __slots__ = ("points",)

    def __init__(self, points):
        pts = tuple(p if isinstance(p, P1Point) else P1Point(p) for p in points)
        if len(pts) != 6:
            raise ValueError("a sextuple has six points")
        if len(set(pts)) != 6:
            raise ValueError("sextuple points must be distinct")
        object.__setattr__(self, "points", pts)

    def __setattr__(self, name, value):
        raise AttributeError("Sextuple is immutable")

    def __iter__(self):
        return iter(self.points)

    def __len__(self):
        return 6

    def __contains__(self, z):
        return z in self.points

    def __eq__(self, other):
        return isinstance(other, Sextuple) and frozenset(self.points) == frozenset(other.points)

    def __hash__(self):
        return hash(frozenset(self.points))

    def as_hexad(self) -> Hexad:
        return Hexad(self.points)

    def __repr__(self):
        return "Sextuple({" + ", ".join(map(str, self.points)) + "})"


def _check_parameter(p):
    if isinstance(p, P1Point):
        if p.is_infinite:
            raise DegenerateParameter("p = infinity")
        p = p.value
    if isinstance(p, int):
        p = Fraction(p)
    if p == 0 or p == 1 or p * p - p + 1 == 0:
        raise DegenerateParameter(f"p = {p} makes the standard points collide")
    return p


def psi_hexad(p) -> Hexad:
    """The standard alignment A=0, B=1, C=inf, D=p, E=(p-1)/p, F=1/(1-p)."""
    p = _check_parameter(p)
    return Hexad([P1Point(0), P1Point(1), INFINITY, P1Point(p), P1Point((p - 1) / p),
                  P1Point(1 / (1 - p))])


def psi(p) -> Sextuple:
    return Sextuple(psi_hexad(p).points)


def _eq1(A, B, C, D, E, F) -> bool:
    k = cross_ratio(C, A, B, D)
    return cross_ratio(A, B, C, F) == k and cross_ratio(B, C, A, E) == k


def is_alignment(h: Hexad) -> bool:
    return _eq1(*h.points)


def find_alignments(s) -> list[Hexad]:
    """Every hexad onto the sextuple satisfying the alignment equations."""
    pts = tuple(s)
    if len(set(pts)) != 6:
        raise ValueError("need six distinct points")
    out = []
    for perm in permutations(pts):
        if _eq1(*perm):
            out.append(Hexad(perm, check=False))
    return out


def alignment_group(p) -> set:
    """Letter permutations eta with h o eta an alignment, h the standard one."""
    if isinstance(p, str):
        if p != GENERIC:
            raise DegenerateParameter(f"unknown symbolic parameter {p!r}")
        p = UniRatFunc.variable("p")
    h = psi_hexad(p)
    out = set()
    for images in permutations(LETTERS):
        eta = LetterPerm(images)
        if is_alignment(h.compose(eta)):
            out.add(eta)
    return out


def rl_generators() -> list[LetterPerm]:
    """The six products (x x')(y y')(z z') pairing ABC with DEF."""
    return [LetterPerm.from_cycles(list(zip("ABC", img))) for img in permutations("DEF")]


# -- extensions of four points --------------------------------------------

@dataclass(frozen=True)
class Extension:
    """A tri-involutive sextuple containing the seed.

    ``points`` are exact P1Points for the linear branch and homogeneous
    complex pairs for the quadratic branch.
    """

    points: tuple
    exact: bool
    assignment: str

    def new_points(self):
        return self.points[4:]

    def complex_points(self):
        if self.exact:
            return tuple(_to_complex(p) for p in self.points)
        return self.points


@dataclass
class ExtensionSet:
    seed: tuple
    r: object
    members: list = field(default_factory=list)
    collisions: list = field(default_factory=list)

    @property
    def exact_members(self):
        return [m for m in self.members if m.exact]

    @property
    def numeric_members(self):
        return [m for m in self.members if not m.exact]

    def __len__(self):
        return len(self.members)


def _to_complex(z: P1Point):
    return complex(z.u), complex(z.v)


def _solve_fourth(x, y, z, k):
    """The point w with <x,y,z,w> = k, exactly."""
    # w -> <x,y,z,w> sends y, z, x to 0, 1, infinity
    m = flt_to_standard(y, z, x)
    return apply_flt(invert_matrix(m), k if isinstance(k, P1Point) else P1Point(k))


_LINEAR_CASES = ("dabc", "adbc", "abdc", "abcd")
_QUADRATIC_CASES = ("abef", "abfe", "aebf", "afbe", "aefb", "afeb")


def _linear_branch(z):
    out = []
    for case in _LINEAR_CASES:
        v = dict(zip(case, z))
        k = cross_ratio(v["c"], v["a"], v["b"], v["d"])
        v["f"] = _solve_fourth(v["a"], v["b"], v["c"], k)
        v["e"] = _solve_fourth(v["b"], v["c"], v["a"], k)
        out.append((case, (v["e"], v["f"])))
    return out


def linear_extensions_formula(r) -> list[tuple]:
    """Closed-form new point pairs for the seed (0, 1, inf, r)."""
    q = r * r - r + 1
    return [(q / r, q), (r * r / (r - 1), r - r * r), (r / q, r * r / q), (1 / (1 - r), (r - 1) / r)]


def _d(x, y):
    return x[0] * y[1] - y[0] * x[1]


def _quadratic_branch(z):
    """For each reduced assignment, both roots c of the quadratic and the
    forced d, as homogeneous complex pairs."""
    out = []
    X = UniPoly.variable("c")
    for case in _QUADRATIC_CASES:
        known = {name: (pt.u, pt.v) for name, pt in zip(case, z)}
        c = (X, UniPoly.constant(1, "c"))
        a, b, e, f = known["a"], known["b"], known["e"], known["f"]
        # <a,b,c,f> = <b,c,a,e>, cross-multiplied
        lhs = _d(a, c) * _d(b, f) * _d(b, e) * _d(c, a)
        rhs = _d(b, a) * _d(c, e) * _d(a, f) * _d(b, c)
        quad = lhs - rhs
        if quad.degree != 2:
            raise ExtensionCollision(f"assignment [{','.join(case)}] does not give a quadratic")
        c0, c1, c2 = (complex(x) for x in quad.coeffs)
        disc = cmath.sqrt(c1 * c1 - 4 * c2 * c0)
        for sign in (1, -1):
            root = (-c1 + sign * disc) / (2 * c2)
            cc = (root, 1 + 0j)
            an = tuple(complex(x) for x in a)
            bn = tuple(complex(x) for x in b)
            fn = tuple(complex(x) for x in f)
            # k = <a,b,c,f>; d solves <c,a,b,d> = k
            knum, kden = _d(an, cc) * _d(bn, fn), _d(an, fn) * _d(bn, cc)
            # <c,a,b,d> = d(c,b) d(a,d) / (d(c,d) d(a,b)); linear in d
            # kden * d(c,b) * d(a,d) = knum * d(c,d) * d(a,b)
            cb, ab = _d(cc, bn), _d(an, bn)
            # d = (x, y): d(a,d) = a0 y - x a1, d(c,d) = c0 y - x c1
            coef_x = -kden * cb * an[1] + knum * ab * cc[1]
            coef_y = kden * cb * an[0] - knum * ab * cc[0]
            dpt = (coef_y, -coef_x)
            out.append((case + ("+" if sign > 0 else "-"), (cc, dpt)))
    return out


def _normalize_pair(pt):
    u, v = pt
    if abs(v) >= abs(u):
        return (u / v, 1 + 0j)
    return (1 + 0j, v / u)


def _chordal(p, q) -> float:
    (u1, v1), (u2, v2) = p, q
    num = abs(u1 * v2 - u2 * v1)
    return num / ((abs(u1) ** 2 + abs(v1) ** 2) ** 0.5 * (abs(u2) ** 2 + abs(v2) ** 2) ** 0.5)


def _same_pointset(P, Q, tol) -> bool:
    used = set()
    for p in P:
        for j, q in enumerate(Q):
            if j not in used and _chordal(p, q) <= tol:
                used.add(j)
                break
        else:
            return False
    return True


def extensions(seed, tolerance: float = 1e-9, strict: bool = True) -> ExtensionSet:
    """All 16 tri-involutive sextuples containing four general points.

    With ``strict`` a coincidence raises ExtensionCollision; otherwise
    duplicates are dropped and listed in ``collisions``.
    """
    seed = tuple(z if isinstance(z, P1Point) else P1Point(z) for z in seed)
    if len(seed) != 4 or len(set(seed)) != 4:
        raise SeedDegenerate("seed must be four distinct points")
    M = flt_to_standard(seed[0], seed[1], seed[2])
    r_pt = apply_flt(M, seed[3])
    r = r_pt.value
    Minv = invert_matrix(M)
    z = (P1Point(0), P1Point(1), INFINITY, r_pt)
    result = ExtensionSet(seed=seed, r=r)

    linear = _linear_branch(z)
    formula = {frozenset(P1Point(x) for x in pair) for pair in linear_extensions_formula(r)}
    solved = {frozenset(pair) for _, pair in linear}
    if solved != formula:
        raise AssertionError("linear-branch solutions disagree with the closed formulas")
    for case, pair in linear:
        pts = seed + tuple(apply_flt(Minv, w) for w in pair)
        result.members.append(Extension(pts, True, case))

    mi = tuple(tuple(complex(x) for x in row) for row in Minv)
    seed_c = tuple(_to_complex(s) for s in seed)
    for case, pair in _quadratic_branch(z):
        mapped = []
        for u, v in pair:
            mapped.append(_normalize_pair((mi[0][0] * u + mi[0][1] * v, mi[1][0] * u + mi[1][1] * v)))
        result.members.append(Extension(seed_c + tuple(mapped), False, case))

    allpts = [m.complex_points() for m in result.members]
    kept = []
    for i, P in enumerate(allpts):
        for a, b in combinations(P, 2):
            if _chordal(a, b) <= tolerance:
                result.collisions.append(f"[{result.members[i].assignment}] has coincident points")
                break
        else:
            dup = next((j for j in kept if _same_pointset(P, allpts[j], tolerance)), None)
            if dup is None:
                kept.append(i)
            else:
                result.collisions.append(
                    f"[{result.members[i].assignment}] repeats [{result.members[dup].assignment}]")
    if strict and (result.collisions or len(kept) != 16):
        raise ExtensionCollision("; ".join(result.collisions) or f"found {len(kept)} extensions")
    result.members = [result.members[i] for i in kept]
    return result


def extension_is_tri_involutive(ext: Extension, tolerance: float = 1e-9) -> bool:
    if ext.exact:
        return is_tri_involutive_covariant(ext.points)
    return theta54_numeric(ext.points) <= tolerance


# -- Chasles centres ------------------------------------------------------

def chasles_converse(u) -> Sextuple:
    """Second triangle {u, v, w} with the same Chasles centre as {0, 1, inf}."""
    u = _check_parameter(u)
    alpha = (u * u - 3 * u + 1) / (u * (u - 1))
    beta = -1 / u
    system = (beta * beta - alpha * beta - alpha + 3 * beta + 1,
              u * alpha - u - alpha + beta + 3,
              u * beta + 1)
    if any(x != 0 for x in system):
        raise AssertionError("closed-form alpha, beta do not solve the system")
    v, w = (u - 1) / u, 1 / (1 - u)
    if v + w != alpha or v * w != beta:
        raise AssertionError("{v, w} are not the roots of X^2 - alpha X + beta")
    s = Sextuple([P1Point(0), P1Point(1), INFINITY, P1Point(u), P1Point(v), P1Point(w)])
    t1 = chasles_center(Triangle(P1Point(0), P1Point(1), INFINITY))
    t2 = chasles_center(Triangle(P1Point(u), P1Point(v), P1Point(w)))
    if t1 != t2:
        raise AssertionError("Chasles centres of the two triangles differ")
    return s


def involution_centers(h: Hexad) -> list[tuple[PlaneElement, tuple]]:
    """Points through which three chords of the sextuple pass, with the chord matching."""
    P = {x: conic_point(h[x]) for x in LETTERS}
    out = []
    for match in _perfect_matchings(LETTERS):
        chords = [join_or_meet(P[x], P[y]) for x, y in match]
        if collinear(*chords):
            c = join_or_meet(chords[0], chords[1])
            out.append((PlaneElement(c.form, "point"), match))
    return out


def _perfect_matchings(items):
    items = list(items)
    if not items:
        yield ()
        return
    first = items[0]
    for i in range(1, len(items)):
        rest = items[1:i] + items[i + 1:]
        for m in _perfect_matchings(rest):
            yield ((first, items[i]),) + m


_T_PAIRS = (("ABC", "DEF"), ("ADF", "BCE"), ("ACD", "BEF"), ("ABF", "CDE"))
_KLEIN = {"(A E)": "(T1 T2)(T3 T4)", "(C F)": "(T1 T4)(T2 T3)"}


@dataclass
class CenterProfile:
    p: object
    pairs: list
    centers: dict
    pairs_equal: dict
    distinct_centers: int
    incidences: int
    per_line: dict
    klein_action: dict | None
    klein_ok: bool

    @property
    def ok(self) -> bool:
        return (len(self.pairs) == 4 and all(self.pairs_equal.values())
                and all(n == 3 for n in self.per_line.values()) and self.klein_ok
                and len(set(self.centers.values())) == 4)


def _pair_index(pairs, pair):
    key = frozenset(frozenset(t) for t in pair)
    for i, (s, t) in enumerate(pairs):
        if key == frozenset((frozenset(s), frozenset(t))):
            return i
    return None


def _equal_center_pairs(h: Hexad) -> list[tuple[str, str]]:
    """Splittings into two triangles with a common Chasles centre."""
    out = []
    for t in combinations(LETTERS, 3):
        if "A" not in t:
            continue
        u = tuple(x for x in LETTERS if x not in t)
        c1 = chasles_center(Triangle(*(h[x] for x in t)))
        if c1 == chasles_center(Triangle(*(h[x] for x in u))):
            out.append(("".join(t), "".join(u)))
    return out


def special_center_profile(p) -> CenterProfile:
    """Chasles centres T1..T4 and the centres of involution at a special p."""
    if isinstance(p, int):
        p = Fraction(p)
    if not any(p == s for s in SPECIAL_P):
        raise DegenerateParameter(f"{p} is not one of the six special parameters")
    h = psi_hexad(p)
    at_i = p * p == -1
    pairs = list(_T_PAIRS) if at_i else _equal_center_pairs(h)
    tau = {}
    equal = {}
    for i, (s, t) in enumerate(pairs):
        c1 = chasles_center(Triangle(*(h[x] for x in s)))
        c2 = chasles_center(Triangle(*(h[x] for x in t)))
        equal[f"T{i + 1}"] = c1 == c2
        tau[f"T{i + 1}"] = c1
    centers = involution_centers(h)
    distinct = len({c for c, _ in centers})
    per_line = {}
    for name, T in tau.items():
        polar = PlaneElement(T.form, "line")
        per_line[name] = sum(1 for c, _ in centers if incident(c, polar))
    action = None
    ok = True
    if at_i:
        action = {}
        for gen, expected in _KLEIN.items():
            eta = LetterPerm.from_cycles(gen)
            images = {}
            for i, (s, t) in enumerate(pairs):
                moved = ("".join(eta(x) for x in s), "".join(eta(x) for x in t))
                j = _pair_index(pairs, moved)
                if j is None:
                    ok = False
                    continue
                images[i + 1] = j + 1
                # the relabelled triangle really has centre T_j
                if chasles_center(Triangle(*(h[x] for x in moved[0]))) != tau[f"T{j + 1}"]:
                    ok = False
            perm = _cycles_of(images)
            action[gen] = perm
            ok = ok and perm == expected
    return CenterProfile(p, pairs, tau, equal, distinct, sum(per_line.values()), per_line, action, ok)


def _cycles_of(images: dict) -> str:
    seen, parts = set(), []
    for k in sorted(images):
        if k in seen or images[k] == k:
            continue
        cyc, x = [], k
        while x not in seen:
            seen.add(x)
            cyc.append(f"T{x}")
            x = images[x]
        parts.append("(" + " ".join(cyc) + ")")
    return "".join(parts) or "()"
