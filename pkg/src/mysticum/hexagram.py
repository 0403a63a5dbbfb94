"""The hexagrammum mysticum of a hexad: Pascal lines k(x,yz), Steiner points
G[xyz], Kirkman points K[w,xyz] and Cayley-Salmon lines g(xyz).

Labels follow the usual schema: k(1,23) is the Pascal of the array
[A B C / F E D], and every other label is obtained by transport along the
exotic isomorphism, k(s(1), s(2)s(3)) = k(1,23) of the hexad h o zeta^-1(s).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Mapping

from .exotic import INDICES, LETTERS, IndexPerm, LetterPerm, zeta_inv
from .forms import reduce_form
from .plane import (
    DegenerateJoin,
    P1Point,
    PlaneElement,
    TheoremViolation,
    conic_point,
    incident,
    is_conjugate,
    join_or_meet,
)

__all__ = [
    "Hexad",
    "PascalLabel",
    "Hexagram",
    "ConfigurationReport",
    "DegeneratePascal",
    "DegenerateSteiner",
    "DegenerateKirkman",
    "pascal",
    "steiner",
    "kirkman",
    "cayley_salmon",
    "audit",
    "csc_table",
    "PASCAL_LABELS",
    "TRIPLES",
    "complement",
]


class DegeneratePascal(ValueError):
    pass


class DegenerateSteiner(ValueError):
    pass


class DegenerateKirkman(ValueError):
    pass


TRIPLES: tuple[frozenset, ...] = tuple(frozenset(c) for c in combinations(INDICES, 3))


def complement(triple) -> frozenset:
    return frozenset(INDICES) - frozenset(triple)


def triple_name(triple) -> str:
    return "".join(str(i) for i in sorted(triple))


@dataclass(frozen=True)
class PascalLabel:
    """k(x, yz); the pair is unordered."""

    x: int
    pair: frozenset

    def __init__(self, x: int, y: int, z: int | None = None):
        pair = frozenset((y, z)) if z is not None else frozenset(y)
        if len(pair) != 2 or x in pair or not {x, *pair} <= set(INDICES):
            raise ValueError(f"invalid Pascal label k({x},{sorted(pair)})")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "pair", pair)

    def admissible_sigmas(self) -> list[IndexPerm]:
        """All index permutations s with s(1) = x and s{2,3} = {y,z}."""
        y, z = sorted(self.pair)
        rest = [i for i in INDICES if i not in (self.x, y, z)]
        out = []
        for yz in ((y, z), (z, y)):
            for r in permutations(rest):
                out.append(IndexPerm((self.x, *yz, *r)))
        return out

    def standard_sigma(self) -> IndexPerm:
        y, z = sorted(self.pair)
        rest = [i for i in INDICES if i not in (self.x, y, z)]
        return IndexPerm((self.x, y, z, *rest))

    def __str__(self):
        y, z = sorted(self.pair)
        return f"k({self.x},{y}{z})"


PASCAL_LABELS: tuple[PascalLabel, ...] = tuple(
    PascalLabel(x, y, z) for x in INDICES
    for y, z in combinations([i for i in INDICES if i != x], 2))


class Hexad:
    """Injective map from the letters A..F to points of the conic."""

    __slots__ = ("points",)

    def __init__(self, points: Mapping[str, P1Point] | tuple, check: bool = True):
        if not isinstance(points, Mapping):
            points = dict(zip(LETTERS, points))
        pts = tuple(p if isinstance(p, P1Point) else P1Point(p) for p in
                    (points[x] for x in LETTERS))
        if check and len(set(pts)) != 6:
            raise ValueError("hexad points must be distinct")
        object.__setattr__(self, "points", pts)

    def __setattr__(self, name, value):
        raise AttributeError("Hexad is immutable")

    def __getitem__(self, letter: str) -> P1Point:
        return self.points[LETTERS.index(letter)]

    def compose(self, eta: LetterPerm) -> "Hexad":
        """The hexad h o eta, i.e. letter X goes to h(eta(X))."""
        out = object.__new__(Hexad)
        object.__setattr__(out, "points", tuple(self[eta(x)] for x in LETTERS))
        return out

    def __eq__(self, other):
        return isinstance(other, Hexad) and self.points == other.points

    def __hash__(self):
        return hash(self.points)

    def __iter__(self):
        return iter(self.points)

    def __repr__(self):
        return "Hexad(" + ", ".join(f"{x}={p}" for x, p in zip(LETTERS, self.points)) + ")"


def _meet_of_pair(elements, error):
    """Meet/join of the first two distinct elements, asserting the rest pass."""
    n = len(elements)
    for i, j in combinations(range(n), 2):
        try:
            res = join_or_meet(elements[i], elements[j])
        except DegenerateJoin:
            continue
        return PlaneElement(reduce_form(res.form), res.role), (i, j)
    raise error("all elements coincide")


def base_pascal(h: Hexad, check: bool = True) -> PlaneElement:
    """Pascal line of the array [A B C / F E D]."""
    P = {x: conic_point(h[x]) for x in LETTERS}
    chord = {}

    def line(x, y):
        key = frozenset((x, y))
        if key not in chord:
            res = join_or_meet(P[x], P[y])
            chord[key] = PlaneElement(reduce_form(res.form), "line")
        return chord[key]

    cross = []
    for (p, q), (r, s) in ((("A", "E"), ("B", "F")),
                           (("A", "D"), ("C", "F")),
                           (("B", "D"), ("C", "E"))):
        m = join_or_meet(line(p, q), line(r, s))
        cross.append(PlaneElement(reduce_form(m.form), "point"))
    k, used = _meet_of_pair(cross, DegeneratePascal)
    if check:
        for i in range(3):
            if i not in used and not incident(cross[i], k):
                raise TheoremViolation("Pascal: cross-hair points are not collinear")
    return PlaneElement(k.form, "line")


class Hexagram:
    """Lazily computed configuration of one hexad."""

    def __init__(self, hexad: Hexad, check: bool = True):
        self.hexad = hexad
        self.check = check
        self._pascal: dict = {}
        self._steiner: dict = {}
        self._kirkman: dict = {}
        self._cs: dict = {}

    def pascal(self, label: PascalLabel, sigma: IndexPerm | None = None) -> PlaneElement:
        if sigma is not None:
            if sigma(1) != label.x or {sigma(2), sigma(3)} != set(label.pair):
                raise ValueError(f"{sigma} does not carry k(1,23) to {label}")
            return base_pascal(self.hexad.compose(zeta_inv(sigma)), self.check)
        if label not in self._pascal:
            eta = zeta_inv(label.standard_sigma())
            self._pascal[label] = base_pascal(self.hexad.compose(eta), self.check)
        return self._pascal[label]

    def steiner(self, triple) -> PlaneElement:
        triple = frozenset(triple)
        if triple not in self._steiner:
            x, y, z = sorted(triple)
            lines = [self.pascal(PascalLabel(x, y, z)), self.pascal(PascalLabel(y, x, z)),
                     self.pascal(PascalLabel(z, x, y))]
            pt, used = _meet_of_pair(lines, DegenerateSteiner)
            if self.check:
                for i in range(3):
                    if i not in used and not incident(pt, lines[i]):
                        raise TheoremViolation(f"Steiner: Pascals of G[{triple_name(triple)}] not concurrent")
            self._steiner[triple] = PlaneElement(pt.form, "point")
        return self._steiner[triple]

    def kirkman(self, w: int, triple) -> PlaneElement:
        triple = frozenset(triple)
        if w in triple:
            raise ValueError("Kirkman index must lie outside the triple")
        key = (w, triple)
        if key not in self._kirkman:
            x, y, z = sorted(triple)
            lines = [self.pascal(PascalLabel(w, x, y)), self.pascal(PascalLabel(w, x, z)),
                     self.pascal(PascalLabel(w, y, z))]
            pt, used = _meet_of_pair(lines, DegenerateKirkman)
            if self.check:
                for i in range(3):
                    if i not in used and not incident(pt, lines[i]):
                        raise TheoremViolation(f"Kirkman: Pascals of K[{w},{triple_name(triple)}] not concurrent")
            self._kirkman[key] = PlaneElement(pt.form, "point")
        return self._kirkman[key]

    def cayley_salmon(self, triple) -> PlaneElement | None:
        """g(xyz), or None when its three Kirkman points coincide."""
        triple = frozenset(triple)
        if triple not in self._cs:
            pts = [self.kirkman(w, triple) for w in sorted(complement(triple))]
            try:
                g, used = _meet_of_pair(pts, ValueError)
            except ValueError:
                self._cs[triple] = None
                return None
            g = PlaneElement(g.form, "line")
            if self.check:
                for i in range(3):
                    if i not in used and not incident(pts[i], g):
                        raise TheoremViolation(f"Cayley-Salmon: Kirkman points of g({triple_name(triple)}) not collinear")
                try:
                    G = self.steiner(triple)
                except DegenerateSteiner:
                    G = None
                if G is not None and not incident(G, g):
                    raise TheoremViolation(f"g({triple_name(triple)}) misses its Steiner point")
            self._cs[triple] = g
        return self._cs[triple]


def pascal(h: Hexad, label: PascalLabel, sigma: IndexPerm | None = None) -> PlaneElement:
    return Hexagram(h).pascal(label, sigma)


def steiner(h: Hexad, triple) -> PlaneElement:
    return Hexagram(h).steiner(triple)


def kirkman(h: Hexad, w: int, triple) -> PlaneElement:
    return Hexagram(h).kirkman(w, triple)


def cayley_salmon(h: Hexad, triple) -> PlaneElement | None:
    return Hexagram(h).cayley_salmon(triple)


# -- auditing ---------------------------------------------------------------

@dataclass
class IncidenceTally:
    points: int
    lines: int
    lines_per_point: dict
    points_per_line: dict
    predicted: int
    actual: int
    extra: list = field(default_factory=list)
    missing: list = field(default_factory=list)

    @property
    def profile(self) -> str:
        def part(n, counter):
            if len(counter) == 1:
                return f"{n}_{next(iter(counter))}"
            return f"{n}_{{{','.join(f'{k}:{v}' for k, v in sorted(counter.items()))}}}"
        return f"({part(self.points, self.lines_per_point)},{part(self.lines, self.points_per_line)})"


@dataclass
class ConfigurationReport:
    distinct: dict
    undefined_g: list
    degenerate: list
    incidences: dict
    von_staudt: dict
    csc: dict
    g_classes: list

    @property
    def csc_holds(self) -> bool:
        return all(v != "not-conjugate" for v in self.csc.values())

    @property
    def csc_checked(self) -> int:
        return sum(v != "skipped-undefined" for v in self.csc.values())

    @property
    def csc_skipped(self) -> list:
        return [k for k, v in self.csc.items() if v == "skipped-undefined"]

    @property
    def distinct_g_lines(self) -> int:
        return len(self.g_classes)

    def tallies_consistent(self) -> bool:
        for t in self.incidences.values():
            a = sum(k * v for k, v in t.lines_per_point.items())
            b = sum(k * v for k, v in t.points_per_line.items())
            if a != b:
                return False
        return True


def _classes(items):
    """Group labelled plane elements into projective classes."""
    buckets: dict = {}
    for label, el in items:
        buckets.setdefault(el, []).append(label)
    return buckets


def _tally(point_items, line_items, predicted_pairs) -> IncidenceTally:
    pclasses = _classes(point_items)
    lclasses = _classes(line_items)
    per_point = Counter()
    per_line = Counter()
    line_hits = Counter()
    for p in pclasses:
        hits = 0
        for idx, l in enumerate(lclasses):
            if incident(p, l):
                hits += 1
                line_hits[idx] += 1
        per_point[hits] += 1
    for idx in range(len(lclasses)):
        per_line[line_hits[idx]] += 1
    actual = set()
    for pl, p in point_items:
        for ll, l in line_items:
            if incident(p, l):
                actual.add((pl, ll))
    predicted = set(predicted_pairs)
    return IncidenceTally(
        points=len(pclasses), lines=len(lclasses),
        lines_per_point=dict(per_point), points_per_line=dict(per_line),
        predicted=len(predicted), actual=len(actual),
        extra=sorted(map(str, actual - predicted)),
        missing=sorted(map(str, predicted - actual)),
    )


def audit(h: Hexad) -> ConfigurationReport:
    hx = Hexagram(h)
    degenerate = []

    def attempt(name, fn):
        try:
            return fn()
        except (DegeneratePascal, DegenerateSteiner, DegenerateKirkman) as exc:
            degenerate.append(f"{name}: {exc}")
            return None

    ks = [(str(lab), attempt(str(lab), lambda lab=lab: hx.pascal(lab))) for lab in PASCAL_LABELS]
    Gs = [(f"G[{triple_name(t)}]", attempt(f"G[{triple_name(t)}]", lambda t=t: hx.steiner(t)))
          for t in TRIPLES]
    Ks = [(f"K[{w},{triple_name(t)}]", attempt(f"K[{w},{triple_name(t)}]", lambda w=w, t=t: hx.kirkman(w, t)))
          for t in TRIPLES for w in sorted(complement(t))]
    gs = []
    undefined = []
    for t in TRIPLES:
        name = f"g({triple_name(t)})"
        try:
            g = hx.cayley_salmon(t)
        except (DegeneratePascal, DegenerateSteiner, DegenerateKirkman) as exc:
            degenerate.append(f"{name}: {exc}")
            g = None
        if g is None:
            undefined.append(triple_name(t))
        gs.append((name, g))
    ks = [(a, b) for a, b in ks if b is not None]
    Gs = [(a, b) for a, b in Gs if b is not None]
    Ks = [(a, b) for a, b in Ks if b is not None]
    gdef = [(a, b) for a, b in gs if b is not None]

    pred_Kg, pred_Kk, pred_Gk, pred_Gg = [], [], [], []
    for t in TRIPLES:
        tn = triple_name(t)
        x, y, z = sorted(t)
        pred_Gg.append((f"G[{tn}]", f"g({tn})"))
        for lab in (PascalLabel(x, y, z), PascalLabel(y, x, z), PascalLabel(z, x, y)):
            pred_Gk.append((f"G[{tn}]", str(lab)))
        for w in sorted(complement(t)):
            pred_Kg.append((f"K[{w},{tn}]", f"g({tn})"))
            for a, b in combinations((x, y, z), 2):
                pred_Kk.append((f"K[{w},{tn}]", str(PascalLabel(w, a, b))))

    defined = {lab for lab, _ in ks + Gs + Ks + gdef}

    def keep(pairs):
        return [p for p in pairs if p[0] in defined and p[1] in defined]

    incidences = {
        "K-g": _tally(Ks, gdef, keep(pred_Kg)),
        "K-k": _tally(Ks, ks, keep(pred_Kk)),
        "G-k": _tally(Gs, ks, keep(pred_Gk)),
        "G-g": _tally(Gs, gdef, keep(pred_Gg)),
    }
    G = dict(Gs)
    g = dict(gs)
    von_staudt = {}
    csc = {}
    for t in TRIPLES:
        if 1 not in t:
            continue
        c = complement(t)
        key = f"{triple_name(t)}|{triple_name(c)}"
        a, b = G.get(f"G[{triple_name(t)}]"), G.get(f"G[{triple_name(c)}]")
        von_staudt[key] = None if a is None or b is None else is_conjugate(a, b)
        ga, gb = g[f"g({triple_name(t)})"], g[f"g({triple_name(c)})"]
        if ga is None or gb is None:
            csc[key] = "skipped-undefined"
        else:
            csc[key] = "conjugate" if is_conjugate(ga, gb) else "not-conjugate"
    g_classes = [sorted(labels) for labels in _classes(gdef).values()]
    return ConfigurationReport(
        distinct={
            "pascal": len(_classes(ks)),
            "steiner": len(_classes(Gs)),
            "kirkman": len(_classes(Ks)),
            "cayley_salmon": len(g_classes),
        },
        undefined_g=undefined,
        degenerate=degenerate,
        incidences=incidences,
        von_staudt=von_staudt,
        csc=csc,
        g_classes=sorted(g_classes),
    )


def csc_table(h: Hexad) -> dict:
    """CSC verdicts for the ten complementary pairs, without the incidence audit."""
    hx = Hexagram(h)
    out = {}
    for t in TRIPLES:
        if 1 not in t:
            continue
        c = complement(t)
        try:
            ga, gb = hx.cayley_salmon(t), hx.cayley_salmon(c)
        except (DegeneratePascal, DegenerateSteiner, DegenerateKirkman):
            ga = gb = None
        key = f"{triple_name(t)}|{triple_name(c)}"
        if ga is None or gb is None:
            out[key] = "skipped-undefined"
        else:
            out[key] = "conjugate" if is_conjugate(ga, gb) else "not-conjugate"
    return out
