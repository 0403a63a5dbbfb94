"""Permutations of six objects and the exotic isomorphism between the letter
group Sym{A..F} and the index group Sym{1..6}.

Permutations compose as functions: ``(s * t)(x) == s(t(x))``.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterable

__all__ = [
    "Perm",
    "LetterPerm",
    "IndexPerm",
    "LETTERS",
    "INDICES",
    "ZETA_TABLE",
    "zeta",
    "zeta_inv",
    "group_closure",
    "symmetric_group_generators",
    "verify_zeta",
]

LETTERS = ("A", "B", "C", "D", "E", "F")
INDICES = (1, 2, 3, 4, 5, 6)

# Row/column letters -> the 2+2+2 index permutation, as printed in the classical table.
_TABLE_ROWS = {
    "A": {"B": "14.25.36", "C": "16.24.35", "D": "13.26.45", "E": "12.34.56", "F": "15.23.46"},
    "B": {"C": "15.26.34", "D": "12.35.46", "E": "16.23.45", "F": "13.24.56"},
    "C": {"D": "14.23.56", "E": "13.25.46", "F": "12.36.45"},
    "D": {"E": "15.24.36", "F": "16.25.34"},
    "E": {"F": "14.26.35"},
}


class Perm:
    """A bijection of a fixed six-element ground set."""

    GROUND: tuple = ()
    __slots__ = ("images",)

    def __init__(self, mapping=None):
        ground = self.GROUND
        if mapping is None:
            images = ground
        elif isinstance(mapping, dict):
            images = tuple(mapping.get(x, x) for x in ground)
        else:
            images = tuple(mapping)
        if sorted(images, key=ground.index) != list(ground):
            raise ValueError(f"not a permutation of {ground}: {images}")
        object.__setattr__(self, "images", images)

    def __setattr__(self, name, value):
        raise AttributeError("permutations are immutable")

    @classmethod
    def identity(cls):
        return cls()

    @classmethod
    def from_cycles(cls, cycles) -> "Perm":
        """Build from a cycle string like ``"(A E)(B D)"`` or a list of tuples."""
        if isinstance(cycles, str):
            cycles = _parse_cycles(cycles, cls.GROUND)
        mapping = {}
        for cyc in cycles:
            cyc = tuple(cyc)
            for i, x in enumerate(cyc):
                if x in mapping:
                    raise ValueError(f"{x} appears twice in cycle notation")
                mapping[x] = cyc[(i + 1) % len(cyc)]
        return cls(mapping)

    @classmethod
    def transposition(cls, x, y) -> "Perm":
        return cls({x: y, y: x})

    def __call__(self, x):
        return self.images[_POSITIONS[self.GROUND][x]]

    def as_dict(self) -> dict:
        return dict(zip(self.GROUND, self.images))

    def __mul__(self, other: "Perm") -> "Perm":
        if type(other) is not type(self):
            return NotImplemented
        pos = _POSITIONS[self.GROUND]
        mine = self.images
        out = object.__new__(type(self))
        object.__setattr__(out, "images", tuple(mine[pos[y]] for y in other.images))
        return out

    def inverse(self) -> "Perm":
        inv = {y: x for x, y in zip(self.GROUND, self.images)}
        return type(self)(tuple(inv[x] for x in self.GROUND))

    def __pow__(self, n: int) -> "Perm":
        result = type(self)()
        base = self if n >= 0 else self.inverse()
        for _ in range(abs(n)):
            result = result * base
        return result

    def is_identity(self) -> bool:
        return self.images == self.GROUND

    def cycles(self, include_fixed: bool = False) -> list[tuple]:
        seen = set()
        out = []
        for x in self.GROUND:
            if x in seen:
                continue
            cyc = [x]
            seen.add(x)
            y = self(x)
            while y != x:
                cyc.append(y)
                seen.add(y)
                y = self(y)
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.cycles(include_fixed=True)), reverse=True))

    def transpositions(self) -> list[tuple]:
        """Factorization into transpositions, leftmost applied last."""
        out = []
        for cyc in self.cycles():
            for i in range(len(cyc) - 1):
                out.append((cyc[i], cyc[i + 1]))
        return out

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.images == other.images

    def __hash__(self):
        return hash((type(self).__name__, self.images))

    def __repr__(self):
        return f"{type(self).__name__}({str(self)!r})"

    def __str__(self):
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(str(x) for x in c) + ")" for c in cyc)


_POSITIONS = {g: {x: i for i, x in enumerate(g)} for g in (LETTERS, INDICES)}


class LetterPerm(Perm):
    GROUND = LETTERS
    __slots__ = ()

    def variable_map(self) -> dict[str, str]:
        """Substitution of coordinate variables a..f induced by this permutation."""
        return {x.lower(): self(x).lower() for x in LETTERS}


class IndexPerm(Perm):
    GROUND = INDICES
    __slots__ = ()


def _parse_cycles(text: str, ground: tuple) -> list[tuple]:
    conv = int if isinstance(ground[0], int) else str
    out = []
    for chunk in text.replace(")", "").split("("):
        chunk = chunk.strip()
        if not chunk:
            continue
        tokens = chunk.split() if " " in chunk or "," in chunk else list(chunk)
        tokens = [t.strip(",") for t in tokens if t.strip(",")]
        out.append(tuple(conv(t) for t in tokens))
    return out


def _parse_entry(entry: str) -> IndexPerm:
    return IndexPerm.from_cycles([(int(p[0]), int(p[1])) for p in entry.split(".")])


ZETA_TABLE: dict[frozenset, IndexPerm] = {
    frozenset((r, c)): _parse_entry(entry)
    for r, row in _TABLE_ROWS.items() for c, entry in row.items()
}


def _zeta_by_factoring(sigma: LetterPerm) -> IndexPerm:
    result = IndexPerm()
    for x, y in sigma.transpositions():
        result = result * ZETA_TABLE[frozenset((x, y))]
    return result


@lru_cache(maxsize=1)
def _tables():
    forward = {}
    for images in permutations(LETTERS):
        s = LetterPerm(images)
        forward[s] = _zeta_by_factoring(s)
    backward = {v: k for k, v in forward.items()}
    if len(backward) != 720:
        raise AssertionError("exotic table does not define a bijection")
    # homomorphism on a generating set implies well-definedness everywhere
    for s, zs in forward.items():
        for pair, zt in ZETA_TABLE.items():
            t = LetterPerm.transposition(*sorted(pair))
            if forward[s * t] != zs * zt:
                raise AssertionError("exotic table is not a homomorphism")
    return forward, backward


def zeta(sigma: LetterPerm) -> IndexPerm:
    if not isinstance(sigma, LetterPerm):
        raise TypeError("zeta takes a letter permutation")
    return _tables()[0][sigma]


def zeta_inv(sigma: IndexPerm) -> LetterPerm:
    if not isinstance(sigma, IndexPerm):
        raise TypeError("zeta_inv takes an index permutation")
    return _tables()[1][sigma]


def group_closure(generators: Iterable[Perm]) -> set:
    gens = list(generators)
    if not gens:
        raise ValueError("need at least one generator")
    identity = type(gens[0])()
    group = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = g * s
                if h not in group:
                    group.add(h)
                    nxt.append(h)
        frontier = nxt
    return group


def symmetric_group_generators(cls, subset) -> list[Perm]:
    """All transpositions of a subset of the ground set."""
    return [cls.transposition(x, y) for x, y in combinations(subset, 2)]


def verify_zeta(exhaustive: bool = False) -> bool:
    """Check bijectivity, cycle types of transposition images and the
    homomorphism property (on all pairs when exhaustive)."""
    forward, backward = _tables()
    if len(set(forward.values())) != 720:
        return False
    for pair in ZETA_TABLE:
        if forward[LetterPerm.transposition(*sorted(pair))].cycle_type() != (2, 2, 2):
            return False
    if exhaustive:
        items = list(forward.items())
        for s, zs in items:
            for t, zt in items:
                if forward[s * t] != zs * zt:
                    return False
    return all(forward[backward[z]] == z for z in backward)
