"""The plane of quadratic binary forms, with the conic of perfect squares.

A nonzero quadratic form stands for a point and also for its polar line, so
joins, meets, conjugacy and incidence all reduce to transvectants.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .forms import BinaryForm, linear_form, proportional, transvectant

__all__ = [
    "P1Point",
    "PlaneElement",
    "Triangle",
    "DegenerateJoin",
    "DegenerateTriangle",
    "IndeterminateCrossRatio",
    "SingularMatrix",
    "TheoremViolation",
    "INFINITY",
    "conic_point",
    "join_or_meet",
    "is_conjugate",
    "incident",
    "collinear",
    "cross_ratio",
    "apply_flt",
    "flt_to_standard",
    "invert_matrix",
    "chasles_center",
    "canonical_coefficients",
]


class DegenerateJoin(ValueError):
    pass


class DegenerateTriangle(ValueError):
    pass


class IndeterminateCrossRatio(ValueError):
    pass


class SingularMatrix(ValueError):
    pass


class TheoremViolation(AssertionError):
    """A classical incidence theorem failed on exact data; always a bug."""


def _exact(x):
    if isinstance(x, (float, complex)):
        raise TypeError(f"inexact coordinate {x!r}; use Fraction or GaussianRational")
    return Fraction(x) if isinstance(x, int) and not isinstance(x, bool) else x


class P1Point:
    """A point [u:v] of the projective line, stored as [z:1] or [1:0]."""

    __slots__ = ("u", "v")

    def __init__(self, u, v=1):
        u, v = _exact(u), _exact(v)
        if v == 0:
            if u == 0:
                raise ValueError("[0:0] is not a point of P1")
            u, v = Fraction(1), Fraction(0)
        elif not (v == 1):
            u, v = u / v, _exact(1)
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "v", v)

    def __setattr__(self, name, value):
        raise AttributeError("P1Point is immutable")

    @classmethod
    def infinity(cls) -> "P1Point":
        return cls(1, 0)

    @property
    def is_infinite(self) -> bool:
        return self.v == 0

    @property
    def value(self):
        if self.is_infinite:
            raise ValueError("the point at infinity has no affine value")
        return self.u

    def __eq__(self, other):
        if not isinstance(other, P1Point):
            return NotImplemented
        return self.u == other.u and self.v == other.v

    def __hash__(self):
        return hash((self.u, self.v))

    def __repr__(self):
        return f"P1Point({'inf' if self.is_infinite else self.u})"

    def __str__(self):
        return "inf" if self.is_infinite else str(self.u)


INFINITY = P1Point.infinity()


@dataclass(frozen=True, eq=False)
class PlaneElement:
    """A point or line of the plane; ``role`` is informational only."""

    form: BinaryForm
    role: str | None = None

    def __post_init__(self):
        if self.form.degree != 2:
            raise ValueError("plane elements are quadratic forms")

    def same_as(self, other: "PlaneElement") -> bool:
        return proportional(self.form, other.form)

    def __eq__(self, other):
        if not isinstance(other, PlaneElement):
            return NotImplemented
        return self.same_as(other)

    def __hash__(self):
        return hash(canonical_coefficients(self.form))

    def __iter__(self):
        return iter(self.form.coeffs)

    def __str__(self):
        return str(self.form)


def canonical_coefficients(form: BinaryForm) -> tuple:
    """Coefficients scaled so the first nonzero one is 1 (field coefficients)."""
    k = next(i for i, c in enumerate(form.coeffs) if c != 0)
    lead = form.coeffs[k]
    return tuple(c / lead if c != 0 else 0 for c in form.coeffs)


@dataclass(frozen=True)
class Triangle:
    p: P1Point
    q: P1Point
    r: P1Point

    def __post_init__(self):
        if self.p == self.q or self.q == self.r or self.p == self.r:
            raise DegenerateTriangle("triangle vertices must be distinct")

    def __iter__(self):
        return iter((self.p, self.q, self.r))


def conic_point(z: P1Point) -> PlaneElement:
    lf = linear_form(z)
    return PlaneElement(lf * lf, "point")


def _dual_role(r1, r2):
    if r1 == r2 == "point":
        return "line"
    if r1 == r2 == "line":
        return "point"
    return None


def join_or_meet(e1: PlaneElement, e2: PlaneElement) -> PlaneElement:
    """Line through two points, or intersection of two lines."""
    t = transvectant(e1.form, e2.form, 1)
    if t.is_zero():
        raise DegenerateJoin("elements coincide; join/meet undefined")
    return PlaneElement(t, _dual_role(e1.role, e2.role))


def is_conjugate(e1: PlaneElement, e2: PlaneElement) -> bool:
    return transvectant(e1.form, e2.form, 2)[0] == 0


def incident(point: PlaneElement, line: PlaneElement) -> bool:
    # a point lies on a line iff it is conjugate to the line's pole
    return is_conjugate(point, line)


def _det3(rows) -> object:
    (a, b, c), (d, e, f), (g, h, i) = rows
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def collinear(e1: PlaneElement, e2: PlaneElement, e3: PlaneElement) -> bool:
    """Three points collinear (or three lines concurrent)."""
    return _det3([e1.form.coeffs, e2.form.coeffs, e3.form.coeffs]) == 0


def _d(z: P1Point, w: P1Point):
    return z.u * w.v - w.u * z.v


def cross_ratio(z1: P1Point, z2: P1Point, z3: P1Point, z4: P1Point) -> P1Point:
    """<z1,z2,z3,z4> = (z1-z3)(z2-z4) / ((z1-z4)(z2-z3)) as a point of P1."""
    num = _d(z1, z3) * _d(z2, z4)
    den = _d(z1, z4) * _d(z2, z3)
    if num == 0 and den == 0:
        raise IndeterminateCrossRatio("cross-ratio is 0/0")
    return P1Point(num, den)


def apply_flt(matrix, z: P1Point) -> P1Point:
    (p, q), (r, s) = matrix
    if p * s - q * r == 0:
        raise SingularMatrix("fractional linear transformation must be invertible")
    return P1Point(p * z.u + q * z.v, r * z.u + s * z.v)


def invert_matrix(matrix):
    (p, q), (r, s) = matrix
    det = p * s - q * r
    if det == 0:
        raise SingularMatrix("singular matrix")
    return ((s, -q), (-r, p))


def flt_to_standard(z1: P1Point, z2: P1Point, z3: P1Point):
    """Matrix of the FLT sending z1, z2, z3 to 0, 1, infinity."""
    d23 = _d(z2, z3)
    d21 = _d(z2, z1)
    return ((d23 * z1.v, -d23 * z1.u), (d21 * z3.v, -d21 * z3.u))


def chasles_center(tri: Triangle) -> PlaneElement:
    """Centre of perspectivity of a conic-inscribed triangle and its polar triangle."""
    P, Q, R = (conic_point(z) for z in tri)
    try:
        Pp, Qp, Rp = join_or_meet(Q, R), join_or_meet(P, R), join_or_meet(P, Q)
        lines = [join_or_meet(P, Pp), join_or_meet(Q, Qp), join_or_meet(R, Rp)]
        center = join_or_meet(lines[0], lines[1])
    except Exception as exc:  # any degeneracy here means a degenerate triangle
        raise DegenerateTriangle(str(exc)) from exc
    if not incident(center, lines[2]):
        raise TheoremViolation("Chasles: perspectivity lines are not concurrent")
    polar = PlaneElement(center.form, "line")
    for (X, Y), (Xp, Yp) in (((P, Q), (Pp, Qp)), ((P, R), (Pp, Rp)), ((Q, R), (Qp, Rp))):
        side_meet = join_or_meet(join_or_meet(X, Y), join_or_meet(Xp, Yp))
        if not incident(side_meet, polar):
            raise TheoremViolation("Chasles: perspectivity axis is not the polar of the centre")
    return PlaneElement(center.form, "point")
