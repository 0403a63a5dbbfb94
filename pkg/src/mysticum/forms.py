"""Binary forms over a generic coefficient ring and their transvectants.

A form of degree n is stored as plain coefficients ``c0..cn`` of
``sum c_i * x1^(n-i) * x2^i``.  Coefficients may be any commutative ring
elements that interoperate with ``int`` (Fraction, GaussianRational,
UniRatFunc, MultiPoly, complex).
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Sequence

from .algebra import MultiPoly, difference_factors

__all__ = [
    "BinaryForm",
    "DegreeMismatch",
    "ZeroForm",
    "transvectant",
    "proportional",
    "sextic_from_roots",
    "form_from_roots",
    "linear_form",
    "generic_sextic",
    "reduce_form",
    "strip_form_content",
    "SEXTIC_VARIABLES",
]

SEXTIC_VARIABLES = tuple(f"a{i}" for i in range(7))


class DegreeMismatch(ValueError):
    pass


class ZeroForm(ValueError):
    pass


class BinaryForm:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence):
        if not coeffs:
            raise ValueError("a binary form needs at least one coefficient")
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("BinaryForm is immutable")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __add__(self, other: "BinaryForm") -> "BinaryForm":
        if not isinstance(other, BinaryForm):
            return NotImplemented
        if other.degree != self.degree:
            raise DegreeMismatch("cannot add forms of different degree")
        return BinaryForm([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return BinaryForm([-c for c in self.coeffs])

    def __sub__(self, other: "BinaryForm") -> "BinaryForm":
        return self + (-other)

    def scale(self, s) -> "BinaryForm":
        return BinaryForm([c * s for c in self.coeffs])

    def __mul__(self, other):
        if not isinstance(other, BinaryForm):
            return self.scale(other)
        out = [0] * (self.degree + other.degree + 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b == 0:
                    continue
                out[i + j] = out[i + j] + a * b
        return BinaryForm(out)

    def __rmul__(self, s):
        return self.scale(s)

    def __pow__(self, n: int) -> "BinaryForm":
        result = BinaryForm([1])
        for _ in range(n):
            result = result * self
        return result

    def map(self, fn) -> "BinaryForm":
        return BinaryForm([fn(c) for c in self.coeffs])

    def __call__(self, x1, x2):
        n = self.degree
        return sum((c * x1 ** (n - i) * x2 ** i for i, c in enumerate(self.coeffs)), 0)

    def partial(self, a: int, b: int) -> "BinaryForm":
        """The derivative d^(a+b) / dx1^a dx2^b."""
        n = self.degree
        if a + b > n:
            return BinaryForm([0])
        out = [0] * (n - a - b + 1)
        for i, c in enumerate(self.coeffs):
            e1, e2 = n - i, i
            if e1 < a or e2 < b or c == 0:
                continue
            out[e2 - b] = c * (_falling(e1, a) * _falling(e2, b))
        return BinaryForm(out)

    def substitute(self, p, q, r, s) -> "BinaryForm":
        """The form f(p*x1 + q*x2, r*x1 + s*x2)."""
        n = self.degree
        u = BinaryForm([p, q])
        v = BinaryForm([r, s])
        total = BinaryForm([0] * (n + 1))
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            total = total + (u ** (n - i) * v ** i).scale(c)
        return total

    def __eq__(self, other):
        if not isinstance(other, BinaryForm):
            return NotImplemented
        return self.degree == other.degree and all(
            a == b for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"BinaryForm({list(self.coeffs)!r})"

    def __str__(self):
        n = self.degree
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "*".join(m for m in (
                "" if n - i == 0 else ("x1" if n - i == 1 else f"x1^{n - i}"),
                "" if i == 0 else ("x2" if i == 1 else f"x2^{i}")) if m)
            cs = str(c)
            if any(ch in cs for ch in "+- ") and not cs.lstrip("-").replace("/", "").isdigit():
                cs = f"({cs})"
            if not mono:
                parts.append(cs)
            elif cs == "1":
                parts.append(mono)
            elif cs == "-1":
                parts.append("-" + mono)
            else:
                parts.append(f"{cs}*{mono}")
        return " + ".join(parts).replace("+ -", "- ") if parts else "0"


def _falling(n: int, k: int) -> int:
    out = 1
    for j in range(k):
        out *= n - j
    return out


def transvectant(f: BinaryForm, g: BinaryForm, r: int) -> BinaryForm:
    """The r-th transvectant (f, g)_r, normalized so that (x1^2, x2^2)_2 = 1."""
    m, n = f.degree, g.degree
    if r < 0 or r > m or r > n:
        raise DegreeMismatch(f"transvectant order {r} invalid for degrees {m}, {n}")
    acc = BinaryForm([0] * (m + n - 2 * r + 1))
    for k in range(r + 1):
        term = f.partial(r - k, k) * g.partial(k, r - k)
        w = comb(r, k) * (-1) ** k
        acc = acc + (term if w == 1 else term.scale(w))
    norm = Fraction(factorial(m - r) * factorial(n - r), factorial(m) * factorial(n))
    if norm == 1:
        return acc
    return acc.scale(norm)


def proportional(f: BinaryForm, g: BinaryForm) -> bool:
    """Projective equality: all 2x2 minors of the coefficient vectors vanish."""
    if f.degree != g.degree:
        raise DegreeMismatch("proportionality needs equal degrees")
    if f.is_zero() or g.is_zero():
        raise ZeroForm("proportionality is undefined for the zero form")
    k = next(i for i, c in enumerate(f.coeffs) if c != 0)
    fk, gk = f.coeffs[k], g.coeffs[k]
    if gk == 0:
        return False
    return all(fk * gj - fj * gk == 0
               for fj, gj in zip(f.coeffs, g.coeffs))


def linear_form(point) -> BinaryForm:
    """The linear form vanishing at a P1 point [u:v]: v*x1 - u*x2, and x2 at infinity."""
    u, v = point.u, point.v
    if v == 0:
        return BinaryForm([0, 1])
    return BinaryForm([v, -u])


def form_from_roots(points) -> BinaryForm:
    result = BinaryForm([1])
    for p in points:
        result = result * linear_form(p)
    return result


def sextic_from_roots(points) -> BinaryForm:
    points = list(points)
    if len(points) != 6:
        raise ValueError("a sextic needs exactly six roots")
    return form_from_roots(points)


def generic_sextic() -> BinaryForm:
    """sum C(6,i) a_i x1^(6-i) x2^i with indeterminate a0..a6."""
    gens = MultiPoly.gens(SEXTIC_VARIABLES)
    return BinaryForm([gens[i] * comb(6, i) for i in range(7)])


def strip_form_content(form: BinaryForm) -> tuple[BinaryForm, list]:
    """Divide a form with MultiPoly coefficients by every variable difference
    dividing all its coefficients, then by the common rational content."""
    polys = [c for c in form.coeffs if isinstance(c, MultiPoly)]
    if not polys:
        raise TypeError("form has no polynomial coefficients")
    vs = polys[0].variables
    coeffs = [c if isinstance(c, MultiPoly) else MultiPoly.const(c, vs) for c in form.coeffs]
    nonzero = [c for c in coeffs if not c.is_zero()]
    if not nonzero:
        raise ZeroForm("cannot strip the zero form")
    removed = []
    for x, y in difference_factors(vs):
        diff = None
        while all(c.difference_divides(x, y) for c in nonzero):
            if diff is None:
                diff = MultiPoly.var(x, vs) - MultiPoly.var(y, vs)
            coeffs = [c.exact_div(diff) for c in coeffs]
            nonzero = [c for c in coeffs if not c.is_zero()]
            removed.append(diff)
    content = _common_content(nonzero)
    if content != 1:
        coeffs = [c / content for c in coeffs]
    return BinaryForm(coeffs), removed


def _common_content(polys):
    from math import gcd
    num, den = 0, 1
    for p in polys:
        for c in p._terms.values():
            if isinstance(c, int):
                num = gcd(num, c)
            else:
                num = gcd(num, c.numerator)
                den = den * c.denominator // gcd(den, c.denominator)
    lead = polys[0]
    sign = -1 if lead.leading_term()[1] < 0 else 1
    return Fraction(sign * num, den) if den != 1 else sign * num


def reduce_form(form: BinaryForm) -> BinaryForm:
    """Cheap projective normalization: strip polynomial content for symbolic
    forms, scale the first nonzero coefficient to 1 for field coefficients."""
    if any(isinstance(c, MultiPoly) for c in form.coeffs):
        return strip_form_content(form)[0]
    k = next((i for i, c in enumerate(form.coeffs) if c != 0), None)
    if k is None:
        return form
    lead = form.coeffs[k]
    if lead == 1:
        return form
    inv = 1 / lead
    return BinaryForm([c * inv if c != 0 else c for c in form.coeffs])
