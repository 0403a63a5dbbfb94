"""Sparse multivariate polynomials with exact coefficients.

Monomials are packed into a single int: one 8-bit slot per variable (first
variable lowest) with the total degree in the topmost slot.  Integer order on
packed keys is then graded lexicographic with the *last* variable most
significant (``a < b < ... < f``), and monomial multiplication is integer
addition.  Each slot keeps its top bit clear as a borrow guard, so exponents
and total degree are limited to 127.

Coefficients are ``int`` whenever possible and ``Fraction`` otherwise; any
other exact scalar (e.g. ``GaussianRational``) also works but is not used by
the symbolic pipelines.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Iterable, Mapping, Sequence

from .scalars import GaussianRational

__all__ = [
    "MultiPoly",
    "NotDivisible",
    "UnknownVariable",
    "mpoly_exact_div",
    "mpoly_letter_substitute",
    "strip_difference_content",
    "difference_factors",
]

_W = 8
_SLOT = (1 << _W) - 1
_MAXEXP = (1 << (_W - 1)) - 1


class NotDivisible(ArithmeticError):
    """The divisor does not divide the dividend exactly."""


class UnknownVariable(KeyError):
    pass


def _norm(c):
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def _cdiv(a, b):
    if type(a) is int and type(b) is int:
        q, r = divmod(a, b)
        if r == 0:
            return q
        return Fraction(a, b)
    return _norm(a / b)


class MultiPoly:
    """Immutable polynomial in a fixed ordered tuple of named variables."""

    __slots__ = ("variables", "_terms")

    def __init__(self, variables: Sequence[str], terms: Mapping | None = None):
        variables = tuple(variables)
        packed = {}
        if terms:
            n = len(variables)
            for exps, c in terms.items():
                if len(exps) != n:
                    raise ValueError("exponent vector length mismatch")
                if c == 0:
                    continue
                k = _pack(exps)
                packed[k] = packed.get(k, 0) + _norm(c)
            packed = {k: c for k, c in packed.items() if c != 0}
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "_terms", packed)

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    @classmethod
    def _raw(cls, variables: tuple, packed: dict) -> "MultiPoly":
        obj = object.__new__(cls)
        object.__setattr__(obj, "variables", variables)
        object.__setattr__(obj, "_terms", packed)
        return obj

    @classmethod
    def var(cls, name: str, variables: Sequence[str]) -> "MultiPoly":
        variables = tuple(variables)
        if name not in variables:
            raise UnknownVariable(name)
        i = variables.index(name)
        return cls._raw(variables, {(1 << (_W * i)) | (1 << (_W * len(variables))): 1})

    @classmethod
    def const(cls, c, variables: Sequence[str]) -> "MultiPoly":
        c = _norm(c)
        return cls._raw(tuple(variables), {0: c} if c != 0 else {})

    @classmethod
    def gens(cls, variables: Sequence[str]) -> tuple["MultiPoly", ...]:
        return tuple(cls.var(v, variables) for v in variables)

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> dict[tuple[int, ...], object]:
        n = len(self.variables)
        return {_unpack(k, n): c for k, c in self._terms.items()}

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def total_degree(self) -> int:
        if not self._terms:
            return -1
        return max(self._terms) >> (_W * len(self.variables))

    def min_degree(self) -> int:
        return min(self._terms) >> (_W * len(self.variables))

    def is_homogeneous(self) -> bool:
        return bool(self._terms) and self.total_degree() == self.min_degree()

    def degree_in(self, name: str) -> int:
        i = self.variables.index(name)
        return max(((k >> (_W * i)) & _SLOT for k in self._terms), default=-1)

    def leading_term(self):
        k = max(self._terms)
        return _unpack(k, len(self.variables)), self._terms[k]

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and 0 in self._terms)

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self._terms.get(0, 0)

    # -- arithmetic -------------------------------------------------------

    def _lift(self, other):
        if isinstance(other, MultiPoly):
            if other.variables != self.variables:
                raise ValueError("variable sets differ")
            return other
        if isinstance(other, (int, Fraction)) or _is_scalar(other):
            return MultiPoly.const(other, self.variables)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        a, b = self._terms, o._terms
        if len(a) < len(b):
            a, b = b, a
        out = dict(a)
        for k, c in b.items():
            v = out.get(k)
            if v is None:
                out[k] = c
            else:
                v = v + c
                if v == 0:
                    del out[k]
                else:
                    out[k] = _norm(v)
        return MultiPoly._raw(self.variables, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.variables, {k: -c for k, c in self._terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def scale(self, c) -> "MultiPoly":
        c = _norm(c)
        if c == 0:
            return MultiPoly._raw(self.variables, {})
        if c == 1:
            return self
        return MultiPoly._raw(self.variables,
                              {k: _norm(v * c) for k, v in self._terms.items()})

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            if isinstance(other, (int, Fraction)) or _is_scalar(other):
                return self.scale(other)
            return NotImplemented
        if other.variables != self.variables:
            raise ValueError("variable sets differ")
        a, b = self._terms, other._terms
        if not a or not b:
            return MultiPoly._raw(self.variables, {})
        if self.total_degree() + other.total_degree() > _MAXEXP:
            raise OverflowError("total degree exceeds packed-monomial limit")
        if len(a) < len(b):
            a, b = b, a
        out: dict = {}
        get = out.get
        bl = list(b.items())
        for k1, c1 in a.items():
            for k2, c2 in bl:
                k = k1 + k2
                out[k] = get(k, 0) + c1 * c2
        return MultiPoly._raw(self.variables,
                              {k: _norm(c) for k, c in out.items() if c != 0})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = MultiPoly.const(1, self.variables)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, MultiPoly):
            return self.exact_div(other)
        if other == 0:
            raise ZeroDivisionError("MultiPoly division by zero")
        return MultiPoly._raw(self.variables,
                              {k: _cdiv(c, other) for k, c in self._terms.items()})

    def exact_div(self, divisor: "MultiPoly") -> "MultiPoly":
        """Quotient q with self == q * divisor; raises NotDivisible otherwise."""
        if divisor.variables != self.variables:
            raise ValueError("variable sets differ")
        if not divisor._terms:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self._terms:
            return self
        dt = divisor._terms
        lk = max(dt)
        lc = dt[lk]
        rest = [(k, c) for k, c in dt.items() if k != lk]
        guard = _guard_mask(len(self.variables))
        rem = dict(self._terms)
        heap = [-k for k in rem]
        heapq.heapify(heap)
        quot = {}
        while heap:
            k = -heapq.heappop(heap)
            c = rem.pop(k, None)
            if c is None:
                continue
            if ((k | guard) - lk) & guard != guard:
                raise NotDivisible("leading monomial does not divide")
            qk = k - lk
            qc = _cdiv(c, lc)
            quot[qk] = qc
            for gk, gc in rest:
                t = qk + gk
                v = rem.get(t)
                if v is None:
                    rem[t] = -qc * gc
                    heapq.heappush(heap, -t)
                else:
                    v = v - qc * gc
                    if v == 0:
                        del rem[t]
                    else:
                        rem[t] = v
        return MultiPoly._raw(self.variables, quot)

    def divides(self, other: "MultiPoly") -> bool:
        try:
            other.exact_div(self)
        except NotDivisible:
            return False
        return True

    # -- content ----------------------------------------------------------

    def content(self):
        """Positive rational content, sign chosen so the leading coefficient of
        ``self / content`` is positive."""
        if not self._terms:
            return 0
        num = 0
        den = 1
        for c in self._terms.values():
            if type(c) is int:
                num = gcd(num, c)
            else:
                num = gcd(num, c.numerator)
                den = den * c.denominator // gcd(den, c.denominator)
        lead = self._terms[max(self._terms)]
        sign = -1 if lead < 0 else 1
        return _norm(Fraction(sign * num, den))

    def primitive(self) -> "MultiPoly":
        if not self._terms:
            return self
        return self / self.content()

    # -- substitution -----------------------------------------------------

    def rename(self, mapping: Mapping[str, str]) -> "MultiPoly":
        """Replace each variable v by mapping[v]; mapping must be a bijection."""
        vs = self.variables
        if set(mapping) != set(vs) or set(mapping.values()) != set(vs):
            raise UnknownVariable(f"substitution domain {sorted(mapping)} != {sorted(vs)}")
        n = len(vs)
        target = [vs.index(mapping[v]) for v in vs]
        if target == list(range(n)):
            return self
        out = {}
        top = _W * n
        for k, c in self._terms.items():
            nk = k & (_SLOT << top)
            for i in range(n):
                e = (k >> (_W * i)) & _SLOT
                if e:
                    nk |= e << (_W * target[i])
            out[nk] = c
        return MultiPoly._raw(vs, out)

    def subs(self, values: Mapping[str, object]) -> "MultiPoly":
        """Substitute scalars for some variables; result keeps the variable tuple."""
        n = len(self.variables)
        idx = [(self.variables.index(v), x) for v, x in values.items()]
        top = _W * n
        out: dict = {}
        pw_cache: dict = {}
        for k, c in self._terms.items():
            nk = k
            for i, x in idx:
                e = (k >> (_W * i)) & _SLOT
                if e:
                    key = (i, e)
                    p = pw_cache.get(key)
                    if p is None:
                        p = pw_cache[key] = _norm(x ** e) if not isinstance(x, int) else x ** e
                    c = c * p
                    nk -= (e << (_W * i)) + (e << top)
            if c != 0:
                out[nk] = out.get(nk, 0) + c
        return MultiPoly._raw(self.variables,
                              {k: _norm(c) for k, c in out.items() if c != 0})

    def evaluate(self, values: Mapping[str, object], one=1):
        """Full evaluation into any commutative ring containing the values."""
        n = len(self.variables)
        vals = [values[v] for v in self.variables]
        cache: dict = {}
        total = 0
        for k, c in self._terms.items():
            term = None
            for i in range(n):
                e = (k >> (_W * i)) & _SLOT
                if e:
                    p = cache.get((i, e))
                    if p is None:
                        p = cache[(i, e)] = vals[i] ** e
                    term = p if term is None else term * p
            total = total + (term * c if term is not None else one * c)
        return total

    def difference_divides(self, x: str, y: str) -> bool:
        """True iff (x - y) divides self, tested by setting x = y."""
        i, j = self.variables.index(x), self.variables.index(y)
        acc: dict = {}
        si, sj = _W * i, _W * j
        for k, c in self._terms.items():
            e = (k >> si) & _SLOT
            nk = k - (e << si) + (e << sj)
            acc[nk] = acc.get(nk, 0) + c
        return all(v == 0 for v in acc.values())

    # -- comparison / display -------------------------------------------

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.variables == other.variables and self._terms == other._terms
        if isinstance(other, (int, Fraction)) or _is_scalar(other):
            if other == 0:
                return not self._terms
            return self._terms == {0: _norm(other)}
        return NotImplemented

    def __hash__(self):
        return hash((self.variables, frozenset(self._terms.items())))

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        return f"MultiPoly({self.variables!r}, {len(self._terms)} terms: {self})"

    def __str__(self):
        if not self._terms:
            return "0"
        n = len(self.variables)
        parts = []
        for k in sorted(self._terms, reverse=True):
            c = self._terms[k]
            exps = _unpack(k, n)
            mono = "*".join(
                v if e == 1 else f"{v}^{e}"
                for v, e in zip(self.variables, exps) if e)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def _is_scalar(x) -> bool:
    # exact scalars other than int/Fraction that MultiPoly may carry
    return isinstance(x, GaussianRational)


def _pack(exps: Sequence[int]) -> int:
    k = 0
    d = 0
    for i, e in enumerate(exps):
        if e < 0 or e > _MAXEXP:
            raise OverflowError(f"exponent {e} outside packed range")
        k |= e << (_W * i)
        d += e
    if d > _MAXEXP:
        raise OverflowError("total degree outside packed range")
    return k | (d << (_W * len(exps)))


def _unpack(k: int, n: int) -> tuple[int, ...]:
    return tuple((k >> (_W * i)) & _SLOT for i in range(n))


def _guard_mask(n: int) -> int:
    g = 0
    for i in range(n + 1):
        g |= 1 << (_W * i + _W - 1)
    return g


def mpoly_exact_div(dividend: MultiPoly, divisor: MultiPoly) -> MultiPoly:
    return dividend.exact_div(divisor)


def mpoly_letter_substitute(poly: MultiPoly, sigma) -> MultiPoly:
    """Apply a variable permutation given as a mapping or via ``variable_map()``."""
    mapping = sigma.variable_map() if hasattr(sigma, "variable_map") else dict(sigma)
    return poly.rename(mapping)


def difference_factors(variables: Iterable[str]) -> list[tuple[str, str]]:
    return list(combinations(tuple(variables), 2))


def strip_difference_content(poly: MultiPoly):
    """Divide out every variable difference and the rational content.

    Returns ``(stripped, removed)`` where ``removed`` lists the factors
    ``x - y`` as MultiPolys, with multiplicity.
    """
    if poly.is_zero():
        raise ValueError("cannot strip content of the zero polynomial")
    removed = []
    vs = poly.variables
    for x, y in difference_factors(vs):
        diff = None
        while poly.difference_divides(x, y):
            if diff is None:
                diff = MultiPoly.var(x, vs) - MultiPoly.var(y, vs)
            poly = poly.exact_div(diff)
            removed.append(diff)
    return poly.primitive(), removed
