"""Univariate polynomials and rational functions over an exact field.

The coefficient field is whatever the coefficients are: ``Fraction`` gives
Q[t] and Q(t), ``GaussianRational`` gives Q(i)[t] and Q(i)(t).
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import GaussianRational

__all__ = ["UniPoly", "UniRatFunc", "uniratfunc_is_zero"]

_SCALARS = (int, Fraction, GaussianRational)


def _strip(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class UniPoly:
    """Dense polynomial, coefficients lowest degree first."""

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs=(), var: str = "t"):
        object.__setattr__(self, "coeffs", _strip(
            Fraction(c) if isinstance(c, int) else c for c in coeffs))
        object.__setattr__(self, "var", var)

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    @classmethod
    def variable(cls, var: str = "t") -> "UniPoly":
        return cls((0, 1), var)

    @classmethod
    def constant(cls, c, var: str = "t") -> "UniPoly":
        return cls((c,), var)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self):
        return self.coeffs[-1]

    def _lift(self, other):
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, _SCALARS):
            return UniPoly((other,), self.var)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return UniPoly(out, self.var)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs], self.var)

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

    def __mul__(self, other):
        if isinstance(other, _SCALARS):
            if other == 0:
                return UniPoly((), self.var)
            return UniPoly([c * other for c in self.coeffs], self.var)
        if not isinstance(other, UniPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly((), self.var)
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return UniPoly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = UniPoly((1,), self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other: "UniPoly"):
        o = self._lift(other)
        if o.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(o.coeffs)
        if dq < 0:
            return UniPoly((), self.var), self
        quot = [0] * (dq + 1)
        inv_lc = 1 / o.lc
        for k in range(dq, -1, -1):
            c = rem[k + len(o.coeffs) - 1] * inv_lc
            quot[k] = c
            if c != 0:
                for j, y in enumerate(o.coeffs):
                    rem[k + j] -= c * y
        return UniPoly(quot, self.var), UniPoly(rem[:len(o.coeffs) - 1], self.var)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        inv = 1 / self.lc
        return UniPoly([c * inv for c in self.coeffs], self.var)

    def gcd(self, other: "UniPoly") -> "UniPoly":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, _SCALARS):
            if other == 0:
                return not self.coeffs
            return self.coeffs == (other,)
        return NotImplemented

    def __hash__(self):
        return hash((self.coeffs, self.var))

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"UniPoly({list(self.coeffs)!r}, {self.var!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else (self.var if k == 1 else f"{self.var}^{k}")
            cs = str(c)
            if isinstance(c, GaussianRational) and c.re != 0 and c.im != 0:
                cs = f"({cs})"
            if mono and c == 1:
                parts.append(mono)
            elif mono and c == -1:
                parts.append("-" + mono)
            else:
                parts.append(cs + ("*" + mono if mono else ""))
        return " + ".join(parts).replace("+ -", "- ")


class UniRatFunc:
    """Reduced fraction ``num/den`` with ``den`` monic."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, var: str | None = None):
        if not isinstance(num, UniPoly):
            num = UniPoly((num,), var or "t")
        if den is None:
            den = UniPoly((1,), num.var)
        elif not isinstance(den, UniPoly):
            den = UniPoly((den,), num.var)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            num, den = UniPoly((), num.var), UniPoly((1,), num.var)
        elif den.degree > 0:
            g = num.gcd(den)
            if g.degree > 0:
                num, den = num // g, den // g
        lc = den.lc
        if lc != 1:
            inv = 1 / lc
            num, den = num * inv, den * inv
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("UniRatFunc is immutable")

    @classmethod
    def variable(cls, var: str = "t") -> "UniRatFunc":
        return cls(UniPoly.variable(var))

    @property
    def var(self) -> str:
        return self.num.var

    def _lift(self, other):
        if isinstance(other, UniRatFunc):
            return other
        if isinstance(other, UniPoly):
            return UniRatFunc(other)
        if isinstance(other, _SCALARS):
            return UniRatFunc(UniPoly((other,), self.var))
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        if self.den == o.den:
            return UniRatFunc(self.num + o.num, self.den)
        return UniRatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return UniRatFunc(-self.num, self.den)

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

    def __mul__(self, other):
        if isinstance(other, _SCALARS):
            return UniRatFunc(self.num * other, self.den)
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return UniRatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "UniRatFunc":
        if self.num.is_zero():
            raise ZeroDivisionError("rational function division by zero")
        return UniRatFunc(self.den, self.num)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return UniRatFunc(self.num ** n, self.den ** n)

    def __call__(self, x):
        return self.num(x) / self.den(x)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.degree <= 0 and self.den.degree == 0

    def __eq__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self.is_constant():
            return hash(self.num.coeffs[0] if self.num.coeffs else 0)
        return hash((self.num, self.den))

    def __bool__(self):
        return not self.num.is_zero()

    def __repr__(self):
        return f"UniRatFunc({self.num!r}, {self.den!r})"

    def __str__(self):
        if self.den.degree == 0:
            return str(self.num)
        return f"({self.num})/({self.den})"


def uniratfunc_is_zero(f: UniRatFunc) -> bool:
    return f.is_zero()
