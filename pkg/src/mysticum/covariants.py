"""Covariants of the binary sextic used to detect tri-involutivity.

theta24 = (F, F)_4, theta32 = (theta24, F)_4, theta54 = (theta24, theta32)_1.
A sextuple is tri-involutive exactly when theta54 of its sextic vanishes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import UniRatFunc
from .forms import BinaryForm, DegreeMismatch, generic_sextic, sextic_from_roots, transvectant
from .plane import P1Point

__all__ = [
    "theta",
    "theta54_numeric",
    "is_tri_involutive_covariant",
    "verify_syzygies",
    "syzygy_forms",
    "psi_covariant_profile",
    "PsiProfile",
    "f1",
    "T_FORM",
    "T_SQUARED",
    "OCTAHEDRAL_SEXTIC",
    "SPECIAL_P",
]

T_FORM = BinaryForm([1, -1, 1])
T_SQUARED = T_FORM * T_FORM
OCTAHEDRAL_SEXTIC = BinaryForm([0, 1, 0, 0, 0, -1, 0])


def _special_values():
    from .algebra import GaussianRational as G
    h = Fraction(1, 2)
    return (G(0, 1), G(0, -1), G(1, 1), G(1, -1), G(h, h), G(h, -h))


SPECIAL_P = _special_values()


def theta(f: BinaryForm) -> tuple[BinaryForm, BinaryForm, BinaryForm]:
    if f.degree != 6:
        raise DegreeMismatch(f"theta needs a sextic, got degree {f.degree}")
    t24 = transvectant(f, f, 4)
    t32 = transvectant(t24, f, 4)
    t54 = transvectant(t24, t32, 1)
    return t24, t32, t54


def _numeric_sextic(points) -> BinaryForm:
    """Product of linear forms for complex homogeneous pairs (u, v)."""
    out = BinaryForm([1])
    for u, v in points:
        out = out * BinaryForm([complex(v), -complex(u)])
    return out


def theta54_numeric(points) -> float:
    """Max |coefficient| of theta54 after scaling the sextic to unit max-coefficient.

    ``points`` are homogeneous complex pairs (u, v).
    """
    f = _numeric_sextic(points)
    m = max(abs(c) for c in f.coeffs)
    f = f.map(lambda c: c / m)
    return max(abs(c) for c in theta(f)[2].coeffs)


def is_tri_involutive_covariant(points, tol: float | None = None) -> bool:
    """theta54 test.  Exact when ``tol`` is None (points are P1Points),
    otherwise numeric on homogeneous complex pairs."""
    if tol is not None:
        return theta54_numeric(points) <= tol
    pts = [p if isinstance(p, P1Point) else P1Point(p) for p in points]
    if len(set(pts)) != 6:
        raise ValueError("need six distinct points")
    return theta(sextic_from_roots(pts))[2].is_zero()


def syzygy_forms() -> dict[str, BinaryForm]:
    F = generic_sextic()
    t24, _, t54 = theta(F)
    return {
        "(theta54,F)_4": transvectant(t54, F, 4),
        "(theta54,theta24)_4": transvectant(t54, t24, 4),
    }


def verify_syzygies() -> bool:
    return all(f.is_zero() for f in syzygy_forms().values())


def f1(p):
    """(p^2+1)(p^2-2p+2)(2p^2-2p+1) / (p^2 (p-1)^2)."""
    return (p * p + 1) * (p * p - 2 * p + 2) * (2 * p * p - 2 * p + 1) / (p * p * (p - 1) ** 2)


@dataclass
class PsiProfile:
    theta24_multiple: UniRatFunc
    theta32_multiple: UniRatFunc
    f1_constant: Fraction
    theta24_is_T_squared_multiple: bool
    theta32_is_T_multiple: bool
    f1_zero_set_ok: bool

    @property
    def ok(self) -> bool:
        return self.theta24_is_T_squared_multiple and self.theta32_is_T_multiple and self.f1_zero_set_ok


def _multiple_of(form: BinaryForm, base: BinaryForm):
    c = form.coeffs[0] / base.coeffs[0]
    return c, all(a == c * b for a, b in zip(form.coeffs, base.coeffs))


def psi_covariant_profile() -> PsiProfile:
    """theta24 and theta32 of the standard tri-involutive sextic over Q(p)."""
    p = UniRatFunc.variable("p")
    roots = [P1Point(0), P1Point(1), P1Point(1, 0), P1Point(p), P1Point((p - 1) / p),
             P1Point(1 / (1 - p))]
    cleared = sextic_from_roots(roots).scale(p * (p - 1))
    if not all(c.den == 1 for c in cleared.coeffs):
        raise AssertionError("clearing p(p-1) left denominators")
    t24, t32, _ = theta(cleared)
    m24, ok24 = _multiple_of(t24, T_SQUARED)
    m32, ok32 = _multiple_of(t32, T_FORM)
    scale = p * (p - 1)
    m24 = m24 / scale ** 2
    m32 = m32 / scale ** 3
    ratio = m24 / f1(p)
    if not ratio.is_constant():
        raise AssertionError(f"theta24 multiple is not a constant times f1: {ratio}")
    const = ratio.num.coeffs[0] if ratio.num.coeffs else Fraction(0)
    num = m24.num
    zero_ok = all(num(s) == 0 for s in SPECIAL_P) and num.degree == len(SPECIAL_P)
    return PsiProfile(m24, m32, const, ok24, ok32, zero_ok)
