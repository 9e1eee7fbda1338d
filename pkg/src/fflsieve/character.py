"""Exact values of additive character sums in Z[zeta_p].

CycloInt is the primary value domain: a reduced integer combination of
1, zeta, ..., zeta^(p-2) (zeta a primitive p-th root of unity), so that
identities between character sums are decided by coefficient comparison.
Floating complex enclosures exist only for inequality and ratio reporting,
never for identity tests.
"""

from __future__ import annotations

from dataclasses import dataclass

import mpmath

from .algebra import FieldElem, trace
from .errors import BadArgs, UndecidableComparison
from .laurent import Laurent


class CycloInt:
    """Element of Z[zeta_p] on the basis 1, zeta, ..., zeta^(p-2).

    zeta^(p-1) is rewritten as -(1 + zeta + ... + zeta^(p-2)), which makes the
    representation canonical: equality is coefficient-wise.
    """

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs):
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != p - 1:
            raise BadArgs(f"need {p - 1} coefficients for Z[zeta_{p}]")
        self.p = p
        self.coeffs = coeffs

    @classmethod
    def from_unreduced(cls, p: int, by_exp) -> "CycloInt":
        """From a length-p vector of coefficients on 1, zeta, ..., zeta^(p-1)."""
        top = by_exp[p - 1]
        return cls(p, tuple(by_exp[k] - top for k in range(p - 1)))

    @classmethod
    def zero(cls, p: int) -> "CycloInt":
        return cls(p, (0,) * (p - 1))

    @classmethod
    def from_int(cls, p: int, n: int) -> "CycloInt":
        return cls(p, (n,) + (0,) * (p - 2))

    @classmethod
    def root(cls, p: int, k: int) -> "CycloInt":
        """zeta^k."""
        by_exp = [0] * p
        by_exp[k % p] = 1
        return cls.from_unreduced(p, by_exp)

    def __add__(self, other: "CycloInt") -> "CycloInt":
        self._check(other)
        return CycloInt(self.p, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "CycloInt") -> "CycloInt":
        self._check(other)
        return CycloInt(self.p, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "CycloInt":
        return CycloInt(self.p, tuple(-a for a in self.coeffs))

    def __mul__(self, other) -> "CycloInt":
        if isinstance(other, int):
            return CycloInt(self.p, tuple(a * other for a in self.coeffs))
        self._check(other)
        p = self.p
        by_exp = [0] * p
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        by_exp[(i + j) % p] += a * b
        return CycloInt.from_unreduced(p, by_exp)

    def __rmul__(self, other):
        return self.__mul__(other)

    def conj(self) -> "CycloInt":
        """Complex conjugation: zeta^k -> zeta^(p-k)."""
        p = self.p
        by_exp = [0] * p
        for i, a in enumerate(self.coeffs):
            by_exp[(p - i) % p] += a
        return CycloInt.from_unreduced(p, by_exp)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def as_int(self) -> int:
        if not self.is_rational():
            raise BadArgs(f"{self!r} is not a rational integer")
        return self.coeffs[0]

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.is_rational() and self.coeffs[0] == other
        return isinstance(other, CycloInt) and self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def _check(self, other):
        if not isinstance(other, CycloInt) or other.p != self.p:
            raise BadArgs("mixed cyclotomic rings")

    def __repr__(self):
        return cyclo_to_text(self)


def cyclo_to_text(z: CycloInt) -> str:
    return f"p={z.p};coeffs=" + ",".join(str(c) for c in z.coeffs)


def cyclo_from_text(text: str) -> CycloInt:
    parts = dict(kv.split("=", 1) for kv in text.strip().split(";"))
    p = int(parts["p"])
    return CycloInt(p, tuple(int(c) for c in parts["coeffs"].split(",")))


# ---------------------------------------------------------------------------
# characters


def char_E(a: FieldElem) -> CycloInt:
    """The additive character of F_q: zeta^Tr(a)."""
    return CycloInt.root(a.field.p, trace(a))


def char_e(x: Laurent) -> CycloInt:
    """The additive character of F_q((1/t)): char_E of the t^(-1) coefficient.

    Raises PrecisionError when that coefficient is not certified.
    """
    return char_E(x.coeff_at(-1))


def cyclo_abs2(z: CycloInt) -> CycloInt:
    """z * conj(z); a nonnegative rational integer whenever it is rational."""
    return z * z.conj()


# ---------------------------------------------------------------------------
# complex enclosures (reporting only)


@dataclass(frozen=True)
class ComplexApprox:
    """Complex enclosure: the true value lies within err of (re, im)."""

    re: mpmath.mpf
    im: mpmath.mpf
    err: mpmath.mpf

    def __add__(self, other: "ComplexApprox") -> "ComplexApprox":
        return ComplexApprox(self.re + other.re, self.im + other.im, self.err + other.err)

    def __mul__(self, other: "ComplexApprox") -> "ComplexApprox":
        re = self.re * other.re - self.im * other.im
        im = self.re * other.im + self.im * other.re
        m1 = mpmath.hypot(self.re, self.im)
        m2 = mpmath.hypot(other.re, other.im)
        err = m1 * other.err + m2 * self.err + self.err * other.err + mpmath.mpf(2) ** (
            -mpmath.mp.prec + 4
        ) * (m1 * m2 + 1)
        return ComplexApprox(re, im, err)

    def abs2_interval(self) -> tuple[mpmath.mpf, mpmath.mpf]:
        """(lower, upper) bounds for |value|^2."""
        m = mpmath.hypot(self.re, self.im)
        lo = max(m - self.err, mpmath.mpf(0)) ** 2
        hi = (m + self.err) ** 2
        return lo, hi

    def distance(self, other: "ComplexApprox") -> mpmath.mpf:
        return mpmath.hypot(self.re - other.re, self.im - other.im)


def cyclo_embed(z: CycloInt, precision_bits: int = 128) -> ComplexApprox:
    """Enclosure of the image of z under zeta -> exp(2*pi*i/p)."""
    with mpmath.workprec(precision_bits + 24):
        re = mpmath.mpf(0)
        im = mpmath.mpf(0)
        scale = 0
        for k, c in enumerate(z.coeffs):
            if c:
                ang = 2 * mpmath.pi * k / z.p
                re += c * mpmath.cos(ang)
                im += c * mpmath.sin(ang)
                scale += abs(c)
        err = (scale + 1) * mpmath.mpf(2) ** (-precision_bits)
        return ComplexApprox(re, im, err)


def compare_abs(z1: CycloInt, z2: CycloInt, precision_bits: int = 128) -> int:
    """Order |z1| vs |z2|: -1, 0 or +1.

    Uses exact abs-squares when both are rational integers, otherwise interval
    enclosures; overlapping intervals of non-identical values are a hard
    failure rather than a guess.
    """
    a1, a2 = cyclo_abs2(z1), cyclo_abs2(z2)
    if a1 == a2:
        return 0
    if a1.is_rational() and a2.is_rational():
        return -1 if a1.as_int() < a2.as_int() else 1
    lo1, hi1 = cyclo_embed(z1, precision_bits).abs2_interval()
    lo2, hi2 = cyclo_embed(z2, precision_bits).abs2_interval()
    if hi1 < lo2:
        return -1
    if hi2 < lo1:
        return 1
    raise UndecidableComparison(
        f"|.|^2 intervals overlap at {precision_bits} bits; raise the precision"
    )
