"""Truncated Laurent series in 1/t: the completion of F_q(t) at infinity.

Precision model
---------------
Every value carries a *floor* ``lo``: all coefficients at exponents >= lo are
certified (stored entries, zeros elsewhere in the window); below the floor
nothing is known.  ``lo = -inf`` marks an exact element (all omitted
coefficients are exactly zero).  Arithmetic propagates floors pessimistically,
and any query whose answer is not certified at the current floor raises
PrecisionError instead of guessing -- silent truncation would corrupt the norm
comparisons the sieve counting relies on.

A value whose certified window is entirely zero but whose floor is finite is a
"zero window": it satisfies |x| <= q^(lo-1) but cannot be certified to be the
exact zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import NEG_INF, Field, FieldElem, Poly, poly_gcd
from .errors import BadArgs, DivisionByZero, NotASquare, PrecisionError


class Laurent:
    """Element of F_q((1/t)) known down to exponent ``lo``."""

    __slots__ = ("field", "hi", "_c", "lo")

    def __init__(self, field: Field, hi: int, coeffs: tuple[int, ...], lo):
        # canonicalize: strip leading and trailing zero coefficients
        i = 0
        while i < len(coeffs) and coeffs[i] == 0:
            i += 1
        coeffs = coeffs[i:]
        hi -= i
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        if lo is not NEG_INF:
            lo = int(lo)
        self.field = field
        self.hi = hi if coeffs else None
        self._c = coeffs
        self.lo = lo

    # -- constructors --------------------------------------------------------

    @classmethod
    def from_map(cls, field: Field, cmap: dict[int, int], lo) -> "Laurent":
        if not cmap:
            return cls(field, 0, (), lo)
        hi = max(cmap)
        low = min(cmap)
        coeffs = tuple(cmap.get(j, 0) for j in range(hi, low - 1, -1))
        return cls(field, hi, coeffs, lo)

    @classmethod
    def from_poly(cls, f: Poly) -> "Laurent":
        c = tuple(reversed(f._c))
        return cls(f.field, len(f._c) - 1, c, NEG_INF)

    @classmethod
    def zero(cls, field: Field) -> "Laurent":
        return cls(field, 0, (), NEG_INF)

    @classmethod
    def one(cls, field: Field) -> "Laurent":
        return cls(field, 0, (field.one.idx,), NEG_INF)

    # -- basic queries ---------------------------------------------------------

    def is_exact(self) -> bool:
        return self.lo is NEG_INF

    def is_exact_zero(self) -> bool:
        return not self._c and self.is_exact()

    def is_zero_window(self) -> bool:
        return not self._c and not self.is_exact()

    def degree(self):
        """Exponent of the leading coefficient; -inf for exact zero."""
        if self._c:
            return self.hi
        if self.is_exact():
            return NEG_INF
        raise PrecisionError(
            f"all certified coefficients are zero down to exponent {self.lo}"
        )

    def ub_degree(self):
        """Certified upper bound on the degree."""
        if self._c:
            return self.hi
        if self.is_exact():
            return NEG_INF
        return self.lo - 1

    def coeff_at(self, j: int) -> FieldElem:
        if self._c and self.hi - len(self._c) + 1 <= j <= self.hi:
            return FieldElem(self.field, self._c[self.hi - j])
        if self.is_exact() or j >= self.lo:
            return self.field.zero
        raise PrecisionError(f"coefficient at exponent {j} is below the floor {self.lo}")

    def as_map(self) -> dict[int, int]:
        if not self._c:
            return {}
        return {self.hi - k: c for k, c in enumerate(self._c) if c}

    # -- arithmetic ------------------------------------------------------------

    def __add__(self, other: "Laurent") -> "Laurent":
        if self.field is not other.field:
            raise BadArgs("mixed fields")
        lo = _floor_max(self.lo, other.lo)
        out = self.as_map()
        add_t = self.field.add_t
        for j, c in other.as_map().items():
            out[j] = add_t[out.get(j, 0)][c]
        if lo is not NEG_INF:
            out = {j: c for j, c in out.items() if j >= lo}
        return Laurent.from_map(self.field, {j: c for j, c in out.items() if c}, lo)

    def __neg__(self) -> "Laurent":
        neg_t = self.field.neg_t
        return Laurent(self.field, self.hi if self._c else 0,
                       tuple(neg_t[c] for c in self._c), self.lo)

    def __sub__(self, other: "Laurent") -> "Laurent":
        return self + (-other)

    def __mul__(self, other: "Laurent") -> "Laurent":
        if self.field is not other.field:
            raise BadArgs("mixed fields")
        if self.is_exact_zero() or other.is_exact_zero():
            return Laurent.zero(self.field)
        lo = NEG_INF
        if other.lo is not NEG_INF:
            lo = _floor_max(lo, self.ub_degree() + other.lo)
        if self.lo is not NEG_INF:
            lo = _floor_max(lo, other.ub_degree() + self.lo)
        f = self.field
        out: dict[int, int] = {}
        add_t, mul_t = f.add_t, f.mul_t
        amap = self.as_map()
        for j2, c2 in other.as_map().items():
            row = mul_t[c2]
            for j1, c1 in amap.items():
                j = j1 + j2
                if lo is NEG_INF or j >= lo:
                    out[j] = add_t[out.get(j, 0)][row[c1]]
        return Laurent.from_map(f, {j: c for j, c in out.items() if c}, lo)

    def scale(self, c: FieldElem) -> "Laurent":
        row = self.field.mul_t[c.idx]
        return Laurent(self.field, self.hi if self._c else 0,
                       tuple(row[x] for x in self._c), self.lo)

    def shift(self, k: int) -> "Laurent":
        """Multiply by t^k."""
        lo = self.lo if self.lo is NEG_INF else self.lo + k
        return Laurent(self.field, (self.hi if self._c else 0) + k, self._c, lo)

    def truncate(self, lo: int) -> "Laurent":
        """Forget coefficients below ``lo`` (raise the floor)."""
        if self.lo is not NEG_INF and lo < self.lo:
            raise PrecisionError("cannot lower a floor by truncation")
        cmap = {j: c for j, c in self.as_map().items() if j >= lo}
        return Laurent.from_map(self.field, cmap, lo)

    def __eq__(self, other):
        return (
            isinstance(other, Laurent)
            and self.field is other.field
            and self.lo == other.lo
            and self._c == other._c
            and (self.hi == other.hi or not self._c)
        )

    def __hash__(self):
        return hash((id(self.field), self.hi if self._c else None, self._c, self.lo))

    def __repr__(self):
        return laurent_to_text(self)


def _floor_max(a, b):
    if a is NEG_INF:
        return b
    if b is NEG_INF:
        return a
    return max(a, b)


# ---------------------------------------------------------------------------
# norms and fractional part


def abs_inf(x: Laurent) -> Fraction:
    """|x| = q^deg(x); 0 for the exact zero."""
    d = x.degree()
    if d is NEG_INF:
        return Fraction(0)
    return Fraction(x.field.q) ** d


def abs_le(x: Laurent, exp: int) -> bool:
    """Decide |x| <= q^exp, raising PrecisionError when undecidable."""
    if x._c:
        return x.hi <= exp
    if x.is_exact():
        return True
    if x.lo - 1 <= exp:
        return True
    raise PrecisionError(f"cannot decide |x| <= q^{exp} at floor {x.lo}")


def frac_part(x: Laurent) -> Laurent:
    """Drop all coefficients at exponents >= 0."""
    if x._c and x.hi >= 0:
        if x.lo is not NEG_INF and x.lo > 0:
            raise PrecisionError("polynomial part is not fully certified")
        cmap = {j: c for j, c in x.as_map().items() if j <= -1}
        return Laurent.from_map(x.field, cmap, x.lo)
    if x.is_zero_window() and x.lo > 0:
        raise PrecisionError("polynomial part is not fully certified")
    return x


def torus_norm(x: Laurent) -> Fraction:
    """Distance to the nearest polynomial: |{x}|; always <= 1/q."""
    return abs_inf(frac_part(x))


# ---------------------------------------------------------------------------
# series division and fraction expansion


def _series_div(field: Field, num: dict[int, int], den: dict[int, int], lo):
    """Series of num/den down to exponent ``lo``, treating both maps as exact.
    Returns (coeff map, exact: bool)."""
    if not den:
        raise DivisionByZero("series division by zero")
    dh = max(den)
    dlead_inv = field.inv_t[den[dh]]
    rem = dict(num)
    out: dict[int, int] = {}
    add_t, mul_t, neg_t = field.add_t, field.mul_t, field.neg_t
    while rem:
        k = max(rem)
        e = k - dh
        if e < lo:
            return out, False
        c = mul_t[rem[k]][dlead_inv]
        out[e] = c
        row = mul_t[c]
        for j, dcoef in den.items():
            jj = e + j
            v = add_t[rem.get(jj, 0)][neg_t[row[dcoef]]]
            if v:
                rem[jj] = v
            else:
                rem.pop(jj, None)
    return out, True


def expand_fraction(r: Poly, f: Poly, lo: int) -> Laurent:
    """Laurent expansion of r/f certified down to exponent ``lo``."""
    if f.is_zero():
        raise DivisionByZero("expansion of r/0")
    if r.is_zero():
        return Laurent.zero(r.field)
    num = {j: c for j, c in enumerate(r._c) if c}
    den = {j: c for j, c in enumerate(f._c) if c}
    out, exact = _series_div(r.field, num, den, lo)
    return Laurent.from_map(r.field, out, NEG_INF if exact else lo)


def inv_laurent(x: Laurent, lo: int | None = None) -> Laurent:
    """Multiplicative inverse.  For inexact x the attainable floor is
    lo(x) - 2*deg(x); a requested ``lo`` may only be shallower."""
    d = x.degree()
    if d is NEG_INF:
        raise DivisionByZero("inverse of exact zero")
    if x.is_exact():
        if lo is None:
            raise PrecisionError("inverse of an exact series needs a target floor")
        target = lo
        exact_in = True
    else:
        attainable = x.lo - 2 * x.hi
        target = attainable if lo is None else max(lo, attainable)
        exact_in = False
    one = {0: x.field.one.idx}
    out, exact = _series_div(x.field, one, x.as_map(), target)
    return Laurent.from_map(x.field, out, NEG_INF if (exact and exact_in) else target)


def div_laurent(a: Laurent, b: Laurent, lo: int | None = None) -> Laurent:
    """a/b with pessimistic floor propagation."""
    d = b.degree()
    if d is NEG_INF:
        raise DivisionByZero("division by exact zero")
    if a.is_exact_zero():
        return Laurent.zero(a.field)
    floor = NEG_INF
    if b.lo is not NEG_INF:
        floor = _floor_max(floor, a.ub_degree() + b.lo - 2 * b.hi)
    if a.lo is not NEG_INF:
        floor = _floor_max(floor, a.lo - b.hi)
    if floor is NEG_INF:
        if lo is None:
            raise PrecisionError("division of exact series needs a target floor")
        target = lo
    else:
        target = floor if lo is None else max(lo, floor)
    out, exact = _series_div(a.field, a.as_map(), b.as_map(), target)
    is_exact = exact and a.is_exact() and b.is_exact()
    return Laurent.from_map(a.field, out, NEG_INF if is_exact else target)


# ---------------------------------------------------------------------------
# square roots


def sqrt_laurent(y: Laurent, lo: int | None = None) -> Laurent:
    """Square root with the canonical leading coefficient (the root of the
    leading coefficient with the smaller representative).

    Squares are exactly the elements with even degree and square leading
    coefficient; everything else raises NotASquare.
    """
    if y.is_exact_zero():
        return y
    d = y.degree()  # PrecisionError on an uncertified zero window
    if d % 2 != 0:
        raise NotASquare("odd degree")
    clead = FieldElem(y.field, y._c[0])
    if not clead.is_square():
        raise NotASquare("leading coefficient is not a square")
    h = d // 2
    f = y.field
    slead = clead.sqrt()
    if y.is_exact():
        low = min(y.as_map())
        if (d - low) % 2 == 0:
            cand = _sqrt_window(y, h, slead, low - h)
            if cand * cand == y:
                return cand
        if lo is None:
            raise PrecisionError("square root of this exact series needs a target floor")
        target = lo
        result_exact = False
    else:
        attainable = y.lo - h
        target = attainable if lo is None else max(lo, attainable)
        result_exact = False
    s = _sqrt_window(y, h, slead, target)
    return s if result_exact else Laurent.from_map(f, s.as_map(), target)


def _sqrt_window(y: Laurent, h: int, slead: FieldElem, lo: int) -> Laurent:
    """Coefficient recursion for sqrt down to exponent ``lo`` (char != 2)."""
    f = y.field
    s: dict[int, int] = {h: slead.idx}
    inv2lead = (f.elem(2) * slead).inv()
    ymap = y.as_map()
    m = h - 1
    while m >= lo:
        acc = f.zero
        i = m + 1
        j = h + m - i
        while i < j:
            if i in s and j in s:
                acc = acc + f.elem(2) * FieldElem(f, s[i]) * FieldElem(f, s[j])
            i += 1
            j -= 1
        if i == j and i in s:
            acc = acc + FieldElem(f, s[i]) * FieldElem(f, s[i])
        target = FieldElem(f, ymap.get(h + m, 0))
        cm = (target - acc) * inv2lead
        if cm.idx:
            s[m] = cm.idx
        m -= 1
    return Laurent.from_map(f, s, NEG_INF)


# ---------------------------------------------------------------------------
# polynomial part and Dirichlet approximation


def poly_part(x: Laurent) -> Poly:
    """The polynomial obtained from coefficients at exponents >= 0."""
    if x._c and x.hi >= 0:
        if x.lo is not NEG_INF and x.lo > 0:
            raise PrecisionError("polynomial part is not fully certified")
        coeffs = [0] * (x.hi + 1)
        for j, c in x.as_map().items():
            if j >= 0:
                coeffs[j] = c
        return Poly(x.field, tuple(coeffs))
    if x.is_zero_window() and x.lo > 0:
        raise PrecisionError("polynomial part is not fully certified")
    return Poly(x.field, ())


def dirichlet_approx(x: Laurent, l: int) -> tuple[Poly, Poly]:
    """Best rational approximation via the continued fraction expansion:
    coprime (u, v) with |v| <= q^l and |v*x - u| < q^(-l).

    The convergents of the continued fraction over F_q[t] are exactly the
    best approximations, so walking them until the denominator degree would
    exceed l yields a valid pair; the result is re-verified exactly before
    being returned.
    """
    if l < 0:
        raise BadArgs("l must be a nonnegative integer")
    if not x.is_exact() and x.lo > -2 * l - 2:
        raise PrecisionError(f"floor {x.lo} is too shallow for l={l}")
    f = x.field
    one = Poly(f, (f.one.idx,))
    zero = Poly(f, ())
    a0 = poly_part(x)
    u_prev, v_prev = one, zero
    u, v = a0, one
    y = x - Laurent.from_poly(a0)
    while True:
        if y.is_exact_zero() or y.is_zero_window():
            break
        yinv = inv_laurent(y, lo=None if not y.is_exact() else -(2 * l + 2))
        a = poly_part(yinv)
        v_next = a * v + v_prev
        if v_next.deg > l:
            break
        u_next = a * u + u_prev
        u_prev, v_prev, u, v = u, v, u_next, v_next
        y = yinv - Laurent.from_poly(a)
    w = Laurent.from_poly(v) * x - Laurent.from_poly(u)
    if not w.is_exact_zero():
        if not abs_le(w, -l - 1) or not abs_le(w, -l):
            raise PrecisionError("could not certify the approximation inequality")
        if w._c and w.hi >= -l:
            raise PrecisionError("continued fraction did not reach the target quality")
    if v.deg > l:
        raise PrecisionError("denominator degree bound violated")
    if not poly_gcd(u if not u.is_zero() else one, v).is_one() and not u.is_zero():
        raise PrecisionError("convergent is not reduced")
    return u, v


# ---------------------------------------------------------------------------
# balls


@dataclass(frozen=True)
class Ball:
    """Closed ball {y : |y - center| <= q^radius_exp}."""

    center: Laurent
    radius_exp: int

    def contains(self, y: Laurent) -> bool:
        return abs_le(y - self.center, self.radius_exp)


def ball_measure(b: Ball) -> Fraction:
    """Haar measure of a ball of radius q^n is q^(n+1)."""
    return Fraction(b.center.field.q) ** (b.radius_exp + 1)


# ---------------------------------------------------------------------------
# text formats


def laurent_to_text(x: Laurent) -> str:
    """Bit-exact form "hi=<int>;lo=<int>;coeffs=<comma list descending>"."""
    f = x.field

    def fmt(cidx: int) -> str:
        rep = f._reps[cidx]
        if f.e == 1:
            return str(rep[0])
        return "[" + ",".join(map(str, rep)) + "]"

    lo_s = "-inf" if x.is_exact() else str(x.lo)
    if x._c:
        hi = x.hi
        low = x.lo if not x.is_exact() else hi - len(x._c) + 1
        window = [x.as_map().get(j, 0) for j in range(hi, low - 1, -1)]
        return f"hi={hi};lo={lo_s};coeffs=" + ",".join(fmt(c) for c in window)
    if x.is_exact():
        return f"hi=-1;lo=-inf;coeffs="
    return f"hi={x.lo};lo={lo_s};coeffs=0" if f.e == 1 else f"hi={x.lo};lo={lo_s};coeffs=[0{',0' * (f.e - 1)}]"


def laurent_from_text(field: Field, text: str) -> Laurent:
    parts = dict(kv.split("=", 1) for kv in text.strip().split(";"))
    hi = int(parts["hi"])
    lo = NEG_INF if parts["lo"] == "-inf" else int(parts["lo"])
    raw = parts.get("coeffs", "")
    if not raw:
        return Laurent(field, 0, (), lo)
    if field.e == 1:
        idxs = tuple(field.elem(int(c)).idx for c in raw.split(","))
    else:
        items = []
        buf = ""
        depth = 0
        for ch in raw:
            if ch == "[":
                depth += 1
            elif ch == "]":
                depth -= 1
            if ch == "," and depth == 0:
                items.append(buf)
                buf = ""
            else:
                buf += ch
        items.append(buf)
        idxs = tuple(field.elem([int(c) for c in it.strip()[1:-1].split(",")]).idx for it in items)
    return Laurent(field, hi, idxs, lo)


def ball_to_text(b: Ball) -> str:
    return f"{laurent_to_text(b.center)}|{b.radius_exp}"


def ball_from_text(field: Field, text: str) -> Ball:
    center_s, radius_s = text.rsplit("|", 1)
    return Ball(laurent_from_text(field, center_s), int(radius_s))
