"""Exact arithmetic in F_q and F_q[t].

The field F_q (q = p^e, p an odd prime) is realized with full lookup tables,
which is the right trade-off at desk scale: every element is addressed by an
integer index in 0..q-1, and FieldElem/Poly are thin immutable wrappers around
those indices.  Polynomials are dense ascending coefficient tuples with no
trailing zeros; the zero polynomial has degree -inf.

Everything here is pure and immutable, so values can be shared freely between
threads or worker processes.  Enumeration helpers take a (start, stride)
partition hint so callers can split the candidate domain.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .errors import (
    BadArgs,
    BothZero,
    DivisionByZero,
    NotCoprime,
    NotCoprimeModuli,
    NotIrreducible,
    ZeroInput,
)

NEG_INF = float("-inf")

_FIELD_CACHE: dict = {}


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class Field:
    """The finite field F_q with q = p^e, p an odd prime.

    For e > 1 a monic irreducible modulus over F_p of degree e must be
    supplied as a tuple of ints (ascending, length e+1).  Characteristic 2
    is rejected: the workbench divides by 2 and 4 throughout.
    """

    def __init__(self, p: int, e: int = 1, modulus: tuple[int, ...] | None = None):
        if not _is_prime(p):
            raise BadArgs(f"p={p} is not prime")
        if p == 2:
            raise BadArgs("characteristic 2 is not supported")
        if e < 1:
            raise BadArgs("extension degree must be >= 1")
        if e == 1:
            if modulus is not None:
                raise BadArgs("prime field takes no modulus")
            mod = None
        else:
            if modulus is None:
                raise BadArgs("extension field requires a modulus polynomial")
            mod = tuple(c % p for c in modulus)
            if len(mod) != e + 1 or mod[-1] != 1:
                raise BadArgs("modulus must be monic of degree e")
            if not _fp_poly_irreducible(mod, p):
                raise NotIrreducible("modulus is not irreducible over F_p")
        self.p = p
        self.e = e
        self.q = p**e
        self.modulus = mod
        self._build_tables()

    # -- table construction -------------------------------------------------

    def _rep(self, idx: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.e):
            out.append(idx % self.p)
            idx //= self.p
        return tuple(out)

    def _idx(self, rep) -> int:
        acc = 0
        for c in reversed(rep):
            acc = acc * self.p + (c % self.p)
        return acc

    def _build_tables(self):
        p, e, q = self.p, self.e, self.q
        reps = [self._rep(i) for i in range(q)]
        self._reps = reps
        self.add_t = [[0] * q for _ in range(q)]
        self.neg_t = [0] * q
        self.mul_t = [[0] * q for _ in range(q)]
        for i in range(q):
            ri = reps[i]
            self.neg_t[i] = self._idx(tuple((-c) % p for c in ri))
            for j in range(i, q):
                rj = reps[j]
                s = self._idx(tuple((a + b) % p for a, b in zip(ri, rj)))
                self.add_t[i][j] = s
                self.add_t[j][i] = s
        for i in range(q):
            for j in range(i, q):
                prod = self._mul_rep(reps[i], reps[j])
                self.mul_t[i][j] = prod
                self.mul_t[j][i] = prod
        self.inv_t = [0] * q
        for i in range(1, q):
            self.inv_t[i] = self._pow_idx(i, q - 2)
        # trace lands in the prime subfield; store it as an int mod p
        self.trace_t = [0] * q
        for i in range(q):
            acc = i
            tot = i
            for _ in range(e - 1):
                acc = self._pow_idx(acc, p)
                tot = self.add_t[tot][acc]
            rep = reps[tot]
            assert all(c == 0 for c in rep[1:]), "trace left the prime subfield"
            self.trace_t[i] = rep[0]
        squares: dict[int, list[int]] = {}
        for i in range(q):
            s = self.mul_t[i][i]
            squares.setdefault(s, []).append(i)
        self._square_set = frozenset(k for k in squares if k != 0)
        # canonical root: smaller representative tuple of the two
        self.sqrt_t = {s: min(roots, key=lambda r: reps[r]) for s, roots in squares.items()}

    def _mul_rep(self, ra, rb) -> int:
        p, e = self.p, self.e
        conv = [0] * (2 * e - 1)
        for i, a in enumerate(ra):
            if a:
                for j, b in enumerate(rb):
                    conv[i + j] = (conv[i + j] + a * b) % p
        if self.modulus is not None:
            mod = self.modulus
            for k in range(len(conv) - 1, e - 1, -1):
                c = conv[k]
                if c:
                    conv[k] = 0
                    for j in range(e):
                        conv[k - e + j] = (conv[k - e + j] - c * mod[j]) % p
        return self._idx(tuple(conv[:e]))

    def _pow_idx(self, i: int, n: int) -> int:
        acc = self._idx((1,) + (0,) * (self.e - 1))
        base = i
        while n:
            if n & 1:
                acc = self.mul_t[acc][base]
            base = self.mul_t[base][base]
            n >>= 1
        return acc

    # -- element and polynomial constructors --------------------------------

    def elem(self, value) -> "FieldElem":
        """Make a field element from an int (prime subfield), a coefficient
        sequence, or pass an existing FieldElem through."""
        if isinstance(value, FieldElem):
            if value.field is not self:
                raise BadArgs("element from a different field")
            return value
        if isinstance(value, int):
            return FieldElem(self, self._idx((value,) + (0,) * (self.e - 1)))
        return FieldElem(self, self._idx(tuple(value)))

    @property
    def zero(self) -> "FieldElem":
        return FieldElem(self, 0)

    @property
    def one(self) -> "FieldElem":
        return FieldElem(self, self._idx((1,) + (0,) * (self.e - 1)))

    def elements(self):
        return [FieldElem(self, i) for i in range(self.q)]

    def poly(self, coeffs) -> "Poly":
        """Polynomial from ascending coefficients (ints, reps, or FieldElems)."""
        return Poly(self, tuple(self.elem(c).idx for c in coeffs))

    @property
    def t(self) -> "Poly":
        return self.poly([0, 1])

    def key(self):
        return (self.p, self.e, self.modulus)

    def __repr__(self):
        if self.e == 1:
            return f"Field({self.p})"
        return f"Field({self.p}^{self.e})"


def field(p: int, e: int = 1, modulus=None) -> Field:
    """Cached Field factory; identical parameters give the identical object."""
    key = (p, e, tuple(modulus) if modulus is not None else None)
    f = _FIELD_CACHE.get(key)
    if f is None:
        f = Field(p, e, key[2])
        _FIELD_CACHE[key] = f
    return f


def _fp_poly_irreducible(mod: tuple[int, ...], p: int) -> bool:
    """Irreducibility over F_p by trial division (modulus degrees are tiny)."""
    d = len(mod) - 1
    if d < 1:
        return False

    def divides(div):
        rem = list(mod)
        dd = len(div) - 1
        inv_lead = pow(div[-1], p - 2, p)
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k]
            if c:
                f = c * inv_lead % p
                for j in range(dd + 1):
                    rem[k - dd + j] = (rem[k - dd + j] - f * div[j]) % p
        return all(c == 0 for c in rem)

    for deg in range(1, d // 2 + 1):
        for tail in itertools.product(range(p), repeat=deg):
            if divides(tuple(tail) + (1,)):
                return False
    return True


class FieldElem:
    """Element of F_q, addressed by its table index."""

    __slots__ = ("field", "idx")

    def __init__(self, field: Field, idx: int):
        self.field = field
        self.idx = idx

    @property
    def rep(self) -> tuple[int, ...]:
        """Coefficient sequence over Z/p (constant coefficient first)."""
        return self.field._reps[self.idx]

    def __add__(self, other):
        return FieldElem(self.field, self.field.add_t[self.idx][other.idx])

    def __sub__(self, other):
        return FieldElem(self.field, self.field.add_t[self.idx][self.field.neg_t[other.idx]])

    def __neg__(self):
        return FieldElem(self.field, self.field.neg_t[self.idx])

    def __mul__(self, other):
        return FieldElem(self.field, self.field.mul_t[self.idx][other.idx])

    def inv(self) -> "FieldElem":
        if self.idx == 0:
            raise DivisionByZero("inverse of 0")
        return FieldElem(self.field, self.field.inv_t[self.idx])

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        return FieldElem(self.field, self.field._pow_idx(self.idx, n))

    def __bool__(self):
        return self.idx != 0

    def __eq__(self, other):
        return (
            isinstance(other, FieldElem)
            and self.field is other.field
            and self.idx == other.idx
        )

    def __hash__(self):
        return hash((id(self.field), self.idx))

    def is_square(self) -> bool:
        """Whether this is a square in F_q (0 counts as a square)."""
        return self.idx == 0 or self.idx in self.field._square_set

    def sqrt(self) -> "FieldElem":
        """Canonical square root: the root with the smaller representative."""
        if not self.is_square():
            raise BadArgs("element is not a square")
        return FieldElem(self.field, self.field.sqrt_t[self.idx])

    def __repr__(self):
        if self.field.e == 1:
            return str(self.rep[0])
        return "[" + ",".join(str(c) for c in self.rep) + "]"


def trace(a: FieldElem) -> int:
    """Trace F_q -> F_p, returned as an int in 0..p-1."""
    return a.field.trace_t[a.idx]


def s_sign(c: FieldElem) -> int:
    """+1 if c is a square in F_q^*, -1 otherwise."""
    if c.idx == 0:
        raise ZeroInput("sign of 0 is undefined")
    return 1 if c.idx in c.field._square_set else -1


# ---------------------------------------------------------------------------
# polynomials


class Poly:
    """Element of F_q[t] as an ascending coefficient tuple (indices)."""

    __slots__ = ("field", "_c")

    def __init__(self, field: Field, coeffs: tuple[int, ...]):
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        self.field = field
        self._c = coeffs

    @property
    def coeffs(self) -> tuple[FieldElem, ...]:
        return tuple(FieldElem(self.field, i) for i in self._c)

    @property
    def deg(self):
        return len(self._c) - 1 if self._c else NEG_INF

    def is_zero(self) -> bool:
        return not self._c

    def is_one(self) -> bool:
        return self._c == (self.field.one.idx,)

    def is_monic(self) -> bool:
        return bool(self._c) and self._c[-1] == self.field.one.idx

    def lead(self) -> FieldElem:
        if not self._c:
            raise ZeroInput("leading coefficient of 0")
        return FieldElem(self.field, self._c[-1])

    def coeff(self, j: int) -> FieldElem:
        if 0 <= j < len(self._c):
            return FieldElem(self.field, self._c[j])
        return self.field.zero

    def __add__(self, other):
        f = self.field
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = f.add_t[out[i]][c]
        return Poly(f, tuple(out))

    def __neg__(self):
        f = self.field
        return Poly(f, tuple(f.neg_t[c] for c in self._c))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        f = self.field
        if isinstance(other, FieldElem):
            return self.scale(other)
        a, b = self._c, other._c
        if not a or not b:
            return Poly(f, ())
        out = [0] * (len(a) + len(b) - 1)
        mul_t, add_t = f.mul_t, f.add_t
        for i, ca in enumerate(a):
            if ca:
                row = mul_t[ca]
                for j, cb in enumerate(b):
                    if cb:
                        out[i + j] = add_t[out[i + j]][row[cb]]
        return Poly(f, tuple(out))

    def scale(self, c: FieldElem) -> "Poly":
        f = self.field
        row = f.mul_t[c.idx]
        return Poly(f, tuple(row[x] for x in self._c))

    def __pow__(self, n: int):
        acc = Poly(self.field, (self.field.one.idx,))
        base = self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    def shift(self, k: int) -> "Poly":
        """Multiply by t^k (k >= 0)."""
        if not self._c:
            return self
        return Poly(self.field, (0,) * k + self._c)

    def monic(self) -> "Poly":
        if not self._c:
            return self
        return self.scale(self.lead().inv())

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.field is other.field
            and self._c == other._c
        )

    def __hash__(self):
        return hash((id(self.field), self._c))

    def sort_key(self):
        """Canonical order: degree, then lexicographic on the ascending
        coefficient representatives."""
        return (len(self._c), tuple(self.field._reps[c] for c in self._c))

    def __repr__(self):
        return poly_pretty(self)


def poly_divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    """Quotient and remainder with deg r < deg b."""
    if b.is_zero():
        raise DivisionByZero("polynomial division by zero")
    f = a.field
    if a.deg < b.deg:
        return Poly(f, ()), a
    rem = list(a._c)
    db = len(b._c) - 1
    inv_lead = f.inv_t[b._c[-1]]
    quot = [0] * (len(rem) - db)
    mul_t, add_t, neg_t = f.mul_t, f.add_t, f.neg_t
    for k in range(len(rem) - 1, db - 1, -1):
        c = rem[k]
        if c:
            qc = mul_t[c][inv_lead]
            quot[k - db] = qc
            row = mul_t[qc]
            for j in range(db + 1):
                rem[k - db + j] = add_t[rem[k - db + j]][neg_t[row[b._c[j]]]]
    return Poly(f, tuple(quot)), Poly(f, tuple(rem[:db]))


def poly_mod(a: Poly, b: Poly) -> Poly:
    return poly_divmod(a, b)[1]


def poly_xgcd(a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    """(g, s, u) with s*a + u*b = g and g monic."""
    if a.is_zero() and b.is_zero():
        raise BothZero("gcd(0, 0)")
    f = a.field
    one = Poly(f, (f.one.idx,))
    zero = Poly(f, ())
    r0, r1 = a, b
    s0, s1 = one, zero
    u0, u1 = zero, one
    while not r1.is_zero():
        q, r = poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        u0, u1 = u1, u0 - q * u1
    c = r0.lead().inv()
    return r0.scale(c), s0.scale(c), u0.scale(c)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    if a.is_zero() and b.is_zero():
        raise BothZero("gcd(0, 0)")
    r0, r1 = a, b
    while not r1.is_zero():
        r0, r1 = r1, poly_mod(r0, r1)
    return r0.monic()


def poly_coprime(a: Poly, b: Poly) -> bool:
    if a.is_zero() and b.is_zero():
        return False
    return poly_gcd(a, b).is_one()


def poly_invmod(a: Poly, m: Poly) -> Poly:
    """Inverse of a modulo m; requires gcd(a, m) = 1."""
    g, s, _ = poly_xgcd(a, m)
    if not g.is_one():
        raise NotCoprime(f"{a!r} is not invertible mod {m!r}")
    return poly_mod(s, m)


def poly_powmod(a: Poly, n: int, m: Poly) -> Poly:
    acc = Poly(a.field, (a.field.one.idx,))
    base = poly_mod(a, m)
    while n:
        if n & 1:
            acc = poly_mod(acc * base, m)
        base = poly_mod(base * base, m)
        n >>= 1
    return acc


def crt(residues) -> Poly:
    """Solve x = r_i mod m_i for pairwise coprime moduli; the result is the
    unique representative with deg x < deg(prod m_i)."""
    residues = list(residues)
    if not residues:
        raise BadArgs("empty congruence system")
    x, m = residues[0]
    x = poly_mod(x, m)
    for r, mi in residues[1:]:
        g, s, u = poly_xgcd(m, mi)
        if not g.is_one():
            raise NotCoprimeModuli("moduli are not pairwise coprime")
        # x' = x + m * s * (r - x)  solves both congruences
        x = x + m * poly_mod(s * (r - x), mi)
        m = m * mi
        x = poly_mod(x, m)
    return x


# ---------------------------------------------------------------------------
# residue and polynomial enumeration


def polys_of_degree_below(field: Field, bound: int):
    """All polynomials with deg < bound (includes 0); bound <= 0 gives [0].

    Ordered by the base-q digit encoding (constant coefficient fastest), so
    position k holds the polynomial whose ascending coefficients are the
    base-q digits of k.
    """
    if bound <= 0:
        return [Poly(field, ())]
    out = []
    for k in range(field.q**bound):
        tail = []
        for _ in range(bound):
            tail.append(k % field.q)
            k //= field.q
        out.append(Poly(field, tuple(tail)))
    return out


def monic_polys(field: Field, d: int, start: int = 0, stride: int = 1):
    """Monic polynomials of degree d in canonical order, optionally only
    every stride-th candidate starting at index start."""
    if d < 0:
        raise BadArgs("degree must be >= 0")
    one = field.one.idx
    out = []
    n = field.q**d
    for i in range(start, n, stride):
        tail = []
        k = i
        for _ in range(d):
            tail.append(k % field.q)
            k //= field.q
        out.append(Poly(field, tuple(tail) + (one,)))
    out.sort(key=Poly.sort_key)
    return out


def residues_mod(m: Poly):
    """All residues mod m, i.e. polynomials of degree < deg m."""
    if m.is_zero():
        raise DivisionByZero("residues mod 0")
    return polys_of_degree_below(m.field, len(m._c) - 1)


def _moebius(n: int) -> int:
    if n == 1:
        return 1
    m = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            m = -m
        d += 1
    if n > 1:
        m = -m
    return m


def irreducible_count_formula(field: Field, d: int) -> int:
    """Number of monic irreducibles of degree d by Moebius inversion."""
    q = field.q
    total = sum(_moebius(e) * q ** (d // e) for e in range(1, d + 1) if d % e == 0)
    return total // d


@lru_cache(maxsize=None)
def _irreducibles_cached(field_key, d):
    f = _FIELD_CACHE[field_key]
    return tuple(_enum_irreducibles(f, d))


def _enum_irreducibles(field: Field, d: int):
    if field.q**d <= 4096:
        cands = monic_polys(field, d)
        return [f for f in cands if _is_irreducible_trial(f)]
    return _enum_irreducibles_vectorized(field, d)


def _is_irreducible_trial(f: Poly) -> bool:
    d = len(f._c) - 1
    if d == 0:
        return False
    for k in range(1, d // 2 + 1):
        for p in enum_monic_irreducibles(f.field, k):
            if poly_mod(f, p).is_zero():
                return False
    return True


def _enum_irreducibles_vectorized(field: Field, d: int):
    # Sieve all monic degree-d candidates by vectorized trial division.
    import numpy as np

    q = field.q
    mul = np.array(field.mul_t, dtype=np.int16)
    add = np.array(field.add_t, dtype=np.int16)
    neg = np.array(field.neg_t, dtype=np.int16)
    inv = np.array(field.inv_t, dtype=np.int16)

    n = q**d
    idx = np.arange(n, dtype=np.int64)
    coeffs = np.empty((n, d + 1), dtype=np.int16)
    rem = idx
    for j in range(d):
        coeffs[:, j] = rem % q
        rem = rem // q
    coeffs[:, d] = field.one.idx

    alive = np.ones(n, dtype=bool)
    for k in range(1, d // 2 + 1):
        for p in enum_monic_irreducibles(field, k):
            pc = np.array(p._c, dtype=np.int16)
            cur = coeffs[alive]
            r = cur.copy()
            for top in range(d, k - 1, -1):
                c = r[:, top]
                nzmask = c != 0
                if not nzmask.any():
                    continue
                fac = mul[c, inv[pc[-1]]]
                for j in range(k + 1):
                    r[:, top - k + j] = add[r[:, top - k + j], neg[mul[fac, pc[j]]]]
                r[:, top] = 0
            divisible = (r[:, :k] == 0).all(axis=1)
            sub = np.flatnonzero(alive)
            alive[sub[divisible]] = False
    out = [Poly(field, tuple(int(c) for c in coeffs[i])) for i in np.flatnonzero(alive)]
    out.sort(key=Poly.sort_key)
    return out


def enum_monic_irreducibles(field: Field, d: int, start: int = 0, stride: int = 1):
    """All monic irreducible polynomials of degree d, canonically sorted."""
    if d < 1:
        raise BadArgs("degree must be >= 1")
    full = _irreducibles_cached(field.key(), d)
    if start == 0 and stride == 1:
        return list(full)
    return [f for i, f in enumerate(full) if i % stride == start % stride]


def is_irreducible(f: Poly) -> bool:
    if f.is_zero() or f.deg < 1:
        return False
    return _is_irreducible_trial(f.monic())


@dataclass(frozen=True)
class Factorization:
    """unit * prod(factor^multiplicity), factors monic irreducible and sorted."""

    unit: FieldElem
    factors: tuple[tuple[Poly, int], ...]

    def value(self) -> Poly:
        f = None
        for p, m in self.factors:
            pm = p**m
            f = pm if f is None else f * pm
        if f is None:
            f = Poly(self.unit.field, (self.unit.field.one.idx,))
        return f.scale(self.unit)


def factor(f: Poly) -> Factorization:
    """Exact factorization by trial division against enumerated irreducibles."""
    if f.is_zero():
        raise ZeroInput("cannot factor 0")
    unit = f.lead()
    rem = f.monic()
    found: list[tuple[Poly, int]] = []
    d = 1
    while rem.deg >= 1 and d <= rem.deg // 2:
        for p in enum_monic_irreducibles(f.field, d):
            if p.deg > rem.deg // 2:
                break
            mult = 0
            while True:
                q, r = poly_divmod(rem, p)
                if r.is_zero():
                    rem = q
                    mult += 1
                else:
                    break
            if mult:
                found.append((p, mult))
        d += 1
    if rem.deg >= 1:
        found.append((rem, 1))
    found.sort(key=lambda pm: pm[0].sort_key())
    return Factorization(unit, tuple(found))


def monic_divisors(f: Poly):
    """All monic divisors of f (including 1 and the monic part of f)."""
    fac = factor(f)
    divs = [Poly(f.field, (f.field.one.idx,))]
    for p, m in fac.factors:
        new = []
        pk = Poly(f.field, (f.field.one.idx,))
        for _ in range(m + 1):
            new.extend(d * pk for d in divs)
            pk = pk * p
        divs = new
    divs.sort(key=Poly.sort_key)
    return divs


def tau_count(l: Poly) -> int:
    """Number of divisors, unit multiples included: (q-1) * #monic divisors."""
    if l.is_zero():
        raise ZeroInput("tau of 0")
    return (l.field.q - 1) * len(monic_divisors(l))


def omega_count(k: Poly) -> int:
    """Number of distinct monic irreducible factors."""
    if k.is_zero():
        raise ZeroInput("omega of 0")
    return len(factor(k).factors)


def euler_phi(f: Poly) -> int:
    """Number of residues mod f coprime to f."""
    if f.is_zero():
        raise ZeroInput("phi of 0")
    q = f.field.q
    out = 1
    for p, m in factor(f).factors:
        pd = q ** int(p.deg)
        out *= pd ** (m - 1) * (pd - 1)
    return out


def legendre(alpha: Poly, P: Poly) -> int:
    """Legendre symbol for F_q[t]: +1 iff alpha is a square mod the monic
    irreducible P.  Euler criterion alpha^((q^deg P - 1)/2) mod P."""
    if not (P.is_monic() and is_irreducible(P)):
        raise NotIrreducible(f"{P!r} is not monic irreducible")
    if not poly_coprime(alpha, P):
        raise NotCoprime("legendre symbol needs gcd(alpha, P) = 1")
    n = (alpha.field.q ** int(P.deg) - 1) // 2
    r = poly_powmod(alpha, n, P)
    if r.is_one():
        return 1
    if (r + Poly(P.field, (P.field.one.idx,))).is_zero():
        return -1
    raise NotIrreducible(f"Euler criterion failed; {P!r} is not irreducible")


# ---------------------------------------------------------------------------
# text format

ZERO_POLY_TOKEN = "0-poly"


def poly_to_text(f: Poly) -> str:
    """Bit-exact text form: ascending coefficients, comma separated; prime
    field coefficients as ints, extension coefficients bracketed."""
    if f.is_zero():
        return ZERO_POLY_TOKEN
    if f.field.e == 1:
        return ",".join(str(f.field._reps[c][0]) for c in f._c)
    return ",".join("[" + ",".join(map(str, f.field._reps[c])) + "]" for c in f._c)


def poly_from_text(field: Field, text: str) -> Poly:
    text = text.strip()
    if text == ZERO_POLY_TOKEN or text == "":
        return Poly(field, ())
    if field.e == 1:
        return field.poly([int(c) for c in text.split(",")])
    parts = []
    buf = ""
    depth = 0
    for ch in text:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append(buf)
            buf = ""
        else:
            buf += ch
    parts.append(buf)
    coeffs = []
    for p in parts:
        p = p.strip()
        if not (p.startswith("[") and p.endswith("]")):
            raise BadArgs(f"bad extension coefficient {p!r}")
        coeffs.append([int(c) for c in p[1:-1].split(",")])
    return field.poly(coeffs)


def poly_pretty(f: Poly) -> str:
    """Human-readable t-notation."""
    if f.is_zero():
        return "0"
    terms = []
    for j in range(len(f._c) - 1, -1, -1):
        c = f._c[j]
        if c == 0:
            continue
        rep = f.field._reps[c]
        cs = str(rep[0]) if f.field.e == 1 else "[" + ",".join(map(str, rep)) + "]"
        if j == 0:
            terms.append(cs)
        else:
            tpow = "t" if j == 1 else f"t^{j}"
            terms.append(tpow if cs == "1" else f"{cs}*{tpow}")
    return " + ".join(terms)
