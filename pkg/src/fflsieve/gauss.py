"""Quadratic Gauss sums G(alpha, l; beta) = sum_{d mod beta} e((alpha*d^2 + l*d)/beta).

Two evaluation routes are kept deliberately independent:

* ``gauss_brute`` sums term by term over a full residue system (the oracle);
* ``gauss_fast`` applies the identity chain -- complete the square to remove
  the linear term, split multiplicatively over coprime factors, reduce prime
  powers two exponents at a time, pull out a Legendre symbol -- and bottoms
  out in brute-force evaluation of G(1, 0; P) for irreducible P.  The modulus
  of a sum is known in closed form, but its argument is not, so every fast
  path must end in a direct prime-case evaluation.

``gauss_law_sweep`` enumerates whole (alpha, l, beta) grids at once (used by
the acceptance suite); for prime fields it evaluates the brute sums with
vectorized residue tables.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .algebra import (
    Field,
    Poly,
    enum_monic_irreducibles,
    factor,
    is_irreducible,
    legendre,
    poly_coprime,
    poly_divmod,
    poly_invmod,
    poly_mod,
    residues_mod,
)
from .character import CycloInt
from .errors import (
    BadArgs,
    BadFactor,
    CapExceeded,
    NotAPower,
    NotCoprime,
    NotCoprimeModuli,
    NotIrreducible,
)
from .laurent import expand_fraction

DEFAULT_CAP = 4


@dataclass(frozen=True)
class GaussSpec:
    """Inputs of a quadratic Gauss sum; l is stored reduced mod beta."""

    alpha: Poly
    l: Poly
    beta: Poly

    def __post_init__(self):
        if self.beta.is_zero():
            raise BadArgs("beta must be nonzero")
        object.__setattr__(self, "l", poly_mod(self.l, self.beta))

    @property
    def coprime(self) -> bool:
        return poly_coprime(self.alpha, self.beta)


# -- per-modulus context -----------------------------------------------------

_CTX: dict = {}


class _BetaCtx:
    """Cached data for a fixed modulus: the t^-1-coefficient functional of
    r/beta (linear in r) composed with the trace."""

    def __init__(self, beta: Poly):
        f = beta.field
        self.beta = beta
        d = int(beta.deg)
        lam = []
        for j in range(max(d, 1)):
            tj = Poly(f, (0,) * j + (f.one.idx,))
            lam.append(expand_fraction(tj, beta, -1).coeff_at(-1))
        self.lam = lam
        self.trace_t = f.trace_t
        self.mul_t = f.mul_t
        self.add_t = f.add_t
        self._inv = {}

    def t_exponent(self, n: Poly) -> int:
        """Tr of the t^-1 coefficient of n/beta, as an int mod p."""
        r = poly_mod(n, self.beta)
        acc = 0
        fld = self.beta.field
        for j, c in enumerate(r._c):
            if c:
                acc = self.add_t[acc][self.mul_t[c][self.lam[j].idx]]
        return self.trace_t[acc]

    def invmod(self, a: Poly) -> Poly:
        key = a._c
        inv = self._inv.get(key)
        if inv is None:
            inv = poly_invmod(a, self.beta)
            self._inv[key] = inv
        return inv


def _ctx(beta: Poly) -> _BetaCtx:
    key = (beta.field.key(), beta._c)
    ctx = _CTX.get(key)
    if ctx is None:
        ctx = _BetaCtx(beta)
        _CTX[key] = ctx
    return ctx


# -- brute force -------------------------------------------------------------


def gauss_brute(spec: GaussSpec, cap: int = DEFAULT_CAP) -> CycloInt:
    """Term-by-term evaluation over a full residue system mod beta."""
    beta = spec.beta
    if beta.deg > cap:
        raise CapExceeded(f"deg beta = {beta.deg} exceeds the brute-force cap {cap}")
    f = beta.field
    p = f.p
    if beta.deg == 0:
        return CycloInt.from_int(p, 1)
    ctx = _ctx(beta.monic())
    # e(n / beta) = e((n * lead^-1) / monic(beta))
    unit_inv = beta.lead().inv()
    alpha = spec.alpha.scale(unit_inv)
    l = spec.l.scale(unit_inv)
    by_exp = [0] * p
    for d in residues_mod(beta):
        n = alpha * d * d + l * d
        by_exp[ctx.t_exponent(n)] += 1
    return CycloInt.from_unreduced(p, by_exp)


# -- identity chain ----------------------------------------------------------


def _phase_shift(alpha: Poly, l: Poly, beta: Poly) -> CycloInt:
    """e(-alphabar * l^2 / (4*beta)) as a root of unity (beta monic)."""
    f = beta.field
    if l.is_zero() or beta.deg == 0:
        return CycloInt.from_int(f.p, 1)
    ctx = _ctx(beta)
    abar = ctx.invmod(poly_mod(alpha, beta))
    # the scalar 4 pulls out of the denominator: -abar*l^2/(4 beta) = (-(1/4) abar l^2)/beta
    c = (-(f.elem(4).inv()))
    n = (abar * l * l).scale(c)
    return CycloInt.root(f.p, ctx.t_exponent(n))


def gauss_shift_to_zero(spec: GaussSpec) -> tuple[CycloInt, GaussSpec]:
    """Complete the square: G(a, l; b) = e(-abar*l^2/(4b)) * G(a, 0; b)."""
    if not spec.coprime:
        raise NotCoprime("the quadratic completion needs gcd(alpha, beta) = 1")
    f = spec.beta.field
    unit_inv = spec.beta.lead().inv()
    phase = _phase_shift(
        spec.alpha.scale(unit_inv), spec.l.scale(unit_inv), spec.beta.monic()
    )
    return phase, GaussSpec(spec.alpha, Poly(f, ()), spec.beta)


def gauss_split(spec: GaussSpec, beta1: Poly, beta2: Poly) -> tuple[GaussSpec, GaussSpec]:
    """Multiplicative split over a coprime factorization beta = beta1*beta2."""
    if beta1 * beta2 != spec.beta:
        raise BadFactor("beta1 * beta2 != beta")
    if not poly_coprime(beta1, beta2):
        raise NotCoprimeModuli("factors are not coprime")
    return (
        GaussSpec(spec.alpha * beta2, spec.l, beta1),
        GaussSpec(spec.alpha * beta1, spec.l, beta2),
    )


def _power_root(beta: Poly) -> tuple[Poly, int]:
    """Largest r with monic beta = gamma^r; returns (gamma, r)."""
    fac = factor(beta)
    if not fac.factors:
        raise NotAPower("constant modulus is not a proper power")
    import math

    r = 0
    for _, m in fac.factors:
        r = math.gcd(r, m)
    gamma = None
    for pp, m in fac.factors:
        piece = pp ** (m // r)
        gamma = piece if gamma is None else gamma * piece
    return gamma, r


def gauss_power_reduce(
    spec: GaussSpec, gamma: Poly | None = None, r: int | None = None
) -> tuple[int, GaussSpec]:
    """One step of the power reduction G(a, 0; g^r) = q^(deg g) * G(a, 0; g^(r-2)).

    gamma and r are inferred (maximal r) when not supplied.
    """
    beta = spec.beta
    if not spec.l.is_zero():
        raise BadArgs("power reduction applies to l = 0 sums")
    if not beta.is_monic():
        raise BadArgs("normalize beta to be monic first")
    if gamma is None or r is None:
        gamma, r = _power_root(beta)
    else:
        if gamma**r != beta:
            raise NotAPower("gamma^r != beta")
    if r < 2:
        raise NotAPower("exponent must be >= 2")
    if not poly_coprime(spec.alpha, gamma):
        raise NotCoprime("gcd(alpha, gamma) must be 1")
    q = beta.field.q
    return q ** int(gamma.deg), GaussSpec(spec.alpha, spec.l, gamma ** (r - 2))


def gauss_legendre_reduce(alpha: Poly, P: Poly) -> int:
    """Sign in G(a, 0; P) = (a/P) * G(1, 0; P) for irreducible P."""
    return legendre(alpha, P)


# -- cached prime-case data ----------------------------------------------------

_G10P: dict = {}
_SQUARES_MOD: dict = {}


def _g10p(P: Poly, cap: int) -> CycloInt:
    key = (P.field.key(), P._c)
    v = _G10P.get(key)
    if v is None:
        if P.deg > cap:
            raise CapExceeded(
                f"irreducible factor of degree {P.deg} exceeds the cap {cap}"
            )
        f = P.field
        one = Poly(f, (f.one.idx,))
        v = gauss_brute(GaussSpec(one, Poly(f, ()), P), cap=max(cap, int(P.deg)))
        _G10P[key] = v
    return v


def _legendre_cached(alpha: Poly, P: Poly) -> int:
    key = (P.field.key(), P._c)
    sq = _SQUARES_MOD.get(key)
    if sq is None:
        sq = frozenset(
            poly_mod(d * d, P)._c for d in residues_mod(P) if not poly_mod(d, P).is_zero()
        )
        _SQUARES_MOD[key] = sq
    return 1 if poly_mod(alpha, P)._c in sq else -1


def gauss_fast(spec: GaussSpec, cap: int = DEFAULT_CAP) -> CycloInt:
    """Evaluate through the identity chain; agrees with gauss_brute wherever
    both are defined but only ever brute-forces irreducible moduli."""
    if not spec.coprime:
        raise NotCoprime("the fast path needs gcd(alpha, beta) = 1")
    f = spec.beta.field
    p, q = f.p, f.q
    unit_inv = spec.beta.lead().inv()
    beta = spec.beta.monic()
    alpha = poly_mod(spec.alpha.scale(unit_inv), beta) if beta.deg >= 1 else spec.alpha
    l = spec.l.scale(unit_inv)
    if beta.deg == 0:
        return CycloInt.from_int(p, 1)
    value = _phase_shift(alpha, l, beta)
    qpow = 0
    for P, m in factor(beta).factors:
        Pm = P**m
        cof, _ = poly_divmod(beta, Pm)
        a_i = poly_mod(alpha * cof, Pm)
        qpow += int(P.deg) * (m // 2)
        if m % 2 == 1:
            if _legendre_cached(a_i, P) < 0:
                value = -value
            value = value * _g10p(P, cap)
    if qpow:
        value = value * (q**qpow)
    return value


# -- batch enumeration --------------------------------------------------------


def _brute_histograms_numpy(beta: Poly):
    """For a monic modulus over a prime field, counts N[i_a, i_l, k] of
    residues d with exponent k in the term-by-term sum G(alpha_ia, l_il; beta).
    Residues are indexed by their base-q digit expansion."""
    import numpy as np

    f = beta.field
    q, p, m = f.q, f.p, int(beta.deg)
    n = q**m
    idx = np.arange(n, dtype=np.int64)
    D = np.empty((n, m), dtype=np.int64)
    rem = idx
    for j in range(m):
        D[:, j] = rem % q
        rem = rem // q
    # reduction of t^a (a < 2m-1) mod beta, then the t^-1 functional
    ctx = _ctx(beta)
    red = np.zeros((2 * m - 1, m), dtype=np.int64)
    for a in range(2 * m - 1):
        ta = Poly(f, (0,) * a + (f.one.idx,))
        r = poly_mod(ta, beta)
        for j, c in enumerate(r._c):
            red[a, j] = c
    lam = np.array([ctx.lam[j].idx for j in range(m)], dtype=np.int64)

    def conv_pairs(L, R):
        # L: (nl, m), R: (nr, m) -> exponents (nl, nr) of e((L*R mod beta)/beta)
        out = np.zeros((L.shape[0], R.shape[0], 2 * m - 1), dtype=np.int64)
        for a in range(m):
            for b in range(m):
                out[:, :, a + b] += L[:, a, None] * R[None, :, b]
        red_digits = (out.reshape(-1, 2 * m - 1) @ red) % p
        return (red_digits @ lam % p).reshape(L.shape[0], R.shape[0])

    SQconv = np.zeros((n, 2 * m - 1), dtype=np.int64)
    for a in range(m):
        for b in range(m):
            SQconv[:, a + b] += D[:, a] * D[:, b]
    SQ = (SQconv @ red) % p  # digits of d^2 mod beta

    # alpha * (d^2 mod beta): convolve digit arrays then reduce
    PR = np.zeros((n, n, 2 * m - 1), dtype=np.int64)
    for a in range(m):
        for b in range(m):
            PR[:, :, a + b] += D[:, a, None] * SQ[None, :, b]
    T1 = ((PR.reshape(-1, 2 * m - 1) @ red) % p @ lam % p).reshape(n, n)
    T2 = conv_pairs(D, D)  # l * d mod beta

    N = np.zeros((n, n, p), dtype=np.int32)
    for ia in range(n):
        E = (T1[ia][None, :] + T2) % p
        for k in range(p):
            N[ia, :, k] = (E == k).sum(axis=1)
    return N


def gauss_law_sweep(field: Field, max_deg: int, compare_fast: bool = True) -> dict:
    """Enumerate all monic beta with deg <= max_deg, all coprime alpha with
    deg alpha < deg beta, all l with deg l < deg beta; check the modulus law
    |G|^2 = q^deg(beta) on the brute values and (optionally) that the fast
    path reproduces them exactly.  Returns counters; raises AssertionError on
    the first violation."""
    q, p = field.q, field.p
    checked = 0
    agree = 0
    one = Poly(field, (field.one.idx,))
    zero = Poly(field, ())
    # deg 0 modulus
    g = gauss_brute(GaussSpec(zero, zero, one), cap=max(DEFAULT_CAP, max_deg))
    assert g == 1 and (gauss_fast(GaussSpec(zero, zero, one)) == g if compare_fast else True)
    checked += 1
    agree += 1
    use_numpy = field.e == 1
    for d in range(1, max_deg + 1):
        from .algebra import monic_polys

        for beta in monic_polys(field, d):
            if use_numpy:
                checked_d, agree_d = _sweep_one_beta_numpy(beta, compare_fast)
            else:
                checked_d, agree_d = _sweep_one_beta_scalar(beta, compare_fast)
            checked += checked_d
            agree += agree_d
    return {"specs": checked, "fast_agreements": agree if compare_fast else None}


def _sweep_one_beta_numpy(beta: Poly, compare_fast: bool):
    import numpy as np

    f = beta.field
    q, p, m = f.q, f.p, int(beta.deg)
    n = q**m
    N = _brute_histograms_numpy(beta)
    # reduced basis coefficients: coeffs[k] = N[k] - N[p-1]
    C = N[:, :, : p - 1] - N[:, :, p - 1 : p]
    # |G|^2 coefficients by cyclic correlation of the exponent histogram
    corr = np.zeros((n, n, p), dtype=np.int64)
    for j in range(p):
        for k in range(p):
            corr[:, :, j] += N[:, :, k].astype(np.int64) * N[:, :, (k + j) % p]
    rational = corr[:, :, 0] - corr[:, :, 1]
    residues = residues_mod(beta)
    coprime = np.array([poly_coprime(r, beta) for r in residues], dtype=bool)
    # modulus law: |G|^2 must equal q^deg(beta) exactly for coprime alpha
    off_equal = (corr[:, :, 1:] == corr[:, :, 1:2]).all(axis=2)
    ok = off_equal & (rational == q**m)
    assert ok[coprime, :].all(), f"modulus law fails for beta={beta!r}"
    checked = int(coprime.sum()) * n
    agree = 0
    if compare_fast:
        for ia, alpha in enumerate(residues):
            if not coprime[ia]:
                continue
            for il, l in enumerate(residues):
                gfast = gauss_fast(GaussSpec(alpha, l, beta))
                if list(gfast.coeffs) != C[ia, il].tolist():
                    raise AssertionError(
                        f"fast != brute at alpha={alpha!r} l={l!r} beta={beta!r}"
                    )
                agree += 1
    return checked, agree


def _sweep_one_beta_scalar(beta: Poly, compare_fast: bool):
    q = beta.field.q
    checked = 0
    agree = 0
    for alpha in residues_mod(beta):
        if not poly_coprime(alpha, beta):
            continue
        for l in residues_mod(beta):
            spec = GaussSpec(alpha, l, beta)
            g = gauss_brute(spec, cap=max(DEFAULT_CAP, int(beta.deg)))
            from .character import cyclo_abs2

            assert cyclo_abs2(g) == q ** int(beta.deg), f"modulus law fails for {spec}"
            checked += 1
            if compare_fast:
                assert gauss_fast(spec) == g, f"fast != brute for {spec}"
                agree += 1
    return checked, agree
