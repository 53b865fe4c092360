"""Catalog of genus-0 entire functions and their coefficient producers.

Each entry describes an entire function ``F(z) = prod (1 - z/z_n)`` whose
zeros ``z_n`` are the squared zeros of a classical special function (or the
zeros themselves for the naturally genus-0 cases).  Closed-form Taylor
coefficients exist for the sinc, Bessel, q-Bessel and Ramanujan products and
are produced exactly, over rational-function fields when parameters stay
symbolic.  The Airy product has a closed form involving Gamma values and is
produced in float mode only.  The completed Riemann and Dirichlet xi
functions and the modified Bessel function ``K_{iz}(a)`` have no closed
coefficient form; their even Taylor coefficients are moments

    b_{2n} = integral t^{2n} phi(t) dt

of an explicit fast-decaying kernel, computed here with an arbitrary
precision trapezoidal scheme on the half line.  Because every kernel decays
double-exponentially and is analytic in a strip around the real axis, the
plain trapezoid rule at step ``h`` converges geometrically in ``1/h``; the
node spacing is halved until two consecutive refinements agree to the target
precision, and that last difference is recorded as the per-moment error
estimate.

The xi kernels are theta-type series.  Evaluated literally they suffer
catastrophic cancellation for ``t > 0`` (the terms are huge compared to the
double-exponentially small value), so production evaluation reflects to
``-|t|`` where all terms are tame; evenness of the kernels is not assumed
silently but verified numerically by ``*_evenness_defect`` helpers, which
evaluate the literal series on both sides at elevated working precision.

For the Dirichlet kernel with an odd character the widely printed exponent
``-(1+a)t/2`` fails that evenness check; the exponent ``-(2a+1)t/2`` that
follows from the theta functional equation passes it and is what this module
uses.  The choice is recorded in the moment metadata.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Callable, Optional

import mpmath
from mpmath import mpf, workprec

from .characters import DirichletCharacter, kronecker_character
from .scalars import (
    BigFloat,
    DEFAULT_PRECISION_BITS,
    RationalFunction,
    ScalarError,
)
from .series import TruncatedSeries
from .symfun import ElementarySequence

__all__ = [
    "FunctionKind",
    "FunctionSpec",
    "MomentResult",
    "QuadConfig",
    "GridConfig",
    "ScanReport",
    "QuadratureNotConverged",
    "PoleAtParameter",
    "sinc_coeffs",
    "bessel_coeffs",
    "qbessel_coeffs",
    "ramanujan_aq_coeffs",
    "airy_coeffs",
    "airy_raw_coefficient",
    "besselk_moments",
    "riemann_phi",
    "riemann_moments",
    "dirichlet_phi",
    "dirichlet_moments",
    "phi_nonneg_scan",
    "riemann_evenness_defect",
    "dirichlet_evenness_defect",
    "elementary_from_moments",
    "reduced_series_from_moments",
    "even_series_from_moments",
    "sinc_even_series",
    "kronecker_character",
]


class QuadratureNotConverged(ScalarError):
    """Trapezoid refinements did not reach the target tolerance."""


def _as_mpf(t):
    """Convert an int/float/str/Fraction/BigFloat argument at ambient precision."""
    if isinstance(t, BigFloat):
        return t.value
    if isinstance(t, Fraction):
        return mpf(t.numerator) / t.denominator
    return mpf(t)


class PoleAtParameter(ScalarError):
    """A coefficient formula hits a pole at the requested parameter."""


# ---------------------------------------------------------------------------
# exact coefficient families
# ---------------------------------------------------------------------------


def sinc_coeffs(K: int) -> ElementarySequence:
    """e_k = t^k / (2k+1)! over Q(t) with t standing for pi**2.

    These are the elementary symmetric values of {1/n**2}: the reduced sinc
    product ``prod (1 - z/n**2)`` has Taylor coefficients ``(-1)^k e_k``.
    """
    if K < 0:
        raise ValueError("K must be nonnegative")
    t = RationalFunction.variable(("t",), "t")
    one = RationalFunction.constant(("t",), 1)
    values = [one]
    for k in range(1, K + 1):
        values.append(t ** k * Fraction(1, factorial(2 * k + 1)))
    return ElementarySequence(values)


def bessel_coeffs(nu, K: int) -> ElementarySequence:
    """e_k = 1 / (k! 4^k (nu+1)_k); symbolic over Q(nu) when ``nu`` is None.

    Elementary symmetric values of the squared-reciprocal Bessel zeros
    {1/j_{nu,k}**2}.  A rational ``nu`` gives exact rationals; ``nu <= -1``
    rational hits a Pochhammer pole.
    """
    if K < 0:
        raise ValueError("K must be nonnegative")
    if nu is None:
        nu_r = RationalFunction.variable(("nu",), "nu")
        one = RationalFunction.constant(("nu",), 1)
        values = [one]
        poch = one
        for k in range(1, K + 1):
            poch = poch * (nu_r + k)
            values.append(RationalFunction.constant(("nu",), Fraction(1, factorial(k) * 4 ** k)) / poch)
        return ElementarySequence(values)
    nu = Fraction(nu)
    if nu <= -1:
        raise PoleAtParameter(f"nu = {nu} <= -1")
    values = [Fraction(1)]
    poch = Fraction(1)
    for k in range(1, K + 1):
        poch *= nu + k
        if poch == 0:
            raise PoleAtParameter(f"(nu+1)_{k} vanishes at nu = {nu}")
        values.append(Fraction(1, factorial(k) * 4 ** k) / poch)
    return ElementarySequence(values)


def qbessel_coeffs(q, nu, K: int) -> ElementarySequence:
    """e_k = q^(k^2) t^k / ((q;q)_k (q t;q)_k 4^k) with t = q^nu.

    Symbolic over Q(q, t_nu) when ``q`` is None (``t_nu`` is the single
    transcendental ``q**nu``).  Numeric mode needs rational ``q`` in (0,1)
    and integer ``nu >= 0`` so that ``q**nu`` stays rational.
    """
    if K < 0:
        raise ValueError("K must be nonnegative")
    if q is None:
        syms = ("q", "t_nu")
        qq = RationalFunction.variable(syms, "q")
        tt = RationalFunction.variable(syms, "t_nu")
        one = RationalFunction.constant(syms, 1)
        values = [one]
        poch_q = one    # (q;q)_k
        poch_qt = one   # (q t;q)_k
        for k in range(1, K + 1):
            poch_q = poch_q * (one - qq ** k)
            poch_qt = poch_qt * (one - qq ** k * tt)
            num = qq ** (k * k) * tt ** k
            values.append(num / (poch_q * poch_qt * Fraction(4 ** k)))
        return ElementarySequence(values)
    q = Fraction(q)
    if not 0 < q < 1:
        raise ValueError(f"q = {q} outside (0,1)")
    if nu != int(nu) or nu < 0:
        raise ValueError("numeric q-Bessel mode needs integer nu >= 0 to stay rational")
    t = q ** int(nu)
    values = [Fraction(1)]
    poch_q = Fraction(1)
    poch_qt = Fraction(1)
    for k in range(1, K + 1):
        poch_q *= 1 - q ** k
        poch_qt *= 1 - q ** k * t
        values.append(q ** (k * k) * t ** k / (poch_q * poch_qt * 4 ** k))
    return ElementarySequence(values)


def ramanujan_aq_coeffs(q, K: int) -> ElementarySequence:
    """e_k = q^(k^2) / (q;q)_k over Q(q); exact rationals for rational q."""
    if K < 0:
        raise ValueError("K must be nonnegative")
    if q is None:
        qq = RationalFunction.variable(("q",), "q")
        one = RationalFunction.constant(("q",), 1)
        values = [one]
        poch = one
        for k in range(1, K + 1):
            poch = poch * (one - qq ** k)
            values.append(qq ** (k * k) / poch)
        return ElementarySequence(values)
    q = Fraction(q)
    if not 0 < q < 1:
        raise ValueError(f"q = {q} outside (0,1)")
    values = [Fraction(1)]
    poch = Fraction(1)
    for k in range(1, K + 1):
        poch *= 1 - q ** k
        values.append(q ** (k * k) / poch)
    return ElementarySequence(values)


# ---------------------------------------------------------------------------
# Airy product (float only)
# ---------------------------------------------------------------------------


def airy_raw_coefficient(n: int, precision: int) -> BigFloat:
    """Unnormalized Airy-product coefficient a_n (a_0 evaluates to 2*pi).

    a_n = sqrt(3) G(2/3)^2 / (4^(1/3) pi) * 16^(n/3) G(n/3+1/6) G(n/3+1/2) / (2n)!
    """
    with workprec(precision + 32):
        g = mpmath.gamma
        pref = mpmath.sqrt(3) * g(mpf(2) / 3) ** 2 / (mpf(4) ** (mpf(1) / 3) * mpmath.pi)
        v = pref * mpf(16) ** (mpf(n) / 3) * g(mpf(n) / 3 + mpf(1) / 6) \
            * g(mpf(n) / 3 + mpf(1) / 2) / mpmath.factorial(2 * n)
        return BigFloat(v, precision)


def airy_coeffs(K: int, precision: int = DEFAULT_PRECISION_BITS) -> ElementarySequence:
    """Normalized Airy-product elementary values e_k = a_k / a_0 (floats).

    The closed form for a_n does not have a_0 = 1, so the series is
    normalized by a_0 before use; tests pin a_0 = 2*pi and a_1/a_0 =
    pi^2/Gamma(1/3)^4 numerically.
    """
    a0 = airy_raw_coefficient(0, precision + 32)
    values: list = [Fraction(1)]
    for k in range(1, K + 1):
        ak = airy_raw_coefficient(k, precision + 32)
        with workprec(precision + 32):
            values.append(BigFloat(ak.value / a0.value, precision))
    return ElementarySequence(values)


# ---------------------------------------------------------------------------
# trapezoidal moment quadrature on the line
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class QuadConfig:
    """Knobs for the moment quadrature: truncation, refinement, series caps."""

    T: Optional[float] = None      # half-line truncation point (None = adaptive)
    levels: int = 12               # maximum number of h-halvings
    N_s_max: int = 200000          # cap on kernel series terms per node
    h0: float = 0.25               # coarsest node spacing


DEFAULT_QUAD = QuadConfig()


@dataclass(frozen=True)
class MomentResult:
    """Even moments b_0, b_2, .., b_{2K} with quadrature metadata."""

    values: tuple          # BigFloat b_{2n}, n = 0..K
    errors: tuple          # estimated |error| per moment (BigFloat)
    metadata: dict

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, n: int) -> BigFloat:
        """b_{2n}."""
        return self.values[n]

    @property
    def precision(self) -> int:
        return self.metadata["precision_bits"]


def _even_line_moments(
    kernel: Callable[[object], object],
    K: int,
    precision: int,
    T,
    quad: QuadConfig,
    kernel_name: str,
) -> MomentResult:
    """integral t^{2n} f(t) dt over the whole line, n = 0..K, f even.

    ``kernel(t)`` is evaluated for t >= 0 only, at the ambient mpmath
    precision.  Trapezoid sums at spacing h are refined by halving; the
    difference of the last two refinements is the recorded error estimate.
    """
    wp = precision + 64
    target = mpf(2) ** (-(precision + 8))
    with workprec(wp):
        Tm = mpf(T)
        h = mpf(quad.h0)
        n_nodes = int(mpmath.floor(Tm / h)) + 1
        # level 0 sums: s[n] = f(0)*[n==0]/2 + sum_{i>=1} (ih)^{2n} f(ih)
        f0 = kernel(mpf(0))
        sums = [f0 / 2] + [mpf(0)] * K
        nodes = 1
        for i in range(1, n_nodes):
            t = i * h
            ft = kernel(t)
            t2 = t * t
            w = ft
            sums[0] += w
            for n in range(1, K + 1):
                w = w * t2
                sums[n] += w
            nodes += 1
        I_prev = None
        I = [2 * h * s for s in sums]
        errors = None
        level = 0
        for level in range(1, quad.levels + 1):
            h = h / 2
            add = [mpf(0)] * (K + 1)
            i = 1
            while i * h <= Tm:
                t = i * h
                ft = kernel(t)
                t2 = t * t
                w = ft
                add[0] += w
                for n in range(1, K + 1):
                    w = w * t2
                    add[n] += w
                nodes += 1
                i += 2
            I_prev = I
            I = [I_prev[n] / 2 + 2 * h * add[n] for n in range(K + 1)]
            errors = [abs(I[n] - I_prev[n]) for n in range(K + 1)]
            if all(errors[n] <= target * abs(I[n]) for n in range(K + 1)):
                break
        else:
            raise QuadratureNotConverged(
                f"{kernel_name}: no convergence after {quad.levels} refinements "
                f"(worst rel. err {max(float(e / abs(v)) for e, v in zip(errors, I)):.3e})")
        values = tuple(BigFloat(v, precision) for v in I)
        errs = tuple(BigFloat(e, precision) for e in errors)
    meta = {
        "kernel": kernel_name,
        "precision_bits": precision,
        "T": float(T),
        "h_final": float(h),
        "levels_used": level,
        "nodes": nodes,
        "orders": K,
    }
    return MomentResult(values=values, errors=errs, metadata=meta)


def _adaptive_T(decay_rate_log, K: int, precision: int) -> float:
    """Truncation point T with kernel(T) * T^{2K} below the target.

    ``decay_rate_log(T)`` returns log(kernel decay) ~ c * e^{2T}; solved by
    fixed-point iteration on log(kernel(T)) = -(precision+48) ln2 - 2K ln T.
    """
    import math

    need = (precision + 48) * math.log(2)
    T = 1.0
    for _ in range(60):
        rhs = need + 2 * K * math.log(max(T, 1.0))
        T_new = decay_rate_log(rhs)
        if abs(T_new - T) < 1e-9:
            T = T_new
            break
        T = T_new
    return T + 0.1


# ---------------------------------------------------------------------------
# Riemann xi kernel
# ---------------------------------------------------------------------------


def _riemann_kernel_terms(t, N_s_max: int, eps_bits: int):
    """Literal theta-series kernel value at real t (terms may cancel).

    phi(t) = 2 pi * sum_n (2 pi n^4 e^{-9t/2} - 3 n^2 e^{-5t/2}) e^{-n^2 pi e^{-2t}}
    """
    E = mpmath.exp(-t / 2)
    E9 = E ** 9
    E5 = E ** 5
    X = E ** 4  # e^{-2t}
    piX = mpmath.pi * X
    twopi = 2 * mpmath.pi
    eps = mpf(2) ** (-eps_bits)
    acc = mpf(0)
    maxab = mpf(0)
    prev = None
    n = 0
    while n < N_s_max:
        n += 1
        w = mpmath.exp(-(n * n) * piX)
        term = twopi * (twopi * (n ** 4) * E9 - 3 * (n * n) * E5) * w
        acc += term
        at = abs(term)
        if at > maxab:
            maxab = at
        if prev is not None and at < prev and at <= eps * (maxab + abs(acc)):
            return acc, n
        prev = at
    raise QuadratureNotConverged(f"theta series did not converge in {N_s_max} terms")


def riemann_phi(
    t,
    precision: int = DEFAULT_PRECISION_BITS,
    N_s: Optional[int] = None,
    use_evenness: bool = True,
) -> BigFloat:
    """Fourier kernel of the completed Riemann xi function at real ``t``.

    With ``use_evenness`` (the default) the series is evaluated at ``-|t|``
    where all terms are positive; the literal signed evaluation
    (``use_evenness=False``) raises the working precision by the estimated
    cancellation ``~ pi e^{2t} / ln 2`` bits and is what the evenness
    self-check exercises.
    """
    cap = N_s or 200000
    if use_evenness:
        with workprec(precision + 48):
            tv = -abs(_as_mpf(t))
            v, _ = _riemann_kernel_terms(tv, cap, precision + 16)
            return BigFloat(v, precision)
    import math

    tf = float(t)
    boost = 0
    if tf > 0:
        boost = int(math.pi * math.exp(2 * tf) / math.log(2)) + 64
        if boost > 1 << 20:
            raise ValueError(f"literal evaluation at t={tf} needs >1M bits; use evenness")
    with workprec(precision + 48 + boost):
        v, _ = _riemann_kernel_terms(_as_mpf(t), cap, precision + 16 + boost)
        return BigFloat(v, precision)


def riemann_evenness_defect(t, precision: int = DEFAULT_PRECISION_BITS) -> BigFloat:
    """|phi(t) - phi(-t)| with both sides evaluated literally."""
    a = riemann_phi(t, precision + 16, use_evenness=False)
    b = riemann_phi(-t, precision + 16, use_evenness=False)
    return BigFloat(abs((a - b).value), precision)


def riemann_moments(
    K: int,
    precision: int = DEFAULT_PRECISION_BITS,
    quad: QuadConfig = DEFAULT_QUAD,
) -> MomentResult:
    """Even moments b_{2n} of the xi kernel, n = 0..K."""
    import math

    if K < 0:
        raise ValueError("K must be nonnegative")
    T = quad.T or _adaptive_T(lambda rhs: 0.5 * math.log(rhs / math.pi), K, precision)
    cap = quad.N_s_max

    def kernel(t):
        v, _ = _riemann_kernel_terms(-t, cap, precision + 24)
        return v

    mr = _even_line_moments(kernel, K, precision, T, quad, "riemann_xi")
    mr.metadata["variant"] = "theta-even"
    return mr


# ---------------------------------------------------------------------------
# Dirichlet xi kernel
# ---------------------------------------------------------------------------


def _dirichlet_kernel_terms(t, chi: DirichletCharacter, a_coeff, N_s_max: int, eps_bits: int):
    """Literal character theta kernel at real t.

    phi(t, chi) = sum_{n != 0} n^a chi(n) exp(-n^2 pi e^{-2t}/m - c t)
    with c = a_coeff; the two halves n and -n coincide, giving factor 2.
    """
    m = chi.modulus
    a = chi.parity
    X = mpmath.exp(-2 * t)
    piXm = mpmath.pi * X / m
    damp = mpmath.exp(-a_coeff * t)
    eps = mpf(2) ** (-eps_bits)
    acc = mpf(0)
    maxab = mpf(0)
    prev = None
    n = 0
    used = 0
    while n < N_s_max:
        n += 1
        c = chi(n)
        if c == 0:
            continue
        used += 1
        w = mpmath.exp(-(n * n) * piXm)
        term = (n ** a) * c * w
        acc += term
        at = abs(term)
        if at > maxab:
            maxab = at
        if prev is not None and at < prev and at <= eps * (maxab + abs(acc)):
            return 2 * damp * acc, n
        prev = at
    raise QuadratureNotConverged(f"character theta series did not converge in {N_s_max} terms")


def dirichlet_phi(
    t,
    chi: DirichletCharacter,
    precision: int = DEFAULT_PRECISION_BITS,
    N_s: Optional[int] = None,
    use_evenness: bool = True,
    printed_exponent: bool = False,
) -> BigFloat:
    """Fourier kernel of the completed Dirichlet L function at real ``t``.

    The decay exponent in ``t`` is ``(2a+1)/2`` (the variant that passes the
    evenness self-check for both parities).  ``printed_exponent=True``
    selects ``(1+a)/2`` instead, which differs only for odd characters and
    demonstrably breaks evenness; it exists for the self-check.
    """
    a = chi.parity
    c_coeff = Fraction(1 + a, 2) if printed_exponent else Fraction(2 * a + 1, 2)
    cap = N_s or 200000
    if use_evenness:
        with workprec(precision + 48):
            tv = -abs(_as_mpf(t))
            cc = mpf(c_coeff.numerator) / c_coeff.denominator
            v, _ = _dirichlet_kernel_terms(tv, chi, cc, cap, precision + 16)
            return BigFloat(v, precision)
    import math

    tf = float(t)
    boost = 0
    if tf > 0:
        boost = int(math.pi * math.exp(2 * tf) / (chi.modulus * math.log(2))) + 64
        if boost > 1 << 20:
            raise ValueError(f"literal evaluation at t={tf} needs >1M bits; use evenness")
    with workprec(precision + 48 + boost):
        cc = mpf(c_coeff.numerator) / c_coeff.denominator
        v, _ = _dirichlet_kernel_terms(_as_mpf(t), chi, cc, cap, precision + 16 + boost)
        return BigFloat(v, precision)


def dirichlet_evenness_defect(
    t,
    chi: DirichletCharacter,
    precision: int = DEFAULT_PRECISION_BITS,
    printed_exponent: bool = False,
) -> BigFloat:
    """|phi(t,chi) - phi(-t,chi)| with literal evaluation on both sides."""
    a = dirichlet_phi(t, chi, precision + 16, use_evenness=False,
                      printed_exponent=printed_exponent)
    b = dirichlet_phi(-t, chi, precision + 16, use_evenness=False,
                      printed_exponent=printed_exponent)
    return BigFloat(abs((a - b).value), precision)


def dirichlet_moments(
    chi: DirichletCharacter,
    K: int,
    precision: int = DEFAULT_PRECISION_BITS,
    quad: QuadConfig = DEFAULT_QUAD,
    scan: Optional["ScanReport"] = None,
) -> MomentResult:
    """Even moments b_{2n}(chi) of the character kernel, n = 0..K.

    If a nonnegativity scan is supplied its outcome is recorded; a failed
    scan flags the moments instead of refusing to compute them.
    """
    import math

    if K < 0:
        raise ValueError("K must be nonnegative")
    m = chi.modulus
    T = quad.T or _adaptive_T(lambda rhs: 0.5 * math.log(m * rhs / math.pi), K, precision)
    cap = quad.N_s_max
    a = chi.parity
    c_coeff = Fraction(2 * a + 1, 2)

    def kernel(t):
        cc = mpf(c_coeff.numerator) / c_coeff.denominator
        v, _ = _dirichlet_kernel_terms(-t, chi, cc, cap, precision + 24)
        return v

    mr = _even_line_moments(kernel, K, precision, T, quad, f"dirichlet_xi[{chi.label}]")
    mr.metadata["variant"] = "theta-even"
    mr.metadata["modulus"] = m
    mr.metadata["parity"] = a
    if scan is not None:
        mr.metadata["scan_passed"] = scan.passed
        if not scan.passed:
            mr.metadata["scan_flag"] = "kernel nonnegativity scan FAILED; moments unreliable"
    return mr


# ---------------------------------------------------------------------------
# modified Bessel K kernel
# ---------------------------------------------------------------------------


def besselk_moments(
    a,
    K: int,
    precision: int = DEFAULT_PRECISION_BITS,
    quad: QuadConfig = DEFAULT_QUAD,
) -> MomentResult:
    """c_{2n} = integral_0^inf u^{2n} e^{-a cosh u} du, n = 0..K (a > 0).

    These give the even Taylor coefficients of K_{iz}(a) around z = 0:
    K_{iz}(a) = sum (-1)^n c_{2n} z^{2n} / (2n)!.
    """
    import math

    af = float(a)
    if af <= 0:
        raise ValueError("a must be positive")
    if K < 0:
        raise ValueError("K must be nonnegative")
    T = quad.T or _adaptive_T(lambda rhs: math.log(2 * rhs / af), K, precision)
    if isinstance(a, BigFloat):
        a_num, a_den = a.value, 1
    else:
        a_frac = Fraction(a)
        a_num, a_den = a_frac.numerator, a_frac.denominator

    def kernel(u):
        return mpmath.exp(-(mpf(a_num) / a_den) * mpmath.cosh(u))

    mr = _even_line_moments(kernel, K, precision, T, quad, f"bessel_k[a={af}]")
    # kernel integral was over the whole line; these moments are half-line
    with workprec(precision + 8):
        values = tuple(BigFloat(v.value / 2, precision) for v in mr.values)
        errors = tuple(BigFloat(e.value / 2, precision) for e in mr.errors)
    mr.metadata["a"] = af
    return MomentResult(values=values, errors=errors, metadata=mr.metadata)


# ---------------------------------------------------------------------------
# kernel nonnegativity scan
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GridConfig:
    t_max: float = 6.0
    points: int = 10001


@dataclass(frozen=True)
class ScanReport:
    passed: bool
    min_value: BigFloat
    argmin: float
    t_max: float
    points: int
    label: str

    def as_dict(self) -> dict:
        return {
            "passed": self.passed,
            "min_value": str(self.min_value),
            "argmin": self.argmin,
            "t_max": self.t_max,
            "points": self.points,
            "label": self.label,
        }


def phi_nonneg_scan(
    chi: DirichletCharacter,
    grid: GridConfig = GridConfig(),
    precision: int = 128,
) -> ScanReport:
    """Evaluate the character kernel on a dense grid of [0, t_max].

    Evenness covers negative t.  A PASS (no negative value) is grid evidence
    for the kernel-nonnegativity assumption, never a proof.
    """
    best = None
    best_t = 0.0
    step = grid.t_max / (grid.points - 1)
    for i in range(grid.points):
        t = i * step
        v = dirichlet_phi(t, chi, precision)
        if best is None or v < best:
            best = v
            best_t = t
    return ScanReport(
        passed=bool(best >= 0),
        min_value=best,
        argmin=best_t,
        t_max=grid.t_max,
        points=grid.points,
        label=chi.label,
    )


# ---------------------------------------------------------------------------
# moment-to-series adapters
# ---------------------------------------------------------------------------


def elementary_from_moments(mr: MomentResult, precision: Optional[int] = None) -> ElementarySequence:
    """e_n = b_{2n} / ((2n)! b_0): elementary values of the reduced product."""
    precision = precision or mr.precision
    b0 = mr[0]
    values: list = [Fraction(1)]
    with workprec(precision + 16):
        for n in range(1, len(mr)):
            values.append(BigFloat(mr[n].value / (mpmath.factorial(2 * n) * b0.value), precision))
    return ElementarySequence(values)


def reduced_series_from_moments(mr: MomentResult, precision: Optional[int] = None) -> TruncatedSeries:
    """sum (-1)^n b_{2n} z^n / ((2n)! b_0): the genus-0 reduced series."""
    e = elementary_from_moments(mr, precision)
    from .series import series_from_elementary

    return series_from_elementary(e)


def even_series_from_moments(mr: MomentResult, precision: Optional[int] = None) -> TruncatedSeries:
    """sum (-1)^n b_{2n} z^{2n} / ((2n)! b_0): the even series in the original variable."""
    reduced = reduced_series_from_moments(mr, precision)
    precision = precision or mr.precision
    zero = BigFloat(0, precision)
    out = []
    for c in reduced.coefficients:
        out.append(c)
        out.append(zero)
    return TruncatedSeries(out[:-1])


def sinc_even_series(N2: int, precision: int = DEFAULT_PRECISION_BITS) -> TruncatedSeries:
    """sin(pi z)/(pi z) = sum (-1)^n pi^{2n} z^{2n} / (2n+1)! to order N2 (floats)."""
    with workprec(precision + 16):
        out = []
        for n in range(N2 + 1):
            if n % 2 == 1:
                out.append(BigFloat(0, precision))
            else:
                k = n // 2
                v = mpmath.pi ** (2 * k) / mpmath.factorial(2 * k + 1)
                out.append(BigFloat(v if k % 2 == 0 else -v, precision))
    return TruncatedSeries(out)


# ---------------------------------------------------------------------------
# catalog entries
# ---------------------------------------------------------------------------


class FunctionKind(enum.Enum):
    SINC = "sinc"
    BESSEL = "bessel"
    QBESSEL = "qbessel"
    RAMANUJAN_AQ = "ramanujan-aq"
    AIRY_PRODUCT = "airy"
    BESSEL_K = "bessel-k"
    RIEMANN_XI = "riemann-xi"
    DIRICHLET_XI = "dirichlet-xi"


_EXACT_KINDS = {FunctionKind.SINC, FunctionKind.BESSEL, FunctionKind.QBESSEL,
                FunctionKind.RAMANUJAN_AQ}


@dataclass
class FunctionSpec:
    """A catalog entry: which function, its parameters, coefficient mode.

    ``mode`` is one of ``exact`` (plain rationals), ``ratfunc`` (symbolic
    parameters over a rational-function field) or ``float``.  Only the four
    closed-form kinds admit the exact modes.  ``bindings`` carries the
    numeric values of symbolic parameters for verdict evaluation (``t`` is
    bound to pi^2 automatically for the sinc product).
    """

    kind: FunctionKind
    params: dict = field(default_factory=dict)
    mode: str = "exact"
    precision: int = DEFAULT_PRECISION_BITS
    quad: QuadConfig = DEFAULT_QUAD
    _moments: Optional[MomentResult] = None

    def __post_init__(self):
        if self.mode in ("exact", "ratfunc") and self.kind not in _EXACT_KINDS:
            raise ScalarError(f"{self.kind.value} admits float mode only")
        if self.kind is FunctionKind.SINC and self.mode == "exact":
            raise ScalarError(
                "sinc coefficients involve pi^2; use ratfunc (symbolic t) "
                "or float mode")
        nu = self.params.get("nu")
        if nu is not None and not isinstance(nu, str) and Fraction(nu) <= -1:
            raise ValueError("nu must exceed -1")
        q = self.params.get("q")
        if q is not None and not isinstance(q, str) and not 0 < Fraction(q) < 1:
            raise ValueError("q must lie in (0,1)")
        a = self.params.get("a")
        if a is not None and float(a) <= 0:
            raise ValueError("a must be positive")

    @property
    def label(self) -> str:
        bits = [self.kind.value]
        for k, v in sorted(self.params.items()):
            if isinstance(v, DirichletCharacter):
                bits.append(f"{k}={v.label}")
            else:
                bits.append(f"{k}={v}")
        return ",".join(bits)

    def moments(self, K: int) -> MomentResult:
        """Moment vector for the quadrature-backed kinds (cached)."""
        if self.kind is FunctionKind.RIEMANN_XI:
            if self._moments is None or len(self._moments) <= K:
                self._moments = riemann_moments(K, self.precision, self.quad)
            return self._moments
        if self.kind is FunctionKind.DIRICHLET_XI:
            if self._moments is None or len(self._moments) <= K:
                self._moments = dirichlet_moments(
                    self.params["chi"], K, self.precision, self.quad)
            return self._moments
        if self.kind is FunctionKind.BESSEL_K:
            if self._moments is None or len(self._moments) <= K:
                self._moments = besselk_moments(
                    self.params["a"], K, self.precision, self.quad)
            return self._moments
        raise ScalarError(f"{self.kind.value} has closed-form coefficients, not moments")

    def elementary(self, K: int) -> ElementarySequence:
        """Elementary symmetric values e_0..e_K in the declared mode."""
        kind = self.kind
        symbolic = self.mode == "ratfunc"
        if kind is FunctionKind.SINC:
            e = sinc_coeffs(K)
            if symbolic:
                return e
            return self._bind_elementary(e, {"t": self._pi_squared()})
        if kind is FunctionKind.BESSEL:
            e = bessel_coeffs(None if symbolic else self.params["nu"], K)
            if self.mode == "float":
                return self._float_elementary(e)
            return e
        if kind is FunctionKind.QBESSEL:
            e = qbessel_coeffs(None if symbolic else self.params["q"],
                               None if symbolic else self.params["nu"], K)
            if self.mode == "float":
                return self._float_elementary(e)
            return e
        if kind is FunctionKind.RAMANUJAN_AQ:
            e = ramanujan_aq_coeffs(None if symbolic else self.params["q"], K)
            if self.mode == "float":
                return self._float_elementary(e)
            return e
        if kind is FunctionKind.AIRY_PRODUCT:
            return airy_coeffs(K, self.precision)
        return elementary_from_moments(self.moments(K))

    def series(self, N: int) -> TruncatedSeries:
        """Normalized genus-0 reduced series to order N."""
        from .series import series_from_elementary

        return series_from_elementary(self.elementary(N))

    def bindings(self) -> Optional[dict]:
        """Numeric values for the symbols of ratfunc-mode coefficients."""
        if self.mode != "ratfunc":
            return None
        if self.kind is FunctionKind.SINC:
            return {"t": self._pi_squared()}
        out = {}
        for name in ("nu", "q"):
            if name in self.params:
                out[name] = Fraction(self.params[name])
        if self.kind is FunctionKind.QBESSEL and "q" in self.params \
                and "nu" in self.params:
            q = Fraction(self.params["q"])
            nu = Fraction(self.params["nu"])
            if nu.denominator == 1:
                out["t_nu"] = q ** int(nu)
            else:
                with workprec(self.precision + 16):
                    qv = mpf(q.numerator) / q.denominator
                    nv = mpf(nu.numerator) / nu.denominator
                    out["t_nu"] = BigFloat(mpmath.power(qv, nv), self.precision)
        return out

    def _pi_squared(self) -> BigFloat:
        with workprec(self.precision + 16):
            return BigFloat(mpmath.pi ** 2, self.precision)

    def _bind_elementary(self, e: ElementarySequence, bindings) -> ElementarySequence:
        values = [Fraction(1)]
        for k in range(1, e.order + 1):
            v = e[k]
            values.append(v.evaluate(bindings) if isinstance(v, RationalFunction) else v)
        return ElementarySequence(values)

    def _float_elementary(self, e: ElementarySequence) -> ElementarySequence:
        values = [Fraction(1)]
        for k in range(1, e.order + 1):
            values.append(BigFloat(Fraction(e[k]), self.precision))
        return ElementarySequence(values)
