"""End-to-end bounded positivity certifications.

A certification run takes a catalog entry, produces its power sums, picks an
admissible scaling bound, and checks the sign pattern of a finite triangle
of criterion cells:

* MOMENT mode: cells ``(-D)^j (p_{k+1}/lam^{k+1}) >= 0`` for a bound
  ``lam >= sup |l_n|``;
* DERIVATIVE mode: cells ``(j+k)! [z^{j+k}]{(z-1)^j (log f(rho z))'} <= 0``
  for ``0 < rho <= inf |roots|``;
* SHIFTED_EVEN mode: DERIVATIVE applied to the genus-0 reduction of
  ``(G(sqrt(z)-ic) + G(sqrt(z)+ic)) / (2 G(ic))`` for an even real ``G``.

A clean triangle is reported as ``BOUNDED-PASS`` -- a bounded certificate to
``j+k <= B``, never a proof, since the criterion itself quantifies over all
cells.  Any confidently negative cell is a ``FAIL``; cells inside the float
noise band are ``INDETERMINATE`` and trigger one automatic precision
doubling before being reported.

The two cell routes (series derivative vs. moment differences) are linked by
an exact identity; every derivative run recomputes its cells through the
difference route and records the worst discrepancy, which must vanish in
exact domains.

Adversarial runs plant defects (negative or complex-conjugate entries) into
a finite positive rational base sequence and report the smallest ``j+k``
at which the exact difference table goes negative; detection inside a fixed
triangle is empirical, the theory only guarantees failure somewhere in the
infinite grid.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field, replace
from fractions import Fraction
from math import factorial
from typing import Optional

import mpmath
from mpmath import mpf, workprec

from .catalog import (
    FunctionKind,
    FunctionSpec,
    MomentResult,
    even_series_from_moments,
    sinc_even_series,
)
from .hausdorff import (
    derivative_cells_from_power_sums,
    derivative_form_coefficient,
    moment_criterion,
)
from .scalars import (
    BigComplex,
    BigFloat,
    DEFAULT_PRECISION_BITS,
    DEFAULT_SIGN_POLICY,
    RationalFunction,
    ScalarError,
    SignPolicy,
    Verdict,
    bigfloat_str,
    rational_str,
    sign_decide,
)
from .series import (
    TruncatedSeries,
    elementary_from_series,
    even_sqrt_reduce,
    power_sums_from_log_derivative,
    taylor_shift,
)
from .symfun import ElementarySequence, PowerSumSequence, power_sums_from_elementary
from .zeros import ZeroTable

__all__ = [
    "CertificateReport",
    "LambdaPolicy",
    "RhoPolicy",
    "AdversarialSpec",
    "Defect",
    "SeriesSpec",
    "certify_moment",
    "certify_derivative",
    "certify_shifted_even",
    "shifted_reduced_series",
    "explicit_p_formulas",
    "b_recurrence_power_sums",
    "b_closed_form_power_sum",
    "power_sums_from_moment_list",
    "adversarial_run",
    "draw_adversarial_spec",
    "route_equality_defect",
    "LambdaUnavailable",
    "RhoUnavailable",
    "ZeroB0",
    "ShiftedNormalizationZero",
    "NotEvenAfterShift",
    "serialize_scalar",
]

MAX_RETRY_PRECISION = 4096


class LambdaUnavailable(ScalarError):
    """No admissible scaling bound could be produced."""


class RhoUnavailable(ScalarError):
    """No admissible smallest-root bound could be produced."""


class ZeroB0(ScalarError):
    """The zeroth moment vanishes; the reduced series is undefined."""


class ShiftedNormalizationZero(ScalarError):
    """G(ic) = 0: the shifted combination cannot be normalized."""


class NotEvenAfterShift(ScalarError):
    """The shifted combination has a significantly odd or imaginary part."""


# ---------------------------------------------------------------------------
# scaling-bound policies
# ---------------------------------------------------------------------------

SAFETY_UP = Fraction(1025, 1024)    # multiplies an upper bound for lambda
SAFETY_DOWN = Fraction(1023, 1024)  # multiplies a lower bound for rho


def _mpf_to_fraction(x) -> Fraction:
    sign, man, exp, _ = x._mpf_
    f = Fraction(man) * (Fraction(2) ** exp)
    return -f if sign else f


@dataclass(frozen=True)
class LambdaPolicy:
    """How to obtain ``lam >= sup |l_n|``.

    kinds: ``explicit`` (use ``value``), ``zero-table`` (``safety/min_zero^2``
    from ``table``; exact pipelines receive the dyadic value exactly),
    ``coefficient-bound`` (``lam = e_1 = sum l_n``, valid under the
    positivity hypothesis being tested).
    """

    kind: str = "coefficient-bound"
    value: object = None
    table: Optional[ZeroTable] = None
    safety: Fraction = SAFETY_UP


@dataclass(frozen=True)
class RhoPolicy:
    """How to obtain ``0 < rho <= inf |roots|`` of the reduced product.

    kinds: ``explicit``, ``zero-table`` (``safety * min_zero^2``, the squared
    ordinate being the root of the reduced product), ``coefficient-bound``
    (``rho = safety/e_1`` since ``inf roots >= 1/sum l_n``), ``first-root``
    (bracket the first sign change of the truncated series and bisect).
    """

    kind: str = "coefficient-bound"
    value: object = None
    table: Optional[ZeroTable] = None
    safety: Fraction = SAFETY_DOWN


def resolve_lambda(policy: LambdaPolicy, e: ElementarySequence, exact: bool,
                   precision: int, bindings=None) -> tuple[object, str]:
    if policy.kind == "explicit":
        if policy.value is None:
            raise LambdaUnavailable("explicit lambda policy without a value")
        return policy.value, f"explicit lambda = {policy.value}"
    if policy.kind == "zero-table":
        if policy.table is None or len(policy.table) == 0:
            raise LambdaUnavailable("zero-table lambda policy without a table")
        z1 = policy.table.first
        with workprec(precision + 16):
            lam_f = mpf(policy.safety.numerator) / policy.safety.denominator / (z1.value ** 2)
        prov = (f"lambda = {policy.safety} / min_zero^2, min_zero = {z1} "
                f"({policy.table.source} table, {len(policy.table)} zeros)")
        if exact:
            return _mpf_to_fraction(lam_f), prov + " [exact dyadic]"
        return BigFloat(lam_f, precision), prov
    if policy.kind == "coefficient-bound":
        e1 = _numeric_e1(e, bindings, LambdaUnavailable)
        if (isinstance(e1, Fraction) and e1 <= 0) or (isinstance(e1, BigFloat) and not e1 > 0):
            raise LambdaUnavailable(f"coefficient bound e_1 = {e1} not positive")
        return e1, "lambda = e_1 = sum of the sequence (coefficient bound)"
    raise LambdaUnavailable(f"unknown lambda policy {policy.kind!r}")


def _numeric_e1(e: ElementarySequence, bindings, err):
    """e_1 as a number; symbolic values are evaluated at the bindings."""
    e1 = e[1]
    if isinstance(e1, RationalFunction):
        if e1.is_constant():
            return e1.constant_value()
        if bindings and all(s in bindings for s in e1.symbols):
            return e1.evaluate({s: bindings[s] for s in e1.symbols})
        raise err(
            "coefficient bound needs numeric e_1; bind symbols or use explicit")
    return e1


def resolve_rho(policy: RhoPolicy, e: ElementarySequence, f: TruncatedSeries,
                exact: bool, precision: int, bindings=None) -> tuple[object, str]:
    if policy.kind == "explicit":
        if policy.value is None:
            raise RhoUnavailable("explicit rho policy without a value")
        return policy.value, f"explicit rho = {policy.value}"
    if policy.kind == "zero-table":
        if policy.table is None or len(policy.table) == 0:
            raise RhoUnavailable("zero-table rho policy without a table")
        z1 = policy.table.first
        with workprec(precision + 16):
            rho_f = mpf(policy.safety.numerator) / policy.safety.denominator * (z1.value ** 2)
        prov = (f"rho = {policy.safety} * min_zero^2, min_zero = {z1} "
                f"({policy.table.source} table)")
        if exact:
            return _mpf_to_fraction(rho_f), prov + " [exact dyadic]"
        return BigFloat(rho_f, precision), prov
    if policy.kind == "coefficient-bound":
        e1 = _numeric_e1(e, bindings, RhoUnavailable)
        if isinstance(e1, Fraction):
            if e1 <= 0:
                raise RhoUnavailable(f"coefficient bound e_1 = {e1} not positive")
            return policy.safety / e1, "rho = safety/e_1 (coefficient bound)"
        if not e1 > 0:
            raise RhoUnavailable(f"coefficient bound e_1 = {e1} not positive")
        with workprec(precision + 16):
            rho_f = mpf(policy.safety.numerator) / policy.safety.denominator / e1.value
        return BigFloat(rho_f, precision), "rho = safety/e_1 (coefficient bound)"
    if policy.kind == "first-root":
        rho = _first_root_bound(f, precision, policy.safety)
        return rho, "rho = safety * first bracketed root of the truncated series"
    raise RhoUnavailable(f"unknown rho policy {policy.kind!r}")


def _series_value(f: TruncatedSeries, z):
    v = f.evaluate(z)
    return v.value if isinstance(v, BigFloat) else v


def _first_root_bound(f: TruncatedSeries, precision: int, safety: Fraction) -> BigFloat:
    """Bracket the smallest positive root of the truncated series, bisect."""
    e1 = f[1]
    with workprec(precision + 16):
        if isinstance(e1, BigFloat):
            scale = abs(1 / e1.value)
        else:
            e1f = Fraction(e1)
            if e1f == 0:
                raise RhoUnavailable("vanishing linear coefficient; no scale for root scan")
            scale = abs(mpf(e1f.denominator) / e1f.numerator)
        fb = lambda z: _series_value(f, BigFloat(z, precision + 16))
        lo = mpf(0)
        flo = fb(lo)
        hi = None
        step = scale / 16
        z = step
        for _ in range(1024):
            fz = fb(z)
            if fz * flo < 0:
                hi = z
                break
            lo, flo = z, fz
            z += step
        if hi is None:
            raise RhoUnavailable("no sign change found while scanning for the first root")
        fhi = fb(hi)
        for _ in range(precision + 32):
            mid = (lo + hi) / 2
            fm = fb(mid)
            if fm == 0:
                lo = hi = mid
                break
            if fm * flo < 0:
                hi, fhi = mid, fm
            else:
                lo, flo = mid, fm
            if hi - lo <= mpf(2) ** (-(precision + 8)) * hi:
                break
        root = (lo + hi) / 2
        return BigFloat(root * safety.numerator / safety.denominator, precision)


@dataclass
class SeriesSpec:
    """Adapter: run an explicit truncated series through the certifiers.

    A finite polynomial product is padded with zero coefficients beyond its
    degree, which is exactly its infinite Taylor expansion.
    """

    f: TruncatedSeries
    precision: int = DEFAULT_PRECISION_BITS
    label: str = "explicit-series"
    mode: str = "exact"
    _moments = None

    def series(self, N: int) -> TruncatedSeries:
        coeffs = list(self.f.coefficients)
        if len(coeffs) < N + 1:
            zero = Fraction(0)
            coeffs = coeffs + [zero] * (N + 1 - len(coeffs))
        return TruncatedSeries(coeffs[: N + 1])

    def elementary(self, K: int) -> ElementarySequence:
        return elementary_from_series(self.series(K))

    def bindings(self):
        return None


# ---------------------------------------------------------------------------
# certificate report
# ---------------------------------------------------------------------------


def serialize_scalar(v) -> object:
    if v is None:
        return None
    if isinstance(v, bool):
        return v
    if isinstance(v, int):
        return v
    if isinstance(v, float):
        return repr(v)
    if isinstance(v, Fraction):
        return rational_str(v)
    if isinstance(v, BigFloat):
        return bigfloat_str(v)
    if isinstance(v, BigComplex):
        return {"re": bigfloat_str(v.real), "im": bigfloat_str(v.imag)}
    if isinstance(v, RationalFunction):
        return str(v)
    return str(v)


@dataclass
class CellRecord:
    j: int
    k: int
    value: object
    verdict: Verdict
    margin: object

    def as_dict(self) -> dict:
        return {
            "j": self.j,
            "k": self.k,
            "value": serialize_scalar(self.value),
            "verdict": self.verdict.value,
            "margin": serialize_scalar(self.margin),
        }


@dataclass
class CertificateReport:
    """Outcome of one certification run; serializes bit-stably to JSON."""

    function: str
    mode: str                       # MOMENT | DERIVATIVE | SHIFTED_EVEN
    grid_bound: int
    precision_bits: int
    cells: list
    lam: object = None
    rho: object = None
    lam_provenance: str = ""
    rho_provenance: str = ""
    metadata: dict = field(default_factory=dict)

    @property
    def verdict(self) -> str:
        counts = self.counts()
        if counts["NEGATIVE"]:
            return "FAIL"
        if counts["INDETERMINATE"]:
            return "INDETERMINATE"
        return "BOUNDED-PASS"

    def counts(self) -> dict[str, int]:
        out = {v.value: 0 for v in Verdict}
        for c in self.cells:
            out[c.verdict.value] += 1
        return out

    def failures(self) -> list[CellRecord]:
        return [c for c in self.cells if c.verdict is not Verdict.NONNEGATIVE]

    def min_margin_cell(self) -> Optional[CellRecord]:
        best = None
        for c in self.cells:
            if best is None or _lt(c.margin, best.margin):
                best = c
        return best

    def detection_depth(self) -> Optional[int]:
        depths = [c.j + c.k for c in self.cells if c.verdict is Verdict.NEGATIVE]
        return min(depths) if depths else None

    def as_dict(self) -> dict:
        mm = self.min_margin_cell()
        return {
            "schema": 1,
            "function": self.function,
            "mode": self.mode,
            "lambda": serialize_scalar(self.lam),
            "rho": serialize_scalar(self.rho),
            "grid_bound": self.grid_bound,
            "precision_bits": self.precision_bits,
            "cells": [c.as_dict() for c in sorted(self.cells, key=lambda c: (c.j, c.k))],
            "verdict": self.verdict,
            "failures": [c.as_dict() for c in self.failures()],
            "metadata": {
                **{k: _meta_safe(v) for k, v in sorted(self.metadata.items())},
                "lambda_provenance": self.lam_provenance,
                "rho_provenance": self.rho_provenance,
                "verdict_counts": self.counts(),
                "min_margin_cell": mm.as_dict() if mm else None,
                "statement": (
                    f"bounded certificate to j+k <= {self.grid_bound}; "
                    "evidence, not a proof of zero positivity"),
            },
        }

    def to_csv(self) -> str:
        """Triangle as CSV: rows j, columns k, `value letter` entries."""
        width = max(c.k for c in self.cells) + 1
        grid = {}
        for c in self.cells:
            grid[(c.j, c.k)] = c
        lines = ["j\\k," + ",".join(str(k) for k in range(width))]
        for j in range(max(c.j for c in self.cells) + 1):
            row = []
            for k in range(width):
                c = grid.get((j, k))
                row.append("" if c is None else
                           f"{_short_value(c.value)} {c.verdict.letter}")
            lines.append(f"{j}," + ",".join(row))
        return "\n".join(lines) + "\n"


def _short_value(v) -> str:
    if isinstance(v, Fraction):
        return rational_str(v)
    if isinstance(v, BigFloat):
        return mpmath.nstr(v.value, 12)
    return str(v)


def _meta_safe(v):
    if isinstance(v, (str, int, bool, float)) or v is None:
        return v
    if isinstance(v, dict):
        return {k: _meta_safe(x) for k, x in sorted(v.items())}
    if isinstance(v, (list, tuple)):
        return [_meta_safe(x) for x in v]
    return serialize_scalar(v)


def _lt(a, b) -> bool:
    try:
        return a < b
    except TypeError:
        return False


# ---------------------------------------------------------------------------
# MOMENT mode
# ---------------------------------------------------------------------------


def certify_moment(
    spec: FunctionSpec,
    B: int,
    lam_policy: Optional[LambdaPolicy] = None,
    sign_policy: SignPolicy = DEFAULT_SIGN_POLICY,
    retry_doubling: bool = True,
) -> CertificateReport:
    """Full moment-mode pipeline: coefficients -> power sums -> scaled
    difference table -> per-cell verdicts."""
    if B < 0:
        raise ValueError("grid bound must be nonnegative")
    lam_policy = lam_policy or _default_lambda_policy(spec)
    report = _moment_once(spec, B, lam_policy, sign_policy)
    if retry_doubling and report.verdict == "INDETERMINATE":
        new_prec = min(spec.precision * 2, MAX_RETRY_PRECISION)
        if new_prec > spec.precision:
            spec2 = replace(spec, precision=new_prec)
            if isinstance(spec2, FunctionSpec):
                spec2._moments = None
            report = _moment_once(spec2, B, lam_policy, sign_policy)
            report.metadata["retried_at_bits"] = new_prec
    return report


def _default_lambda_policy(spec) -> LambdaPolicy:
    if getattr(spec, "kind", None) is FunctionKind.SINC:
        # smallest zero of the reduced product is exactly 1
        return LambdaPolicy(kind="explicit", value=Fraction(1))
    return LambdaPolicy(kind="coefficient-bound")


def _moment_once(spec, B, lam_policy, sign_policy) -> CertificateReport:
    e = spec.elementary(B + 1)
    p = power_sums_from_elementary(e, B + 1)
    exact = p.domain in ("rational", "ratfunc")
    bindings = spec.bindings()
    lam, lam_prov = resolve_lambda(lam_policy, e, exact, spec.precision, bindings)
    table = moment_criterion(
        p, lam, J=B, K=0,
        policy=sign_policy,
        bindings=bindings,
        verdict_precision=spec.precision,
    )
    cells = [CellRecord(j, k, v, table.verdict(j, k).verdict, table.verdict(j, k).margin)
             for j, k, v in table.iter_cells()]
    report = CertificateReport(
        function=spec.label,
        mode="MOMENT",
        grid_bound=B,
        precision_bits=spec.precision,
        cells=cells,
        lam=lam,
        lam_provenance=lam_prov,
        metadata=_spec_metadata(spec, B),
    )
    return report


def _spec_metadata(spec, B: int) -> dict:
    kind = spec.kind.value if isinstance(spec, FunctionSpec) else "explicit-series"
    meta = {"coefficient_mode": spec.mode, "kind": kind}
    if getattr(spec, "_moments", None) is not None:
        meta["quadrature"] = dict(spec._moments.metadata)
        meta["moment_errors"] = [bigfloat_str(e) for e in spec._moments.errors]
    return meta


# ---------------------------------------------------------------------------
# DERIVATIVE mode
# ---------------------------------------------------------------------------


def certify_derivative(
    spec: FunctionSpec,
    B: int,
    rho_policy: Optional[RhoPolicy] = None,
    sign_policy: SignPolicy = DEFAULT_SIGN_POLICY,
    retry_doubling: bool = True,
) -> CertificateReport:
    """Derivative-form pipeline with the moment-route cross-check."""
    if B < 0:
        raise ValueError("grid bound must be nonnegative")
    rho_policy = rho_policy or RhoPolicy(kind="coefficient-bound")
    report = _derivative_once(spec, B, rho_policy, sign_policy)
    if retry_doubling and report.verdict == "INDETERMINATE":
        new_prec = min(spec.precision * 2, MAX_RETRY_PRECISION)
        if new_prec > spec.precision:
            spec2 = replace(spec, precision=new_prec)
            if isinstance(spec2, FunctionSpec):
                spec2._moments = None
            report = _derivative_once(spec2, B, rho_policy, sign_policy)
            report.metadata["retried_at_bits"] = new_prec
    return report


def _derivative_once(spec, B, rho_policy, sign_policy) -> CertificateReport:
    N = 2 * B + 4
    e = spec.elementary(N)
    f = spec.series(N)
    p = power_sums_from_log_derivative(f, B + 1)
    exact = p.domain in ("rational", "ratfunc")
    bindings = spec.bindings()
    rho, rho_prov = resolve_rho(rho_policy, e, f, exact, spec.precision, bindings)
    cells, route_defect = _derivative_cells(
        f, p, rho, B, sign_policy, bindings, spec.precision)
    report = CertificateReport(
        function=spec.label,
        mode="DERIVATIVE",
        grid_bound=B,
        precision_bits=spec.precision,
        cells=cells,
        rho=rho,
        rho_provenance=rho_prov,
        metadata=_spec_metadata(spec, B),
    )
    report.metadata["route_equality_max_defect"] = serialize_scalar(route_defect)
    return report


def _derivative_cells(f, p, rho, B, sign_policy, bindings, precision):
    """Cells by the series route, cross-checked against the difference route."""
    diff_route = derivative_cells_from_power_sums(p, rho, B)
    worst = None
    cells = []
    for j in range(B + 1):
        for k in range(B + 1 - j):
            v = derivative_form_coefficient(f, rho, j, k)
            d = v - diff_route[(j, k)]
            worst = _max_abs(worst, d, bindings, precision)
            cells.append(_nonpositive_cell(j, k, v, sign_policy, bindings, precision))
    return cells, worst


def _max_abs(worst, d, bindings, precision):
    if isinstance(d, RationalFunction):
        if not d.is_zero():
            d = abs(d.evaluate({s: BigFloat(Fraction(bindings[s]) if not isinstance(bindings[s], BigFloat) else bindings[s], precision)
                                for s in d.symbols}))
        else:
            d = Fraction(0)
    if isinstance(d, Fraction):
        d = abs(d)
    if isinstance(d, BigFloat):
        d = abs(d)
    if worst is None or _lt(worst, d):
        return d
    return worst


def _nonpositive_cell(j, k, v, sign_policy, bindings, precision) -> CellRecord:
    value = v
    if isinstance(v, RationalFunction) and not v.is_constant():
        if bindings is None:
            raise ScalarError("symbolic cells need bindings for verdicts")
        v = v.evaluate({s: _as_bigfloat(bindings[s], precision) for s in v.symbols})
    if isinstance(v, BigFloat):
        cell_policy = SignPolicy(scale=_deriv_scale(j, k, v), kappa=sign_policy.kappa)
        sv = sign_decide(-v, cell_policy)
    else:
        sv = sign_decide(-v, sign_policy)
    return CellRecord(j, k, value, sv.verdict, sv.margin)


def _deriv_scale(j, k, v) -> float:
    # factorial growth of the cell values sets the noise scale
    try:
        return max(1.0, float(abs(v).value), float(factorial(j + k)))
    except OverflowError:
        return float(factorial(min(j + k, 150)))


def _as_bigfloat(x, precision) -> BigFloat:
    if isinstance(x, BigFloat):
        return x
    return BigFloat(Fraction(x), precision)


def route_equality_defect(spec: FunctionSpec, B: int, rho=None) -> object:
    """Worst |series-route - difference-route| cell discrepancy at bound B."""
    N = 2 * B + 4
    e = spec.elementary(N)
    f = spec.series(N)
    p = power_sums_from_log_derivative(f, B + 1)
    exact = p.domain in ("rational", "ratfunc")
    if rho is None:
        rho, _ = resolve_rho(RhoPolicy(kind="coefficient-bound"), e, f, exact, spec.precision)
    diff_route = derivative_cells_from_power_sums(p, rho, B)
    worst = None
    bindings = spec.bindings()
    for j in range(B + 1):
        for k in range(B + 1 - j):
            v = derivative_form_coefficient(f, rho, j, k)
            worst = _max_abs(worst, v - diff_route[(j, k)], bindings, spec.precision)
    return worst


# ---------------------------------------------------------------------------
# SHIFTED_EVEN mode
# ---------------------------------------------------------------------------


def _even_source_series(spec: FunctionSpec, order2: int) -> TruncatedSeries:
    """The even series G(z) in the original variable, float coefficients."""
    if spec.kind is FunctionKind.SINC:
        return sinc_even_series(order2, spec.precision)
    if spec.kind in (FunctionKind.BESSEL_K, FunctionKind.RIEMANN_XI,
                     FunctionKind.DIRICHLET_XI):
        return even_series_from_moments(spec.moments(order2 // 2), spec.precision)
    raise ScalarError(f"{spec.kind.value} has no even-series source here")


def shifted_reduced_series(G: TruncatedSeries, c, precision: int) -> TruncatedSeries:
    """Genus-0 reduction of (G(w-ic)+G(w+ic))/(2 G(ic)) from an even real G.

    Shift by ``+-ic`` via binomial convolution, confirm the result is real
    and even to float tolerance, reduce ``z^{2n} -> z^n``, normalize.
    """
    for idx in range(1, len(G.coefficients), 2):
        ci = G.coefficients[idx]
        if not (isinstance(ci, BigFloat) and ci.value == 0) and ci != 0:
            raise NotEvenAfterShift(f"source series has odd coefficient at {idx}")
    ic = BigComplex(mpmath.mpc(0, 1), precision) * _as_bigfloat(c, precision)
    plus = taylor_shift(G, ic)
    minus = taylor_shift(G, -ic)
    combined = []
    with workprec(precision + 16):
        tol = mpf(2) ** (-Fraction(precision, 2))
        maxmag = mpf(0)
        raw = []
        for a, b in zip(plus.coefficients, minus.coefficients):
            s = _as_bigcomplex(a, precision) + _as_bigcomplex(b, precision)
            raw.append(s)
            m = abs(s.value)
            if m > maxmag:
                maxmag = m
        if maxmag == 0:
            raise ShiftedNormalizationZero("shifted combination is identically zero")
        for n, s in enumerate(raw):
            im = abs(s.value.imag)
            if im > tol * maxmag:
                raise NotEvenAfterShift(
                    f"imaginary residue {im} at coefficient {n} exceeds tolerance")
            combined.append(BigFloat(s.value.real, precision))
    S = TruncatedSeries(combined)
    reduced = even_sqrt_reduce(S)
    a0 = reduced[0]
    with workprec(precision + 16):
        if abs(a0.value) <= mpf(2) ** (-Fraction(precision, 2)) * maxmag:
            raise ShiftedNormalizationZero("G(ic) is numerically zero")
    return reduced.normalized()


def certify_shifted_even(
    spec: FunctionSpec,
    c,
    B: int,
    rho_policy: Optional[RhoPolicy] = None,
    sign_policy: SignPolicy = DEFAULT_SIGN_POLICY,
) -> CertificateReport:
    """Shifted-even certification for an even real entire function."""
    if B < 0:
        raise ValueError("grid bound must be nonnegative")
    order2 = 4 * B + 16
    G = _even_source_series(spec, order2)
    f = shifted_reduced_series(G, c, spec.precision)
    rho_policy = rho_policy or RhoPolicy(kind="first-root")
    e = elementary_from_series(f)
    p = power_sums_from_log_derivative(f, B + 1)
    rho, rho_prov = resolve_rho(rho_policy, e, f, False, spec.precision)
    cells, route_defect = _derivative_cells(
        f, p, rho, B, sign_policy, None, spec.precision)
    report = CertificateReport(
        function=f"{spec.label} shifted by c={c}",
        mode="SHIFTED_EVEN",
        grid_bound=B,
        precision_bits=spec.precision,
        cells=cells,
        rho=rho,
        rho_provenance=rho_prov,
        metadata=_spec_metadata(spec, B),
    )
    report.metadata["shift_c"] = serialize_scalar(_as_bigfloat(c, spec.precision))
    report.metadata["route_equality_max_defect"] = serialize_scalar(route_defect)
    return report


def _as_bigcomplex(x, precision) -> BigComplex:
    if isinstance(x, BigComplex):
        return x
    if isinstance(x, BigFloat):
        return BigComplex(x.value, precision)
    return BigComplex(Fraction(x), precision)


# ---------------------------------------------------------------------------
# explicit low-order formulas from even moments
# ---------------------------------------------------------------------------


def _moment_list(b) -> list:
    if isinstance(b, MomentResult):
        return list(b.values)
    return list(b)


def explicit_p_formulas(b, K: int = 4) -> PowerSumSequence:
    """p_1..p_K (K <= 4) from even moments via the hard-coded closed forms.

    b supplies b_0, b_2, .., b_8 (a MomentResult or plain list).  Must agree
    exactly with the generic Newton pipeline on e_i = b_{2i}/((2i)! b_0).
    """
    bs = _moment_list(b)
    if not 1 <= K <= 4:
        raise ValueError("explicit formulas cover K = 1..4 only")
    if len(bs) < K + 1:
        raise ValueError(f"need b_0..b_{2 * K}")
    b0 = bs[0]
    if b0 == 0:
        raise ZeroB0("b_0 = 0")
    b2 = bs[1]
    out = [b2 / (2 * b0)]
    if K >= 2:
        b4 = bs[2]
        out.append((3 * b2 * b2 - b0 * b4) / (12 * b0 * b0))
    if K >= 3:
        b6 = bs[3]
        out.append((30 * b2 ** 3 - 15 * b0 * b2 * b4 + b0 * b0 * b6)
                   / (240 * b0 ** 3))
    if K >= 4:
        b8 = bs[4]
        out.append((630 * b2 ** 4 - 420 * b0 * b2 * b2 * b4
                    + 35 * b0 * b0 * b4 * b4 + 28 * b0 * b0 * b2 * b6
                    - b0 ** 3 * b8) / (10080 * b0 ** 4))
    return PowerSumSequence(out)


def power_sums_from_moment_list(b, K: int) -> PowerSumSequence:
    """Generic pipeline: e_i = b_{2i}/((2i)! b_0), then Newton."""
    bs = _moment_list(b)
    b0 = bs[0]
    if b0 == 0:
        raise ZeroB0("b_0 = 0")
    e = [Fraction(1)]
    for i in range(1, K + 1):
        e.append(bs[i] / (factorial(2 * i) * b0))
    return power_sums_from_elementary(ElementarySequence(e), K)


def b_recurrence_power_sums(b, K: int) -> PowerSumSequence:
    """p_k by the moment-form recurrence (independent transcription)."""
    bs = _moment_list(b)
    b0 = bs[0]
    if b0 == 0:
        raise ZeroB0("b_0 = 0")
    p: list = []
    for k in range(1, K + 1):
        sign = 1 if (k - 1) % 2 == 0 else -1
        acc = (bs[k] * Fraction(sign * k, factorial(2 * k))) / b0
        for i in range(1, k):
            s = 1 if (k - 1 + i) % 2 == 0 else -1
            term = (bs[k - i] * Fraction(s, factorial(2 * (k - i)))) / b0 * p[i - 1]
            acc = acc + term
        p.append(acc)
    return PowerSumSequence(p)


def b_closed_form_power_sum(b, k: int):
    """p_k by the multinomial partition sum over e_i = b_{2i}/((2i)! b_0)."""
    from .symfun import enumerate_partitions

    bs = _moment_list(b)
    b0 = bs[0]
    if b0 == 0:
        raise ZeroB0("b_0 = 0")
    total = None
    k_sign = 1 if k % 2 == 0 else -1
    for part in enumerate_partitions(k):
        r = part.multiplicities
        m = part.part_count
        coeff = Fraction(k_sign * k * factorial(m - 1))
        for ri in r:
            coeff /= factorial(ri)
        term = coeff
        for i, ri in enumerate(r, start=1):
            if ri:
                term = term * (-(bs[i] / (factorial(2 * i) * b0))) ** ri
        total = term if total is None else total + term
    return total


# ---------------------------------------------------------------------------
# adversarial falsification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Defect:
    """A planted sequence entry: negative rational or a conjugate pair."""

    re: Fraction
    im: Fraction = Fraction(0)
    multiplicity: int = 1

    @property
    def is_complex(self) -> bool:
        return self.im != 0


@dataclass(frozen=True)
class AdversarialSpec:
    """Finite positive rational base plus planted defects, and the bound."""

    base: tuple
    defects: tuple
    lam: Fraction
    label: str = "adversarial"

    def __post_init__(self):
        if not self.defects:
            raise ValueError("an adversarial spec needs at least one defect")


def _complex_pair_power_sum(re: Fraction, im: Fraction, k: int) -> Fraction:
    """(re+im*i)^k + (re-im*i)^k as an exact rational."""
    a, b = Fraction(1), Fraction(0)
    for _ in range(k):
        a, b = a * re - b * im, a * im + b * re
    return 2 * a


def adversarial_power_sums(spec: AdversarialSpec, K: int,
                           include_defects: bool = True) -> PowerSumSequence:
    """Exact rational power sums of base plus defects."""
    out = []
    for k in range(1, K + 1):
        acc = Fraction(0)
        for lam in spec.base:
            acc += Fraction(lam) ** k
        if include_defects:
            for d in spec.defects:
                if d.is_complex:
                    acc += d.multiplicity * _complex_pair_power_sum(d.re, d.im, k)
                else:
                    acc += d.multiplicity * Fraction(d.re) ** k
        out.append(acc)
    return PowerSumSequence(out)


def adversarial_run(
    spec: AdversarialSpec,
    B: int,
    sign_policy: SignPolicy = DEFAULT_SIGN_POLICY,
    include_defects: bool = True,
) -> tuple[CertificateReport, Optional[int]]:
    """Exact moment-mode run on the synthetic sequence.

    Returns the certificate and the detection depth: the smallest ``j+k``
    with a NEGATIVE cell, or None when the bounded triangle sees nothing.
    """
    p = adversarial_power_sums(spec, B + 1, include_defects)
    table = moment_criterion(p, spec.lam, J=B, K=0, policy=sign_policy)
    cells = [CellRecord(j, k, v, table.verdict(j, k).verdict, table.verdict(j, k).margin)
             for j, k, v in table.iter_cells()]
    report = CertificateReport(
        function=spec.label,
        mode="MOMENT",
        grid_bound=B,
        precision_bits=0,
        cells=cells,
        lam=spec.lam,
        lam_provenance="adversarial spec lambda (exact)",
        metadata={
            "base_size": len(spec.base),
            "defects": [
                {"re": rational_str(d.re), "im": rational_str(d.im),
                 "multiplicity": d.multiplicity}
                for d in spec.defects
            ],
            "defects_included": include_defects,
        },
    )
    return report, report.detection_depth()


def draw_adversarial_spec(
    rng: random.Random,
    base_count: int = 48,
    lam: Fraction = Fraction(1),
    magnitude_range: tuple[Fraction, Fraction] = (Fraction(1, 4), Fraction(1)),
    complex_defect: bool = False,
) -> AdversarialSpec:
    """Seeded draw: base {1/n^2} truncated, one defect of magnitude in range.

    Real defects are negative; complex draws return a conjugate pair with the
    drawn magnitude and a random phase.
    """
    base = tuple(Fraction(1, n * n) for n in range(1, base_count + 1))
    lo, hi = magnitude_range
    u = Fraction(rng.randrange(0, 10 ** 9), 10 ** 9)
    mag = lo + (hi - lo) * u
    if mag < lo:
        mag = lo
    if not complex_defect:
        defect = Defect(re=-mag)
    else:
        t = Fraction(rng.randrange(1, 10 ** 6), 10 ** 6)
        # rational point on a near-circle: re/im from a Pythagorean-style pair
        den = 1 + t * t
        cos_t = (1 - t * t) / den
        sin_t = 2 * t / den
        defect = Defect(re=mag * cos_t, im=mag * sin_t)
    return AdversarialSpec(base=base, defects=(defect,), lam=Fraction(lam),
                           label=f"adversarial(base={base_count}, defect={defect.re}"
                                 + (f"+-{defect.im}i" if defect.im else "") + ")")
