"""Finite-difference positivity machinery for moment sequences.

A positive sequence ``l_n`` with ``l = sup l_n`` induces moments
``m_k = p_{k+1} / l**(k+1)`` of the positive measure that places mass
``l_n/l`` at ``l_n/l`` in ``[0, 1]``.  Complete monotonicity of those
moments -- every iterated difference ``(-D)^j m_k = sum_i C(j,i)(-1)^i
m_{k+i}`` nonnegative -- characterizes positivity of the sequence.  The
:class:`DifferenceTable` materializes a finite triangle of those cells with
per-cell sign verdicts; a clean triangle is a *bounded certificate*, never a
proof, since the full criterion quantifies over all ``(j, k)``.

The same cells have a derivative form: with ``L = f'/f`` for the genus-0
product ``f`` of the sequence and any ``0 < rho <= inf |roots|``,

    D(j,k) = (j+k)! * [z^(j+k)] { (z-1)^j * rho*L(rho*z) }
           = -rho * (j+k)! * (-D)^j ( rho^k p_{k+1} )

must be nonpositive cell by cell.  :func:`derivative_form_coefficient`
computes the left-hand side from series coefficients alone, giving a route
independent of the difference table; their exact agreement is one of the
library's core self-checks.

Float-mode tables are computed with extra working bits (one per triangle
row+column) because iterated differencing of near-equal moments cancels
roughly one bit per row.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Mapping, Optional, Sequence

from .scalars import (
    BigFloat,
    RationalFunction,
    ScalarError,
    SignPolicy,
    SignVerdict,
    Verdict,
    sign_decide,
    DEFAULT_SIGN_POLICY,
    DEFAULT_PRECISION_BITS,
)
from .symfun import InsufficientCoefficients, PowerSumSequence, _domain_tag
from .series import TruncatedSeries, log_derivative_series

__all__ = [
    "MomentVector",
    "DifferenceTable",
    "difference_table",
    "moment_criterion",
    "derivative_form_coefficient",
    "InsufficientMoments",
    "NonPositiveLambda",
]


class InsufficientMoments(ScalarError):
    """Fewer moments than the requested difference order needs."""


class NonPositiveLambda(ScalarError):
    """The scaling bound must be a positive number."""


@dataclass(frozen=True)
class MomentVector:
    """Moments ``m_0 .. m_K`` plus a provenance note for reports."""

    values: tuple
    provenance: str = ""

    def __init__(self, values: Sequence, provenance: str = ""):
        values = tuple(values)
        if not values:
            raise InsufficientMoments("empty moment vector")
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "provenance", provenance)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, k: int):
        return self.values[k]

    @property
    def domain(self) -> str:
        return _domain_tag(self.values)


def _binomial_cell(values, j: int, k: int):
    """(-D)^j m_k by the alternating binomial sum (the non-recursive route)."""
    acc = None
    for i in range(j + 1):
        t = values[k + i] * ((-1) ** i * comb(j, i))
        acc = t if acc is None else acc + t
    return acc


@dataclass
class DifferenceTable:
    """Triangle ``cells[j][k] = (-D)^j m_k`` with optional sign verdicts.

    Row 0 is the moment vector itself; each later row is the elementwise
    difference ``cells[j-1][k] - cells[j-1][k+1]``.  Row ``j`` holds columns
    ``k = 0 .. bound - j`` where ``bound = len(m) - 1`` (capped by ``J``).
    """

    moments: MomentVector
    rows: list = field(default_factory=list)
    verdicts: Optional[list] = None
    lam: object = None

    @property
    def bound(self) -> int:
        return len(self.moments) - 1

    @property
    def max_row(self) -> int:
        return len(self.rows) - 1

    def cell(self, j: int, k: int):
        return self.rows[j][k]

    def verdict(self, j: int, k: int) -> SignVerdict:
        if self.verdicts is None:
            raise ScalarError("verdicts not computed for this table")
        return self.verdicts[j][k]

    def iter_cells(self):
        for j, row in enumerate(self.rows):
            for k, v in enumerate(row):
                yield j, k, v

    def counts(self) -> dict[str, int]:
        out = {v.value: 0 for v in Verdict}
        for j, row in enumerate(self.verdicts or []):
            for sv in row:
                out[sv.verdict.value] += 1
        return out

    def is_pass(self) -> bool:
        c = self.counts()
        return c["NEGATIVE"] == 0 and c["INDETERMINATE"] == 0

    def failures(self) -> list[tuple[int, int]]:
        out = []
        for j, row in enumerate(self.verdicts or []):
            for k, sv in enumerate(row):
                if sv.verdict is not Verdict.NONNEGATIVE:
                    out.append((j, k))
        return out

    def min_margin_cell(self):
        """(j, k, margin) of the smallest-margin cell, or None."""
        best = None
        for j, row in enumerate(self.verdicts or []):
            for k, sv in enumerate(row):
                m = sv.margin
                if best is None or _margin_lt(m, best[2]):
                    best = (j, k, m)
        return best

    def to_csv(self) -> str:
        """Rows are difference orders j, columns are moment indices k."""
        width = len(self.rows[0]) if self.rows else 0
        lines = ["j\\k," + ",".join(str(k) for k in range(width))]
        for j, row in enumerate(self.rows):
            cells = []
            for k, v in enumerate(row):
                letter = self.verdicts[j][k].letter if self.verdicts else ""
                cells.append(f"{_cell_text(v)} {letter}".strip())
            lines.append(f"{j}," + ",".join(cells))
        return "\n".join(lines) + "\n"


def _cell_text(v) -> str:
    if isinstance(v, Fraction):
        from .scalars import rational_str

        return rational_str(v)
    return str(v)


def _margin_lt(a, b) -> bool:
    try:
        return a < b
    except TypeError:
        return False


def difference_table(
    m: MomentVector,
    J: int,
    cross_check: bool = True,
) -> DifferenceTable:
    """Build the triangle of iterated differences of ``m`` up to row ``J``.

    Computed by recursive subtraction; unless disabled, a sample of cells is
    recomputed with the alternating binomial formula and compared (exactly in
    exact domains, to the elevated working precision in float mode).
    """
    if len(m) < J + 1:
        raise InsufficientMoments(f"need at least {J + 1} moments, have {len(m)}")
    values = list(m.values)
    domain = m.domain
    if domain == "float":
        # one extra guard bit per triangle dimension absorbs difference loss
        boost = len(values) + J
        values = [BigFloat(v.value, v.prec + boost) if isinstance(v, BigFloat) else v
                  for v in values]
    rows = [values]
    for j in range(1, J + 1):
        prev = rows[-1]
        if len(prev) < 2:
            break
        rows.append([prev[k] - prev[k + 1] for k in range(len(prev) - 1)])
    table = DifferenceTable(moments=m, rows=rows)
    if cross_check:
        _cross_check(table)
    return table


def _cross_check(table: DifferenceTable, sample_stride: int = 3) -> None:
    values = table.rows[0]
    for j in range(1, len(table.rows), max(1, sample_stride)):
        row = table.rows[j]
        for k in range(0, len(row), max(1, sample_stride)):
            direct = _binomial_cell(values, j, k)
            got = row[k]
            if isinstance(got, BigFloat):
                tol = _float_tolerance(values, j, k, got.prec)
                if abs((got - direct).value) > tol:
                    raise ScalarError(
                        f"difference-table cross-check failed at ({j},{k})")
            else:
                if got != direct:
                    raise ScalarError(
                        f"difference-table cross-check failed at ({j},{k})")


def _float_tolerance(values, j, k, prec):
    scale = BigFloat(1, prec)
    for i in range(j + 1):
        scale = scale + abs(values[k + i]) * comb(j, i)
    return (scale * BigFloat(2, prec) ** Fraction(-(prec - 8), 1)).value


def binomial_scale(values, j: int, k: int, prec: int) -> BigFloat:
    """Magnitude of the cell before cancellation; the honest noise scale."""
    acc = BigFloat(0, prec)
    for i in range(j + 1):
        v = values[k + i]
        av = abs(v) if isinstance(v, BigFloat) else abs(BigFloat(v, prec))
        acc = acc + av * comb(j, i)
    return acc


def moment_criterion(
    p: PowerSumSequence,
    lam,
    J: int,
    K: int = 0,
    policy: SignPolicy = DEFAULT_SIGN_POLICY,
    bindings: Optional[Mapping[str, object]] = None,
    verdict_precision: int = DEFAULT_PRECISION_BITS,
    cross_check: bool = True,
) -> DifferenceTable:
    """Scaled-moment difference table with per-cell sign verdicts.

    Builds ``m_k = p_{k+1} / lam**(k+1)`` for ``k = 0 .. J+K`` and the
    triangle up to row ``J``.  Overall PASS means every verdict NONNEGATIVE;
    equality counts as a pass since the criterion is a non-strict inequality.

    Exact-domain cells are decided exactly.  Rational-function cells need
    ``bindings`` mapping each symbol to a number; cells are then evaluated at
    ``verdict_precision`` bits for the verdict while staying exact in the
    table.  Float cells are decided with a per-cell noise scale equal to the
    pre-cancellation binomial magnitude.
    """
    if isinstance(lam, (int, Fraction)):
        if lam <= 0:
            raise NonPositiveLambda(f"lambda = {lam}")
        lam = Fraction(lam)
    elif isinstance(lam, BigFloat):
        if not lam > 0:
            raise NonPositiveLambda(f"lambda = {lam}")
    else:
        raise NonPositiveLambda(f"lambda must be rational or BigFloat, got {type(lam)}")
    need = J + K + 1
    if len(p) < need:
        raise InsufficientCoefficients(f"need p_1..p_{need}, have p_1..p_{len(p)}")
    inv = 1 / lam
    moments = []
    scale = inv
    for k in range(need):
        moments.append(p[k + 1] * scale)
        scale = scale * inv
    m = MomentVector(moments, provenance=f"m_k = p_(k+1)/lambda^(k+1), lambda={lam}")
    table = difference_table(m, J, cross_check=cross_check)
    table.lam = lam
    decide_table_verdicts(table, policy=policy, bindings=bindings,
                          verdict_precision=verdict_precision)
    return table


def decide_table_verdicts(
    table: DifferenceTable,
    policy: SignPolicy = DEFAULT_SIGN_POLICY,
    bindings: Optional[Mapping[str, object]] = None,
    verdict_precision: int = DEFAULT_PRECISION_BITS,
    negate: bool = False,
) -> None:
    """Attach a sign verdict to every cell (of ``-cell`` when ``negate``)."""
    verdicts = []
    float_values = None
    for j, row in enumerate(table.rows):
        vrow = []
        for k, v in enumerate(row):
            if isinstance(v, RationalFunction) and not v.is_constant():
                if bindings is None:
                    raise ScalarError(
                        "rational-function cells need bindings for verdicts")
                missing = [s for s in v.symbols if s not in bindings]
                if missing:
                    raise ScalarError(
                        f"no numeric binding for symbol(s) {missing}; "
                        "supply parameter values")
                v = v.evaluate(
                    {s: _bind_value(bindings[s], verdict_precision)
                     for s in v.symbols})
            if isinstance(v, BigFloat):
                if float_values is None:
                    float_values = [_cell_float(x, bindings, verdict_precision)
                                    for x in table.rows[0]]
                cell_policy = SignPolicy(
                    scale=max(1.0, float(binomial_scale(float_values, j, k, v.prec).value)),
                    kappa=policy.kappa,
                )
                sv = sign_decide(-v if negate else v, cell_policy)
            else:
                sv = sign_decide(-v if negate else v, policy)
            vrow.append(sv)
        verdicts.append(vrow)
    table.verdicts = verdicts


def _bind_value(v, prec):
    if isinstance(v, (int, Fraction, BigFloat)):
        return v if isinstance(v, BigFloat) else BigFloat(Fraction(v), prec)
    raise ScalarError(f"cannot bind symbol to {type(v).__name__}")


def _cell_float(x, bindings, prec):
    if isinstance(x, RationalFunction):
        return x.evaluate({s: _bind_value(bindings[s], prec) for s in x.symbols})
    if isinstance(x, BigFloat):
        return x
    return BigFloat(Fraction(x), prec)


def derivative_form_coefficient(f: TruncatedSeries, rho, j: int, k: int):
    """Derivative-form cell value for the positivity criterion.

    Returns ``(j+k)! * [z^(j+k)] { (z-1)^j * d/dz log f(rho*z) }``, computed
    purely from series coefficients.  For a genus-0 product with positive
    roots and admissible ``rho`` this is ``<= 0`` and equals
    ``-rho*(j+k)!*(-D)^j(rho^k p_{k+1})``.
    """
    if j < 0 or k < 0:
        raise ValueError("j and k must be nonnegative")
    f.require_normalized()
    n = j + k
    if f.order < n + 1:
        raise InsufficientCoefficients(
            f"series order {f.order} too small for cell ({j},{k})")
    if isinstance(rho, int):
        rho = Fraction(rho)
    g = log_derivative_series(f, n + 1)
    # coefficients of d/dz log f(rho z) = rho * (f'/f)(rho z)
    rho_pow = [rho]
    for _ in range(n):
        rho_pow.append(rho_pow[-1] * rho)
    acc = None
    for s in range(j + 1):
        c = comb(j, s) * ((-1) ** (j - s))
        t = g[n - s] * rho_pow[n - s] * c
        acc = t if acc is None else acc + t
    return acc * factorial(n)


def derivative_cells_from_power_sums(p: PowerSumSequence, rho, bound: int):
    """All cells ``-rho*(j+k)!*(-D)^j(rho^k p_{k+1})`` for ``j+k <= bound``.

    The difference-route counterpart of :func:`derivative_form_coefficient`,
    used for the two-route equality check.
    """
    if isinstance(rho, int):
        rho = Fraction(rho)
    seq = []
    scale = rho
    for k in range(bound + 1):
        seq.append(p[k + 1] * scale)  # rho^(k+1) p_(k+1)
        scale = scale * rho
    out = {}
    for j in range(bound + 1):
        for k in range(bound + 1 - j):
            cell = _binomial_cell(seq, j, k)
            out[(j, k)] = -cell * factorial(j + k)
    return out
