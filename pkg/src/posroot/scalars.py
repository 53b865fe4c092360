"""Coefficient domains shared by the whole library.

Every quantity handled downstream (Taylor coefficients, elementary symmetric
values, power sums, moments, difference-table cells) lives in one of three
domains:

* exact rationals -- ``fractions.Fraction``,
* exact multivariate rational functions over the rationals -- the sparse
  :class:`Polynomial` / :class:`RationalFunction` pair defined here,
* arbitrary-precision binary floats -- :class:`BigFloat` (real) and
  :class:`BigComplex`, thin wrappers over mpmath that carry their own
  working precision.

Symbols inside a rational function are treated as independent
transcendentals: there is no simplification of algebraic relations such as
``sqrt(3)**2 == 3``.  Multivariate fractions are kept canonical only up to
removal of shared monomial factors and the rational content of the
denominator; equality is therefore decided by cross multiplication, which is
exact regardless of representation.  Univariate fractions are fully reduced
with a Euclidean gcd, which keeps deep recurrences over one parameter small.

Sign decisions over the float domain are heuristic, not rigorous interval
arithmetic: a value counts as NONNEGATIVE only when it clears a noise
threshold ``eps = scale * 2**(-precision/2)``, as NEGATIVE only when it falls
below ``-eps*kappa``, and is reported INDETERMINATE in between.  Exact
domains always decide.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Union

import mpmath
from mpmath import mpf, mpc, workprec

__all__ = [
    "Rational",
    "Polynomial",
    "RationalFunction",
    "BigFloat",
    "BigComplex",
    "Verdict",
    "SignVerdict",
    "SignPolicy",
    "sign_decide",
    "eval_rational_function",
    "DEFAULT_PRECISION_BITS",
    "MIN_PRECISION_BITS",
    "ScalarError",
    "DomainMismatch",
    "DenominatorVanishes",
    "UnboundSymbol",
    "NonFinite",
    "rational_str",
    "parse_rational",
    "bigfloat_str",
    "parse_bigfloat",
]

Rational = Fraction

DEFAULT_PRECISION_BITS = 256
MIN_PRECISION_BITS = 64


class ScalarError(Exception):
    """Base class for coefficient-domain errors."""


class DomainMismatch(ScalarError):
    """Operands live in incompatible coefficient domains."""


class DenominatorVanishes(ScalarError):
    """A rational function was evaluated at a zero of its denominator."""


class UnboundSymbol(ScalarError):
    """A rational function was evaluated with a symbol left unbound."""


class NonFinite(ScalarError):
    """A float value is NaN or infinite."""


# ---------------------------------------------------------------------------
# sparse multivariate polynomials
# ---------------------------------------------------------------------------


class Polynomial:
    """Sparse multivariate polynomial with Fraction coefficients.

    Terms are stored as ``{exponent_tuple: Fraction}`` over a fixed, ordered
    tuple of symbol names.  Zero coefficients are never stored.
    """

    __slots__ = ("symbols", "terms")

    def __init__(self, symbols: tuple[str, ...], terms: Mapping[tuple[int, ...], Fraction]):
        self.symbols = tuple(symbols)
        self.terms = {e: Fraction(c) for e, c in terms.items() if c != 0}

    @classmethod
    def constant(cls, symbols: Iterable[str], value) -> "Polynomial":
        symbols = tuple(symbols)
        value = Fraction(value)
        if value == 0:
            return cls(symbols, {})
        return cls(symbols, {(0,) * len(symbols): value})

    @classmethod
    def variable(cls, symbols: Iterable[str], name: str) -> "Polynomial":
        symbols = tuple(symbols)
        exp = [0] * len(symbols)
        exp[symbols.index(name)] = 1
        return cls(symbols, {tuple(exp): Fraction(1)})

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(all(e == 0 for e in exp) for exp in self.terms)

    def constant_value(self) -> Fraction:
        if not self.terms:
            return Fraction(0)
        if not self.is_constant():
            raise DomainMismatch("polynomial is not constant")
        return next(iter(self.terms.values()))

    def _check(self, other: "Polynomial") -> None:
        if self.symbols != other.symbols:
            raise DomainMismatch(
                f"symbol sets differ: {self.symbols} vs {other.symbols}")

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.symbols == other.symbols and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self):
        return hash((self.symbols, frozenset(self.terms.items())))

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, Fraction(0)) + c
            if s == 0:
                terms.pop(e, None)
            else:
                terms[e] = s
        return Polynomial(self.symbols, terms)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.symbols, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "Polynomial":
        return self + (-self._coerce(other))

    def __mul__(self, other) -> "Polynomial":
        other = self._coerce(other)
        self._check(other)
        terms: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(e, Fraction(0)) + c1 * c2
                if s == 0:
                    terms.pop(e, None)
                else:
                    terms[e] = s
        return Polynomial(self.symbols, terms)

    __radd__ = __add__
    __rmul__ = __mul__

    def __rsub__(self, other) -> "Polynomial":
        return self._coerce(other) - self

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Polynomial.constant(self.symbols, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.symbols, other)
        raise DomainMismatch(f"cannot combine polynomial with {type(other).__name__}")

    def content(self) -> Fraction:
        """Rational content: gcd of numerators over lcm of denominators."""
        if not self.terms:
            return Fraction(1)
        num = 0
        den = 1
        for c in self.terms.values():
            num = gcd(num, abs(c.numerator))
            den = den * c.denominator // gcd(den, c.denominator)
        return Fraction(num, den)

    def lead_coefficient(self) -> Fraction:
        """Coefficient of the lexicographically greatest monomial."""
        if not self.terms:
            return Fraction(0)
        return self.terms[max(self.terms)]

    def monomial_gcd(self) -> tuple[int, ...]:
        """Componentwise minimum exponent over all terms."""
        if not self.terms:
            return (0,) * len(self.symbols)
        it = iter(self.terms)
        m = list(next(it))
        for e in it:
            for i, v in enumerate(e):
                if v < m[i]:
                    m[i] = v
        return tuple(m)

    def shift_down(self, shift: tuple[int, ...]) -> "Polynomial":
        """Divide by the monomial with the given exponents (must divide all terms)."""
        return Polynomial(
            self.symbols,
            {tuple(a - b for a, b in zip(e, shift)): c for e, c in self.terms.items()},
        )

    def scale(self, factor: Fraction) -> "Polynomial":
        if factor == 0:
            return Polynomial(self.symbols, {})
        return Polynomial(self.symbols, {e: c * factor for e, c in self.terms.items()})

    def total_degree(self) -> int:
        if not self.terms:
            return 0
        return max(sum(e) for e in self.terms)

    def evaluate(self, bindings: Mapping[str, object]):
        """Evaluate at a point; exact for Fraction bindings, BigFloat otherwise."""
        for s in self.symbols:
            if s not in bindings:
                raise UnboundSymbol(f"symbol {s!r} not bound")
        values = [bindings[s] for s in self.symbols]
        exact = all(isinstance(v, (int, Fraction)) for v in values)
        if exact:
            total = Fraction(0)
            for e, c in self.terms.items():
                term = c
                for v, p in zip(values, e):
                    if p:
                        term *= Fraction(v) ** p
                total += term
            return total
        prec = max((v.prec for v in values if isinstance(v, (BigFloat, BigComplex))),
                   default=DEFAULT_PRECISION_BITS)
        fvals = [_to_mp(v, prec) for v in values]
        with workprec(prec + 10):
            total = mpf(0)
            for e, c in self.terms.items():
                term = mpf(c.numerator) / c.denominator
                for v, p in zip(fvals, e):
                    if p:
                        term *= v ** p
                total += term
        if isinstance(total, mpc):
            return BigComplex(total, prec)
        return BigFloat(total, prec)

    def _term_str(self, exp: tuple[int, ...], coeff: Fraction) -> str:
        parts = []
        for s, p in zip(self.symbols, exp):
            if p == 1:
                parts.append(s)
            elif p > 1:
                parts.append(f"{s}^{p}")
        if not parts:
            return rational_str(coeff)
        body = "*".join(parts)
        if coeff == 1:
            return body
        if coeff == -1:
            return f"-{body}"
        return f"{rational_str(coeff)}*{body}"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for exp in sorted(self.terms, reverse=True):
            t = self._term_str(exp, self.terms[exp])
            if out and not t.startswith("-"):
                out.append("+" + t)
            else:
                out.append(t)
        return "".join(out)

    __repr__ = __str__


def _poly_gcd_univariate(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd of two univariate polynomials via the Euclidean algorithm."""
    def dense(p: Polynomial) -> list[Fraction]:
        deg = max((e[0] for e in p.terms), default=0)
        out = [Fraction(0)] * (deg + 1)
        for e, c in p.terms.items():
            out[e[0]] = c
        return out

    def trim(v: list[Fraction]) -> list[Fraction]:
        while v and v[-1] == 0:
            v.pop()
        return v

    x, y = trim(dense(a)), trim(dense(b))
    while y:
        # remainder of x by y
        r = x[:]
        dy = len(y) - 1
        lead = y[-1]
        while len(r) - 1 >= dy and trim(r):
            dr = len(r) - 1
            if dr < dy:
                break
            q = r[-1] / lead
            for i in range(dy + 1):
                r[dr - dy + i] -= q * y[i]
            r = trim(r)
        x, y = y, r
    if not x:
        return Polynomial.constant(a.symbols, 0)
    lead = x[-1]
    return Polynomial(a.symbols, {(i,): c / lead for i, c in enumerate(x) if c != 0})


class RationalFunction:
    """Quotient of two sparse polynomials over the rationals.

    The denominator is normalized to rational content 1 with a positive
    leading coefficient, and shared monomial factors are cancelled.  For a
    single symbol the fraction is fully reduced.  Equality is decided by
    cross multiplication, so partly-reduced representations are harmless.
    """

    __slots__ = ("symbols", "num", "den")

    def __init__(self, num: Polynomial, den: Polynomial):
        if num.symbols != den.symbols:
            raise DomainMismatch("numerator and denominator symbol sets differ")
        if den.is_zero():
            raise DenominatorVanishes("denominator is identically zero")
        self.symbols = num.symbols
        # cancel shared monomial factor
        if not num.is_zero():
            mg = tuple(min(a, b) for a, b in zip(num.monomial_gcd(), den.monomial_gcd()))
            if any(mg):
                num = num.shift_down(mg)
                den = den.shift_down(mg)
        # full reduction in one variable
        if len(self.symbols) == 1 and not num.is_zero() and not den.is_constant():
            g = _poly_gcd_univariate(num, den)
            if g.total_degree() > 0:
                num = _poly_divexact_univariate(num, g)
                den = _poly_divexact_univariate(den, g)
        # denominator content 1, positive leading coefficient
        c = den.content()
        if den.lead_coefficient() < 0:
            c = -c
        if c != 1:
            inv = 1 / c
            num = num.scale(inv)
            den = den.scale(inv)
        self.num = num
        self.den = den

    # -- constructors ------------------------------------------------------

    @classmethod
    def constant(cls, symbols: Iterable[str], value) -> "RationalFunction":
        symbols = tuple(symbols)
        value = Fraction(value)
        return cls(Polynomial.constant(symbols, value),
                   Polynomial.constant(symbols, 1))

    @classmethod
    def variable(cls, symbols: Iterable[str], name: str) -> "RationalFunction":
        symbols = tuple(symbols)
        return cls(Polynomial.variable(symbols, name),
                   Polynomial.constant(symbols, 1))

    @classmethod
    def field(cls, symbols: Iterable[str]) -> dict[str, "RationalFunction"]:
        """Generators of the rational-function field, keyed by symbol name."""
        symbols = tuple(symbols)
        return {s: cls.variable(symbols, s) for s in symbols}

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> "RationalFunction":
        if isinstance(other, RationalFunction):
            if other.symbols != self.symbols:
                raise DomainMismatch(
                    f"symbol sets differ: {self.symbols} vs {other.symbols}")
            return other
        if isinstance(other, (int, Fraction)):
            return RationalFunction.constant(self.symbols, other)
        raise DomainMismatch(
            f"cannot combine rational function with {type(other).__name__}")

    def __add__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den,
                                self.den * other.den)

    def __sub__(self, other) -> "RationalFunction":
        return self + (-self._coerce(other))

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den)

    def __mul__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    def __truediv__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        if other.num.is_zero():
            raise DenominatorVanishes("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> "RationalFunction":
        return self._coerce(other) / self

    __radd__ = __add__
    __rmul__ = __mul__

    def __rsub__(self, other) -> "RationalFunction":
        return self._coerce(other) - self

    def __pow__(self, n: int) -> "RationalFunction":
        if n < 0:
            return RationalFunction(self.den, self.num) ** (-n)
        result = RationalFunction.constant(self.symbols, 1)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = RationalFunction.constant(self.symbols, other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        if self.symbols != other.symbols:
            return False
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        # canonical only for reduced forms; acceptable for dict-free usage
        return hash((self.symbols, len(self.num.terms), len(self.den.terms)))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def constant_value(self) -> Fraction:
        return self.num.constant_value() / self.den.constant_value()

    def evaluate(self, bindings: Mapping[str, object]):
        """Exact Fraction for rational bindings, BigFloat/BigComplex otherwise."""
        den = self.den.evaluate(bindings)
        if isinstance(den, Fraction):
            if den == 0:
                raise DenominatorVanishes("denominator vanishes at the point")
            return self.num.evaluate(bindings) / den
        if den == 0:
            raise DenominatorVanishes("denominator vanishes at the point")
        num = self.num.evaluate(bindings)
        return num / den

    def __str__(self) -> str:
        if self.den.is_constant() and self.den.constant_value() == 1:
            return str(self.num)
        return f"({self.num})/({self.den})"

    __repr__ = __str__


def _poly_divexact_univariate(a: Polynomial, b: Polynomial) -> Polynomial:
    """Exact quotient a/b of univariate polynomials; b must divide a."""
    def dense(p: Polynomial) -> list[Fraction]:
        deg = max((e[0] for e in p.terms), default=0)
        out = [Fraction(0)] * (deg + 1)
        for e, c in p.terms.items():
            out[e[0]] = c
        return out

    x, y = dense(a), dense(b)
    while x and x[-1] == 0:
        x.pop()
    while y and y[-1] == 0:
        y.pop()
    if not x:
        return Polynomial.constant(a.symbols, 0)
    q = [Fraction(0)] * (len(x) - len(y) + 1)
    r = x[:]
    for i in range(len(q) - 1, -1, -1):
        coeff = r[i + len(y) - 1] / y[-1]
        q[i] = coeff
        if coeff:
            for j, yc in enumerate(y):
                r[i + j] -= coeff * yc
    return Polynomial(a.symbols, {(i,): c for i, c in enumerate(q) if c != 0})


def eval_rational_function(f: RationalFunction, point: Mapping[str, object]):
    """Evaluate ``f`` at ``point``; exact when every binding is rational."""
    return f.evaluate(point)


# ---------------------------------------------------------------------------
# arbitrary-precision floats
# ---------------------------------------------------------------------------


def _to_mp(v, prec: int):
    if isinstance(v, BigFloat) or isinstance(v, BigComplex):
        return v.value
    if isinstance(v, Fraction):
        with workprec(prec):
            return mpf(v.numerator) / v.denominator
    if isinstance(v, int):
        return mpf(v)
    if isinstance(v, float):
        return mpf(v)
    if isinstance(v, (mpf, mpc)):
        return v
    raise DomainMismatch(f"cannot convert {type(v).__name__} to a float scalar")


class BigFloat:
    """Arbitrary-precision real float carrying its working precision in bits.

    Binary operations compute at the larger precision of the two operands.
    """

    __slots__ = ("value", "prec")

    def __init__(self, value, prec: int = DEFAULT_PRECISION_BITS):
        if prec < MIN_PRECISION_BITS:
            raise ValueError(f"precision below {MIN_PRECISION_BITS} bits")
        self.prec = int(prec)
        with workprec(self.prec):
            if isinstance(value, BigFloat):
                v = +value.value
            elif isinstance(value, Fraction):
                v = mpf(value.numerator) / value.denominator
            elif isinstance(value, str):
                v = mpf(value)
            else:
                v = +mpf(value)
        self.value = v

    @staticmethod
    def pi(prec: int = DEFAULT_PRECISION_BITS) -> "BigFloat":
        with workprec(prec):
            return BigFloat(+mpmath.pi, prec)

    def is_finite(self) -> bool:
        return mpmath.isfinite(self.value)

    def _binary(self, other, op):
        if isinstance(other, BigComplex):
            return BigComplex(self.value, self.prec)._binary(other, op)
        if isinstance(other, BigFloat):
            prec = max(self.prec, other.prec)
            o = other.value
        elif isinstance(other, (int, float, Fraction)):
            prec = self.prec
            o = _to_mp(other, prec)
        else:
            return NotImplemented
        with workprec(prec):
            return BigFloat(op(self.value, o), prec)

    def __add__(self, other):
        return self._binary(other, lambda a, b: a + b)

    def __radd__(self, other):
        return self._binary(other, lambda a, b: b + a)

    def __sub__(self, other):
        return self._binary(other, lambda a, b: a - b)

    def __rsub__(self, other):
        return self._binary(other, lambda a, b: b - a)

    def __mul__(self, other):
        return self._binary(other, lambda a, b: a * b)

    def __rmul__(self, other):
        return self._binary(other, lambda a, b: b * a)

    def __truediv__(self, other):
        return self._binary(other, lambda a, b: a / b)

    def __rtruediv__(self, other):
        return self._binary(other, lambda a, b: b / a)

    def __pow__(self, n):
        if isinstance(n, int):
            with workprec(self.prec):
                return BigFloat(self.value ** n, self.prec)
        return self._binary(n, lambda a, b: a ** b)

    def __neg__(self):
        with workprec(self.prec):
            return BigFloat(-self.value, self.prec)

    def __abs__(self):
        with workprec(self.prec):
            return BigFloat(abs(self.value), self.prec)

    def _cmp_value(self, other):
        if isinstance(other, BigFloat):
            return other.value
        if isinstance(other, (int, float)):
            return other
        if isinstance(other, Fraction):
            return _to_mp(other, self.prec + 8)
        return None

    def __eq__(self, other):
        o = self._cmp_value(other)
        return NotImplemented if o is None else self.value == o

    def __lt__(self, other):
        o = self._cmp_value(other)
        return NotImplemented if o is None else self.value < o

    def __le__(self, other):
        o = self._cmp_value(other)
        return NotImplemented if o is None else self.value <= o

    def __gt__(self, other):
        o = self._cmp_value(other)
        return NotImplemented if o is None else self.value > o

    def __ge__(self, other):
        o = self._cmp_value(other)
        return NotImplemented if o is None else self.value >= o

    def __hash__(self):
        return hash(self.value)

    def __float__(self):
        return float(self.value)

    def __str__(self):
        return mpmath.nstr(self.value, max(8, int(self.prec * 0.3)))

    def __repr__(self):
        return f"BigFloat({self}, prec={self.prec})"


class BigComplex:
    """Arbitrary-precision complex float; used inside Taylor-shift pipelines."""

    __slots__ = ("value", "prec")

    def __init__(self, value, prec: int = DEFAULT_PRECISION_BITS):
        if prec < MIN_PRECISION_BITS:
            raise ValueError(f"precision below {MIN_PRECISION_BITS} bits")
        self.prec = int(prec)
        with workprec(self.prec):
            if isinstance(value, (BigComplex, BigFloat)):
                v = mpc(value.value)
            elif isinstance(value, Fraction):
                v = mpc(mpf(value.numerator) / value.denominator)
            else:
                v = mpc(value)
        self.value = v

    @property
    def real(self) -> BigFloat:
        return BigFloat(self.value.real, self.prec)

    @property
    def imag(self) -> BigFloat:
        return BigFloat(self.value.imag, self.prec)

    def _binary(self, other, op):
        if isinstance(other, (BigComplex, BigFloat)):
            prec = max(self.prec, other.prec)
            o = other.value
        elif isinstance(other, (int, float, complex, Fraction)):
            prec = self.prec
            o = _to_mp(other, prec) if not isinstance(other, complex) else mpc(other)
        else:
            return NotImplemented
        with workprec(prec):
            return BigComplex(op(self.value, o), prec)

    def __add__(self, other):
        return self._binary(other, lambda a, b: a + b)

    def __radd__(self, other):
        return self._binary(other, lambda a, b: b + a)

    def __sub__(self, other):
        return self._binary(other, lambda a, b: a - b)

    def __rsub__(self, other):
        return self._binary(other, lambda a, b: b - a)

    def __mul__(self, other):
        return self._binary(other, lambda a, b: a * b)

    def __rmul__(self, other):
        return self._binary(other, lambda a, b: b * a)

    def __truediv__(self, other):
        return self._binary(other, lambda a, b: a / b)

    def __rtruediv__(self, other):
        return self._binary(other, lambda a, b: b / a)

    def __pow__(self, n: int):
        with workprec(self.prec):
            return BigComplex(self.value ** n, self.prec)

    def __neg__(self):
        with workprec(self.prec):
            return BigComplex(-self.value, self.prec)

    def __abs__(self):
        with workprec(self.prec):
            return BigFloat(abs(self.value), self.prec)

    def __eq__(self, other):
        if isinstance(other, (BigComplex, BigFloat)):
            return self.value == other.value
        if isinstance(other, (int, float, complex)):
            return self.value == other
        return NotImplemented

    def __hash__(self):
        return hash(self.value)

    def __str__(self):
        return mpmath.nstr(self.value, max(8, int(self.prec * 0.3)))

    def __repr__(self):
        return f"BigComplex({self}, prec={self.prec})"


Scalar = Union[Fraction, RationalFunction, BigFloat, BigComplex]


# ---------------------------------------------------------------------------
# sign decisions
# ---------------------------------------------------------------------------


class Verdict(enum.Enum):
    NONNEGATIVE = "NONNEGATIVE"
    NEGATIVE = "NEGATIVE"
    INDETERMINATE = "INDETERMINATE"

    @property
    def letter(self) -> str:
        return {"NONNEGATIVE": "+", "NEGATIVE": "-", "INDETERMINATE": "?"}[self.value]


@dataclass(frozen=True)
class SignVerdict:
    verdict: Verdict
    margin: object  # |x| in the input domain

    @property
    def letter(self) -> str:
        return self.verdict.letter


@dataclass(frozen=True)
class SignPolicy:
    """Noise model for float sign decisions.

    ``eps = scale * 2**(-precision_bits/2)``.  A float is NONNEGATIVE only
    above ``eps``, NEGATIVE only below ``-eps*kappa`` (``kappa >= 1`` widens
    the indeterminate band on the negative side), INDETERMINATE between.
    """

    scale: float = 1.0
    kappa: float = 4.0

    def eps(self, prec: int) -> mpf:
        with workprec(prec + 16):
            return mpf(self.scale) * mpf(2) ** (-Fraction(prec, 2))


DEFAULT_SIGN_POLICY = SignPolicy()


def sign_decide(x, policy: SignPolicy = DEFAULT_SIGN_POLICY) -> SignVerdict:
    """Decide the sign of a scalar.  Exact domains never return INDETERMINATE."""
    if isinstance(x, (int, Fraction)):
        x = Fraction(x)
        v = Verdict.NONNEGATIVE if x >= 0 else Verdict.NEGATIVE
        return SignVerdict(v, abs(x))
    if isinstance(x, RationalFunction):
        if x.is_constant():
            return sign_decide(x.constant_value(), policy)
        raise DomainMismatch(
            "sign of a non-constant rational function; bind its symbols first")
    if isinstance(x, BigFloat):
        if not x.is_finite():
            raise NonFinite(f"cannot decide sign of {x}")
        eps = policy.eps(x.prec)
        with workprec(x.prec + 16):
            if x.value >= eps:
                return SignVerdict(Verdict.NONNEGATIVE, abs(x))
            if x.value < -eps * policy.kappa:
                return SignVerdict(Verdict.NEGATIVE, abs(x))
        return SignVerdict(Verdict.INDETERMINATE, abs(x))
    raise DomainMismatch(f"cannot decide sign of {type(x).__name__}")


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------


def rational_str(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s: str) -> Fraction:
    return Fraction(s)


def bigfloat_str(x: BigFloat) -> str:
    """Lossless hex-float text ``[-]0x<mantissa>p<exp>@<bits>``."""
    sign, man, exp, _ = x.value._mpf_
    if man == 0:
        return f"0x0p+0@{x.prec}"
    body = f"0x{man:x}p{exp:+d}"
    return ("-" if sign else "") + body + f"@{x.prec}"


def parse_bigfloat(s: str) -> BigFloat:
    body, prec = s.rsplit("@", 1)
    prec = int(prec)
    neg = body.startswith("-")
    if neg:
        body = body[1:]
    man_s, exp_s = body[2:].split("p")
    man = int(man_s, 16)
    exp = int(exp_s)
    with workprec(max(prec, man.bit_length() + 8)):
        v = mpf(man) * mpf(2) ** exp
        if neg:
            v = -v
    return BigFloat(v, prec)
