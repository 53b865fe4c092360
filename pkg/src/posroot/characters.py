"""Real primitive Dirichlet characters via Kronecker symbols.

The real primitive characters mod ``m`` are exactly the maps
``n -> (D|n)`` (Kronecker symbol) for fundamental discriminants ``D`` with
``|D| = m``.  A discriminant is fundamental when either ``D = 1 (mod 4)``
and squarefree, or ``D = 4m'`` with ``m' = 2, 3 (mod 4)`` squarefree.
Construction validates everything it claims: complete multiplicativity,
support exactly on residues coprime to the modulus, the parity
``chi(-1) = (-1)**a``, and primitivity (the character is not induced from
any proper divisor of the modulus).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .scalars import ScalarError

__all__ = ["DirichletCharacter", "kronecker_character", "kronecker_symbol", "NotFundamental"]


class NotFundamental(ScalarError):
    """Argument is not a fundamental discriminant (or is the trivial one)."""


def kronecker_symbol(a: int, n: int) -> int:
    """Kronecker symbol (a|n) for arbitrary integers."""
    if n == 0:
        return 1 if a in (1, -1) else 0
    sign = 1
    if n < 0:
        n = -n
        if a < 0:
            sign = -sign
    # factor out twos from n
    t = 0
    while n % 2 == 0:
        n //= 2
        t += 1
    if t:
        if a % 2 == 0:
            return 0
        if t % 2 == 1 and a % 8 in (3, 5):
            sign = -sign
    a %= n
    # Jacobi symbol (a|n) for odd n > 0 by quadratic reciprocity
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                sign = -sign
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            sign = -sign
        a %= n
    return sign if n == 1 else 0


def _squarefree(n: int) -> bool:
    n = abs(n)
    d = 2
    while d * d <= n:
        if n % (d * d) == 0:
            return False
        if n % d == 0:
            n //= d
        d += 1
    return True


def is_fundamental_discriminant(D: int) -> bool:
    if D == 0 or D == 1:
        return False
    if D % 4 == 1:
        return _squarefree(D)
    if D % 4 == 0:
        m = D // 4
        return m % 4 in (2, 3) and _squarefree(m)
    return False


@dataclass(frozen=True)
class DirichletCharacter:
    """A real primitive character: modulus, value table, and parity."""

    modulus: int
    values: tuple[int, ...]  # chi(0), chi(1), ..., chi(m-1)
    parity: int              # 0 for even, 1 for odd
    label: str = ""

    def __call__(self, n: int) -> int:
        return self.values[n % self.modulus]

    def validate(self) -> None:
        m = self.modulus
        if len(self.values) != m:
            raise ScalarError("value table length differs from modulus")
        for n, v in enumerate(self.values):
            if v not in (-1, 0, 1):
                raise ScalarError(f"chi({n}) = {v} is not real of modulus one")
            if (v == 0) != (gcd(n, m) > 1):
                raise ScalarError(f"chi({n}) support contradicts gcd({n},{m})")
        for x in range(m):
            for y in range(x, m):
                if self.values[x * y % m] != self.values[x] * self.values[y]:
                    raise ScalarError(f"multiplicativity fails at ({x},{y})")
        if self((-1) % m) != (-1) ** self.parity:
            raise ScalarError("parity tag contradicts chi(-1)")
        if not self._is_primitive():
            raise ScalarError(f"character mod {m} is induced from a smaller modulus")

    def _is_primitive(self) -> bool:
        m = self.modulus
        if m == 1:
            return True
        for d in range(1, m):
            if m % d != 0:
                continue
            # induced from modulus d iff chi is constant on units in residue
            # classes mod d; equivalently chi(n) = 1 whenever n = 1 (mod d)
            # and gcd(n, m) = 1
            induced = all(
                self.values[n] == 1
                for n in range(1, m)
                if n % d == 1 % d and gcd(n, m) == 1
            )
            if induced:
                return False
        return True


def kronecker_character(D: int) -> DirichletCharacter:
    """Character ``n -> (D|n)`` for a fundamental discriminant ``D``.

    Parity is 0 for ``D > 0`` and 1 for ``D < 0``; modulus is ``|D|``.
    """
    if not is_fundamental_discriminant(D):
        raise NotFundamental(f"{D} is not a fundamental discriminant")
    m = abs(D)
    values = tuple(kronecker_symbol(D, n) for n in range(m))
    chi = DirichletCharacter(modulus=m, values=values,
                             parity=0 if D > 0 else 1, label=f"kronecker({D})")
    chi.validate()
    return chi
