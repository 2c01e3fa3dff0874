"""Exact arithmetic kernel: Bernoulli numbers, stable J-image orders, and
gcd invariants in finite cyclic groups.

Everything here is arbitrary-precision integer/rational arithmetic; there is
no floating point anywhere in the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, gcd
from typing import Iterable

# Exact rationals are stdlib fractions: always in lowest terms, with a
# positive denominator.  The alias exists so callers name the contract,
# not the implementation.
Rational = Fraction

__all__ = [
    "Rational",
    "CyclicElem",
    "bernoulli",
    "imj_order",
    "gcd_mod",
    "subgroup_generator",
    "element_order",
    "prime_factors",
    "is_prime",
]


@dataclass(frozen=True)
class CyclicElem:
    """A residue in Z/modulus.

    modulus = 0 encodes the infinite cyclic group Z, in which case value is
    an arbitrary signed integer.  For modulus > 0 the stored value is the
    canonical representative in [0, modulus).
    """

    value: int
    modulus: int

    def __post_init__(self) -> None:
        if self.modulus < 0:
            raise ValueError(f"modulus must be >= 0, got {self.modulus}")
        if self.modulus > 0:
            object.__setattr__(self, "value", self.value % self.modulus)

    def __add__(self, other: "CyclicElem") -> "CyclicElem":
        if self.modulus != other.modulus:
            raise ValueError("cannot add residues with different moduli")
        return CyclicElem(self.value + other.value, self.modulus)

    def __neg__(self) -> "CyclicElem":
        return CyclicElem(-self.value, self.modulus)

    def __mul__(self, k: int) -> "CyclicElem":
        return CyclicElem(self.value * k, self.modulus)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.value == 0

    def order(self) -> int:
        """Order of the element in its cyclic group (finite modulus only)."""
        return element_order(self.value, self.modulus)

    def __str__(self) -> str:
        if self.modulus == 0:
            return str(self.value)
        return f"{self.value} mod {self.modulus}"


# Coefficients c_j of z^j in the series z/(e^z - 1), extended on demand.
# Multiplying the series by (e^z - 1) and matching coefficients of z^(m+1)
# gives, for m >= 1,
#     c_m = -sum_{j=0}^{m-1} c_j / (m + 1 - j)!
_SERIES: list[Fraction] = [Fraction(1)]


def _series_coeff(m: int) -> Fraction:
    while len(_SERIES) <= m:
        k = len(_SERIES)
        acc = Fraction(0)
        for j, cj in enumerate(_SERIES):
            acc += cj / factorial(k + 1 - j)
        _SERIES.append(-acc)
    return _SERIES[m]


def bernoulli(s: int) -> Fraction:
    """s-th Bernoulli number in the unsigned even-index convention.

    Only even-index Bernoulli numbers appear here, all with positive sign:
    bernoulli(1) = 1/6, bernoulli(2) = 1/30, bernoulli(3) = 1/42, ...
    In terms of the standard signed convention (B_n via z/(e^z-1) =
    sum B_n z^n / n!), this is |B_{2s}|.  Computed exactly from the
    coefficient recurrence obtained by multiplying the defining series
    by (e^z - 1).
    """
    if s < 1:
        raise ValueError(f"bernoulli index must be >= 1, got {s}")
    return abs(_series_coeff(2 * s) * factorial(2 * s))


def imj_order(n: int) -> int:
    """Order of the image of the stable J-homomorphism in the (n-1)-stem.

    The image is trivial for n = 3, 5, 6, 7 mod 8, has order 2 for
    n = 1, 2 mod 8 (n > 2), and for n = 4s has order the denominator of
    bernoulli(s)/(4s) (Adams 1966, Quillen 1971).
    """
    if n < 3:
        raise ValueError(f"imj_order requires n >= 3, got {n}")
    r = n % 8
    if r in (3, 5, 6, 7):
        return 1
    if r in (1, 2):
        return 2
    s = n // 4
    return (bernoulli(s) / (4 * s)).denominator


def subgroup_generator(values: Iterable[int], modulus: int) -> int:
    """Least positive generator of the subgroup of Z/modulus generated by
    the given residues, or 0 for the trivial subgroup."""
    if modulus <= 0:
        raise ValueError("modulus must be positive")
    g = modulus
    for v in values:
        g = gcd(g, v % modulus)
    return g % modulus


def gcd_mod(elems: Iterable[CyclicElem]) -> int:
    """Greatest common divisor of a multiset of residues sharing a modulus
    d > 0: the minimum, over nonnegative representative tuples, of their
    ordinary gcd.

    For two or more elements this equals gcd(values, d) reduced mod d
    (0 exactly when every element is the zero class).  For a single element
    the representatives only grow, so the result is the least nonnegative
    residue itself -- note the discontinuity against the multi-element case,
    where the modulus participates in the gcd.
    """
    elems = list(elems)
    if not elems:
        raise ValueError("gcd_mod requires a nonempty multiset")
    d = elems[0].modulus
    if d <= 0:
        raise ValueError("gcd_mod requires a positive modulus")
    if any(e.modulus != d for e in elems):
        raise ValueError("gcd_mod requires all elements to share one modulus")
    if len(elems) == 1:
        return elems[0].value
    return subgroup_generator((e.value for e in elems), d)


def element_order(value: int, modulus: int) -> int:
    """Order of a residue in Z/modulus (modulus > 0)."""
    if modulus <= 0:
        raise ValueError("element_order requires a positive modulus")
    return modulus // gcd(modulus, value % modulus)


def prime_factors(n: int) -> set[int]:
    """Set of prime divisors of |n| (empty for n in {-1, 0, 1})."""
    n = abs(n)
    out: set[int] = set()
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.add(p)
            while n % p == 0:
                n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out.add(n)
    return out


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    p = 2
    while p * p <= n:
        if n % p == 0:
            return False
        p += 1 if p == 2 else 2
    return True
