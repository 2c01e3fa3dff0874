"""Finitely generated abelian groups in invariant-factor form.

The value type of every homotopy-group lookup: a free rank plus an ordered
list of torsion coefficients t_1 | t_2 | ... with each t_i >= 2.  The
canonical form is unique, so equality is structural.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

__all__ = ["FGAbelianGroup", "TRIVIAL", "Z"]


def _factor(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


@dataclass(frozen=True)
class FGAbelianGroup:
    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.free_rank < 0:
            raise ValueError("free rank must be >= 0")
        prev = 1
        for t in self.torsion:
            if t < 2:
                raise ValueError("torsion coefficients must be >= 2")
            if t % prev != 0:
                raise ValueError(
                    f"torsion coefficients must form a divisibility chain, got {self.torsion}"
                )
            prev = t

    @classmethod
    def of(cls, free_rank: int = 0, torsion: Iterable[int] = ()) -> "FGAbelianGroup":
        """Canonicalize an arbitrary list of cyclic orders into invariant
        factors.  Order-independent; factors of 1 are dropped; 0 is not a
        torsion coefficient (it belongs in the free rank)."""
        exponents: dict[int, list[int]] = {}
        for t in torsion:
            if t == 1:
                continue
            if t < 1:
                raise ValueError(f"cyclic torsion order must be >= 1, got {t}")
            for p, e in _factor(t).items():
                exponents.setdefault(p, []).append(e)
        depth = max((len(v) for v in exponents.values()), default=0)
        factors = []
        for k in range(depth):
            f = 1
            for p, es in exponents.items():
                es_sorted = sorted(es, reverse=True)
                if k < len(es_sorted):
                    f *= p ** es_sorted[k]
            factors.append(f)
        factors.reverse()  # ascending divisibility chain
        return cls(free_rank, tuple(factors))

    @classmethod
    def cyclic(cls, n: int) -> "FGAbelianGroup":
        """Z for n = 0, else Z/n."""
        if n == 0:
            return cls(1, ())
        return cls.of(0, (abs(n),))

    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def localized_away(self, primes: Iterable[int]) -> "FGAbelianGroup":
        """Invert the given primes: kills the torsion supported on them."""
        away = set(primes)
        kept: list[int] = []
        for t in self.torsion:
            reduced = 1
            for p, e in _factor(t).items():
                if p not in away:
                    reduced *= p**e
            if reduced > 1:
                kept.append(reduced)
        return FGAbelianGroup.of(self.free_rank, kept)

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " + ".join(parts) if parts else "0"


TRIVIAL = FGAbelianGroup()
Z = FGAbelianGroup(1)
