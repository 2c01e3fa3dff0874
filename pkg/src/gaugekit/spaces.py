"""Symbolic space expressions: spheres, suspended projective planes,
two-cell complexes, attached complexes, loop and mapping spaces, gauge
atoms, and their wedge/product combinations.

Expressions are immutable trees with a canonical normal form: wedge and
product lists are flattened and sorted under one fixed total order,
singleton combinations collapse, loop and suspension powers merge,
suspensions push through wedges and shift spheres and suspended projective
planes, and a two-cell complex whose attaching class is the zero residue
splits into the wedge of its cells.  The smart constructors below always
return normalized trees; `normalize` re-canonicalizes an arbitrary tree.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exact import CyclicElem, element_order, prime_factors

__all__ = [
    "SpaceExpr",
    "Sphere",
    "SuspCP2",
    "TwoCell",
    "AttachedComplex",
    "LieGroup",
    "MappingSpace",
    "Gauge",
    "Wedge",
    "Product",
    "Loop",
    "Suspension",
    "wedge",
    "product",
    "loop",
    "suspension",
    "two_cell",
    "attached",
    "gauge",
    "normalize",
    "localize",
    "sort_key",
]


class SpaceExpr:
    """Base class for all space expressions."""

    __slots__ = ()


@dataclass(frozen=True)
class Sphere(SpaceExpr):
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("sphere dimension must be >= 0")


@dataclass(frozen=True)
class SuspCP2(SpaceExpr):
    """The k-fold suspension of the complex projective plane (k = 0 is the
    plane itself); cells in dimensions k+2 and k+4."""

    k: int

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("suspension power must be >= 0")


@dataclass(frozen=True)
class TwoCell(SpaceExpr):
    """S^bottom with a (2*bottom)-cell attached along a class recorded as a
    residue with its modulus."""

    bottom: int
    attach: CyclicElem

    @property
    def top(self) -> int:
        return 2 * self.bottom


@dataclass(frozen=True)
class AttachedComplex(SpaceExpr):
    """A wedge skeleton with one top cell attached along a symbolic class
    (label None when the class is unspecified)."""

    skeleton: SpaceExpr
    top: int
    label: str | None = None


@dataclass(frozen=True)
class LieGroup(SpaceExpr):
    name: str


@dataclass(frozen=True)
class MappingSpace(SpaceExpr):
    """Based mapping space, basepoint component."""

    domain: SpaceExpr
    codomain: SpaceExpr


@dataclass(frozen=True)
class Gauge(SpaceExpr):
    """Gauge-group atom G_label(base); the structure group annotation is
    optional and omitted from the text render when absent."""

    base: SpaceExpr
    label: str = "k"
    group: str | None = None


@dataclass(frozen=True)
class Wedge(SpaceExpr):
    parts: tuple[SpaceExpr, ...]


@dataclass(frozen=True)
class Product(SpaceExpr):
    parts: tuple[SpaceExpr, ...]


@dataclass(frozen=True)
class Loop(SpaceExpr):
    power: int
    space: SpaceExpr

    def __post_init__(self):
        if self.power < 1:
            raise ValueError("loop power must be >= 1")


@dataclass(frozen=True)
class Suspension(SpaceExpr):
    power: int
    space: SpaceExpr

    def __post_init__(self):
        if self.power < 1:
            raise ValueError("suspension power must be >= 1")


# --- canonical order --------------------------------------------------------

_RANK = {
    Gauge: 0,
    AttachedComplex: 1,
    TwoCell: 2,
    Suspension: 3,
    SuspCP2: 4,
    Sphere: 5,
    LieGroup: 6,
    MappingSpace: 7,
    Loop: 8,
    Wedge: 9,
    Product: 10,
}


def sort_key(e: SpaceExpr):
    rank = _RANK[type(e)]
    if isinstance(e, Sphere):
        return (rank, e.n)
    if isinstance(e, SuspCP2):
        return (rank, e.k)
    if isinstance(e, TwoCell):
        return (rank, e.bottom, e.attach.modulus, e.attach.value)
    if isinstance(e, AttachedComplex):
        return (rank, e.top, sort_key(e.skeleton), e.label or "")
    if isinstance(e, LieGroup):
        return (rank, e.name)
    if isinstance(e, MappingSpace):
        return (rank, sort_key(e.domain), sort_key(e.codomain))
    if isinstance(e, Gauge):
        return (rank, sort_key(e.base), e.label, e.group or "")
    if isinstance(e, Loop):
        return (rank, e.power, sort_key(e.space))
    if isinstance(e, Suspension):
        return (rank, sort_key(e.space), e.power)
    return (rank, tuple(sort_key(p) for p in e.parts))


# --- smart constructors -----------------------------------------------------

def two_cell(bottom: int, attach: CyclicElem) -> SpaceExpr:
    """Two-cell complex S^bottom cup e^(2*bottom); the zero attaching class
    splits it into the wedge of its cells."""
    if attach.modulus <= 0:
        raise ValueError("two-cell attaching class needs a finite modulus")
    if attach.value == 0:
        return wedge(Sphere(bottom), Sphere(2 * bottom))
    return TwoCell(bottom, attach)


def attached(skeleton: SpaceExpr, top: int, label: str | None = None) -> SpaceExpr:
    return AttachedComplex(normalize(skeleton), top, label)


def gauge(base: SpaceExpr, label: str = "k", group: str | None = None) -> Gauge:
    return Gauge(normalize(base), label, group)


def _flatten(cls, parts) -> list[SpaceExpr]:
    out: list[SpaceExpr] = []
    for p in parts:
        if isinstance(p, cls):
            out.extend(p.parts)
        else:
            out.append(p)
    return out


def wedge(*parts: SpaceExpr) -> SpaceExpr:
    flat = _flatten(Wedge, (normalize(p) for p in parts))
    if not flat:
        raise ValueError("wedge of no spaces")
    if len(flat) == 1:
        return flat[0]
    return Wedge(tuple(sorted(flat, key=sort_key)))


def product(*parts: SpaceExpr) -> SpaceExpr:
    flat = _flatten(Product, (normalize(p) for p in parts))
    if not flat:
        raise ValueError("product of no spaces")
    if len(flat) == 1:
        return flat[0]
    return Product(tuple(sorted(flat, key=sort_key)))


def loop(power: int, space: SpaceExpr) -> SpaceExpr:
    inner = normalize(space)
    if isinstance(inner, Loop):
        return Loop(power + inner.power, inner.space)
    return Loop(power, inner)


def suspension(power: int, space: SpaceExpr) -> SpaceExpr:
    inner = normalize(space)
    if isinstance(inner, Suspension):
        return suspension(power + inner.power, inner.space)
    if isinstance(inner, Sphere):
        return Sphere(inner.n + power)
    if isinstance(inner, SuspCP2):
        return SuspCP2(inner.k + power)
    if isinstance(inner, Wedge):
        return wedge(*(suspension(power, p) for p in inner.parts))
    return Suspension(power, inner)


def normalize(e: SpaceExpr) -> SpaceExpr:
    """Canonical form of an arbitrary expression tree."""
    if isinstance(e, (Sphere, SuspCP2, LieGroup)):
        return e
    if isinstance(e, TwoCell):
        return two_cell(e.bottom, e.attach)
    if isinstance(e, AttachedComplex):
        return AttachedComplex(normalize(e.skeleton), e.top, e.label)
    if isinstance(e, MappingSpace):
        return MappingSpace(normalize(e.domain), normalize(e.codomain))
    if isinstance(e, Gauge):
        return Gauge(normalize(e.base), e.label, e.group)
    if isinstance(e, Wedge):
        return wedge(*e.parts)
    if isinstance(e, Product):
        return product(*e.parts)
    if isinstance(e, Loop):
        return loop(e.power, e.space)
    if isinstance(e, Suspension):
        return suspension(e.power, e.space)
    raise TypeError(f"not a space expression: {e!r}")


def localize(e: SpaceExpr, primes: frozenset[int] | set[int]) -> SpaceExpr:
    """Localization away from a set of primes: splits every two-cell complex
    whose attaching class has order invertible after the primes are
    inverted (all prime factors of the order lie in the set).  Idempotent;
    the empty set is the identity."""
    primes = frozenset(primes)

    def go(x: SpaceExpr) -> SpaceExpr:
        if isinstance(x, TwoCell):
            order = element_order(x.attach.value, x.attach.modulus)
            if prime_factors(order) <= primes:
                return wedge(Sphere(x.bottom), Sphere(2 * x.bottom))
            return x
        if isinstance(x, AttachedComplex):
            return AttachedComplex(go(x.skeleton), x.top, x.label)
        if isinstance(x, MappingSpace):
            return MappingSpace(go(x.domain), go(x.codomain))
        if isinstance(x, Gauge):
            return Gauge(go(x.base), x.label, x.group)
        if isinstance(x, Wedge):
            return wedge(*(go(p) for p in x.parts))
        if isinstance(x, Product):
            return product(*(go(p) for p in x.parts))
        if isinstance(x, Loop):
            return loop(x.power, go(x.space))
        if isinstance(x, Suspension):
            return suspension(x.power, go(x.space))
        return x

    return go(normalize(e))
