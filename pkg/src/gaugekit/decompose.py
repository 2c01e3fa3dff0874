"""Theorem dispatch: from a manifold/complex description and a structure
group to the suspension splitting and the gauge-group product decomposition.

Every emitted decomposition records the rule it used and the primes it
localized away; every hypothesis is checked against the homotopy tables and
failures surface as typed errors, never as guesses.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .exact import CyclicElem, is_prime, subgroup_generator
from .manifolds import GeneralComplex, N2Manifold, SigmaFCase, SphereBundle, WallManifold
from .modmatrix import nonzero_column_count, reduce_with_report
from .spaces import (
    Gauge,
    LieGroup,
    MappingSpace,
    SpaceExpr,
    Sphere,
    SuspCP2,
    attached,
    gauge,
    localize,
    loop,
    product,
    suspension,
    two_cell,
    wedge,
)
from .groups import Z
from .tables import HypothesisNotMetError, NotTabulatedError, Tables, default_tables

__all__ = [
    "DecompositionError",
    "UnsupportedManifoldError",
    "NoSplittingError",
    "CaseInapplicableError",
    "Decomposition",
    "index_e",
    "suspension_split_wall",
    "gauge_decompose_wall",
    "gauge_decompose_complex",
    "gauge_decompose_sphere_bundle",
    "skeleton_split_n2",
    "gauge_decompose_n2",
    "decompose",
    "localize",
]


class DecompositionError(Exception):
    """A theorem hypothesis failed; the message names it and its source."""


class UnsupportedManifoldError(DecompositionError):
    pass


class NoSplittingError(DecompositionError):
    pass


class CaseInapplicableError(DecompositionError):
    pass


@dataclass(frozen=True)
class Decomposition:
    """A suspension splitting together with the matching gauge-group product,
    the rule that produced them, and the localization applied."""

    suspension: SpaceExpr
    gauge: SpaceExpr
    theorem_used: str
    localized_away: frozenset[int] = frozenset()
    base_space: SpaceExpr | None = None

    def gauge_factors(self) -> tuple[SpaceExpr, ...]:
        from .spaces import Product

        if isinstance(self.gauge, Product):
            return self.gauge.parts
        return (self.gauge,)


def _away(localize_away: Iterable[int]) -> frozenset[int]:
    away = frozenset(localize_away)
    for p in away:
        if not is_prime(p):
            raise ValueError(f"localize_away must contain primes, got {p}")
    return away


def _require_vanishing(
    tables: Tables,
    group: str,
    degrees: Iterable[int],
    away: frozenset[int],
    requirement: str,
) -> None:
    for i in degrees:
        res = tables.pi(group, i)
        if not res.group.localized_away(away).is_trivial():
            raise HypothesisNotMetError(group, i, res.group, requirement)


def _gauge_label(tables: Tables, group: str, dimension: int) -> str:
    """"k" when the bundle classes are tabulated as the integers, else the
    generic class label."""
    try:
        if tables.pi(group, dimension - 1).group == Z:
            return "k"
    except NotTabulatedError:
        pass
    return "alpha"


# --- (n-1)-connected 2n-manifolds -------------------------------------------

def index_e(M: WallManifold) -> CyclicElem:
    """Least positive generator of the subgroup generated by the chi residues
    (the minimum positive element of the image, 0 if the image is trivial),
    as a residue modulo the stable J-image order."""
    d = M.modulus
    return CyclicElem(subgroup_generator((c.value for c in M.chi), d), d)


def _wall_case(n: int) -> str:
    r = n % 8
    if r in (3, 5, 6, 7):
        return "trivial"
    if r in (1, 2):
        return "mod2"
    return "bernoulli"


def suspension_split_wall(M: WallManifold) -> SpaceExpr:
    """Suspension splitting of an (n-1)-connected 2n-manifold (n >= 3): a
    wedge of spheres, with one suspended two-cell complex when the image of
    chi is nontrivial."""
    n, m = M.n, M.m
    if n < 3:
        raise UnsupportedManifoldError(
            "suspension splittings of rank-m 4-manifolds are prior work on "
            "simply connected 4-manifolds; this engine starts at n = 3"
        )
    e = index_e(M)
    if _wall_case(n) == "trivial" or e.is_zero():
        return wedge(Sphere(2 * n + 1), *(Sphere(n + 1) for _ in range(m)))
    return wedge(
        suspension(1, two_cell(n, e)),
        *(Sphere(n + 1) for _ in range(m - 1)),
    )


_ADAMS_QUILLEN = "stable J-image orders after Adams (1966) and Quillen (1971)"


def gauge_decompose_wall(
    M: WallManifold,
    group: str,
    localize_away: Iterable[int] = (),
    tables: Tables | None = None,
) -> Decomposition:
    """Product decomposition of the gauge groups of principal bundles over an
    (n-1)-connected 2n-manifold with pi_{n-1}(G) = pi_n(G) = 0 (after the
    requested localization)."""
    tables = tables or default_tables()
    away = _away(localize_away)
    n, m = M.n, M.m
    if n < 3:
        raise UnsupportedManifoldError(
            "gauge groups over rank-m 4-manifolds are prior work on simply "
            "connected 4-manifolds; this engine starts at n = 3"
        )
    _require_vanishing(
        tables,
        group,
        (n - 1, n),
        away,
        "the gauge splitting over (n-1)-connected 2n-manifolds "
        f"(pi_{n - 1} and pi_{n} of the structure group must vanish)",
    )
    # the bundles are classified by pi_{2n-1}(G); an untabulated group there
    # surfaces as an error rather than a guessed class label
    classes = tables.pi(group, M.dimension - 1).group
    label = "k" if classes == Z else "alpha"
    e = index_e(M)
    case = _wall_case(n)

    full_reason = None
    if case == "trivial":
        full_reason = f"trivial J-image case (n = {n} is 3,5,6,7 mod 8; {_ADAMS_QUILLEN})"
    elif e.is_zero():
        full_reason = "null attaching residue: the top cell splits off"
    elif case == "mod2" and 2 in away:
        full_reason = "mod-2 case localized away from 2: the two-cell complex splits"
    elif (
        M.almost_parallelizable
        and n == 8
        and group == "E8"
        and {3, 5} <= away
    ):
        full_reason = (
            "almost-parallelizable 16-manifold localized away from {3,5}: "
            "the degree-8 Steenrod square vanishes, so the 2-primary "
            "attaching residue dies (Wu formula)"
        )

    G = LieGroup(group)
    if full_reason is not None:
        gauge_expr = product(gauge(Sphere(2 * n), label), *(loop(n, G) for _ in range(m)))
        susp = wedge(Sphere(2 * n + 1), *(Sphere(n + 1) for _ in range(m)))
        theorem = f"gauge splitting over (n-1)-connected 2n-manifolds: {full_reason}"
    else:
        base = two_cell(n, e)
        gauge_expr = product(gauge(base, label), *(loop(n, G) for _ in range(m - 1)))
        susp = wedge(suspension(1, base), *(Sphere(n + 1) for _ in range(m - 1)))
        if case == "mod2":
            theorem = (
                "gauge splitting over (n-1)-connected 2n-manifolds: mod-2 case "
                f"(n = {n} is 1,2 mod 8; {_ADAMS_QUILLEN})"
            )
        else:
            theorem = (
                "gauge splitting over (n-1)-connected 2n-manifolds: n = 4s case, "
                f"attaching residue modulo the denominator of B_s/4s ({_ADAMS_QUILLEN})"
            )
    return Decomposition(susp, gauge_expr, theorem, away)


# --- general two-cone complexes ----------------------------------------------

def gauge_decompose_complex(
    Zc: GeneralComplex,
    group: str,
    tables: Tables | None = None,
) -> Decomposition:
    """Gauge splitting of a wedge-of-n-spheres-with-one-2n-cell complex: each
    zero column of the reduced suspended attaching matrix splits off one
    n-sphere, hence one n-fold loop-group factor."""
    tables = tables or default_tables()
    n, m = Zc.n, Zc.m
    reduced, _report = reduce_with_report(Zc.B)
    t = nonzero_column_count(reduced)
    if t >= m:
        raise NoSplittingError(
            f"the reduced attaching matrix has t = {t} nonzero columns with "
            f"rank m = {m}; the splitting requires t < m (no sphere splits off)"
        )
    _require_vanishing(
        tables,
        group,
        (n - 1, n),
        frozenset(),
        "the two-cone gauge splitting "
        f"(pi_{n - 1} and pi_{n} of the structure group must vanish)",
    )
    if t == 0:
        base: SpaceExpr = Sphere(2 * n)
    else:
        base = attached(wedge(*(Sphere(n) for _ in range(t))) if t > 1 else Sphere(n), 2 * n)
    G = LieGroup(group)
    gauge_expr = product(gauge(base, "alpha"), *(loop(n, G) for _ in range(m - t)))
    susp = wedge(suspension(1, base), *(Sphere(n + 1) for _ in range(m - t)))
    return Decomposition(
        susp,
        gauge_expr,
        "two-cone gauge factorization via restricted row reduction of the "
        "suspended attaching matrix",
    )


# --- sphere bundles over spheres ---------------------------------------------

_JW = "James-Whitehead (1954) sphere bundles over spheres"


def gauge_decompose_sphere_bundle(
    E: SphereBundle,
    group: str,
    tables: Tables | None = None,
) -> Decomposition:
    """Gauge splitting of the total space of a sectioned sphere bundle of an
    oriented plane bundle over a sphere.  A reducible bundle in the stable
    range n <= 2q-1 yields a section automatically, the total space is a
    product of spheres, and the gauge group gains a third factor when
    pi_{q-1}(G) also vanishes."""
    tables = tables or default_tables()
    q, n = E.q, E.n
    stable_range = n <= 2 * q - 1
    if not E.has_section and not (E.j_xi_trivial and stable_range):
        raise UnsupportedManifoldError(
            "need a cross section, or reducibility with n <= 2q-1 (which "
            f"produces one via the Hopf-construction argument; {_JW}); got "
            f"q={q}, n={n}, section={E.has_section}, reducible={E.j_xi_trivial}"
        )
    _require_vanishing(
        tables,
        group,
        (n - 1,),
        frozenset(),
        f"the sectioned sphere-bundle gauge splitting (pi_{n - 1}(G) = 0)",
    )
    label = _gauge_label(tables, group, E.dimension)
    G = LieGroup(group)

    if E.j_xi_trivial and stable_range:
        try:
            q_vanishes = tables.pi(group, q - 1).group.is_trivial()
        except NotTabulatedError:
            q_vanishes = False
        if q_vanishes:
            gauge_expr = product(gauge(Sphere(q + n), label), loop(n, G), loop(q, G))
            susp = wedge(Sphere(q + 1), Sphere(n + 1), Sphere(q + n + 1))
            return Decomposition(
                susp,
                gauge_expr,
                f"reducible sphere bundle in the range n <= 2q-1: the total space "
                f"is S^q x S^n and the gauge group splits three ways ({_JW})",
                base_space=product(Sphere(q), Sphere(n)),
            )

    if E.j_xi_trivial:
        base: SpaceExpr = wedge(Sphere(q), Sphere(q + n))
    else:
        base = attached(Sphere(q), q + n, "J(xi)")
    gauge_expr = product(gauge(base, label), loop(n, G))
    susp = wedge(Sphere(n + 1), suspension(1, base))
    return Decomposition(
        susp,
        gauge_expr,
        f"sectioned sphere-bundle gauge splitting: the Thom space of a plane "
        f"bundle over a sphere is a two-cell complex ({_JW})",
    )


# --- (n-2)-connected 2n-manifolds, n = 6, 8 ----------------------------------

def skeleton_split_n2(M: N2Manifold) -> SpaceExpr:
    """Homotopy type of the (n+1)-skeleton: the mod-2 rank c of the attaching
    matrix counts the suspended projective planes; the remaining m-c
    generators contribute sphere pairs."""
    from .modmatrix import rank_f2

    n, m = M.n, M.m
    c = rank_f2(M.C)
    parts: list[SpaceExpr] = [SuspCP2(n - 3) for _ in range(c)]
    for _ in range(m - c):
        parts.append(Sphere(n - 1))
        parts.append(Sphere(n + 1))
    return wedge(*parts)


def _n2_case_data(
    n: int, m: int, c: int, case: SigmaFCase
) -> tuple[SpaceExpr | None, list[tuple[str, int]]]:
    """Z-piece (None for the bare top sphere) and the named factor counts
    [(expression, value)] for (Omega^{n-3} Map*, Omega^{n-1}, Omega^{n+1})."""
    if n == 6:
        table = {
            SigmaFCase.GENERAL: (
                attached(wedge(SuspCP2(3), Sphere(5)), 12, "f"),
                [("c-1", c - 1), ("m-c-1", m - c - 1), ("m-c", m - c)],
            ),
            SigmaFCase.IN_SUSPENDED_CP2: (
                attached(SuspCP2(3), 12),
                [("c-1", c - 1), ("m-c", m - c), ("m-c", m - c)],
            ),
            SigmaFCase.IN_BOTTOM_SPHERES: (
                attached(Sphere(5), 12),
                [("c", c), ("m-c-1", m - c - 1), ("m-c", m - c)],
            ),
            SigmaFCase.NULL_HOMOTOPIC: (
                None,
                [("c", c), ("m-c", m - c), ("m-c", m - c)],
            ),
        }
    else:
        table = {
            SigmaFCase.GENERAL: (
                attached(wedge(*([SuspCP2(5)] * 4 + [Sphere(7)] * 3 + [Sphere(9)])), 16, "f"),
                [("c-4", c - 4), ("m-c-3", m - c - 3), ("m-c-1", m - c - 1)],
            ),
            SigmaFCase.IN_SUSPENDED_CP2: (
                attached(wedge(*([SuspCP2(5)] * 4)), 16),
                [("c-4", c - 4), ("m-c", m - c), ("m-c", m - c)],
            ),
            SigmaFCase.IN_BOTTOM_SPHERES: (
                attached(wedge(*([Sphere(7)] * 3)), 16),
                [("c", c), ("m-c-3", m - c - 3), ("m-c", m - c)],
            ),
            SigmaFCase.IN_TOP_SPHERE: (
                attached(Sphere(9), 16),
                [("c", c), ("m-c", m - c), ("m-c-1", m - c - 1)],
            ),
            SigmaFCase.NULL_HOMOTOPIC: (
                None,
                [("c", c), ("m-c", m - c), ("m-c", m - c)],
            ),
        }
    return table[case]


def gauge_decompose_n2(
    M: N2Manifold,
    group: str,
    localize_away: Iterable[int] = (),
    tables: Tables | None = None,
) -> Decomposition:
    """Gauge decomposition over (n-2)-connected 2n-manifolds for the two
    exceptional cases (n, G) = (6, E7) and (8, E8), by the user-selected
    case of the suspended top attaching map; away from 2 the suspended
    projective planes split and the decomposition is uniform."""
    tables = tables or default_tables()
    away = _away(localize_away)
    n, m = M.n, M.m
    if (n, group) not in ((6, "E7"), (8, "E8")):
        raise UnsupportedManifoldError(
            f"(n, G) = ({n}, {group}) is not covered; the (n-2)-connected "
            "decompositions are proved for (6, E7) and (8, E8)"
        )
    # bundle classification is integral even when the decomposition localizes
    tables.classify_bundles(M.dimension, M.connectivity, group)

    from .modmatrix import rank_f2

    c = rank_f2(M.C)
    G = LieGroup(group)
    label = "k"

    if 2 in away:
        gauge_expr = product(
            gauge(Sphere(2 * n), label),
            *(loop(n - 1, G) for _ in range(m)),
            *(loop(n + 1, G) for _ in range(m)),
        )
        susp = wedge(
            Sphere(2 * n + 1),
            *(Sphere(n) for _ in range(m)),
            *(Sphere(n + 2) for _ in range(m)),
        )
        return Decomposition(
            susp,
            gauge_expr,
            f"{group}-gauge decomposition over {M.connectivity}-connected "
            f"{M.dimension}-manifolds, localized away from 2 (suspended "
            "projective planes split)",
            away,
        )

    piece, counts = _n2_case_data(n, m, c, M.sigma_f_case)
    for expr, value in counts:
        if value < 0:
            raise CaseInapplicableError(
                f"factor count {expr} = {value} is negative for rank m={m}, "
                f"mod-2 rank c={c} in case {M.sigma_f_case.value}; the theorem "
                "presupposes nonnegative counts"
            )
    n_map, n_low, n_high = (value for _, value in counts)

    if piece is None:
        piece = Sphere(2 * n)
    map_star = MappingSpace(SuspCP2(0), G)
    gauge_expr = product(
        gauge(piece, label),
        *(loop(n - 3, map_star) for _ in range(n_map)),
        *(loop(n - 1, G) for _ in range(n_low)),
        *(loop(n + 1, G) for _ in range(n_high)),
    )
    susp = wedge(
        suspension(1, piece),
        *(SuspCP2(n - 2) for _ in range(n_map)),
        *(Sphere(n) for _ in range(n_low)),
        *(Sphere(n + 2) for _ in range(n_high)),
    )
    return Decomposition(
        susp,
        gauge_expr,
        f"{group}-gauge decomposition over {M.connectivity}-connected "
        f"{M.dimension}-manifolds (case: {M.sigma_f_case.value})",
        away,
    )


# --- dispatcher ---------------------------------------------------------------

def decompose(
    manifold: WallManifold | SphereBundle | N2Manifold | GeneralComplex,
    group: str,
    localize_away: Iterable[int] = (),
    tables: Tables | None = None,
) -> Decomposition:
    """Dispatch on the input kind.  Every variant either produces a
    Decomposition or raises a typed error."""
    if isinstance(manifold, WallManifold):
        return gauge_decompose_wall(manifold, group, localize_away, tables)
    if isinstance(manifold, SphereBundle):
        d = gauge_decompose_sphere_bundle(manifold, group, tables)
        away = _away(localize_away)
        if away:
            d = Decomposition(
                localize(d.suspension, away),
                localize(d.gauge, away),
                d.theorem_used,
                away,
                d.base_space,
            )
        return d
    if isinstance(manifold, N2Manifold):
        return gauge_decompose_n2(manifold, group, localize_away, tables)
    if isinstance(manifold, GeneralComplex):
        d = gauge_decompose_complex(manifold, group, tables)
        away = _away(localize_away)
        if away:
            d = Decomposition(
                localize(d.suspension, away),
                localize(d.gauge, away),
                d.theorem_used,
                away,
                d.base_space,
            )
        return d
    raise TypeError(f"not a manifold or complex description: {manifold!r}")
