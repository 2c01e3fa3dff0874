"""Attaching-map matrices over chains of cyclic groups.

A suspended attaching map of a two-cone complex is a matrix whose j-th
column takes values in Z/d_j, with d_1 | d_2 | ... | d_r.  Homotopy
equivalences of the complex act on it through a restricted group of row
operations only: row additions, row swaps, and negation of a single row.
This module reduces such matrices to a triangular form under exactly those
operations, keeping a certified operation log, and also provides the full
mod-2 rank used for skeletal splittings (where column operations are
permitted as well).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Sequence

from .exact import CyclicElem, gcd_mod

__all__ = [
    "RowOp",
    "AttachingMatrix",
    "ReductionReport",
    "F2Matrix",
    "apply_rowop",
    "replay_oplog",
    "reduce_restricted",
    "reduce_with_report",
    "nonzero_column_count",
    "rank_f2",
    "rowop_orbit",
]

_KINDS = ("add", "swap", "negate")


@dataclass(frozen=True)
class RowOp:
    """One restricted elementary row operation, with 1-based row indices.

    add(a, b):  row a += row b        (a != b)
    swap(a, b): exchange rows a, b    (a != b)
    negate(a):  row a *= -1
    """

    kind: str
    a: int
    b: int = 0

    def __post_init__(self) -> None:
        if self.kind not in _KINDS:
            raise ValueError(f"unknown row operation {self.kind!r}")
        if self.a < 1:
            raise ValueError("row indices are 1-based")
        if self.kind in ("add", "swap"):
            if self.b < 1:
                raise ValueError("row indices are 1-based")
            if self.a == self.b:
                raise ValueError(f"{self.kind} requires two distinct rows")
        elif self.b != 0:
            raise ValueError("negate takes a single row index")

    @classmethod
    def add(cls, a: int, b: int) -> "RowOp":
        return cls("add", a, b)

    @classmethod
    def swap(cls, a: int, b: int) -> "RowOp":
        return cls("swap", a, b)

    @classmethod
    def negate(cls, a: int) -> "RowOp":
        return cls("negate", a)

    def __str__(self) -> str:
        if self.kind == "negate":
            return f"negate {self.a}"
        return f"{self.kind} {self.a} {self.b}"

    @classmethod
    def parse(cls, line: str) -> "RowOp":
        parts = line.split()
        if not parts:
            raise ValueError("empty row-operation line")
        kind, idx = parts[0], [int(p) for p in parts[1:]]
        if kind == "negate" and len(idx) == 1:
            return cls.negate(idx[0])
        if kind in ("add", "swap") and len(idx) == 2:
            return cls(kind, idx[0], idx[1])
        raise ValueError(f"malformed row-operation line {line!r}")


def _apply_inplace(rows: list[list[int]], moduli: Sequence[int], op: RowOp) -> None:
    a = op.a - 1
    if op.kind == "swap":
        b = op.b - 1
        rows[a], rows[b] = rows[b], rows[a]
    elif op.kind == "add":
        b = op.b - 1
        src = rows[b]
        rows[a] = [(x + y) % d for x, y, d in zip(rows[a], src, moduli)]
    else:
        rows[a] = [(-x) % d for x, d in zip(rows[a], moduli)]


@dataclass(frozen=True)
class AttachingMatrix:
    """An m x r matrix whose column j is valued in Z/moduli[j], together with
    the log of row operations that produced it from the recorded initial
    matrix.  Immutable; operations return new matrices."""

    moduli: tuple[int, ...]
    entries: tuple[tuple[int, ...], ...]
    oplog: tuple[RowOp, ...] = ()
    initial: tuple[tuple[int, ...], ...] | None = None

    def __post_init__(self) -> None:
        if not self.entries:
            raise ValueError("matrix needs at least one row")
        r = len(self.moduli)
        for d in self.moduli:
            if d <= 0:
                raise ValueError("column moduli must be positive")
        for lo, hi in zip(self.moduli, self.moduli[1:]):
            if hi % lo != 0:
                raise ValueError(f"moduli must form a divisibility chain, got {self.moduli}")
        norm = tuple(
            tuple(v % d for v, d in zip(row, self.moduli))
            for row in self.entries
        )
        for row in self.entries:
            if len(row) != r:
                raise ValueError("row length must match the number of moduli")
        object.__setattr__(self, "entries", norm)
        if self.initial is None:
            object.__setattr__(self, "initial", norm)

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]], moduli: int | Sequence[int]) -> "AttachingMatrix":
        rows = tuple(tuple(row) for row in rows)
        if not rows:
            raise ValueError("matrix needs at least one row")
        if isinstance(moduli, int):
            moduli = (moduli,) * len(rows[0])
        return cls(tuple(moduli), rows)

    @property
    def m(self) -> int:
        return len(self.entries)

    @property
    def r(self) -> int:
        return len(self.moduli)

    def entry(self, i: int, j: int) -> CyclicElem:
        """Entry in row i, column j (1-based), as a residue with its modulus."""
        return CyclicElem(self.entries[i - 1][j - 1], self.moduli[j - 1])

    def column(self, j: int) -> tuple[CyclicElem, ...]:
        return tuple(self.entry(i, j) for i in range(1, self.m + 1))

    def oplog_lines(self) -> list[str]:
        return [str(op) for op in self.oplog]


def apply_rowop(B: AttachingMatrix, op: RowOp) -> AttachingMatrix:
    """Apply one row operation, entrywise per column modulus, appending it
    to the operation log."""
    if op.a > B.m or (op.kind != "negate" and op.b > B.m):
        raise ValueError(f"row index out of range for {B.m}-row matrix: {op}")
    rows = [list(row) for row in B.entries]
    _apply_inplace(rows, B.moduli, op)
    return AttachingMatrix(
        B.moduli,
        tuple(tuple(row) for row in rows),
        B.oplog + (op,),
        B.initial,
    )


def replay_oplog(B: AttachingMatrix) -> tuple[tuple[int, ...], ...]:
    """Re-run the operation log from the recorded initial matrix.  The result
    must reproduce the entries bit-exactly (certification)."""
    assert B.initial is not None
    rows = [list(row) for row in B.initial]
    for op in B.oplog:
        _apply_inplace(rows, B.moduli, op)
    return tuple(tuple(row) for row in rows)


@dataclass(frozen=True)
class ReductionReport:
    """Diagnostics from a restricted reduction: attained diagonal entries and
    any discrepancies against the full-column gcd values."""

    pivots: tuple[int, ...]
    notes: tuple[str, ...] = ()


def reduce_with_report(B: AttachingMatrix) -> tuple[AttachingMatrix, ReductionReport]:
    """Reduce to the triangular shape reachable by row operations alone.

    Columns are processed left to right; for column j only rows j..m are
    free (settled pivots are never revisited).  Euclidean row combinations
    collect a generator of the subgroup of Z/d_j spanned by the free
    entries at the diagonal.  With at least two free rows the least
    positive generator is always attained; with a single free row only
    negation is available, the attained pivot is min(v, d - v), and any
    shortfall against the subgroup generator is recorded in the report.
    Discrepancies between attained diagonals and the full-column gcd of the
    input are likewise recorded, never corrected.
    """
    m, r = B.m, B.r
    full_column_gcd = [gcd_mod(B.column(j)) for j in range(1, r + 1)]

    rows = [list(row) for row in B.entries]
    ops: list[RowOp] = []
    notes: list[str] = []
    pivots: list[int] = []

    def do(op: RowOp) -> None:
        _apply_inplace(rows, B.moduli, op)
        ops.append(op)

    def subtract(i: int, p: int, q: int) -> None:
        # row i -= q * row p, via negate/add/negate
        if q <= 0:
            return
        do(RowOp.negate(p + 1))
        for _ in range(q):
            do(RowOp.add(i + 1, p + 1))
        do(RowOp.negate(p + 1))

    for j in range(min(m, r)):
        d = B.moduli[j]
        free = range(j, m)

        # Euclidean phase: reduce the free entries of column j against each
        # other until at most one is nonzero.
        while True:
            nz = [(rows[i][j], i) for i in free if rows[i][j] != 0]
            if len(nz) <= 1:
                break
            vp, p = min(nz)
            for vi, i in nz:
                if i == p:
                    continue
                subtract(i, p, vi // vp)

        nz = [(rows[i][j], i) for i in free if rows[i][j] != 0]
        if not nz:
            pivots.append(0)
            continue

        v, p = nz[0]
        g = gcd(v, d)
        if v != g:
            spare = next((i for i in free if i != p), None)
            if spare is not None:
                # stage k*v = g (mod d) in the spare row, then clear row p
                vp, dp = v // g, d // g
                k = pow(vp, -1, dp)
                for _ in range(k):
                    do(RowOp.add(spare + 1, p + 1))
                subtract(p, spare, v // g)
                p = spare
            else:
                if d - v < v:
                    do(RowOp.negate(p + 1))
                attained = rows[p][j]
                if attained != g:
                    notes.append(
                        f"column {j + 1}: attained pivot {attained}, but the least "
                        f"positive generator of the entry subgroup is {g} "
                        f"(unreachable with a single free row; orbit is "
                        f"{{{min(v, d - v)}, {max(v, d - v)}}})"
                    )
        if p != j:
            do(RowOp.swap(j + 1, p + 1))
        pivots.append(rows[j][j])

    for j, (got, want) in enumerate(zip(pivots, full_column_gcd), start=1):
        if got != want:
            notes.append(
                f"column {j}: attained diagonal {got} differs from the full-column "
                f"gcd {want} (earlier pivots consume rows under restricted operations)"
            )

    reduced = AttachingMatrix(
        B.moduli,
        tuple(tuple(row) for row in rows),
        B.oplog + tuple(ops),
        B.initial,
    )
    return reduced, ReductionReport(tuple(pivots), tuple(notes))


def reduce_restricted(B: AttachingMatrix) -> AttachingMatrix:
    """Triangular form of B under the restricted row operations; the
    operation log certifies reachability."""
    return reduce_with_report(B)[0]


def nonzero_column_count(B: AttachingMatrix) -> int:
    return sum(
        1
        for j in range(B.r)
        if any(row[j] != 0 for row in B.entries)
    )


def rowop_orbit(
    entries: tuple[tuple[int, ...], ...],
    moduli: Sequence[int],
    max_states: int = 250_000,
) -> frozenset[tuple[tuple[int, ...], ...]] | None:
    """Full orbit of a matrix under {add, swap, negate}, by breadth-first
    search.  Returns None if the orbit exceeds max_states."""
    m = len(entries)
    ops: list[RowOp] = []
    for a in range(1, m + 1):
        ops.append(RowOp.negate(a))
        for b in range(1, m + 1):
            if a != b:
                ops.append(RowOp.add(a, b))
                if a < b:
                    ops.append(RowOp.swap(a, b))
    seen = {entries}
    queue = deque([entries])
    while queue:
        state = queue.popleft()
        rows = [list(row) for row in state]
        for op in ops:
            work = [list(row) for row in rows]
            _apply_inplace(work, moduli, op)
            nxt = tuple(tuple(row) for row in work)
            if nxt not in seen:
                if len(seen) >= max_states:
                    return None
                seen.add(nxt)
                queue.append(nxt)
    return frozenset(seen)


@dataclass(frozen=True)
class F2Matrix:
    """A square matrix of bits."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.rows)
        for row in self.rows:
            if len(row) != n:
                raise ValueError("matrix must be square")
            for bit in row:
                if bit not in (0, 1):
                    raise ValueError("entries must be bits")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "F2Matrix":
        return cls(tuple(tuple(int(b) for b in row) for row in rows))

    @classmethod
    def zero(cls, n: int) -> "F2Matrix":
        return cls(tuple((0,) * n for _ in range(n)))

    @classmethod
    def identity(cls, n: int) -> "F2Matrix":
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @property
    def size(self) -> int:
        return len(self.rows)


def rank_f2(C: F2Matrix) -> int:
    """Rank over the field with two elements, by Gaussian elimination."""
    basis: dict[int, int] = {}  # leading-bit position -> reduced row mask
    for row in C.rows:
        mask = 0
        for bit in row:
            mask = (mask << 1) | bit
        while mask:
            top = mask.bit_length() - 1
            if top in basis:
                mask ^= basis[top]
            else:
                basis[top] = mask
                break
    return len(basis)
