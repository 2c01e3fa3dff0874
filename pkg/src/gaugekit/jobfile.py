"""Job files: one decomposition request per file, in a line-oriented
``key: value`` format with `#` comments.

Common keys: ``kind`` (wall | sphere_bundle | n2 | complex), ``group``,
``localize_away`` (primes, space- or comma-separated), ``format``
(text | latex).  Kind-specific keys:

  wall           n, m, chi (m residues, already reduced mod the J-image
                 order), almost_parallelizable (yes/no)
  sphere_bundle  q, n, has_section, j_xi_trivial, clutching_note
  n2             n, m, sigma_f_case, then a matrix block  ``C:`` followed
                 by m rows of m bits
  complex        n, m, moduli (divisibility chain d_1 .. d_r), then a
                 matrix block ``B:`` followed by m rows of r entries

Schema problems raise SchemaError; the values are validated literally
(for example a chi entry >= its modulus is rejected, not reduced).
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .exact import CyclicElem, is_prime
from .manifolds import (
    GeneralComplex,
    N2Manifold,
    SigmaFCase,
    SphereBundle,
    WallManifold,
    chi_modulus,
)
from .modmatrix import AttachingMatrix, F2Matrix

__all__ = ["SchemaError", "Job", "parse_job_file", "parse_job_text", "parse_primes"]


class SchemaError(ValueError):
    pass


@dataclass(frozen=True)
class Job:
    kind: str
    spec: WallManifold | SphereBundle | N2Manifold | GeneralComplex
    group: str
    localize_away: frozenset[int]
    fmt: str
    source: str = ""


_KINDS = ("wall", "sphere_bundle", "n2", "complex")
_BOOLS = {"yes": True, "true": True, "no": False, "false": False}


def _split_fields(text: str) -> tuple[dict[str, str], dict[str, list[str]]]:
    """Scalar keys and matrix blocks (a ``K:`` line followed by bare rows)."""
    scalars: dict[str, str] = {}
    blocks: dict[str, list[str]] = {}
    current_block: list[str] | None = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        if ":" in line:
            key, _, value = line.partition(":")
            key = key.strip()
            value = value.strip()
            if not key:
                raise SchemaError(f"line {lineno}: missing key")
            if value:
                if key in scalars:
                    raise SchemaError(f"line {lineno}: duplicate key {key!r}")
                scalars[key] = value
                current_block = None
            else:
                if key in blocks:
                    raise SchemaError(f"line {lineno}: duplicate matrix block {key!r}")
                current_block = blocks.setdefault(key, [])
        else:
            if current_block is None:
                raise SchemaError(f"line {lineno}: row outside a matrix block: {line!r}")
            current_block.append(line.strip())
    return scalars, blocks


def _get(scalars: dict[str, str], key: str) -> str:
    if key not in scalars:
        raise SchemaError(f"missing required key {key!r}")
    return scalars[key]


def _get_int(scalars: dict[str, str], key: str) -> int:
    value = _get(scalars, key)
    try:
        return int(value)
    except ValueError:
        raise SchemaError(f"{key!r} must be an integer, got {value!r}") from None


def _get_bool(scalars: dict[str, str], key: str, default: bool = False) -> bool:
    if key not in scalars:
        return default
    value = scalars[key].lower()
    if value not in _BOOLS:
        raise SchemaError(f"{key!r} must be yes/no, got {scalars[key]!r}")
    return _BOOLS[value]


def parse_primes(field: str) -> frozenset[int]:
    parts = field.replace(",", " ").split()
    primes = set()
    for p in parts:
        try:
            v = int(p)
        except ValueError:
            raise SchemaError(f"localize_away entries must be integers, got {p!r}") from None
        if not is_prime(v):
            raise SchemaError(f"localize_away entries must be prime, got {v}")
        primes.add(v)
    return frozenset(primes)


def _int_rows(rows: list[str], what: str) -> list[list[int]]:
    out = []
    for row in rows:
        try:
            out.append([int(x) for x in row.split()])
        except ValueError:
            raise SchemaError(f"{what}: non-integer matrix entry in row {row!r}") from None
    return out


def parse_job_text(text: str, source: str = "<string>") -> Job:
    scalars, blocks = _split_fields(text)
    kind = _get(scalars, "kind")
    if kind not in _KINDS:
        raise SchemaError(f"kind must be one of {_KINDS}, got {kind!r}")
    group = _get(scalars, "group")
    away = parse_primes(scalars.get("localize_away", ""))
    fmt = scalars.get("format", "text")
    if fmt not in ("text", "latex"):
        raise SchemaError(f"format must be text or latex, got {fmt!r}")

    try:
        if kind == "wall":
            spec = _build_wall(scalars)
        elif kind == "sphere_bundle":
            spec = _build_bundle(scalars)
        elif kind == "n2":
            spec = _build_n2(scalars, blocks)
        else:
            spec = _build_complex(scalars, blocks)
    except ValueError as exc:
        if isinstance(exc, SchemaError):
            raise
        raise SchemaError(str(exc)) from exc
    return Job(kind, spec, group, away, fmt, source)


def parse_job_file(path: Path | str) -> Job:
    path = Path(path)
    return parse_job_text(path.read_text(encoding="utf-8"), str(path))


def _build_wall(scalars: dict[str, str]) -> WallManifold:
    n = _get_int(scalars, "n")
    m = _get_int(scalars, "m")
    if m < 1:
        raise SchemaError(f"rank m must be >= 1, got {m}")
    chi_field = _get(scalars, "chi").replace(",", " ").split()
    if len(chi_field) != m:
        raise SchemaError(f"chi must list exactly m={m} residues, got {len(chi_field)}")
    try:
        values = [int(v) for v in chi_field]
    except ValueError:
        raise SchemaError("chi entries must be integers") from None
    if n < 2:
        raise SchemaError(f"wall manifolds need n >= 2, got {n}")
    d = chi_modulus(n)
    for v in values:
        if not 0 <= v < d:
            raise SchemaError(
                f"chi entry {v} is out of range for modulus {d} (values must be "
                "given as reduced residues)"
            )
    return WallManifold(
        n,
        tuple(CyclicElem(v, d) for v in values),
        _get_bool(scalars, "almost_parallelizable"),
    )


def _build_bundle(scalars: dict[str, str]) -> SphereBundle:
    return SphereBundle(
        q=_get_int(scalars, "q"),
        n=_get_int(scalars, "n"),
        has_section=_get_bool(scalars, "has_section"),
        j_xi_trivial=_get_bool(scalars, "j_xi_trivial"),
        clutching_note=scalars.get("clutching_note", ""),
    )


def _build_n2(scalars: dict[str, str], blocks: dict[str, list[str]]) -> N2Manifold:
    n = _get_int(scalars, "n")
    m = _get_int(scalars, "m")
    if "C" not in blocks:
        raise SchemaError("n2 jobs need a matrix block 'C:'")
    rows = _int_rows(blocks["C"], "C")
    if len(rows) != m or any(len(r) != m for r in rows):
        raise SchemaError(f"C must be an {m}x{m} bit matrix")
    for row in rows:
        for b in row:
            if b not in (0, 1):
                raise SchemaError(f"C entries must be bits, got {b}")
    case_field = scalars.get("sigma_f_case", "general")
    try:
        case = SigmaFCase(case_field)
    except ValueError:
        valid = ", ".join(c.value for c in SigmaFCase)
        raise SchemaError(f"sigma_f_case must be one of: {valid}; got {case_field!r}") from None
    return N2Manifold(n, F2Matrix.from_rows(rows), case)


def _build_complex(scalars: dict[str, str], blocks: dict[str, list[str]]) -> GeneralComplex:
    n = _get_int(scalars, "n")
    m = _get_int(scalars, "m")
    moduli_field = _get(scalars, "moduli").replace(",", " ").split()
    try:
        moduli = [int(d) for d in moduli_field]
    except ValueError:
        raise SchemaError("moduli must be integers") from None
    if not moduli or any(d < 1 for d in moduli):
        raise SchemaError("moduli must be a nonempty list of positive integers")
    for lo, hi in zip(moduli, moduli[1:]):
        if hi % lo != 0:
            raise SchemaError(f"moduli must form a divisibility chain, got {moduli}")
    if "B" not in blocks:
        raise SchemaError("complex jobs need a matrix block 'B:'")
    rows = _int_rows(blocks["B"], "B")
    if len(rows) != m or any(len(r) != len(moduli) for r in rows):
        raise SchemaError(f"B must be {m}x{len(moduli)} (one column per modulus)")
    for row in rows:
        for v, d in zip(row, moduli):
            if not 0 <= v < d:
                raise SchemaError(
                    f"B entry {v} is out of range for its column modulus {d} "
                    "(values must be given as reduced residues)"
                )
    return GeneralComplex(n, AttachingMatrix.from_rows(rows, moduli))
