"""Three independent routes to B_n, cross-validation, and the record cache.

Routes
------
``dp``            tiling count by broken-profile DP, then ``sqrt(A_n / 2**n)``
``symmetric``     ``h_n(4)`` from power sums of the roots of ``P_n``
``discriminant``  ``sqrt(disc(Q_n) / disc(P_n))``

The DP is exact ground truth but exponential in n; the symmetric route is
quadratic in ``C(n, 2)``; the discriminant route is the one that reaches
n in the hundreds.
"""
from __future__ import annotations

import json
import logging
import os
import threading
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping

import gmpy2

from .chebyshev import p_poly, q_poly
from .errors import (
    CacheConflict,
    InexactDivision,
    NonPositive,
    RouteMismatch,
    SchemaError,
    WidthCapExceeded,
)
from .polynomial import discriminant, integer_sqrt_exact
from .symmetric import b_from_h, h_poly
from .tiling import DEFAULT_WIDTH_CAP, a_n, b_from_count

__all__ = [
    "METHODS",
    "DEFAULT_MODULI",
    "SCHEMA_VERSION",
    "CACHE_ENV_VAR",
    "DimerRecord",
    "RecordCache",
    "b_discriminant",
    "b_symmetric",
    "b_counting",
    "compute_record",
    "compute_range",
    "resolve_cache_path",
    "parse_methods",
]

log = logging.getLogger(__name__)

METHODS = ("dp", "symmetric", "discriminant")
_ALIASES = {
    "dp": "dp",
    "counting": "dp",
    "sym": "symmetric",
    "symmetric": "symmetric",
    "disc": "discriminant",
    "discriminant": "discriminant",
}
DEFAULT_MODULI = (2, 4, 8, 16, 32, 64)
SCHEMA_VERSION = 1
CACHE_ENV_VAR = "DIMER_RESIDUES_CACHE"


def parse_methods(spec: str | Iterable[str]) -> frozenset[str]:
    """Accept ``"all"``, ``"disc,sym"`` or an iterable of names/aliases."""
    items = spec.split(",") if isinstance(spec, str) else list(spec)
    out = set()
    for item in items:
        item = item.strip().lower()
        if not item:
            continue
        if item == "all":
            out.update(METHODS)
        elif item in _ALIASES:
            out.add(_ALIASES[item])
        else:
            raise ValueError(f"unknown method {item!r}")
    if not out:
        raise ValueError("no methods given")
    return frozenset(out)


def to_decimal(v: int) -> str:
    # str(int) refuses very long values by default; mpz has no such limit
    return gmpy2.mpz(v).digits(10)


def from_decimal(s: str) -> int:
    if not isinstance(s, str) or not s.lstrip("-").isdigit():
        raise ValueError(f"not a decimal integer string: {s!r}")
    return int(gmpy2.mpz(s))


# -- routes -----------------------------------------------------------------


def b_discriminant(n: int) -> int:
    """B_n as the square root of ``disc(Q_n) / disc(P_n)``."""
    if n < 1:
        raise ValueError("n must be positive")
    dp_, dq = discriminant(p_poly(n)), discriminant(q_poly(n))
    sq, rem = divmod(dq, dp_)
    if rem:
        raise InexactDivision(f"disc(P_{n}) does not divide disc(Q_{n})")
    return integer_sqrt_exact(sq)


def b_symmetric(n: int) -> int:
    return b_from_h(h_poly(n))


def b_counting(n: int, width_cap: int = DEFAULT_WIDTH_CAP) -> tuple[int, int]:
    """``(A_n, B_n)`` from the tiling count."""
    a = a_n(n, width_cap)
    return a, b_from_count(n, a)


def _run_routes(n: int, methods: frozenset[str], width_cap: int) -> dict:
    out = {}
    if "dp" in methods:
        a, b = b_counting(n, width_cap)
        out["dp"] = b
        out["A_n"] = a
    if "symmetric" in methods:
        out["symmetric"] = b_symmetric(n)
    if "discriminant" in methods:
        out["discriminant"] = b_discriminant(n)
    return out


# -- records ----------------------------------------------------------------


@dataclass(frozen=True)
class DimerRecord:
    n: int
    b: int
    methods: frozenset[str]
    a: int | None = None
    residues: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.b <= 0:
            raise NonPositive(f"B_{self.n} = {self.b}")
        object.__setattr__(self, "methods", frozenset(self.methods))
        res = dict(self.residues)
        for m in DEFAULT_MODULI:
            res.setdefault(m, self.b % m)
        object.__setattr__(self, "residues", dict(sorted(res.items())))

    def with_moduli(self, moduli: Iterable[int]) -> DimerRecord:
        res = dict(self.residues)
        for m in moduli:
            res[m] = self.b % m
        return DimerRecord(self.n, self.b, self.methods, self.a, res)

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "n": self.n,
            "A_n": None if self.a is None else to_decimal(self.a),
            "B_n": to_decimal(self.b),
            "methods": sorted(self.methods),
            "residues": {str(m): to_decimal(v) for m, v in self.residues.items()},
        }

    @classmethod
    def from_json(cls, obj: dict) -> DimerRecord:
        if not isinstance(obj, dict):
            raise SchemaError("record is not an object")
        if obj.get("schema") != SCHEMA_VERSION:
            raise SchemaError(f"unsupported schema version {obj.get('schema')!r}")
        try:
            n = obj["n"]
            b = from_decimal(obj["B_n"])
            a = None if obj.get("A_n") is None else from_decimal(obj["A_n"])
            methods = frozenset(obj["methods"])
            residues = {int(k): from_decimal(v) for k, v in obj["residues"].items()}
        except (KeyError, TypeError, ValueError, AttributeError) as exc:
            raise SchemaError(f"malformed record: {exc}") from None
        if not isinstance(n, int) or n < 1:
            raise SchemaError(f"bad n {n!r}")
        if not methods or not methods <= set(METHODS):
            raise SchemaError(f"bad methods {sorted(methods)}")
        if b <= 0 or b % 2 == 0:
            raise SchemaError(f"B_{n} must be positive and odd")
        if a is not None and a != (b * b) << n:
            raise SchemaError(f"A_{n} inconsistent with B_{n}")
        for m, v in residues.items():
            if v != b % m:
                raise SchemaError(f"residue mod {m} inconsistent with B_{n}")
        return cls(n, b, methods, a, residues)

    def merge(self, other: DimerRecord) -> DimerRecord:
        if other.n != self.n:
            raise ValueError("cannot merge records for different n")
        if other.b != self.b:
            raise CacheConflict(self.n, self.b, other.b)
        res = {**self.residues, **other.residues}
        a = self.a if self.a is not None else other.a
        return DimerRecord(self.n, self.b, self.methods | other.methods, a, res)


class RecordCache:
    """Append-only JSON-lines store of :class:`DimerRecord`, keyed by n.

    Reading merges duplicate lines for the same n (union of methods); lines
    that disagree on B_n raise :class:`CacheConflict`.  Appends go through one
    lock and one ``write`` call per line.
    """

    def __init__(self, path: str | os.PathLike):
        self.path = Path(path)
        self._lock = threading.Lock()
        self._records: dict[int, DimerRecord] | None = None

    def load(self) -> dict[int, DimerRecord]:
        records: dict[int, DimerRecord] = {}
        if self.path.exists():
            with self.path.open("r", encoding="utf-8") as fh:
                for lineno, line in enumerate(fh, 1):
                    if not line.strip():
                        continue
                    try:
                        obj = json.loads(line)
                    except json.JSONDecodeError as exc:
                        raise SchemaError(f"invalid JSON ({exc.msg})", lineno) from None
                    try:
                        rec = DimerRecord.from_json(obj)
                    except SchemaError as exc:
                        raise SchemaError(str(exc), lineno) from None
                    if rec.n in records:
                        rec = records[rec.n].merge(rec)
                    records[rec.n] = rec
        self._records = records
        return dict(records)

    @property
    def records(self) -> dict[int, DimerRecord]:
        if self._records is None:
            self.load()
        return self._records

    def get(self, n: int) -> DimerRecord | None:
        return self.records.get(n)

    def append(self, record: DimerRecord) -> DimerRecord:
        """Persist ``record`` (merged with anything already stored)."""
        with self._lock:
            existing = self.records.get(record.n)
            merged = existing.merge(record) if existing else record
            if existing == merged:
                return merged
            self.path.parent.mkdir(parents=True, exist_ok=True)
            line = json.dumps(merged.to_json(), separators=(",", ":")) + "\n"
            with self.path.open("a", encoding="utf-8") as fh:
                fh.write(line)
                fh.flush()
            self._records[record.n] = merged
            return merged


def resolve_cache_path(flag: str | None = None) -> Path:
    """Flag, then ``$DIMER_RESIDUES_CACHE``, then the user data directory."""
    if flag:
        return Path(flag)
    env = os.environ.get(CACHE_ENV_VAR)
    if env:
        return Path(env)
    base = os.environ.get("XDG_DATA_HOME") or os.path.join(Path.home(), ".local", "share")
    return Path(base) / "dimer-residues" / "records.jsonl"


# -- orchestration ----------------------------------------------------------


def _check_request(n: int, methods: frozenset[str], width_cap: int):
    if n < 1:
        raise ValueError("n must be positive")
    if not methods:
        raise ValueError("no methods requested")
    unknown = methods - set(METHODS)
    if unknown:
        raise ValueError(f"unknown methods {sorted(unknown)}")
    if "dp" in methods and 2 * n > width_cap:
        raise WidthCapExceeded(2 * n, width_cap)


def _assemble(n, methods, values, cached, moduli) -> DimerRecord:
    found = {k: v for k, v in values.items() if k in METHODS}
    if cached is not None:
        found["cache"] = cached.b
    if len(set(found.values())) > 1:
        raise RouteMismatch(n, found)
    b = next(iter(found.values()))
    a = values.get("A_n")
    if a is None and cached is not None and "dp" in methods:
        a = cached.a
    return DimerRecord(n, b, methods, a).with_moduli(moduli)


def _cached_answer(cache, n, methods, moduli):
    rec = cache.get(n) if cache is not None else None
    if rec is None or not methods <= rec.methods:
        return rec, None
    a = rec.a if "dp" in methods else None
    return rec, DimerRecord(n, rec.b, methods, a).with_moduli(moduli)


def compute_record(
    n: int,
    methods: str | Iterable[str] = METHODS,
    cache: RecordCache | None = None,
    moduli: Iterable[int] = (),
    width_cap: int = DEFAULT_WIDTH_CAP,
) -> DimerRecord:
    """Compute B_n by every requested route and insist they agree.

    A cached record that already covers the requested routes is reused; any
    freshly computed value is also checked against the cached one.
    """
    methods = parse_methods(methods)
    moduli = tuple(moduli)
    _check_request(n, methods, width_cap)
    cached, answer = _cached_answer(cache, n, methods, moduli)
    if answer is not None:
        return answer
    values = _run_routes(n, methods, width_cap)
    rec = _assemble(n, methods, values, cached, moduli)
    if cache is not None:
        cache.append(rec)
    return rec


def compute_range(
    ns: Iterable[int],
    methods: str | Iterable[str] = ("discriminant",),
    cache: RecordCache | None = None,
    moduli: Iterable[int] = (),
    width_cap: int = DEFAULT_WIDTH_CAP,
    jobs: int = 1,
) -> list[DimerRecord]:
    """Records for every n in ``ns``, ordered by n.

    With ``jobs > 1`` route computations run in worker processes; cache
    writes stay in the calling process.
    """
    methods = parse_methods(methods)
    moduli = tuple(moduli)
    ns = sorted(set(ns))
    for n in ns:
        _check_request(n, methods, width_cap)

    results: dict[int, DimerRecord] = {}
    todo: list[tuple[int, DimerRecord | None]] = []
    for n in ns:
        cached, answer = _cached_answer(cache, n, methods, moduli)
        if answer is not None:
            results[n] = answer
        else:
            todo.append((n, cached))

    if jobs > 1 and len(todo) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [
                (n, cached, pool.submit(_run_routes, n, methods, width_cap))
                for n, cached in todo
            ]
            computed = [(n, cached, fut.result()) for n, cached, fut in futures]
    else:
        computed = ((n, cached, _run_routes(n, methods, width_cap)) for n, cached in todo)

    for n, cached, values in computed:
        rec = _assemble(n, methods, values, cached, moduli)
        if cache is not None:
            cache.append(rec)
        results[n] = rec
        log.debug("B_%d done via %s", n, ",".join(sorted(methods)))
    return [results[n] for n in ns]
