"""Result records, sweep specifications and the append-only JSONL cache."""

from __future__ import annotations

import json
import os
import re
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from typing import Iterable

from filelock import FileLock

from . import __version__
from .exact_arith import ParameterError
from .hilbert import hilbert_series
from .multiplicity import ALL_METHODS, dimension, mult
from .params import RingParams

CACHE_ENV = "PFHILBERT_CACHE_DIR"
CACHE_FILENAME = "results.jsonl"


@dataclass
class ResultRecord:
    n: int
    r: int
    kind: str
    dimension: int
    h_vector: list[int]
    multiplicity: int
    methods: dict[str, int | None]
    version: str = __version__
    timestamp: str = ""

    def to_dict(self) -> dict:
        # Fixed key order; big integers as decimal strings.
        return {
            "n": self.n,
            "r": self.r,
            "class": self.kind,
            "dimension": self.dimension,
            "h_vector": [str(c) for c in self.h_vector],
            "multiplicity": str(self.multiplicity),
            "methods": {k: (None if v is None else str(v)) for k, v in self.methods.items()},
            "version": self.version,
            "timestamp": self.timestamp,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, d: dict) -> "ResultRecord":
        return cls(
            n=int(d["n"]),
            r=int(d["r"]),
            kind=d["class"],
            dimension=int(d["dimension"]),
            h_vector=[int(c) for c in d["h_vector"]],
            multiplicity=int(d["multiplicity"]),
            methods={k: (None if v is None else int(v)) for k, v in d["methods"].items()},
            version=d["version"],
            timestamp=d.get("timestamp", ""),
        )

    @classmethod
    def from_json(cls, line: str) -> "ResultRecord":
        return cls.from_dict(json.loads(line))

    @property
    def key(self) -> tuple[int, int, str]:
        return (self.n, self.r, self.version)


def compute_record(n: int, r: int, methods: Iterable[str] = ALL_METHODS) -> ResultRecord:
    params = RingParams(n, r)
    series = hilbert_series(params)
    values: dict[str, int | None] = {}
    for m in methods:
        if not params.formula_valid:
            values[m] = None
            continue
        try:
            values[m] = mult(params, m)
        except ParameterError:
            values[m] = None
    return ResultRecord(
        n=n,
        r=r,
        kind=params.kind,
        dimension=dimension(params),
        h_vector=list(series.h_vector),
        multiplicity=series.multiplicity,
        methods=values,
        timestamp=datetime.now(timezone.utc).isoformat(timespec="seconds"),
    )


@dataclass
class SweepSpec:
    n_range: tuple[int, int]
    r_range: tuple[int, int]
    methods: list[str] = field(default_factory=lambda: list(ALL_METHODS))
    format: str = "json"
    cache: str | None = None

    def pairs(self) -> list[tuple[int, int]]:
        return [
            (n, r)
            for n in range(self.n_range[0], self.n_range[1] + 1)
            for r in range(self.r_range[0], self.r_range[1] + 1)
        ]


_RANGE = re.compile(r"^\s*(-?\d+)\s*(?:\.\.\s*(-?\d+))?\s*$")


def _parse_range(text: str, key: str) -> tuple[int, int]:
    m = _RANGE.match(text)
    if not m:
        raise ParameterError(f"bad range for {key!r}: {text!r} (expected 'a..b' or 'a')")
    lo = int(m.group(1))
    hi = int(m.group(2)) if m.group(2) is not None else lo
    if hi < lo:
        raise ParameterError(f"empty range for {key!r}: {text!r}")
    return lo, hi


def parse_sweep_spec(text: str) -> SweepSpec:
    """Parse ``key = value`` lines; ``#`` starts a comment.

    Keys: ``n`` and ``r`` (``a..b`` or a single integer, required),
    ``methods`` (comma list or ``all``), ``format`` (json, csv, text),
    ``cache`` (path).
    """
    values: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ParameterError(f"line {lineno}: expected 'key = value'")
        key, val = (s.strip() for s in line.split("=", 1))
        if key not in {"n", "r", "methods", "format", "cache"}:
            raise ParameterError(f"line {lineno}: unknown key {key!r}")
        values[key] = val
    for key in ("n", "r"):
        if key not in values:
            raise ParameterError(f"sweep spec is missing {key!r}")
    spec = SweepSpec(_parse_range(values["n"], "n"), _parse_range(values["r"], "r"))
    if spec.n_range[0] < 1 or spec.r_range[0] < 0:
        raise ParameterError("sweep needs n >= 1 and r >= 0")
    if "methods" in values and values["methods"].strip() != "all":
        methods = [m.strip() for m in values["methods"].split(",") if m.strip()]
        unknown = [m for m in methods if m not in ALL_METHODS]
        if unknown:
            raise ParameterError(f"unknown methods {unknown}")
        spec.methods = methods
    if "format" in values:
        if values["format"] not in ("json", "csv", "text"):
            raise ParameterError(f"unknown format {values['format']!r}")
        spec.format = values["format"]
    spec.cache = values.get("cache")
    return spec


def default_cache_path() -> Path:
    base = os.environ.get(CACHE_ENV)
    if base:
        return Path(base) / CACHE_FILENAME
    return Path.home() / ".cache" / "pfhilbert" / CACHE_FILENAME


class ResultCache:
    """Append-only JSONL store keyed by (n, r, version); later lines win."""

    def __init__(self, path: str | os.PathLike):
        self.path = Path(path)
        self.lock = FileLock(str(self.path) + ".lock")

    def load(self) -> dict[tuple[int, int, str], ResultRecord]:
        out: dict[tuple[int, int, str], ResultRecord] = {}
        if not self.path.exists():
            return out
        with self.path.open() as fh:
            for line in fh:
                # a reader may see a partially written tail line
                if not line.endswith("\n"):
                    break
                line = line.strip()
                if line:
                    rec = ResultRecord.from_json(line)
                    out[rec.key] = rec
        return out

    def append(self, records: Iterable[ResultRecord]) -> None:
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with self.lock:
            with self.path.open("a") as fh:
                for rec in records:
                    fh.write(rec.to_json() + "\n")
                    fh.flush()
