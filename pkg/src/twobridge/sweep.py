"""Exhaustive enumeration of Conway notations and per-case identity checks."""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .braidkit import ConwayNotation, continued_fraction, normalize_odd, parse_conway
from .errors import TwoBridgeError
from .invariants import check_mirror, report


@dataclass(frozen=True)
class SweepSpec:
    max_sum: int
    max_len: int = 5
    signs: str = "both"  # "positive", "negative" or "both"

    def __post_init__(self):
        if self.max_len < 1:
            raise ValueError("max_len must be at least 1")
        if self.max_sum < 0:
            raise ValueError("max_sum must be nonnegative")
        if self.signs not in ("positive", "negative", "both"):
            raise ValueError(f"unknown sign selection {self.signs!r}")


def compositions(total: int, max_parts: int):
    """Ordered tuples of positive integers summing to ``total`` with at most ``max_parts`` parts."""
    if total == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for first in range(1, total + 1):
        for rest in compositions(total - first, max_parts - 1):
            yield (first,) + rest


def enumerate_notations(spec: SweepSpec, knots_only: bool = True) -> list[ConwayNotation]:
    """All uniform-sign notations in bounds, canonicalized to odd length, deduplicated, sorted."""
    signs = {"positive": (1,), "negative": (-1,), "both": (1, -1)}[spec.signs]
    seen = set()
    for s in range(1, spec.max_sum + 1):
        for comp in compositions(s, spec.max_len):
            for sign in signs:
                c = normalize_odd(ConwayNotation(tuple(sign * b for b in comp)))
                if knots_only and continued_fraction(c).numerator % 2 == 0:
                    continue
                seen.add(c.entries)
    return [ConwayNotation(e) for e in sorted(seen, key=lambda e: (len(e), e))]


@dataclass
class CaseResult:
    conway: ConwayNotation
    ok: bool
    detail: str = ""


def check_case(c: ConwayNotation) -> CaseResult:
    """Run every report identity plus the mirrored-braid comparison for one notation."""
    try:
        report(c)
        check_mirror(c)
    except TwoBridgeError as exc:
        return CaseResult(c, False, f"{type(exc).__name__}: {exc}")
    return CaseResult(c, True)


@dataclass
class SweepSummary:
    cases: int
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def line(self) -> str:
        return f"{self.cases} cases, {len(self.failures)} failures"


def run_sweep(spec: SweepSpec, workers: int = 1) -> SweepSummary:
    cases = enumerate_notations(spec)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(check_case, cases))
    else:
        results = [check_case(c) for c in cases]
    return SweepSummary(len(results), [r for r in results if not r.ok])


# -- catalog -------------------------------------------------------------------------


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    conway: ConwayNotation | None  # None is the unknot
    expected: dict = field(default_factory=dict)


def load_catalog(path: str | Path | None = None) -> list[CatalogEntry]:
    if path is None:
        text = resources.files("twobridge").joinpath("data/catalog.json").read_text()
    else:
        text = Path(path).read_text()
    entries = []
    for raw in json.loads(text):
        conway = parse_conway(raw["conway"]) if raw["conway"].strip() else None
        entries.append(CatalogEntry(raw["name"], conway, dict(raw.get("expected", {}))))
    return entries


def check_catalog_entry(entry: CatalogEntry) -> list[str]:
    """Names of expected fields that disagree with the computed report."""
    if entry.conway is None:
        got = check_mirror(None)
        computed = {"sigma": got.sigma[0], "det": got.det[0]}
    else:
        computed = report(entry.conway).to_json()
    return [k for k, v in entry.expected.items() if computed.get(k) != v]
