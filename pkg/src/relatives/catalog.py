"""The shipped theorem catalog and the batch run over it."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from . import chains
from .errors import RelativesError
from .relation import enumerate_relations
from .parser import parse_formula
from .semantics import evaluate_formula
from .terms import Formula
from .verifier import (
    CheckConfig,
    Claim,
    CounterExample,
    Valid,
    Verdict,
    check_exhaustive,
    check_up_to,
    exhaustive_sizes,
)

EXPECTED_VALUES = ("valid", "invalid", "definition")


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    formula_text: str
    expected: str
    settheory: str
    note: str

    @property
    def formula(self) -> Formula:
        return _parsed(self.formula_text)

    def claim(self) -> Claim:
        return Claim.from_formula(self.formula)


@lru_cache(maxsize=None)
def _parsed(text: str) -> Formula:
    return parse_formula(text)


def _parse_records(text: str) -> list[dict[str, str]]:
    records: list[dict[str, str]] = []
    current: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line.startswith("#"):
            continue
        if not line:
            if current:
                records.append(current)
                current = {}
            continue
        if ":" not in line:
            raise RelativesError(f"catalog line {lineno}: expected 'field: value'")
        key, value = line.split(":", 1)
        current[key.strip()] = value.strip()
    if current:
        records.append(current)
    return records


@lru_cache(maxsize=None)
def load_catalog() -> tuple[CatalogEntry, ...]:
    text = resources.files(__package__).joinpath("data/catalog.txt").read_text("utf-8")
    entries = []
    seen = set()
    for rec in _parse_records(text):
        entry = CatalogEntry(
            id=rec["id"],
            formula_text=rec["formula"],
            expected=rec["expected"],
            settheory=rec.get("settheory", ""),
            note=rec.get("note", ""),
        )
        if entry.expected not in EXPECTED_VALUES:
            raise RelativesError(f"{entry.id}: bad expected verdict {entry.expected!r}")
        if entry.id in seen:
            raise RelativesError(f"duplicate catalog id {entry.id}")
        seen.add(entry.id)
        entry.formula  # must parse
        entries.append(entry)
    return tuple(entries)


def catalog_entry(entry_id: str) -> CatalogEntry:
    for entry in load_catalog():
        if entry.id == entry_id:
            return entry
    raise KeyError(f"no catalog entry named {entry_id!r}")


# -- checking ---------------------------------------------------------------


def _check_definition(entry: CatalogEntry, config: CheckConfig) -> Verdict:
    """Definitions are checked as consistency statements against the
    engine's own predicates rather than as validity claims."""
    claim = entry.claim()
    sizes = exhaustive_sizes(claim, config.max_exhaustive_size)
    if entry.id in ("D36", "D37"):
        # the defined predicate (closedness) must track the formula
        for n in sizes:
            pool = list(enumerate_relations(n))
            for a in pool:
                for b in pool:
                    env = {"a": a, "b": b}
                    if chains.is_closed(a, b) != evaluate_formula(entry.formula, env, n):
                        raise RelativesError(
                            f"{entry.id}: closedness predicate disagrees with its "
                            f"formula at n={n}, a={a!r}, b={b!r}"
                        )
        return Valid(tuple(sizes))
    if entry.id == "D58":
        # chain = generator + iterated images, as an exhaustive equation
        checked = []
        for n in sizes:
            v = check_exhaustive(claim, n)
            if isinstance(v, CounterExample):
                return v
            checked.append(n)
        return Valid(tuple(checked))
    raise RelativesError(f"no consistency check registered for definition {entry.id}")


@dataclass(frozen=True)
class EntryResult:
    entry: CatalogEntry
    verdict: Verdict
    sampled: Verdict | None

    @property
    def matches(self) -> bool:
        expected = self.entry.expected
        found_counterexample = isinstance(self.verdict, CounterExample) or isinstance(
            self.sampled, CounterExample
        )
        if expected == "invalid":
            return found_counterexample
        # valid and definition entries must come back clean
        return not found_counterexample


@dataclass(frozen=True)
class CatalogReport:
    results: tuple[EntryResult, ...]
    config: CheckConfig

    @property
    def all_match(self) -> bool:
        return all(r.matches for r in self.results)


def run_catalog(config: CheckConfig | None = None) -> CatalogReport:
    config = config or CheckConfig()
    results = []
    for entry in load_catalog():
        if entry.expected == "definition":
            verdict: Verdict = _check_definition(entry, config)
            sampled: Verdict | None = None
        else:
            verdict, sampled = check_up_to(entry.claim(), config)
        results.append(EntryResult(entry, verdict, sampled))
    return CatalogReport(tuple(results), config)
