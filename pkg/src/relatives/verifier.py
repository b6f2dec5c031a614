"""Brute-force validity checking over all (or sampled) relation assignments."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from . import bitops
from .errors import RelativesError
from .relation import Relation, enumerate_relations
from .semantics import evaluate, evaluate_formula
from .terms import Formula, Term, free_variables
from .parser import parse_formula

#: assignment spaces beyond 2^27 (~1.3e8) are never swept exhaustively
EXHAUSTIVE_BIT_BUDGET = 27


@dataclass(frozen=True)
class Claim:
    """A formula whose free variables are implicitly universally quantified."""

    formula: Formula
    free_vars: tuple[str, ...]

    def __post_init__(self) -> None:
        if self.free_vars != tuple(sorted(free_variables(self.formula))):
            raise ValueError("free_vars must list the formula's variables alphabetically")

    @classmethod
    def from_formula(cls, formula: Formula) -> "Claim":
        return cls(formula, tuple(sorted(free_variables(formula))))

    @classmethod
    def parse(cls, text: str) -> "Claim":
        return cls.from_formula(parse_formula(text))


# -- verdicts ----------------------------------------------------------------


@dataclass(frozen=True)
class Valid:
    sizes: tuple[int, ...]


@dataclass(frozen=True)
class CounterExample:
    n: int
    assignment: dict[str, Relation]
    formula: Formula

    def __post_init__(self) -> None:
        # a claimed counterexample must actually falsify the formula
        if evaluate_formula(self.formula, self.assignment, self.n):
            raise RelativesError("alleged counterexample does not falsify the formula")


@dataclass(frozen=True)
class SampledClean:
    sizes: tuple[int, ...]
    counts: tuple[int, ...]
    seed: int


Verdict = Valid | CounterExample | SampledClean


@dataclass(frozen=True)
class CheckConfig:
    max_exhaustive_size: int = 2
    sample_sizes: tuple[tuple[int, int], ...] = ()
    seed: int = 0
    deterministic: bool = True

    def __post_init__(self) -> None:
        if self.max_exhaustive_size < 1:
            raise ValueError("max_exhaustive_size must be >= 1")
        if any(count < 0 for _, count in self.sample_sizes):
            raise ValueError("sample counts must be >= 0")


# -- exhaustive checking -----------------------------------------------------


def _stream_falsifying(formula: Formula, variables: tuple[str, ...], n: int):
    pool = list(enumerate_relations(n))
    for combo in itertools.product(pool, repeat=len(variables)):
        env = dict(zip(variables, combo))
        if not evaluate_formula(formula, env, n):
            return env
    return None


def check_exhaustive(claim: Claim, n: int, engine: str = "auto") -> Verdict:
    """Check the claim over every assignment at universe size n.

    Returns the canonically first counterexample, else Valid. The
    table-driven engine is used when the universe is small enough;
    ``engine`` can force either path ("vector" / "stream")."""
    use_vector = engine == "vector" or (engine == "auto" and n <= bitops.MAX_TABLE_UNIVERSE)
    if engine not in ("auto", "vector", "stream"):
        raise ValueError(f"unknown engine {engine!r}")
    if use_vector:
        masks = bitops.find_falsifying(claim.formula, list(claim.free_vars), n)
        if masks is None:
            return Valid((n,))
        env = {v: Relation(n, m) for v, m in masks.items()}
        return CounterExample(n, env, claim.formula)
    env = _stream_falsifying(claim.formula, claim.free_vars, n)
    if env is None:
        return Valid((n,))
    return CounterExample(n, env, claim.formula)


def check_sampled(claim: Claim, n: int, count: int, seed: int) -> Verdict:
    """Check the claim on ``count`` pseudorandom assignments (each pair
    present with probability 1/2). Same seed, same draws."""
    if count < 1:
        raise ValueError("sample count must be >= 1")
    rng = random.Random(seed)
    bits = n * n
    for _ in range(count):
        env = {v: Relation(n, rng.getrandbits(bits)) for v in claim.free_vars}
        if not evaluate_formula(claim.formula, env, n):
            return CounterExample(n, env, claim.formula)
    return SampledClean((n,), (count,), seed)


def exhaustive_sizes(claim: Claim, max_size: int) -> list[int]:
    """Universe sizes up to max_size whose assignment space fits the budget."""
    k = max(len(claim.free_vars), 1)
    return [n for n in range(1, max_size + 1) if k * n * n <= EXHAUSTIVE_BIT_BUDGET]


def check_up_to(claim: Claim, config: CheckConfig) -> tuple[Verdict, Verdict | None]:
    """Exhaustive sweep at every in-budget size, then optional sampling.

    Returns (primary verdict, sampled verdict or None); the sampled part
    is skipped once a counterexample is in hand."""
    sizes: list[int] = []
    for n in exhaustive_sizes(claim, config.max_exhaustive_size):
        verdict = check_exhaustive(claim, n)
        if isinstance(verdict, CounterExample):
            return verdict, None
        sizes.append(n)
    primary: Verdict = Valid(tuple(sizes)) if sizes else SampledClean((), (), config.seed)
    sampled: Verdict | None = None
    s_sizes: list[int] = []
    s_counts: list[int] = []
    for n, count in config.sample_sizes:
        if count == 0:
            continue
        verdict = check_sampled(claim, n, count, config.seed)
        if isinstance(verdict, CounterExample):
            return primary, verdict
        s_sizes.append(n)
        s_counts.append(count)
    if s_sizes:
        sampled = SampledClean(tuple(s_sizes), tuple(s_counts), config.seed)
    return primary, sampled


# -- strictness witnesses ----------------------------------------------------


def find_strictness_witness(lhs: Term, rhs: Term, n: int) -> dict[str, Relation] | None:
    """First canonical assignment where lhs evaluates strictly below rhs."""
    variables = sorted(free_variables(lhs) | free_variables(rhs))
    if n <= bitops.MAX_TABLE_UNIVERSE:
        def proper(env, tb):
            l = bitops.eval_term(lhs, env, tb)
            r = bitops.eval_term(rhs, env, tb)
            return ((l & (tb.full ^ r)) == 0) & (l != r)

        masks = bitops.first_hit(variables, n, proper)
        if masks is None:
            return None
        return {v: Relation(n, m) for v, m in masks.items()}
    pool = list(enumerate_relations(n))
    for combo in itertools.product(pool, repeat=len(variables)):
        env = dict(zip(variables, combo))
        l = evaluate(lhs, env, n)
        r = evaluate(rhs, env, n)
        if l.includes(r) and not l.equals(r):
            return env
    return None
