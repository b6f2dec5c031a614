"""Chain machinery: iterated images, chains, closedness, transitivity.

All of it is least-fixpoint computation on a finite universe, where the
iteration stabilizes after at most n steps (any longer image path can be
shortened past a repeated element).
"""

from __future__ import annotations

from dataclasses import dataclass

from .relation import Relation


@dataclass(frozen=True)
class ChainTrace:
    """The successive stages of the iterated image, up to stabilization.

    Stage k is the union of the 1-fold through k-fold images of the
    generator; ``stabilized_at`` is the index of the last stage that
    still changed (stages are 1-based)."""

    stages: tuple[Relation, ...]
    stabilized_at: int


def chain_trace(a: Relation, b: Relation) -> ChainTrace:
    a._same_universe(b)
    n = a.n
    stages = [a.compose(b)]
    while len(stages) <= n:
        last = stages[-1]
        nxt = last.union(a.compose(last))
        if nxt == last:
            return ChainTrace(tuple(stages), len(stages))
        stages.append(nxt)
    raise AssertionError("iterated image failed to stabilize within the universe bound")


def iterate_chain(a: Relation, b: Relation) -> Relation:
    """The union of all k-fold images a;...;a;b, k >= 1."""
    return chain_trace(a, b).stages[-1]


def chain(a: Relation, b: Relation) -> Relation:
    """The least relation containing b and closed under composition with a."""
    return b.union(iterate_chain(a, b))


def is_closed(a: Relation, b: Relation) -> bool:
    """True iff b is closed under a, i.e. a;b is included in b."""
    return a.compose(b).includes(b)


def is_transitive(a: Relation) -> bool:
    """True iff a;a is included in a."""
    return a.compose(a).includes(a)
