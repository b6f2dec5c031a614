"""Vectorized whole-universe evaluation for exhaustive searches.

Relations on universe n are coded as n*n-bit masks, so the 2^(n*n)
relations are just 0..S-1. For small n this module precomputes S-by-S
lookup tables for composition and chain formation; term evaluation then
works on numpy arrays of masks, which lets an exhaustive search sweep a
whole grid of assignments per numpy operation.

Only usable while the tables fit in memory (n <= 3 gives S = 512).
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterator, Mapping

import numpy as np

from .terms import (
    Chain,
    Complement,
    Compose,
    Conjunction,
    Const,
    Equation,
    Formula,
    Implication,
    Inclusion,
    Intersect,
    Iterate,
    RelSum,
    Term,
    Union,
    Variable,
)

MAX_TABLE_UNIVERSE = 3


class UniverseTables:
    def __init__(self, n: int):
        if n > MAX_TABLE_UNIVERSE:
            raise ValueError(f"lookup tables are limited to n <= {MAX_TABLE_UNIVERSE}")
        self.n = n
        S = 1 << n * n
        self.count = S
        self.full = S - 1
        self.diag = sum(1 << i * n + i for i in range(n))
        self.antidiag = self.full ^ self.diag

        masks = np.arange(S, dtype=np.int64)
        A = masks[:, None]
        B = masks[None, :]
        rowmask = (1 << n) - 1
        comp = np.zeros((S, S), dtype=np.int64)
        for i in range(n):
            for k in range(n):
                has = (A >> (i * n + k)) & 1
                comp |= has * (((B >> (k * n)) & rowmask) << (i * n))
        self.compose = comp

        # iterated image: stage 1 is a;b, each further stage adds a;stage
        it = comp.copy()
        a_idx = masks[:, None]
        for _ in range(n - 1):
            it = it | comp[a_idx, it]
        self.iterate = it
        self.chain = B | it


@lru_cache(maxsize=None)
def tables(n: int) -> UniverseTables:
    return UniverseTables(n)


MaskEnv = Mapping[str, "int | np.ndarray"]


def eval_term(t: Term, env: MaskEnv, tb: UniverseTables):
    if isinstance(t, Variable):
        return env[t.name]
    if isinstance(t, Const):
        return {"zero": 0, "one": tb.full, "diag": tb.diag, "antidiag": tb.antidiag}[t.kind]
    if isinstance(t, Complement):
        return tb.full ^ eval_term(t.arg, env, tb)
    if isinstance(t, Union):
        out = eval_term(t.args[0], env, tb)
        for a in t.args[1:]:
            out = out | eval_term(a, env, tb)
        return out
    if isinstance(t, Intersect):
        out = eval_term(t.args[0], env, tb)
        for a in t.args[1:]:
            out = out & eval_term(a, env, tb)
        return out
    if isinstance(t, Compose):
        return tb.compose[eval_term(t.left, env, tb), eval_term(t.right, env, tb)]
    if isinstance(t, RelSum):
        l = eval_term(t.left, env, tb)
        r = eval_term(t.right, env, tb)
        return tb.full ^ tb.compose[tb.full ^ l, tb.full ^ r]
    if isinstance(t, Chain):
        return tb.chain[env[t.base], eval_term(t.arg, env, tb)]
    if isinstance(t, Iterate):
        return tb.iterate[env[t.base], eval_term(t.arg, env, tb)]
    raise TypeError(f"not a term: {t!r}")


def eval_formula(f: Formula, env: MaskEnv, tb: UniverseTables):
    """Truth of f at every assignment in the env grid (bool array)."""
    if isinstance(f, Inclusion):
        return (eval_term(f.lhs, env, tb) & (tb.full ^ eval_term(f.rhs, env, tb))) == 0
    if isinstance(f, Equation):
        return eval_term(f.lhs, env, tb) == eval_term(f.rhs, env, tb)
    if isinstance(f, Implication):
        return ~eval_formula(f.antecedent, env, tb) | eval_formula(f.consequent, env, tb)
    if isinstance(f, Conjunction):
        out = eval_formula(f.args[0], env, tb)
        for a in f.args[1:]:
            out = out & eval_formula(a, env, tb)
        return out
    raise TypeError(f"not a formula: {f!r}")


def _assignments(variables: list[str], n: int) -> Iterator[tuple[MaskEnv, "np.ndarray"]]:
    """Yield (env, hit-shape) batches covering all assignments in canonical
    order: variables alphabetically outermost-first, masks ascending.

    The last up-to-two variables are swept as a grid per batch; a hit at
    grid index (i, j) or (i,) is canonically first within its batch in
    row-major order."""
    tb = tables(n)
    S = tb.count
    if not variables:
        yield {}, np.zeros((), dtype=bool)
        return
    if len(variables) == 1:
        yield {variables[0]: np.arange(S)}, np.zeros(S, dtype=bool)
        return
    outer, g1, g2 = variables[:-2], variables[-2], variables[-1]
    grid1 = np.arange(S)[:, None]
    grid2 = np.arange(S)[None, :]
    for combo in itertools.product(range(S), repeat=len(outer)):
        env = dict(zip(outer, combo))
        env[g1] = grid1
        env[g2] = grid2
        yield env, np.zeros((S, S), dtype=bool)


def first_hit(
    variables: list[str], n: int, predicate
) -> dict[str, int] | None:
    """First assignment, in canonical order, where predicate(env) is true.

    ``predicate`` gets a mask environment (scalars and grids) and must
    return a boolean array broadcastable to the batch shape."""
    tb = tables(n)
    S = tb.count
    for env, shape in _assignments(variables, n):
        hits = np.broadcast_to(np.asarray(predicate(env, tb)), shape.shape)
        if not hits.any():
            continue
        flat = int(np.argmax(hits))
        out: dict[str, int] = {}
        for v in variables:
            val = env[v]
            if isinstance(val, (int, np.integer)):
                out[v] = int(val)
        if hits.ndim == 2:
            i, j = divmod(flat, S)
            out[variables[-2]] = i
            out[variables[-1]] = j
        elif hits.ndim == 1:
            out[variables[-1]] = flat
        return out
    return None


def find_falsifying(formula: Formula, variables: list[str], n: int) -> dict[str, int] | None:
    """First assignment falsifying the formula, or None if it is valid at n."""
    return first_hit(variables, n, lambda env, tb: ~eval_formula(formula, env, tb))
