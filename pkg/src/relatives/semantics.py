"""Compositional evaluation of terms and formulas over finite relations."""

from __future__ import annotations

from functools import reduce
from typing import Mapping

from . import chains
from .errors import UniverseMismatchError, UnboundVariableError
from .relation import Relation, antidiagonal, bottom, identity, top
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

_CONSTS = {"zero": bottom, "one": top, "diag": identity, "antidiag": antidiagonal}

Env = Mapping[str, Relation]


def _lookup(name: str, env: Env, n: int) -> Relation:
    try:
        r = env[name]
    except KeyError:
        raise UnboundVariableError(f"variable {name!r} is not bound") from None
    if r.n != n:
        raise UniverseMismatchError(
            f"variable {name!r} is bound on universe {r.n}, expected {n}"
        )
    return r


def evaluate(t: Term, env: Env, n: int) -> Relation:
    if isinstance(t, Variable):
        return _lookup(t.name, env, n)
    if isinstance(t, Const):
        return _CONSTS[t.kind](n)
    if isinstance(t, Complement):
        return evaluate(t.arg, env, n).complement()
    if isinstance(t, Union):
        return reduce(Relation.union, (evaluate(a, env, n) for a in t.args))
    if isinstance(t, Intersect):
        return reduce(Relation.intersect, (evaluate(a, env, n) for a in t.args))
    if isinstance(t, Compose):
        return evaluate(t.left, env, n).compose(evaluate(t.right, env, n))
    if isinstance(t, RelSum):
        return evaluate(t.left, env, n).relative_sum(evaluate(t.right, env, n))
    if isinstance(t, Chain):
        return chains.chain(_lookup(t.base, env, n), evaluate(t.arg, env, n))
    if isinstance(t, Iterate):
        return chains.iterate_chain(_lookup(t.base, env, n), evaluate(t.arg, env, n))
    raise TypeError(f"not a term: {t!r}")


def evaluate_formula(f: Formula, env: Env, n: int) -> bool:
    if isinstance(f, Inclusion):
        return evaluate(f.lhs, env, n).includes(evaluate(f.rhs, env, n))
    if isinstance(f, Equation):
        return evaluate(f.lhs, env, n).equals(evaluate(f.rhs, env, n))
    if isinstance(f, Implication):
        return not evaluate_formula(f.antecedent, env, n) or evaluate_formula(
            f.consequent, env, n
        )
    if isinstance(f, Conjunction):
        return all(evaluate_formula(a, env, n) for a in f.args)
    raise TypeError(f"not a formula: {f!r}")
