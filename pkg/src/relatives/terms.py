"""Abstract syntax for terms and formulas of the relative calculus."""

from __future__ import annotations

import string
from dataclasses import dataclass


def _check_letter(name: str, what: str) -> None:
    if len(name) != 1 or name not in string.ascii_lowercase:
        raise ValueError(f"{what} must be a single lowercase letter, got {name!r}")


# -- terms -------------------------------------------------------------------


@dataclass(frozen=True)
class Variable:
    name: str

    def __post_init__(self) -> None:
        _check_letter(self.name, "variable")


@dataclass(frozen=True)
class Const:
    kind: str  # "zero" | "one" | "diag" | "antidiag"

    _KINDS = ("zero", "one", "diag", "antidiag")

    def __post_init__(self) -> None:
        if self.kind not in self._KINDS:
            raise ValueError(f"unknown constant kind {self.kind!r}")


@dataclass(frozen=True)
class Complement:
    arg: "Term"


@dataclass(frozen=True)
class Union:
    args: tuple["Term", ...]

    def __post_init__(self) -> None:
        if len(self.args) < 2:
            raise ValueError("union needs at least two arguments")


@dataclass(frozen=True)
class Intersect:
    args: tuple["Term", ...]

    def __post_init__(self) -> None:
        if len(self.args) < 2:
            raise ValueError("intersection needs at least two arguments")


@dataclass(frozen=True)
class Compose:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class RelSum:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class Chain:
    """The full chain of ``arg`` under the map named ``base``: the
    generator together with all of its iterated images."""

    base: str
    arg: "Term"

    def __post_init__(self) -> None:
        _check_letter(self.base, "chain base")


@dataclass(frozen=True)
class Iterate:
    """The proper iterate part of a chain: the union of all k-fold images
    of ``arg`` under the map named ``base``, k >= 1."""

    base: str
    arg: "Term"

    def __post_init__(self) -> None:
        _check_letter(self.base, "iterate base")


Term = Variable | Const | Complement | Union | Intersect | Compose | RelSum | Chain | Iterate


# -- formulas ----------------------------------------------------------------


@dataclass(frozen=True)
class Inclusion:
    lhs: Term
    rhs: Term


@dataclass(frozen=True)
class Equation:
    lhs: Term
    rhs: Term


@dataclass(frozen=True)
class Implication:
    antecedent: "Formula"
    consequent: "Formula"


@dataclass(frozen=True)
class Conjunction:
    args: tuple["Formula", ...]

    def __post_init__(self) -> None:
        if len(self.args) < 2:
            raise ValueError("conjunction needs at least two arguments")


Formula = Inclusion | Equation | Implication | Conjunction


def free_variables(x: Term | Formula) -> set[str]:
    """The set of variable letters occurring in a term or formula."""
    if isinstance(x, Variable):
        return {x.name}
    if isinstance(x, Const):
        return set()
    if isinstance(x, Complement):
        return free_variables(x.arg)
    if isinstance(x, (Union, Intersect, Conjunction)):
        out: set[str] = set()
        for a in x.args:
            out |= free_variables(a)
        return out
    if isinstance(x, (Compose, RelSum)):
        return free_variables(x.left) | free_variables(x.right)
    if isinstance(x, (Chain, Iterate)):
        return {x.base} | free_variables(x.arg)
    if isinstance(x, (Inclusion, Equation)):
        return free_variables(x.lhs) | free_variables(x.rhs)
    if isinstance(x, Implication):
        return free_variables(x.antecedent) | free_variables(x.consequent)
    raise TypeError(f"not a term or formula: {x!r}")


def is_formula(x: object) -> bool:
    return isinstance(x, (Inclusion, Equation, Implication, Conjunction))


def is_term(x: object) -> bool:
    return isinstance(
        x, (Variable, Const, Complement, Union, Intersect, Compose, RelSum, Chain, Iterate)
    )
