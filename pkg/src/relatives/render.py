"""Renderers: ASCII notation, Unicode notation, and set-theoretic prose.

The ASCII renderer is the round-trip target: ``parse(render(x))`` gives
back an equal AST. Unicode substitutes nicer glyphs and is not meant to
be re-parsed. The set-theory style looks the formula up among the
catalog's translation templates and falls back to structural prose.
"""

from __future__ import annotations

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
    is_formula,
    is_term,
)

STYLES = ("ascii", "unicode", "settheory")

# precedence levels, loosest to tightest
_UNION, _RELOP, _INTERSECT, _ATOM = 0, 1, 2, 3

_GLYPHS = {
    "ascii": {"le": "<=", "eq": "=", "arrow": "->", "and": "&", "not": "~",
              "dot": "", "sub0": "_0", "sub00": "_00", "relsum": "+'"},
    "unicode": {"le": "⊆", "eq": "=", "arrow": "→", "and": "∧",
                "not": "¬", "dot": "·", "sub0": "₀",
                "sub00": "₀₀", "relsum": "·'"},
}

_CONST_TEXT = {"zero": "0", "one": "1", "diag": "1'", "antidiag": "0'"}


def _term(t: Term, g: dict, ctx: int) -> str:
    s, level = _raw_term(t, g)
    if level < ctx:
        return f"({s})"
    return s


def _raw_term(t: Term, g: dict) -> tuple[str, int]:
    if isinstance(t, Variable):
        return t.name, _ATOM
    if isinstance(t, Const):
        return _CONST_TEXT[t.kind], _ATOM
    if isinstance(t, Complement):
        return g["not"] + _term(t.arg, g, _ATOM), _ATOM
    if isinstance(t, Compose):
        # ';' is left-associative, so a same-class left operand stays bare
        left = _raw_term(t.left, g)[0] if isinstance(t.left, Compose) else _term(t.left, g, _INTERSECT)
        return left + ";" + _term(t.right, g, _INTERSECT), _RELOP
    if isinstance(t, RelSum):
        left = _raw_term(t.left, g)[0] if isinstance(t.left, RelSum) else _term(t.left, g, _INTERSECT)
        return left + g["relsum"] + _term(t.right, g, _INTERSECT), _RELOP
    if isinstance(t, Chain):
        return t.base + g["sub0"] + ";" + _term(t.arg, g, _INTERSECT), _RELOP
    if isinstance(t, Iterate):
        return t.base + g["sub00"] + ";" + _term(t.arg, g, _INTERSECT), _RELOP
    if isinstance(t, Intersect):
        # factors are juxtaposed, so anything non-atomic gets parens
        return g["dot"].join(_term(a, g, _ATOM) for a in t.args), _INTERSECT
    if isinstance(t, Union):
        return " + ".join(_term(a, g, _RELOP) for a in t.args), _UNION
    raise TypeError(f"not a term: {t!r}")


def _formula(f: Formula, g: dict) -> str:
    if isinstance(f, Inclusion):
        return f"{_term(f.lhs, g, _UNION)} {g['le']} {_term(f.rhs, g, _UNION)}"
    if isinstance(f, Equation):
        return f"{_term(f.lhs, g, _UNION)} {g['eq']} {_term(f.rhs, g, _UNION)}"
    if isinstance(f, Conjunction):
        parts = []
        for a in f.args:
            s = _formula(a, g)
            if isinstance(a, Implication):
                s = "{" + s + "}"
            parts.append(s)
        return f" {g['and']} ".join(parts)
    if isinstance(f, Implication):
        ante = _formula(f.antecedent, g)
        if isinstance(f.antecedent, Implication):
            ante = "{" + ante + "}"
        return f"{ante} {g['arrow']} {_formula(f.consequent, g)}"
    raise TypeError(f"not a formula: {f!r}")


# -- set-theoretic prose -----------------------------------------------------


def _system_name(letter: str) -> str:
    # the map variable keeps a function-like name; the rest become systems
    if letter == "a":
        return "phi"
    return chr(ord("A") + ord(letter) - ord("b"))


def _prose_term(t: Term) -> str:
    if isinstance(t, Variable):
        return _system_name(t.name)
    if isinstance(t, Const):
        return {
            "zero": "the empty system",
            "one": "the universe",
            "diag": "the identity",
            "antidiag": "the diversity relation",
        }[t.kind]
    if isinstance(t, Complement):
        return f"the complement of {_prose_term(t.arg)}"
    if isinstance(t, Compose):
        return f"the image of {_prose_term(t.right)} under {_prose_term(t.left)}"
    if isinstance(t, RelSum):
        return f"the relative sum of {_prose_term(t.left)} and {_prose_term(t.right)}"
    if isinstance(t, Chain):
        return f"the {_system_name(t.base)}-chain of {_prose_term(t.arg)}"
    if isinstance(t, Iterate):
        return f"the iterated {_system_name(t.base)}-images of {_prose_term(t.arg)}"
    if isinstance(t, Union):
        return "the union of " + _join_list([_prose_term(a) for a in t.args])
    if isinstance(t, Intersect):
        return "the common part of " + _join_list([_prose_term(a) for a in t.args])
    raise TypeError(f"not a term: {t!r}")


def _join_list(parts: list[str]) -> str:
    return ", ".join(parts[:-1]) + " and " + parts[-1]


def _prose_formula(f: Formula) -> str:
    if isinstance(f, Inclusion):
        return f"{_prose_term(f.lhs)} is part of {_prose_term(f.rhs)}"
    if isinstance(f, Equation):
        return f"{_prose_term(f.lhs)} equals {_prose_term(f.rhs)}"
    if isinstance(f, Conjunction):
        return _join_list([_prose_formula(a) for a in f.args])
    if isinstance(f, Implication):
        return f"if {_prose_formula(f.antecedent)}, then {_prose_formula(f.consequent)}"
    raise TypeError(f"not a formula: {f!r}")


def _settheory(x: Term | Formula) -> str:
    from .catalog import load_catalog  # deferred: catalog imports the parser

    if is_formula(x):
        for entry in load_catalog():
            if entry.formula == x:
                return entry.settheory
        s = _prose_formula(x)
    else:
        s = _prose_term(x)
    return s[0].upper() + s[1:] + "."


def render(x: Term | Formula, style: str = "ascii") -> str:
    if style == "settheory":
        return _settheory(x)
    if style not in _GLYPHS:
        raise ValueError(f"unknown render style {style!r}; choose one of {STYLES}")
    g = _GLYPHS[style]
    if is_formula(x):
        return _formula(x, g)
    if is_term(x):
        return _term(x, g, _UNION)
    raise TypeError(f"not a term or formula: {x!r}")


__all__ = ["render", "STYLES"]
