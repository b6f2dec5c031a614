"""The relation file format used by the command-line tools.

    # comment
    universe 3
    rel a
    1 0
    2 1
    end
    rel b
    0 0
    end
"""

from __future__ import annotations

import string
from dataclasses import dataclass

from .errors import RelationFileError
from .relation import Relation


@dataclass(frozen=True)
class RelationFile:
    n: int
    relations: dict[str, Relation]


def parse_relation_file(text: str) -> RelationFile:
    n: int | None = None
    relations: dict[str, Relation] = {}
    current_name: str | None = None
    current_pairs: list[tuple[int, int]] = []

    def fail(lineno: int, message: str) -> RelationFileError:
        return RelationFileError(f"line {lineno}: {message}")

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if fields[0] == "universe":
            if n is not None:
                raise fail(lineno, "duplicate universe declaration")
            if current_name is not None:
                raise fail(lineno, "universe must come before relation blocks")
            try:
                n = int(fields[1])
            except (IndexError, ValueError):
                raise fail(lineno, "expected 'universe <n>'") from None
            if n < 1:
                raise fail(lineno, "universe size must be >= 1")
        elif fields[0] == "rel":
            if n is None:
                raise fail(lineno, "universe must be declared first")
            if current_name is not None:
                raise fail(lineno, f"relation {current_name!r} is missing its 'end'")
            if len(fields) != 2 or len(fields[1]) != 1 or fields[1] not in string.ascii_lowercase:
                raise fail(lineno, "expected 'rel <single lowercase letter>'")
            if fields[1] in relations:
                raise fail(lineno, f"duplicate relation name {fields[1]!r}")
            current_name = fields[1]
            current_pairs = []
        elif fields[0] == "end":
            if current_name is None:
                raise fail(lineno, "'end' outside a relation block")
            relations[current_name] = Relation.from_pairs(n, current_pairs)
            current_name = None
        else:
            if current_name is None:
                raise fail(lineno, f"unexpected line {line!r}")
            try:
                i, j = (int(f) for f in fields)
            except ValueError:
                raise fail(lineno, "expected a pair '<i> <j>'") from None
            if not (0 <= i < n and 0 <= j < n):
                raise fail(lineno, f"pair ({i}, {j}) outside universe of size {n}")
            current_pairs.append((i, j))
    if current_name is not None:
        raise RelationFileError(f"relation {current_name!r} is missing its 'end'")
    if n is None:
        raise RelationFileError("no universe declaration")
    return RelationFile(n, relations)


def load_relation_file(path) -> RelationFile:
    with open(path, encoding="utf-8") as fh:
        return parse_relation_file(fh.read())


def format_assignment(assignment: dict[str, Relation], n: int) -> str:
    """Render an assignment in relation-file syntax, reusable as input."""
    lines = [f"universe {n}"]
    for name in sorted(assignment):
        lines.append(f"rel {name}")
        lines.extend(f"{i} {j}" for i, j in assignment[name].sorted_pairs())
        lines.append("end")
    return "\n".join(lines)
