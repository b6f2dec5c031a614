"""Workbench for the calculus of binary relatives.

Finite relation algebra, a parser and multi-style renderer for the
relative notation, a brute-force theorem verifier with a shipped
catalog, chain machinery, and a small proof kernel that replays the
chain-induction derivation.
"""

from .chains import ChainTrace, chain, chain_trace, is_closed, is_transitive, iterate_chain
from .catalog import CatalogEntry, catalog_entry, load_catalog, run_catalog
from .errors import (
    ParseError,
    ProofScriptError,
    RelationFileError,
    RelativesError,
    UnboundVariableError,
    UniverseMismatchError,
)
from .relation import (
    Relation,
    antidiagonal,
    bottom,
    enumerate_relations,
    identity,
    top,
)
from .render import render
from .parser import parse_formula, parse_term
from .proofs import (
    ProofScript,
    ProofStep,
    Rule,
    audit_script,
    bundled_induction_script,
    check_script,
    load_script,
    parse_script,
)
from .relfile import RelationFile, format_assignment, load_relation_file, parse_relation_file
from .semantics import evaluate, evaluate_formula
from .verifier import (
    CheckConfig,
    Claim,
    CounterExample,
    SampledClean,
    Valid,
    check_exhaustive,
    check_sampled,
    check_up_to,
    find_strictness_witness,
)

__version__ = "0.1.0"
