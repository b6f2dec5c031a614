"""A minimal proof kernel for inclusion reasoning, plus semantic auditing.

Scripts are line oriented::

    hyp <formula>           # plain hypothesis, referenced as h1, h2, ...
    schema <formula>        # step-schema license, referenced as s1, s2, ...
    step <rule> [<refs>] <formula>
    goal <formula>

Rules: ``hypothesis``, ``mono``, ``trans``, ``union``, ``schema``,
``iterate``, ``unfold``. A ``schema`` declaration must have the shape of
the induction antecedent, a;(a_0;b)c + b <= c; it licenses the step rule
taking a^k;b <= c to a^(k+1);b <= c and the iterate-introduction rule.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from importlib import resources

from .errors import ProofScriptError
from .parser import parse_formula
from .render import render
from .terms import (
    Chain,
    Complement,
    Compose,
    Conjunction,
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
from .verifier import Claim, CounterExample, check_exhaustive


class Rule(Enum):
    HYPOTHESIS = "hypothesis"
    MONO = "mono"
    TRANS = "trans"
    UNION_BOUND = "union"
    SCHEMA_STEP = "schema"
    ITERATE_INTRO = "iterate"
    UNFOLD_CHAIN = "unfold"


@dataclass(frozen=True)
class ProofStep:
    index: int
    rule: Rule
    premises: tuple[str, ...]
    conclusion: Formula


@dataclass(frozen=True)
class ProofScript:
    hypotheses: tuple[Formula, ...]
    schema_hypotheses: tuple[Formula, ...]
    steps: tuple[ProofStep, ...]
    goal: Formula

    def resolve(self, label: str, before: int) -> Formula:
        """Formula named by a premise label, visible to step ``before``."""
        if label.startswith("h"):
            idx = _label_index(label[1:], label)
            if idx > len(self.hypotheses):
                raise ProofScriptError(f"no hypothesis {label}")
            return self.hypotheses[idx - 1]
        if label.startswith("s"):
            idx = _label_index(label[1:], label)
            if idx > len(self.schema_hypotheses):
                raise ProofScriptError(f"no schema hypothesis {label}")
            return self.schema_hypotheses[idx - 1]
        idx = _label_index(label, label)
        if not 1 <= idx < before:
            raise ProofScriptError(f"step {before} cites {label}, which is not an earlier step")
        return self.steps[idx - 1].conclusion


def _label_index(digits: str, label: str) -> int:
    if not digits.isdigit():
        raise ProofScriptError(f"bad premise label {label!r}")
    return int(digits)


# -- schema shape ------------------------------------------------------------


def _schema_parts(f: Formula) -> tuple[str, Term, Term] | None:
    """Decompose an induction-antecedent schema a;(a_0;b)c + b <= c into
    (map letter, generator term, bound term); None if the shape differs."""
    if not isinstance(f, Inclusion):
        return None
    lhs, c = f.lhs, f.rhs
    if not (isinstance(lhs, Union) and len(lhs.args) == 2):
        return None
    image, b = lhs.args
    if not (isinstance(image, Compose) and isinstance(image.left, Variable)):
        return None
    g = image.left.name
    if image.right != Intersect((Chain(g, b), c)):
        return None
    return g, b, c


def _tower_depth(t: Term, g: str, b: Term) -> int | None:
    """Depth k such that t is the k-fold image of b under g, else None."""
    depth = 0
    while t != b:
        if isinstance(t, Compose) and t.left == Variable(g):
            t = t.right
            depth += 1
        else:
            return None
    return depth


def _tower(g: str, b: Term, k: int) -> Term:
    t = b
    for _ in range(k):
        t = Compose(Variable(g), t)
    return t


def _find_schema(script: ProofScript, c: Term):
    for sf in script.schema_hypotheses:
        parts = _schema_parts(sf)
        if parts is not None and parts[2] == c:
            return parts
    return None


# -- syntactic checking ------------------------------------------------------


@dataclass(frozen=True)
class StepResult:
    index: int
    ok: bool
    message: str


@dataclass(frozen=True)
class ScriptResult:
    steps: tuple[StepResult, ...]
    goal_reached: bool

    @property
    def passed(self) -> bool:
        return self.goal_reached and all(s.ok for s in self.steps)


def _incl(f: Formula, what: str) -> Inclusion:
    if not isinstance(f, Inclusion):
        raise ProofScriptError(f"{what} must be an inclusion, got {render(f)!r}")
    return f


def _check_step(script: ProofScript, step: ProofStep) -> None:
    prems = [script.resolve(label, step.index) for label in step.premises]
    c = step.conclusion
    rule = step.rule

    if rule is Rule.HYPOTHESIS:
        if c not in script.hypotheses:
            raise ProofScriptError("conclusion is not among the hypotheses")
        if prems and prems != [c]:
            raise ProofScriptError("a hypothesis step may cite only the hypothesis itself")
        return

    if rule is Rule.MONO:
        if len(prems) != 1:
            raise ProofScriptError("mono takes one premise")
        p = _incl(prems[0], "mono premise")
        cc = _incl(c, "mono conclusion")
        if not (
            isinstance(cc.lhs, Compose)
            and isinstance(cc.rhs, Compose)
            and cc.lhs.left == cc.rhs.left
            and cc.lhs.right == p.lhs
            and cc.rhs.right == p.rhs
        ):
            raise ProofScriptError("conclusion is not the premise composed on the left")
        return

    if rule is Rule.TRANS:
        if len(prems) != 2:
            raise ProofScriptError("trans takes two premises")
        p1 = _incl(prems[0], "trans premise")
        p2 = _incl(prems[1], "trans premise")
        if p1.rhs != p2.lhs:
            raise ProofScriptError("premises do not chain")
        if c != Inclusion(p1.lhs, p2.rhs):
            raise ProofScriptError("conclusion does not match the chained inclusion")
        return

    if rule is Rule.UNION_BOUND:
        if len(prems) != 2:
            raise ProofScriptError("union takes two premises")
        p1 = _incl(prems[0], "union premise")
        p2 = _incl(prems[1], "union premise")
        if p1.rhs != p2.rhs:
            raise ProofScriptError("premises bound different right-hand sides")
        if c != Inclusion(Union((p1.lhs, p2.lhs)), p1.rhs):
            raise ProofScriptError("conclusion is not the union of the premises' left sides")
        return

    if rule is Rule.SCHEMA_STEP:
        if len(prems) != 1:
            raise ProofScriptError("schema step takes one premise")
        p = _incl(prems[0], "schema premise")
        cc = _incl(c, "schema conclusion")
        parts = _find_schema(script, p.rhs)
        if parts is None:
            raise ProofScriptError("no declared schema hypothesis matches the bound")
        g, b, _ = parts
        if _tower_depth(p.lhs, g, b) is None:
            raise ProofScriptError("premise left side is not an iterated image of the generator")
        if cc != Inclusion(Compose(Variable(g), p.lhs), p.rhs):
            raise ProofScriptError("conclusion is not one more application of the map")
        return

    if rule is Rule.ITERATE_INTRO:
        if not prems:
            raise ProofScriptError("iterate-introduction needs at least one premise")
        cc = _incl(c, "iterate conclusion")
        if not isinstance(cc.lhs, Iterate):
            raise ProofScriptError("conclusion left side must be an iterated-images term")
        g, b = cc.lhs.base, cc.lhs.arg
        if _find_schema(script, cc.rhs) is None:
            raise ProofScriptError("no declared schema hypothesis matches the bound")
        for k, pf in enumerate(prems, start=1):
            p = _incl(pf, "iterate premise")
            if p.rhs != cc.rhs or p.lhs != _tower(g, b, k):
                raise ProofScriptError(f"premise {k} is not the depth-{k} image bound")
        return

    if rule is Rule.UNFOLD_CHAIN:
        if len(prems) != 1:
            raise ProofScriptError("unfold takes one premise")
        if _expand_chains(prems[0]) != _expand_chains(c):
            raise ProofScriptError("conclusion is not a chain unfolding of the premise")
        return

    raise ProofScriptError(f"unknown rule {rule}")


def _expand_chains(x):
    """Normalize by rewriting every chain into generator + iterated images."""
    if isinstance(x, Chain):
        arg = _expand_chains(x.arg)
        return Union((arg, Iterate(x.base, arg)))
    if isinstance(x, Iterate):
        return Iterate(x.base, _expand_chains(x.arg))
    if isinstance(x, (Union, Intersect, Conjunction)):
        return type(x)(tuple(_expand_chains(a) for a in x.args))
    if isinstance(x, (Compose, RelSum)):
        return type(x)(_expand_chains(x.left), _expand_chains(x.right))
    if isinstance(x, Complement):
        return Complement(_expand_chains(x.arg))
    if isinstance(x, (Inclusion, Equation)):
        return type(x)(_expand_chains(x.lhs), _expand_chains(x.rhs))
    if isinstance(x, Implication):
        return Implication(_expand_chains(x.antecedent), _expand_chains(x.consequent))
    return x


def check_script(script: ProofScript) -> ScriptResult:
    """Verify every step's rule application syntactically."""
    results = []
    for step in script.steps:
        try:
            _check_step(script, step)
            results.append(StepResult(step.index, True, "ok"))
        except ProofScriptError as exc:
            results.append(StepResult(step.index, False, str(exc)))
    goal_reached = bool(script.steps) and script.steps[-1].conclusion == script.goal
    return ScriptResult(tuple(results), goal_reached)


# -- semantic auditing -------------------------------------------------------


@dataclass(frozen=True)
class StepAudit:
    index: int
    sound: bool
    counterexample: CounterExample | None


@dataclass(frozen=True)
class AuditResult:
    steps: tuple[StepAudit, ...]
    sizes: tuple[int, ...]

    @property
    def sound(self) -> bool:
        return all(s.sound for s in self.steps)


def audit_script(script: ProofScript, n: int) -> AuditResult:
    """Model-check each step: wherever the hypotheses, the schema
    hypotheses and the cited premises all hold, the conclusion must hold,
    over every assignment at universe sizes 1..n."""
    sizes = tuple(range(1, n + 1))
    audits = []
    for step in script.steps:
        antecedents = list(script.hypotheses) + list(script.schema_hypotheses)
        antecedents += [script.resolve(label, step.index) for label in step.premises]
        if antecedents:
            ante: Formula = antecedents[0] if len(antecedents) == 1 else Conjunction(
                tuple(antecedents)
            )
            formula: Formula = Implication(ante, step.conclusion)
        else:
            formula = step.conclusion
        bad: CounterExample | None = None
        for size in sizes:
            verdict = check_exhaustive(Claim.from_formula(formula), size)
            if isinstance(verdict, CounterExample):
                bad = verdict
                break
        audits.append(StepAudit(step.index, bad is None, bad))
    return AuditResult(tuple(audits), sizes)


# -- script text format ------------------------------------------------------


def parse_script(text: str) -> ProofScript:
    hypotheses: list[Formula] = []
    schemas: list[Formula] = []
    steps: list[ProofStep] = []
    goal: Formula | None = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            keyword, rest = line.split(None, 1)
        except ValueError:
            raise ProofScriptError(f"line {lineno}: incomplete declaration") from None
        try:
            if keyword == "hyp":
                hypotheses.append(parse_formula(rest))
            elif keyword == "schema":
                schemas.append(parse_formula(rest))
            elif keyword == "goal":
                goal = parse_formula(rest)
            elif keyword == "step":
                rule_name, after = rest.split(None, 1)
                try:
                    rule = Rule(rule_name)
                except ValueError:
                    raise ProofScriptError(f"unknown rule {rule_name!r}") from None
                after = after.strip()
                if not after.startswith("["):
                    raise ProofScriptError("expected '[' with premise labels")
                refs_text, formula_text = after[1:].split("]", 1)
                refs = tuple(r.strip() for r in refs_text.split(",") if r.strip())
                steps.append(
                    ProofStep(len(steps) + 1, rule, refs, parse_formula(formula_text))
                )
            else:
                raise ProofScriptError(f"unknown keyword {keyword!r}")
        except ProofScriptError as exc:
            raise ProofScriptError(f"line {lineno}: {exc}") from None
        except Exception as exc:
            raise ProofScriptError(f"line {lineno}: {exc}") from None
    if goal is None:
        raise ProofScriptError("script has no goal")
    return ProofScript(tuple(hypotheses), tuple(schemas), tuple(steps), goal)


def load_script(path) -> ProofScript:
    with open(path, encoding="utf-8") as fh:
        return parse_script(fh.read())


def bundled_induction_script() -> ProofScript:
    """The shipped derivation of the chain induction principle."""
    text = resources.files(__package__).joinpath("data/induction.proof").read_text("utf-8")
    return parse_script(text)
