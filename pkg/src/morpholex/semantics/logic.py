"""Axiom formulas and a finite episodic model checker.

Formulas are small immutable trees.  Predicate terms may be a placeholder
(``P`` for the word's own predicate, ``Q`` for the related base/derived
predicate) or ``rstate(...)`` of another term.  ``Describes`` is the ``**``
operator: the embedded atomic formula (possibly negated) describes an
episode.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field

EPISODE = "episode"
INDIVIDUAL = "individual"
RELATIONS = ("at-end-of", "at-beginning-of", "cause", "before")
PLACEHOLDERS = ("P", "Q")


# -- terms and formulas -----------------------------------------------------


@dataclass(frozen=True)
class Pred:
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class RState:
    of: "Pred | RState"

    @property
    def name(self) -> str:
        return f"rstate({self.of.name})"

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Atom:
    pred: Pred | RState
    args: tuple[str, ...]

    def __str__(self) -> str:
        return f"{self.pred}({','.join(self.args)})"


@dataclass(frozen=True)
class Describes:
    atom: Atom
    episode: str
    negated: bool = False

    def __str__(self) -> str:
        neg = "¬" if self.negated else ""
        return f"[{neg}{self.atom} ** {self.episode}]"


@dataclass(frozen=True)
class Rel:
    name: str
    args: tuple[str, str]

    def __str__(self) -> str:
        return f"{self.name}({','.join(self.args)})"


@dataclass(frozen=True)
class Not:
    body: "Formula"

    def __str__(self) -> str:
        return f"¬{self.body}"


@dataclass(frozen=True)
class And:
    items: tuple["Formula", ...]

    def __str__(self) -> str:
        return "[" + " ∧ ".join(map(str, self.items)) + "]"


@dataclass(frozen=True)
class Or:
    items: tuple["Formula", ...]

    def __str__(self) -> str:
        return "[" + " ∨ ".join(map(str, self.items)) + "]"


@dataclass(frozen=True)
class Implies:
    premise: "Formula"
    conclusion: "Formula"

    def __str__(self) -> str:
        return f"[{self.premise} → {self.conclusion}]"


@dataclass(frozen=True)
class ForAll:
    variables: tuple[str, ...]
    body: "Formula"

    def __str__(self) -> str:
        return f"∀{','.join(self.variables)} {self.body}"


@dataclass(frozen=True)
class Exists:
    """Restricted existential: ``∃v: restriction body``."""

    variables: tuple[str, ...]
    restriction: "Formula | None"
    body: "Formula"

    def __str__(self) -> str:
        head = f"∃{','.join(self.variables)}:"
        if self.restriction is not None:
            head += f" {self.restriction}"
        return f"{head} {self.body}"


Formula = Describes | Rel | Not | And | Or | Implies | ForAll | Exists


def sort_of(variable: str) -> str:
    """Variables named ``e``, ``e1``, ... range over episodes."""
    return EPISODE if re.fullmatch(r"e\d*", variable) else INDIVIDUAL


def children(formula) -> tuple:
    if isinstance(formula, (Not,)):
        return (formula.body,)
    if isinstance(formula, (And, Or)):
        return formula.items
    if isinstance(formula, Implies):
        return (formula.premise, formula.conclusion)
    if isinstance(formula, ForAll):
        return (formula.body,)
    if isinstance(formula, Exists):
        return tuple(f for f in (formula.restriction, formula.body) if f is not None)
    return ()


def free_variables(formula) -> set[str]:
    if isinstance(formula, Describes):
        return set(formula.atom.args) | {formula.episode}
    if isinstance(formula, Rel):
        return set(formula.args)
    out = set().union(*map(free_variables, children(formula))) if children(formula) else set()
    if isinstance(formula, (ForAll, Exists)):
        out -= set(formula.variables)
    return out


def predicate_names(formula) -> set[str]:
    """All predicate terms the formula uses, e.g. ``{'P', 'rstate(P)'}``."""
    if isinstance(formula, Describes):
        return {formula.atom.pred.name}
    return set().union(set(), *map(predicate_names, children(formula)))


def base_predicates(formula) -> set[str]:
    """Innermost predicate names (placeholders or ground names)."""
    if isinstance(formula, Describes):
        term = formula.atom.pred
        while isinstance(term, RState):
            term = term.of
        return {term.name}
    return set().union(set(), *map(base_predicates, children(formula)))


def relation_names(formula) -> set[str]:
    if isinstance(formula, Rel):
        return {formula.name}
    return set().union(set(), *map(relation_names, children(formula)))


def substitute(formula, mapping: dict[str, str]):
    """Rename predicate placeholders throughout, including inside ``rstate``."""

    def term(t):
        if isinstance(t, RState):
            return RState(term(t.of))
        return Pred(mapping.get(t.name, t.name))

    if isinstance(formula, Describes):
        atom = Atom(term(formula.atom.pred), formula.atom.args)
        return Describes(atom, formula.episode, formula.negated)
    if isinstance(formula, Rel):
        return formula
    if isinstance(formula, Not):
        return Not(substitute(formula.body, mapping))
    if isinstance(formula, And):
        return And(tuple(substitute(f, mapping) for f in formula.items))
    if isinstance(formula, Or):
        return Or(tuple(substitute(f, mapping) for f in formula.items))
    if isinstance(formula, Implies):
        return Implies(substitute(formula.premise, mapping), substitute(formula.conclusion, mapping))
    if isinstance(formula, ForAll):
        return ForAll(formula.variables, substitute(formula.body, mapping))
    if isinstance(formula, Exists):
        restriction = None if formula.restriction is None else substitute(formula.restriction, mapping)
        return Exists(formula.variables, restriction, substitute(formula.body, mapping))
    raise TypeError(f"not a formula: {formula!r}")


# -- templates ----------------------------------------------------------------


@dataclass(frozen=True)
class AxiomTemplate:
    """A closed formula defining a feature, over placeholder ``P``.

    ``guard`` lists the features a predicate must carry for the axiom to
    apply (e.g. CHANGE-OF-STATE and DYADIC).
    """

    feature: str
    formula: Formula
    guard: tuple[str, ...] = ()

    def __post_init__(self):
        free = free_variables(self.formula)
        if free:
            raise ValueError(f"axiom for {self.feature} has free variables {sorted(free)}")
        if "P" not in base_predicates(self.formula):
            raise ValueError(f"axiom for {self.feature} never mentions P")

    def __str__(self) -> str:
        head = f"For all predicates P with features {' and '.join(self.guard)}:\n" if self.guard else ""
        return head + str(self.formula)


@dataclass(frozen=True)
class GroundAxiom:
    feature: str
    formula: Formula
    predicate: str
    related: str | None = None

    def __str__(self) -> str:
        return str(self.formula)


def instantiate_axiom(template: AxiomTemplate, predicate_name: str, related: str | None = None) -> GroundAxiom:
    """Replace ``P`` (and ``Q`` when ``related`` is given) by concrete names."""
    mapping = {"P": predicate_name}
    if related is not None:
        mapping["Q"] = related
    return GroundAxiom(template.feature, substitute(template.formula, mapping), predicate_name, related)


# -- models ---------------------------------------------------------------------


class ModelError(ValueError):
    pass


@dataclass
class EpisodicModel:
    """Finite interpretation: episodes, individuals, episode relations and
    the ``**`` truth table as a set of ``(predicate, args, episode)``.

    Anything not listed in ``holds`` is false.  ``rstate`` maps a predicate
    to the predicate naming its result state.
    """

    episodes: frozenset = frozenset()
    individuals: frozenset = frozenset()
    relations: dict = field(default_factory=dict)
    holds: frozenset = frozenset()
    predicates: dict = field(default_factory=dict)
    rstate: dict = field(default_factory=dict)

    def __post_init__(self):
        self.episodes = frozenset(self.episodes)
        self.individuals = frozenset(self.individuals)
        self.holds = frozenset((p, tuple(a), e) for p, a, e in self.holds)
        rels = {name: frozenset() for name in RELATIONS}
        for name, pairs in self.relations.items():
            if name not in RELATIONS:
                raise ModelError(f"unknown relation {name!r}")
            rels[name] = frozenset(tuple(p) for p in pairs)
        self.relations = rels
        preds = dict(self.predicates)
        for pred, args, ep in self.holds:
            if ep not in self.episodes:
                raise ModelError(f"undeclared episode {ep!r} in holds {pred}")
            for a in args:
                if a not in self.individuals:
                    raise ModelError(f"undeclared individual {a!r} in holds {pred}")
            if preds.setdefault(pred, len(args)) != len(args):
                raise ModelError(f"predicate {pred} used with arity {len(args)} and {preds[pred]}")
        self.predicates = preds
        for name, pairs in self.relations.items():
            for pair in pairs:
                if not set(pair) <= self.episodes:
                    raise ModelError(f"relation {name} over undeclared episode in {pair}")

    def resolve(self, term) -> str | None:
        """Model predicate interpreting ``term``, or None if uninterpreted."""
        if term.name in self.predicates:
            return term.name
        if isinstance(term, RState):
            inner = self.resolve(term.of)
            if inner is not None and inner in self.rstate:
                return self.rstate[inner]
        return None

    def is_true(self, pred: str, args: tuple, episode) -> bool:
        return (pred, args, episode) in self.holds

    def domain(self, variable: str):
        return sorted(self.episodes if sort_of(variable) == EPISODE else self.individuals)


def parse_model(text: str) -> EpisodicModel:
    """Read the line-oriented model format.

    Directives::

        episode e1
        individual a
        rel at-end-of e1 e
        holds formalize(a,b) @ e
        predicate formal/1
        rstate formalize formal
    """
    episodes, individuals, holds = set(), set(), set()
    relations: dict[str, set] = {}
    predicates, rstate = {}, {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        word, _, rest = line.partition(" ")
        rest = rest.strip()
        try:
            if word == "episode":
                episodes.update(rest.split())
            elif word == "individual":
                individuals.update(rest.split())
            elif word == "rel":
                name, a, b = rest.split()
                relations.setdefault(name, set()).add((a, b))
            elif word == "holds":
                m = re.fullmatch(r"(\S+?)\(([^()]*)\)\s*@\s*(\S+)", rest)
                if not m:
                    raise ValueError(rest)
                args = tuple(x.strip() for x in m.group(2).split(",") if x.strip())
                holds.add((m.group(1), args, m.group(3)))
            elif word == "predicate":
                name, arity = rest.split("/")
                predicates[name.strip()] = int(arity)
            elif word == "rstate":
                pred, result = rest.split()
                rstate[pred] = result
                predicates.setdefault(result, 1)
            else:
                raise ValueError(f"unknown directive {word!r}")
        except ValueError as exc:
            raise ModelError(f"line {lineno}: cannot parse {raw.strip()!r} ({exc})") from None
    try:
        return EpisodicModel(episodes, individuals, relations, holds, predicates, rstate)
    except ModelError as exc:
        raise ModelError(f"model: {exc}") from None


def serialize_model(model: EpisodicModel) -> str:
    lines = [f"episode {e}" for e in sorted(model.episodes)]
    lines += [f"individual {i}" for i in sorted(model.individuals)]
    for name in RELATIONS:
        lines += [f"rel {name} {a} {b}" for a, b in sorted(model.relations[name])]
    used = {p for p, _, _ in model.holds} | set(model.rstate.values())
    lines += [f"predicate {p}/{n}" for p, n in sorted(model.predicates.items()) if p not in used]
    lines += [f"rstate {p} {r}" for p, r in sorted(model.rstate.items())]
    lines += [f"holds {p}({','.join(a)}) @ {e}" for p, a, e in sorted(model.holds)]
    return "".join(line + "\n" for line in lines)


# -- checking -----------------------------------------------------------------


@dataclass(frozen=True)
class Verdict:
    holds: bool
    witness: dict | None = None

    def __bool__(self) -> bool:
        return self.holds

    def __str__(self) -> str:
        if self.holds:
            return "holds"
        return "fails " + " ".join(f"{k}={v}" for k, v in self.witness.items())


class _Evaluator:
    def __init__(self, model: EpisodicModel, formula):
        self.model = model
        unknown = relation_names(formula) - set(RELATIONS)
        if unknown:
            raise ModelError(f"uninterpreted symbol {min(unknown)!r}")
        self.interp = {}
        for name in sorted(predicate_names(formula)):
            term = _find_term(formula, name)
            resolved = model.resolve(term)
            if resolved is None:
                raise ModelError(f"uninterpreted symbol {name!r}")
            self.interp[name] = resolved

    def eval(self, f, env: dict) -> bool:
        if isinstance(f, Describes):
            args = tuple(env[a] for a in f.atom.args)
            value = self.model.is_true(self.interp[f.atom.pred.name], args, env[f.episode])
            return not value if f.negated else value
        if isinstance(f, Rel):
            return (env[f.args[0]], env[f.args[1]]) in self.model.relations[f.name]
        if isinstance(f, Not):
            return not self.eval(f.body, env)
        if isinstance(f, And):
            return all(self.eval(g, env) for g in f.items)
        if isinstance(f, Or):
            return any(self.eval(g, env) for g in f.items)
        if isinstance(f, Implies):
            return not self.eval(f.premise, env) or self.eval(f.conclusion, env)
        if isinstance(f, ForAll):
            return self.counterexample(f, env) is None
        if isinstance(f, Exists):
            for values in self.assignments(f.variables):
                inner = {**env, **dict(zip(f.variables, values))}
                if f.restriction is not None and not self.eval(f.restriction, inner):
                    continue
                if self.eval(f.body, inner):
                    return True
            return False
        raise TypeError(f"not a formula: {f!r}")

    def assignments(self, variables):
        return itertools.product(*(self.model.domain(v) for v in variables))

    def counterexample(self, f: ForAll, env: dict) -> dict | None:
        for values in self.assignments(f.variables):
            inner = {**env, **dict(zip(f.variables, values))}
            if not self.eval(f.body, inner):
                return inner
        return None

    def explain(self, f, env: dict) -> dict:
        """Bindings showing why ``f`` is false under ``env``.

        A failed restricted existential is explained by its first candidate
        that meets the restriction (the episode where the body fails).
        """
        if isinstance(f, Implies):
            return self.explain(f.conclusion, env)
        if isinstance(f, And):
            for g in f.items:
                if not self.eval(g, env):
                    return self.explain(g, env)
        if isinstance(f, ForAll):
            inner = self.counterexample(f, env)
            return env if inner is None else self.explain(f.body, inner)
        if isinstance(f, Exists) and f.restriction is not None:
            for values in self.assignments(f.variables):
                inner = {**env, **dict(zip(f.variables, values))}
                if self.eval(f.restriction, inner):
                    return self.explain(f.body, inner)
        return env


def _find_term(formula, name):
    if isinstance(formula, Describes):
        return formula.atom.pred if formula.atom.pred.name == name else None
    for child in children(formula):
        found = _find_term(child, name)
        if found is not None:
            return found
    return None


def check_axiom(model: EpisodicModel, axiom: GroundAxiom | Formula) -> Verdict:
    """Evaluate a closed formula over every assignment of the finite domains.

    A failing verdict carries the falsifying assignment of the outermost
    universal quantifiers, extended with the episode of a failed restricted
    existential when there is one (``x=a y=b e=e e2=e2``).  Raises
    :class:`ModelError` when a predicate in the axiom has no interpretation.
    """
    formula = axiom.formula if isinstance(axiom, GroundAxiom) else axiom
    ev = _Evaluator(model, formula)
    if isinstance(formula, ForAll):
        witness = ev.counterexample(formula, {})
        if witness is None:
            return Verdict(True)
        return Verdict(False, ev.explain(formula.body, witness))
    if ev.eval(formula, {}):
        return Verdict(True)
    return Verdict(False, {})
