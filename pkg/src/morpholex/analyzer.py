"""Affix stripping over a base lexicon, with nested and wrapped parses.

Every parse is kept.  A parse of ``word`` for a cue rule is either

* direct: strip the rule's affix, adjust the residue with one of the rule's
  alternations and find the result in the lexicon;
* nested: the adjusted residue is itself derived, by any catalog rule whose
  output category is the base category (``[[tradition -al] -Aize]``);
* wrapped: a structural, category-preserving prefix sits on top of a parse
  for the rule (``[sub- [side -Nize]]``).
"""

from __future__ import annotations

from dataclasses import dataclass

from .lexicon import LexEntry, Lexicon
from .rules import ALTERNATIONS, AffixRule, RuleCatalog

DEFAULT_MAX_DEPTH = 3
MIN_RESIDUE = 2


@dataclass(frozen=True)
class Derivation:
    surface: str
    rule: AffixRule
    base: "LexEntry | Derivation | None"
    alternation_id: str | None = "identity"

    @property
    def rule_id(self) -> str:
        return self.rule.id

    @property
    def depth(self) -> int:
        return 1 + (self.base.depth if isinstance(self.base, Derivation) else 0)

    @property
    def leaf(self) -> LexEntry | None:
        node = self
        while isinstance(node, Derivation):
            node = node.base
        return node

    @property
    def base_lemma(self) -> str | None:
        if isinstance(self.base, Derivation):
            return self.base.surface
        return None if self.base is None else self.base.lemma

    def nodes(self):
        node = self
        while isinstance(node, Derivation):
            yield node
            node = node.base

    def bracket(self) -> str:
        """Bracket notation, e.g. ``[[tradition -al] -Aize]``."""
        if self.base is None:
            return f"({self.surface} {self.rule_id})"
        inner = self.base.bracket() if isinstance(self.base, Derivation) else self.base.lemma
        if self.rule.kind == "prefix":
            return f"[{self.rule_id} {inner}]"
        return f"[{inner} {self.rule_id}]"

    def __str__(self) -> str:
        return self.bracket()


def head(derivation: Derivation) -> Derivation:
    """The topmost node built by a cue rule (skips structural wrappers)."""
    for node in derivation.nodes():
        if not node.rule.structural:
            return node
    return derivation


def synthesize(derivation: Derivation) -> str:
    """Rebuild the surface from the base and the rule; inverse of analysis."""
    if derivation.base is None:
        return derivation.surface
    base = synthesize(derivation.base) if isinstance(derivation.base, Derivation) else derivation.base.lemma
    residue = ALTERNATIONS[derivation.alternation_id].invert(base)
    if residue is None:
        raise ValueError(f"alternation {derivation.alternation_id} does not apply to {base!r}")
    return derivation.rule.attach(residue)


class Analyzer:
    """Analyses words against a lexicon and a catalog of affix rules.

    ``catalog`` should hold every rule the analyzer may use, cue and
    structural alike; only non-ending rules take part in nesting.
    """

    def __init__(self, lexicon: Lexicon, catalog: RuleCatalog, max_depth: int = DEFAULT_MAX_DEPTH,
                 invent_bases: bool = False):
        if max_depth < 1:
            raise ValueError("max_depth must be at least 1")
        self.lexicon = lexicon
        self.catalog = catalog
        self.max_depth = max_depth
        self.invent_bases = invent_bases
        builders = sorted((r for r in catalog if r.kind != "ending" and r.uses_lexicon), key=lambda r: r.id)
        self._builders: dict[str, list[AffixRule]] = {}
        for rule in builders:
            self._builders.setdefault(rule.derived_pos, []).append(rule)
        self._wrappers = [
            r for r in builders
            if r.structural and r.kind == "prefix" and r.derived_pos == r.base_pos
        ]

    def analyze(self, word: str, rule: AffixRule, tag: str | None = None) -> list[Derivation]:
        if rule.kind == "ending":
            found = self.analyze_ending(word, rule)
            return [] if found is None else [found]
        if tag is not None and not rule.pattern.matches_tag(tag):
            return []
        word = word.lower()
        found = self._wrapped(word, rule, self.max_depth)
        if not found and self.invent_bases:
            residue = rule.residue(word)
            if residue is not None and len(residue) >= 3:
                invented = LexEntry(residue, rule.base_pos, rule.base_flags, invented=True)
                found = [Derivation(word, rule, invented, "identity")]
        return found

    def analyze_ending(self, word: str, rule: AffixRule) -> Derivation | None:
        return analyze_ending(word, rule)

    def _wrapped(self, word: str, rule: AffixRule, depth: int) -> list[Derivation]:
        found = self._derive(word, rule, depth)
        if depth < 2:
            return found
        for wrapper in self._wrappers:
            if wrapper.derived_pos != rule.derived_pos:
                continue
            residue = wrapper.residue(word)
            if residue is None or len(residue) < MIN_RESIDUE:
                continue
            for inner in self._wrapped(residue, rule, depth - 1):
                found.append(Derivation(word, wrapper, inner, "identity"))
        return found

    def _derive(self, word: str, rule: AffixRule, depth: int) -> list[Derivation]:
        residue = rule.residue(word)
        if residue is None or len(residue) < MIN_RESIDUE:
            return []
        found = []
        for alt_id in rule.alternations:
            base = ALTERNATIONS[alt_id].apply(residue)
            if base is None:
                continue
            for b in self._bases(base, rule.base_pos, rule.base_flags, depth - 1):
                found.append(Derivation(word, rule, b, alt_id))
        return found

    def _bases(self, text: str, pos: str, flags, depth: int) -> list:
        out: list = list(self.lexicon.lookup(text, pos, flags))
        if depth > 0:
            for builder in self._builders.get(pos, ()):
                out.extend(self._derive(text, builder, depth))
        return out


def analyze(word: str, tag: str | None, rule: AffixRule, lexicon: Lexicon, catalog: RuleCatalog,
            max_depth: int = DEFAULT_MAX_DEPTH, invent_bases: bool = False) -> list[Derivation]:
    """All derivations of ``word`` headed by ``rule``; empty when none."""
    return Analyzer(lexicon, catalog, max_depth, invent_bases).analyze(word, rule, tag)


def analyze_ending(word: str, rule: AffixRule) -> Derivation | None:
    """Pattern-only pseudo-derivation for verbal endings such as -le and -ate."""
    if rule.kind != "ending":
        raise ValueError(f"{rule.id} is not an ending")
    word = word.lower()
    if len(word) > len(rule.strip) and word.upper().endswith(rule.strip):
        return Derivation(word, rule, None, None)
    return None
