"""Affix rules: the fixed affix/feature correspondences plus the orthography
needed to strip each affix.

Rule files are blocks of ``key: value`` lines separated by blank lines::

    id: -Aize
    kind: suffix
    orthographic_pattern: .*IZ(E|ING|ES|ED)$
    tag_pattern: ^V
    ...

Set-valued keys are comma-separated.  ``#`` starts a comment line.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import IO, Iterable, Iterator

from .corpus import SurfacePattern
from .lexicon import POS_CLASSES
from .semantics.features import FEATURES

KINDS = ("prefix", "suffix", "ending")


class RuleError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass(frozen=True)
class AlternationRule:
    """Orthographic adjustment at the strip boundary.

    ``residue_pattern``/``replacement`` turn the stripped residue into a
    candidate base; ``base_pattern``/``base_replacement`` run the other way
    and are used to synthesize surfaces.  Patterns are anchored at the
    boundary by the rule author (``$`` for suffixes).
    """

    id: str
    residue_pattern: str
    replacement: str
    base_pattern: str
    base_replacement: str

    def apply(self, residue: str) -> str | None:
        if not re.search(self.residue_pattern, residue):
            return None
        return re.sub(self.residue_pattern, self.replacement, residue, count=1)

    def invert(self, base: str) -> str | None:
        if not re.search(self.base_pattern, base):
            return None
        return re.sub(self.base_pattern, self.base_replacement, base, count=1)


_C = "bcdfgjklmnpqrstvwxz"
ALTERNATIONS: dict[str, AlternationRule] = {
    a.id: a
    for a in [
        AlternationRule("identity", "$", "", "$", ""),
        # intens -> intense
        AlternationRule("e-restoration", f"([{_C}])$", r"\1e", f"([{_C}])e$", r"\1"),
        # glor -> glory
        AlternationRule("y-restoration", f"([{_C}])$", r"\1y", f"([{_C}])y$", r"\1"),
        # stabil -> stable
        AlternationRule("il-le", "il$", "le", "le$", "il"),
        # marri -> marry
        AlternationRule("i-y", "i$", "y", "y$", "i"),
        # flatt -> flat
        AlternationRule("undoubling", f"([{_C}])\\1$", r"\1", f"([aeiou])([{_C}])$", r"\1\2\2"),
    ]
}
SUFFIX_ALTERNATIONS = tuple(ALTERNATIONS)


@dataclass(frozen=True)
class AffixRule:
    id: str
    kind: str
    pattern: SurfacePattern
    strip: str
    derived_pos: str
    base_pos: str = ""
    base_flags: frozenset = frozenset()
    alternations: tuple[str, ...] = ("identity",)
    uses_lexicon: bool = True
    derived_features: frozenset = frozenset()
    base_features: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "base_flags", frozenset(self.base_flags))
        object.__setattr__(self, "derived_features", frozenset(self.derived_features))
        object.__setattr__(self, "base_features", frozenset(self.base_features))
        object.__setattr__(self, "alternations", tuple(self.alternations))
        if self.kind not in KINDS:
            raise RuleError(f"{self.id}: unknown kind {self.kind!r}")
        if self.kind == "ending" and (self.uses_lexicon or self.base_features):
            raise RuleError(f"{self.id}: an ending has no lexicon base")
        if self.derived_pos not in POS_CLASSES:
            raise RuleError(f"{self.id}: bad derived_pos {self.derived_pos!r}")
        if self.kind != "ending" and self.base_pos not in POS_CLASSES:
            raise RuleError(f"{self.id}: bad base_pos {self.base_pos!r}")
        for alt in self.alternations:
            if alt not in ALTERNATIONS:
                raise RuleError(f"{self.id}: unknown alternation {alt!r}")
        for feature in self.derived_features | self.base_features:
            if feature not in FEATURES:
                raise RuleError(f"{self.id}: unknown feature {feature!r}")

    @property
    def structural(self) -> bool:
        """True for rules that cue nothing and only build bases."""
        return not (self.derived_features or self.base_features)

    def residue(self, word: str) -> str | None:
        """``word`` with the affix material removed, or None."""
        word = word.lower()
        strip = self.strip.lower()
        if len(word) <= len(strip):
            return None
        if self.kind == "prefix":
            return word[len(strip):] if word.startswith(strip) else None
        return word[: -len(strip)] if word.endswith(strip) else None

    def attach(self, residue: str) -> str:
        strip = self.strip.lower()
        return strip + residue if self.kind == "prefix" else residue + strip


class RuleCatalog:
    """Ordered, immutable collection of :class:`AffixRule` keyed by id."""

    def __init__(self, rules: Iterable[AffixRule] = ()):
        self._rules: dict[str, AffixRule] = {}
        for rule in rules:
            if rule.id in self._rules:
                raise RuleError(f"duplicate rule id {rule.id!r}")
            self._rules[rule.id] = rule

    def __len__(self) -> int:
        return len(self._rules)

    def __iter__(self) -> Iterator[AffixRule]:
        return iter(self._rules.values())

    def __contains__(self, rule_id) -> bool:
        return rule_id in self._rules

    def __getitem__(self, rule_id: str) -> AffixRule:
        try:
            return self._rules[rule_id]
        except KeyError:
            raise KeyError(f"unknown affix rule {rule_id!r}") from None

    def __eq__(self, other) -> bool:
        if not isinstance(other, RuleCatalog):
            return NotImplemented
        return list(self._rules.items()) == list(other._rules.items())

    def __repr__(self) -> str:
        return f"RuleCatalog({list(self._rules)})"

    def get(self, rule_id, default=None):
        return self._rules.get(rule_id, default)

    @property
    def ids(self) -> list[str]:
        return list(self._rules)

    def __or__(self, other: "RuleCatalog") -> "RuleCatalog":
        return RuleCatalog([*self, *other])

    def subset(self, ids: Iterable[str]) -> "RuleCatalog":
        wanted = set(ids)
        unknown = wanted - set(self._rules)
        if unknown:
            raise KeyError(f"unknown affix rule(s): {', '.join(sorted(unknown))}")
        return RuleCatalog(r for r in self if r.id in wanted)


def affix_of(rule_id: str) -> str:
    """Surface affix of a rule sense: ``-Aize`` -> ``-ize``, ``Vun-`` -> ``un-``."""
    return re.sub(r"^(-?)[AVN](?=[a-z])", r"\1", rule_id)


# -- builtin catalog ------------------------------------------------------------

_COS = "CHANGE-OF-STATE"


def _suffix(id, ortho, tag, strip, derived_pos, base_pos, derived=(), base=(), flags=()):
    return AffixRule(
        id, "suffix", SurfacePattern(ortho, tag), strip, derived_pos, base_pos,
        frozenset(flags), SUFFIX_ALTERNATIONS, True, frozenset(derived), frozenset(base),
    )


def _prefix(id, strip, derived_pos, base_pos, derived=(), base=(), tag="^V"):
    return AffixRule(
        id, "prefix", SurfacePattern(f"^{strip}", tag), strip, derived_pos, base_pos,
        frozenset(), ("identity",), True, frozenset(derived), frozenset(base),
    )


def _ending(id, ortho, strip, derived):
    return AffixRule(
        id, "ending", SurfacePattern(ortho, "^V"), strip, "verb", "", frozenset(), (),
        False, frozenset(derived),
    )


_IZE = ".*IZ(E|ING|ES|ED)$"
_IFY = ".*IF(Y|IES|IED|YING)$"


def builtin_rules() -> RuleCatalog:
    """The cue catalog: 18 affixes, with -ize and -ify split by base category."""
    return RuleCatalog(
        [
            _prefix("re-", "RE", "verb", "verb",
                    {"TELIC", "RSTATE-EQ-BASE-RSTATE", "ENTAILS-BASE", "PRESUPS-RSTATE"}, {"TELIC"}),
            _prefix("Vun-", "UN", "verb", "verb", {_COS, "NEG-OF-BASE-IS-RSTATE"}, {_COS}),
            _prefix("Vde-", "DE", "verb", "verb", {_COS, "NEG-OF-BASE-IS-RSTATE"}, {_COS}),
            _suffix("-Aize", _IZE, "^V", "IZE", "verb", "adjective",
                    {_COS, "RSTATE-EQ-BASE"}, {"IZE-DEPENDENT"}, {"uninflected", "latinate"}),
            _suffix("-Nize", _IZE, "^V", "IZE", "verb", "noun", {_COS}),
            _ending("-le", ".*L(E|ES|ED|ING)$", "LE", {"ACTIVITY"}),
            _suffix("-en", ".*EN(S|ED|ING)?$", "^V", "EN", "verb", "adjective",
                    {_COS, "RSTATE-EQ-BASE"}, {"IZE-DEPENDENT"}, {"uninflected"}),
            _suffix("-Aify", _IFY, "^V", "IFY", "verb", "adjective",
                    {_COS, "RSTATE-EQ-BASE"}, {"IZE-DEPENDENT"}, {"uninflected"}),
            _suffix("-Nify", _IFY, "^V", "IFY", "verb", "noun", {_COS}),
            _ending("-ate", ".*AT(E|ES|ED|ING)$", "ATE", {_COS}),
            _suffix("-ee", ".*EES?$", "^N", "EE", "noun", "verb", {"PART-IN-E", "SENTIENT", "NON-VOLITIONAL"}),
            _suffix("-er", ".*ERS?$", "^N", "ER", "noun", "verb", {"PART-IN-E"}),
            _suffix("-ant", ".*ANTS?$", "^N", "ANT", "noun", "verb", {"PART-IN-E"}),
            _suffix("-age", ".*AGES?$", "^N", "AGE", "noun", "verb", {"EVENT-AND-RESULTANT"}),
            _suffix("-ment", ".*MENTS?$", "^N", "MENT", "noun", "verb", {"REFERS-TO-E-OR-PROP-OR-RESULT"}),
            _prefix("mis-", "MIS", "verb", "verb", {"INCORRECT-MANNER"}),
            _suffix("-able", ".*ABLE$", "^J", "ABLE", "adjective", "verb", {"ABLE-TO-BE-PERFORMED"}),
            _suffix("-ness", ".*NESS(ES)?$", "^N", "NESS", "noun", "adjective", {"STATE-OF-HAVING-PROP-OF-BASE"}),
            _suffix("-ful", ".*FUL$", "^J", "FUL", "adjective", "noun", {"LESS-ANTONYM"}, {"ABSTRACT"}),
            _suffix("-less", ".*LESS$", "^J", "LESS", "adjective", "noun", {"FUL-ANTONYM"}),
        ]
    )


def structural_rules() -> RuleCatalog:
    """Affixes the analyzer may use to build bases; they cue no features."""
    return RuleCatalog(
        [
            _suffix("-al", ".*AL$", "^J", "AL", "adjective", "noun"),
            _suffix("-ic", ".*IC$", "^J", "IC", "adjective", "noun"),
            _suffix("-ous", ".*OUS$", "^J", "OUS", "adjective", "noun"),
            _prefix("sub-", "SUB", "verb", "verb"),
        ]
    )


# -- file format -------------------------------------------------------------------

_KEYS = (
    "id", "kind", "orthographic_pattern", "tag_pattern", "strip", "derived_pos", "base_pos",
    "base_flags", "alternations", "uses_lexicon", "derived_features", "base_features",
)
_REQUIRED = ("id", "kind", "orthographic_pattern", "tag_pattern", "strip", "derived_pos")
_SETS = ("base_flags", "derived_features", "base_features")


def _split(value: str) -> list[str]:
    return [v.strip() for v in value.split(",") if v.strip()]


def _blocks(text: str) -> Iterator[list[tuple[int, str]]]:
    block: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line.startswith("#"):
            continue
        if not line:
            if block:
                yield block
            block = []
            continue
        block.append((lineno, line))
    if block:
        yield block


def _rule_from_block(block: list[tuple[int, str]]) -> AffixRule:
    first = block[0][0]
    values: dict[str, str] = {}
    for lineno, line in block:
        key, sep, value = line.partition(":")
        key = key.strip()
        if not sep or key not in _KEYS:
            raise RuleError(f"unknown key {key!r}", lineno)
        if key in values:
            raise RuleError(f"repeated key {key!r}", lineno)
        values[key] = value.strip()
    for key in _REQUIRED:
        if not values.get(key):
            raise RuleError(f"rule block is missing {key!r}", first)
    kind = values["kind"]
    uses_lexicon = values.get("uses_lexicon", "false" if kind == "ending" else "true")
    if uses_lexicon not in ("true", "false"):
        raise RuleError(f"uses_lexicon must be true or false, not {uses_lexicon!r}", first)
    for key in ("derived_features", "base_features"):
        for feature in _split(values.get(key, "")):
            if feature not in FEATURES:
                line = next(n for n, text in block if text.startswith(key))
                raise RuleError(f"unknown feature {feature!r}", line)
    try:
        return AffixRule(
            id=values["id"],
            kind=kind,
            pattern=SurfacePattern(values["orthographic_pattern"], values["tag_pattern"]),
            strip=values["strip"],
            derived_pos=values["derived_pos"],
            base_pos=values.get("base_pos", ""),
            base_flags=frozenset(_split(values.get("base_flags", ""))),
            alternations=tuple(_split(values.get("alternations", "" if kind == "ending" else "identity"))),
            uses_lexicon=uses_lexicon == "true",
            derived_features=frozenset(_split(values.get("derived_features", ""))),
            base_features=frozenset(_split(values.get("base_features", ""))),
        )
    except ValueError as exc:
        raise RuleError(str(exc), first) from None


def parse_rules(text: str, base: RuleCatalog | None = None) -> RuleCatalog:
    rules = list(base or ())
    seen = {r.id for r in rules}
    for block in _blocks(text):
        rule = _rule_from_block(block)
        if rule.id in seen:
            raise RuleError(f"duplicate rule id {rule.id!r}", block[0][0])
        seen.add(rule.id)
        rules.append(rule)
    return RuleCatalog(rules)


def load_rules(stream: IO | str, base: RuleCatalog | None = None) -> RuleCatalog:
    """Read a rule file.  With ``base``, the file's rules extend that catalog."""
    text = stream if isinstance(stream, str) else stream.read()
    return parse_rules(text, base)


def serialize_rules(catalog: RuleCatalog) -> str:
    blocks = []
    for r in catalog:
        fields = {
            "id": r.id,
            "kind": r.kind,
            "orthographic_pattern": r.pattern.orthographic_pattern,
            "tag_pattern": r.pattern.tag_pattern,
            "strip": r.strip,
            "derived_pos": r.derived_pos,
            "base_pos": r.base_pos,
            "base_flags": ",".join(sorted(r.base_flags)),
            "alternations": ",".join(r.alternations),
            "uses_lexicon": "true" if r.uses_lexicon else "false",
            "derived_features": ",".join(sorted(r.derived_features)),
            "base_features": ",".join(sorted(r.base_features)),
        }
        blocks.append("".join(f"{k}: {v}".rstrip() + "\n" for k, v in fields.items()))
    return "\n".join(blocks)


def read_packaged_rules(name: str) -> str:
    from importlib import resources

    return resources.files("morpholex").joinpath(f"data/rules/{name}").read_text("utf-8")
