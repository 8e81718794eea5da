"""Word/feature assignments with provenance, and their TSV form.

TSV columns: lemma, pos, role, feature, affix, evidence types
(comma-separated ``surface/TAG``), token count.  One row per
(assignment, affix).  Antonym features carry their counterpart word in the
feature column, e.g. ``LESS-ANTONYM(colorless)``.
"""

from __future__ import annotations

import copy
import re
from dataclasses import dataclass, field
from typing import IO, TYPE_CHECKING, Iterable

from .features import FEATURES

if TYPE_CHECKING:
    from ..analyzer import Derivation
    from ..rules import RuleCatalog

ROLES = ("derived", "base")
HEADER = ("lemma", "pos", "role", "feature", "affix", "evidence", "tokens")
_FEATURE_CELL = re.compile(r"([A-Z][A-Z-]*)(?:\((.*)\))?")


class StoreError(ValueError):
    pass


@dataclass
class FeatureAssignment:
    lemma: str
    pos: str
    role: str
    feature: str
    target: str | None = None
    # affix id -> {evidence type: token count}
    provenance: dict[str, dict[str, int]] = field(default_factory=dict)

    @property
    def key(self) -> tuple[str, str, str, str]:
        return self.lemma, self.pos, self.role, self.feature

    @property
    def feature_cell(self) -> str:
        return self.feature if self.target is None else f"{self.feature}({self.target})"

    @property
    def affixes(self) -> list[str]:
        return sorted(self.provenance)

    def tokens(self, affix: str | None = None) -> int:
        groups = [self.provenance[affix]] if affix else self.provenance.values()
        return sum(sum(g.values()) for g in groups)


class AssignmentStore:
    """Feature assignments keyed by (lemma, pos, role, feature).

    Adding an existing key merges provenance: token counts of the same
    evidence type are summed, so merging disjoint batches is associative
    and commutative.
    """

    def __init__(self, assignments: Iterable[FeatureAssignment] = ()):
        self._items: dict[tuple, FeatureAssignment] = {}
        for a in assignments:
            for affix, evidence in a.provenance.items():
                self.add(a.lemma, a.pos, a.role, a.feature, affix, evidence, a.target)

    def __len__(self) -> int:
        return len(self._items)

    def __iter__(self):
        return iter(self._items[k] for k in sorted(self._items))

    def __contains__(self, key) -> bool:
        return tuple(key) in self._items

    def __eq__(self, other) -> bool:
        if not isinstance(other, AssignmentStore):
            return NotImplemented
        return self.rows() == other.rows()

    def get(self, lemma, pos, role, feature) -> FeatureAssignment | None:
        return self._items.get((lemma, pos, role, feature))

    def add(self, lemma: str, pos: str, role: str, feature: str, affix: str,
            evidence: dict[str, int], target: str | None = None) -> FeatureAssignment:
        if role not in ROLES:
            raise StoreError(f"bad role {role!r}")
        if feature not in FEATURES:
            raise StoreError(f"unknown feature {feature!r}")
        if not evidence:
            raise StoreError("assignment needs at least one evidence type")
        key = (lemma, pos, role, feature)
        item = self._items.get(key)
        if item is None:
            item = self._items[key] = FeatureAssignment(lemma, pos, role, feature, target)
        elif target is not None:
            if item.target not in (None, target):
                raise StoreError(f"conflicting targets for {key}: {item.target} vs {target}")
            item.target = target
        bucket = item.provenance.setdefault(affix, {})
        for ev, n in evidence.items():
            bucket[ev] = bucket.get(ev, 0) + n
        return item

    def discard(self, key) -> None:
        self._items.pop(tuple(key), None)

    def copy(self) -> "AssignmentStore":
        new = AssignmentStore()
        new._items = copy.deepcopy(self._items)
        return new

    def merge(self, other: "AssignmentStore") -> "AssignmentStore":
        merged = self.copy()
        for a in other:
            for affix, evidence in a.provenance.items():
                merged.add(a.lemma, a.pos, a.role, a.feature, affix, evidence, a.target)
        return merged

    def filter(self, role: str | None = None, affix: str | None = None) -> list[FeatureAssignment]:
        return [
            a for a in self
            if (role is None or a.role == role) and (affix is None or affix in a.provenance)
        ]

    def rows(self) -> list[tuple]:
        out = []
        for a in self:
            for affix in a.affixes:
                evidence = a.provenance[affix]
                out.append((a.lemma, a.pos, a.role, a.feature_cell, affix,
                            ",".join(sorted(evidence)), sum(evidence.values())))
        return out


def emit_store(store: AssignmentStore) -> str:
    lines = ["\t".join(HEADER)]
    lines += ["\t".join(map(str, row)) for row in store.rows()]
    return "".join(line + "\n" for line in lines)


def parse_store(stream: IO | str) -> AssignmentStore:
    """Inverse of :func:`emit_store`.

    Per-type token counts are not kept in the TSV; on reading, a row's total
    is assigned to its first evidence type and the rest get zero, which
    preserves every row's total.
    """
    text = stream if isinstance(stream, str) else stream.read()
    store = AssignmentStore()
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        cols = line.split("\t")
        if lineno == 1 and tuple(cols) == HEADER:
            continue
        if len(cols) != len(HEADER):
            raise StoreError(f"line {lineno}: expected {len(HEADER)} columns")
        lemma, pos, role, cell, affix, evidence, tokens = cols
        m = _FEATURE_CELL.fullmatch(cell)
        if not m:
            raise StoreError(f"line {lineno}: bad feature {cell!r}")
        types = [e for e in evidence.split(",") if e]
        if not types:
            raise StoreError(f"line {lineno}: empty evidence")
        try:
            counts = {t: 0 for t in types}
            counts[types[0]] = int(tokens)
            store.add(lemma, pos, role, m.group(1), affix, counts, m.group(2))
        except ValueError as exc:
            raise StoreError(f"line {lineno}: {exc}") from None
    return store


# -- assignment -----------------------------------------------------------------


def assign_features(derivations: Iterable[Derivation], catalog: RuleCatalog,
                    store: AssignmentStore | None = None,
                    evidence: dict[str, int] | None = None) -> AssignmentStore:
    """Add the features cued by each derivation's rule to ``store``.

    The cue node (the derivation itself, or the first non-structural node
    under structural wrappers) gets the rule's derived features; its
    immediate base gets the base features.  Every derivation in one call is
    taken to share ``evidence`` (default: one token of the surface), which
    is counted once per assignment however many parses license it.
    Antonym features are added without a target; :func:`link_antonyms`
    resolves or drops them.
    """
    from ..analyzer import head

    store = AssignmentStore() if store is None else store
    keys: dict[tuple, None] = {}
    fallback: dict[tuple, dict[str, int]] = {}
    for d in derivations:
        node = head(d)
        rule = catalog.get(node.rule_id, node.rule)
        for f in sorted(rule.derived_features):
            key = (node.surface, rule.derived_pos, "derived", f, rule.id)
            keys.setdefault(key)
            fallback.setdefault(key, {d.surface: 1})
        base = node.base_lemma
        if base is not None:
            for f in sorted(rule.base_features):
                key = (base, rule.base_pos, "base", f, rule.id)
                keys.setdefault(key)
                fallback.setdefault(key, {d.surface: 1})
    for key in keys:
        lemma, pos, role, feature, affix = key
        store.add(lemma, pos, role, feature, affix, dict(evidence or fallback[key]))
    return store


def _stem(lemma: str, affix: str, catalog: RuleCatalog) -> str | None:
    rule = catalog.get(affix)
    if rule is None:
        return None
    return rule.residue(lemma)


def link_antonyms(store: AssignmentStore, catalog: RuleCatalog) -> AssignmentStore:
    """Point each antonym feature at its counterpart form, or drop it.

    ``colorful`` carries LESS-ANTONYM(colorless) only if a ``colorless``
    assignment with FUL-ANTONYM is in the store; both sides are set
    together, so links are symmetric.
    """
    out = store.copy()
    relational = [a for a in out if FEATURES[a.feature].relational]
    index: dict[tuple[str, str], list] = {}
    for a in relational:
        for affix in a.affixes:
            stem = _stem(a.lemma, affix, catalog)
            if stem is not None:
                index.setdefault((a.feature, stem), []).append(a)
    for a in relational:
        partner = None
        counterpart = FEATURES[a.feature].counterpart
        for affix in a.affixes:
            stem = _stem(a.lemma, affix, catalog)
            candidates = sorted(index.get((counterpart, stem), []), key=lambda b: b.key)
            candidates = [b for b in candidates if b.lemma != a.lemma]
            if candidates:
                partner = candidates[0]
                break
        if partner is None:
            out.discard(a.key)
        else:
            a.target = partner.lemma
    return out
