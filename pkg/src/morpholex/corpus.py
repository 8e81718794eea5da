"""Part-of-speech tagged corpus ingestion and candidate collection.

The corpus format is one sentence per line, each item written ``surface/TAG``
and separated by whitespace (the Penn Treebank rendering of tagged text).
"""

from __future__ import annotations

import re
import sys
from dataclasses import dataclass, field
from typing import IO, Iterable, Iterator

__all__ = [
    "PENN_TAGSET",
    "CorpusError",
    "Diagnostic",
    "TaggedToken",
    "TypeEntry",
    "TypeInventory",
    "SurfacePattern",
    "read_tagged_corpus",
    "collect_candidates",
    "normalize_inflection",
    "tag_to_pos",
    "write_diagnostics",
]

PENN_TAGSET = frozenset(
    """
    CC CD DT EX FW IN JJ JJR JJS LS MD NN NNS NNP NNPS PDT POS PRP PRP$ RB RBR
    RBS RP SYM TO UH VB VBD VBG VBN VBP VBZ WDT WP WP$ WRB
    , . : `` '' ( ) -LRB- -RRB- -NONE- # $
    """.split()
)


class CorpusError(Exception):
    """Fatal ingestion failure (e.g. the stream is not valid UTF-8)."""


@dataclass(frozen=True)
class Diagnostic:
    line: int
    column: int
    message: str

    def __str__(self) -> str:
        return f"WARN {self.line}:{self.column} {self.message}"


@dataclass(frozen=True)
class TaggedToken:
    surface: str
    tag: str
    position: tuple[int, int]


@dataclass
class TypeEntry:
    surface: str
    tag: str
    count: int = 0
    positions: list[tuple[int, int]] = field(default_factory=list)

    @property
    def key(self) -> tuple[str, str]:
        return self.surface, self.tag


class TypeInventory:
    """Distinct (surface, tag) types with token counts and positions.

    Read-only once built; ``diagnostics`` holds the per-token problems met
    while reading.
    """

    def __init__(self, entries: Iterable[TypeEntry] = (), diagnostics=()):
        self._entries: dict[tuple[str, str], TypeEntry] = {}
        for entry in entries:
            if entry.key in self._entries:
                raise ValueError(f"duplicate type {entry.surface}/{entry.tag}")
            if entry.count != len(entry.positions):
                raise ValueError(f"count mismatch for {entry.surface}/{entry.tag}")
            self._entries[entry.key] = entry
        self.diagnostics: tuple[Diagnostic, ...] = tuple(diagnostics)

    def __len__(self) -> int:
        return len(self._entries)

    def __iter__(self) -> Iterator[TypeEntry]:
        return iter(sorted(self._entries.values(), key=lambda e: e.key))

    def __contains__(self, key) -> bool:
        return key in self._entries

    def get(self, surface: str, tag: str) -> TypeEntry | None:
        return self._entries.get((surface, tag))

    def counts(self) -> dict[tuple[str, str], int]:
        return {k: e.count for k, e in self._entries.items()}

    @property
    def token_count(self) -> int:
        return sum(e.count for e in self._entries.values())


@dataclass(frozen=True)
class SurfacePattern:
    """Orthographic and tag regular expressions used to collect candidates.

    Both are searched (``re.search``) against the uppercased surface and the
    tag respectively, so anchors must be written explicitly.
    """

    orthographic_pattern: str
    tag_pattern: str

    def __post_init__(self):
        try:
            object.__setattr__(self, "_ortho", re.compile(self.orthographic_pattern))
            object.__setattr__(self, "_tag", re.compile(self.tag_pattern))
        except re.error as exc:
            raise ValueError(f"bad surface pattern: {exc}") from None

    def matches(self, surface: str, tag: str) -> bool:
        return bool(self._ortho.search(surface.upper()) and self._tag.search(tag))

    def matches_tag(self, tag: str) -> bool:
        return bool(self._tag.search(tag))


def _iter_tokens(text: str, tagset, diagnostics: list[Diagnostic]) -> Iterator[TaggedToken]:
    for lineno, line in enumerate(text.splitlines(), start=1):
        for match in re.finditer(r"\S+", line):
            item, column = match.group(), match.start() + 1
            surface, slash, tag = item.rpartition("/")
            if not slash or not surface or not tag:
                diagnostics.append(Diagnostic(lineno, column, f"malformed item {item!r}"))
                continue
            if tagset is not None and tag not in tagset:
                diagnostics.append(Diagnostic(lineno, column, f"unknown tag {tag!r}"))
                continue
            yield TaggedToken(surface, tag, (lineno, column))


def read_tagged_corpus(stream: IO | str | bytes, tagset=PENN_TAGSET) -> TypeInventory:
    """Build a :class:`TypeInventory` from a tagged corpus stream.

    ``stream`` may be a text or binary file object, or the corpus content
    itself.  Malformed items are skipped and reported in
    ``inventory.diagnostics``; bytes that are not UTF-8 raise
    :class:`CorpusError`.  Pass ``tagset=None`` to accept any tag.
    """
    data = stream if isinstance(stream, (str, bytes)) else stream.read()
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise CorpusError(f"corpus is not valid UTF-8 at byte {exc.start}") from None

    diagnostics: list[Diagnostic] = []
    entries: dict[tuple[str, str], TypeEntry] = {}
    for token in _iter_tokens(data, tagset, diagnostics):
        entry = entries.get((token.surface, token.tag))
        if entry is None:
            entry = entries[token.surface, token.tag] = TypeEntry(token.surface, token.tag)
        entry.count += 1
        entry.positions.append(token.position)
    return TypeInventory(entries.values(), diagnostics)


def write_diagnostics(diagnostics: Iterable[Diagnostic], stream=None) -> None:
    stream = sys.stderr if stream is None else stream
    for diag in diagnostics:
        print(diag, file=stream)


def collect_candidates(inventory: TypeInventory | Iterable[TypeEntry], pattern: SurfacePattern) -> list[TypeEntry]:
    """Types whose uppercased surface and tag both match ``pattern``."""
    found = [e for e in inventory if pattern.matches(e.surface, e.tag)]
    return sorted(found, key=lambda e: e.key)


# tag -> ordered (suffix, replacement) un-inflection rules; "UNDOUBLE" strips
# the suffix and then one of a doubled final consonant
_UNINFLECT = {
    "VBZ": [("ies", "y"), ("es", "e"), ("es", ""), ("s", "")],
    "NNS": [("ies", "y"), ("es", "e"), ("es", ""), ("s", "")],
    "VBD": [("ed", "e"), ("ed", ""), ("ed", "UNDOUBLE")],
    "VBN": [("ed", "e"), ("ed", ""), ("ed", "UNDOUBLE")],
    "VBG": [("ing", "e"), ("ing", ""), ("ing", "UNDOUBLE")],
}
_BASE_TAGS = frozenset({"VB", "VBP", "NN", "JJ"})
_DOUBLED = re.compile(r"([bcdfgklmnprstvz])\1$")


def normalize_inflection(surface: str, tag: str) -> list[str]:
    """Candidate lemmas for an inflected form, in rule order.

    Emits every applicable un-inflection rule output; later validation
    (lexicon lookup, analysis) picks among them.  Base-form tags return the
    surface itself.  Unsupported tags give an empty list.

    >>> normalize_inflection("centralizing", "VBG")
    ['centralize', 'centraliz']
    """
    word = surface.lower()
    if tag in _BASE_TAGS:
        return [word]
    rules = _UNINFLECT.get(tag)
    if rules is None:
        return []
    out: list[str] = []
    for suffix, replacement in rules:
        if not word.endswith(suffix) or len(word) <= len(suffix):
            continue
        stem = word[: -len(suffix)]
        if replacement == "UNDOUBLE":
            if not _DOUBLED.search(stem):
                continue
            lemma = stem[:-1]
        else:
            lemma = stem + replacement
        if lemma and lemma not in out:
            out.append(lemma)
    return out


def inflect(lemma: str, tag: str) -> list[str]:
    """Forward application of the un-inflection table (test helper).

    Every form returned here normalizes back to ``lemma``.
    """
    out = []
    for suffix, replacement in _UNINFLECT.get(tag, []):
        if replacement == "UNDOUBLE":
            if re.search(r"[aeiou][bcdfgklmnprtvz]$", lemma):
                out.append(lemma + lemma[-1] + suffix)
        elif lemma.endswith(replacement) and len(lemma) > len(replacement):
            stem = lemma[: len(lemma) - len(replacement)] if replacement else lemma
            out.append(stem + suffix)
    return list(dict.fromkeys(out))


_TAG_POS = (("V", "verb"), ("N", "noun"), ("J", "adjective"), ("R", "adverb"))


def tag_to_pos(tag: str) -> str:
    for prefix, pos in _TAG_POS:
        if tag.startswith(prefix):
            return pos
    return "other"
