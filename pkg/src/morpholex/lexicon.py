"""Base lexicon: citation forms with part of speech and morphosyntactic flags.

File format is UTF-8 TSV, one entry per line::

    lemma<TAB>pos<TAB>flag,flag,...

Lines starting with ``#`` are comments, except the directive
``#!flags: a, b`` which extends the flag inventory for the rest of the file.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import IO, Iterable

POS_CLASSES = ("noun", "verb", "adjective", "adverb", "other")
DEFAULT_FLAGS = frozenset({"uninflected", "latinate", "abstract"})


class LexiconError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass(frozen=True, order=True)
class LexEntry:
    lemma: str
    pos: str
    flags: frozenset = frozenset()
    invented: bool = False

    def __str__(self) -> str:
        return f"{self.lemma}/{self.pos}"


class Lexicon:
    """Immutable lookup table of :class:`LexEntry` keyed by (lemma, pos)."""

    def __init__(self, entries: Iterable[LexEntry] = (), flag_inventory=DEFAULT_FLAGS):
        self.flag_inventory = frozenset(flag_inventory)
        merged: dict[tuple[str, str], set] = {}
        for entry in entries:
            if entry.pos not in POS_CLASSES:
                raise LexiconError(f"unknown part of speech {entry.pos!r}")
            unknown = set(entry.flags) - self.flag_inventory
            if unknown:
                raise LexiconError(f"unknown flag(s) {', '.join(sorted(unknown))}")
            merged.setdefault((entry.lemma, entry.pos), set()).update(entry.flags)
        self._entries = {
            key: LexEntry(key[0], key[1], frozenset(flags)) for key, flags in merged.items()
        }
        self._by_lemma: dict[str, list[LexEntry]] = {}
        for key in sorted(self._entries):
            self._by_lemma.setdefault(key[0], []).append(self._entries[key])

    def __len__(self) -> int:
        return len(self._entries)

    def __iter__(self):
        return iter(sorted(self._entries.values()))

    def __contains__(self, lemma: str) -> bool:
        return lemma in self._by_lemma

    def __eq__(self, other) -> bool:
        if not isinstance(other, Lexicon):
            return NotImplemented
        return self._entries == other._entries and self.flag_inventory == other.flag_inventory

    def lookup(self, lemma: str, pos: str | None = None, required_flags=()) -> list[LexEntry]:
        """Entries for ``lemma``; ``pos=None`` is the wildcard."""
        required = set(required_flags)
        return [
            e
            for e in self._by_lemma.get(lemma, ())
            if (pos is None or e.pos == pos) and required <= e.flags
        ]

    def extended(self, entries: Iterable[LexEntry]) -> "Lexicon":
        return Lexicon([*self, *entries], self.flag_inventory)


def lookup(lexicon: Lexicon, lemma: str, pos: str | None = None, required_flags=()) -> list[LexEntry]:
    return lexicon.lookup(lemma, pos, required_flags)


def parse_lexicon(text: str) -> Lexicon:
    inventory = set(DEFAULT_FLAGS)
    entries = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip("\r")
        if line.startswith("#!flags:"):
            inventory.update(f.strip() for f in line[len("#!flags:"):].split(",") if f.strip())
            continue
        if not line.strip() or line.startswith("#"):
            continue
        cols = line.split("\t")
        if len(cols) == 2:
            cols.append("")
        if len(cols) != 3 or not cols[0]:
            raise LexiconError("expected lemma<TAB>pos<TAB>flags", lineno)
        lemma, pos, flag_col = cols
        if pos not in POS_CLASSES:
            raise LexiconError(f"unknown part of speech {pos!r}", lineno)
        flags = frozenset(f.strip() for f in flag_col.split(",") if f.strip())
        unknown = flags - inventory
        if unknown:
            raise LexiconError(f"unknown flag(s) {', '.join(sorted(unknown))}", lineno)
        entries.append(LexEntry(lemma.lower(), pos, flags))
    return Lexicon(entries, inventory)


def load_lexicon(stream: IO | str) -> Lexicon:
    """Read a lexicon from a text stream (or a string holding the content)."""
    text = stream if isinstance(stream, str) else stream.read()
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    return parse_lexicon(text)


def serialize_lexicon(lexicon: Lexicon) -> str:
    """Canonical TSV; ``load_lexicon(serialize_lexicon(x)) == x``."""
    lines = []
    extra = sorted(lexicon.flag_inventory - DEFAULT_FLAGS)
    if extra:
        lines.append("#!flags: " + ", ".join(extra))
    for entry in lexicon:
        lines.append(f"{entry.lemma}\t{entry.pos}\t{','.join(sorted(entry.flags))}")
    return "".join(line + "\n" for line in lines)


def default_lexicon() -> Lexicon:
    """The small fixture lexicon shipped with the package."""
    from importlib import resources

    text = resources.files("morpholex").joinpath("data/fixtures/lexicon.tsv").read_text("utf-8")
    return parse_lexicon(text)
