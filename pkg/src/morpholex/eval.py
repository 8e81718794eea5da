"""Precision against gold judgments, plus recall, coverage and report formats.

Report/table TSV columns: feature, affix, role, types, correct, precision.
``correct`` may be empty for transcribed tables that only give percentages.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass, field
from typing import IO, Iterable

from .semantics.store import AssignmentStore

REPORT_HEADER = ("feature", "affix", "role", "types", "correct", "precision")


class EvalError(ValueError):
    pass


@dataclass(frozen=True)
class GoldJudgment:
    lemma: str
    affix: str
    feature: str
    role: str
    correct: bool

    @property
    def key(self) -> tuple[str, str, str, str]:
        return self.lemma, self.affix, self.feature, self.role


@dataclass(frozen=True)
class PrecisionRow:
    feature: str
    affix: str
    role: str
    types: int
    correct: int | None
    precision: float
    unjudged: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if self.types < 0:
            raise EvalError("negative type count")
        if self.correct is not None and not 0 <= self.correct <= self.types:
            raise EvalError(f"correct={self.correct} outside 0..{self.types}")


def percent(correct: int, types: int) -> float:
    """Percentage to one decimal."""
    return round(100.0 * correct / types, 1) if types else 0.0


def load_gold(stream: IO | str) -> dict[tuple, GoldJudgment]:
    """Gold TSV: lemma, affix, feature, role, 1|0."""
    text = stream if isinstance(stream, str) else stream.read()
    gold: dict[tuple, GoldJudgment] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.startswith("#"):
            continue
        cols = line.split("\t")
        if len(cols) != 5 or cols[4] not in ("0", "1"):
            raise EvalError(f"line {lineno}: expected lemma, affix, feature, role, 1|0")
        j = GoldJudgment(cols[0], cols[1], cols[2], cols[3], cols[4] == "1")
        if j.key in gold:
            raise EvalError(f"line {lineno}: duplicate judgment for {j.key}")
        gold[j.key] = j
    return gold


def precision_table(store: AssignmentStore, gold, role: str) -> list[PrecisionRow]:
    """One row per (feature, affix) of ``role`` present in the store.

    Lemmas without a gold judgment are left out of the counts and listed in
    the row's ``unjudged`` field; nothing is guessed.
    """
    if not isinstance(gold, dict):
        gold = {j.key: j for j in gold}
    groups: dict[tuple[str, str], set[str]] = defaultdict(set)
    for a in store.filter(role=role):
        for affix in a.affixes:
            groups[a.feature, affix].add(a.lemma)
    rows = []
    for (feature, affix), lemmas in sorted(groups.items(), key=lambda kv: (kv[0][1], kv[0][0])):
        judged, missing = [], []
        for lemma in sorted(lemmas):
            j = gold.get((lemma, affix, feature, role))
            (missing if j is None else judged).append((lemma, j))
        correct = sum(1 for _, j in judged if j.correct)
        rows.append(PrecisionRow(feature, affix, role, len(judged), correct,
                                 percent(correct, len(judged)), tuple(m for m, _ in missing)))
    return rows


def summary_precision(rows: Iterable[PrecisionRow]) -> float:
    """Types-weighted precision over affixes.

    Each affix contributes its type count times the mean precision of its
    feature rows; the sum is divided by the total type count (each affix's
    types counted once).
    """
    rows = list(rows)
    if not rows:
        raise EvalError("no rows to summarize")
    if len({r.role for r in rows}) > 1:
        raise EvalError("rows mix derived and base roles")
    by_affix: dict[str, list[PrecisionRow]] = defaultdict(list)
    for r in rows:
        by_affix[r.affix].append(r)
    weighted = total = 0.0
    for affix, group in sorted(by_affix.items()):
        types = {r.types for r in group}
        if len(types) != 1:
            raise EvalError(f"inconsistent type counts for {affix}: {sorted(types)}")
        n = types.pop()
        weighted += n * sum(r.precision for r in group) / len(group)
        total += n
    if total == 0:
        raise EvalError("no types to summarize")
    return weighted / total


def recall(extracted: Iterable[str], gold_exhaustive: Iterable[str]) -> float:
    gold = set(gold_exhaustive)
    if not gold:
        raise EvalError("recall is undefined for an empty gold list")
    return 100.0 * len(set(extracted) & gold) / len(gold)


@dataclass(frozen=True)
class Coverage:
    derived_types: int
    base_types: int
    distinct_derived: int
    distinct_base: int
    per_affix: dict

    @property
    def total(self) -> int:
        return self.derived_types + self.base_types


def coverage_stats(*sources) -> Coverage:
    """Type counts over stores and/or precision-row tables.

    Per (affix, role) the count is the number of distinct lemmas (stores) or
    the affix's type count (tables).  Totals are sums of the per-affix
    counts; ``distinct_*`` count unique lemmas across stores only.
    """
    per_affix: dict[tuple[str, str], int] = {}
    lemmas = {"derived": set(), "base": set()}
    for source in sources:
        if isinstance(source, AssignmentStore):
            found: dict[tuple[str, str], set] = defaultdict(set)
            for a in source:
                lemmas[a.role].add((a.lemma, a.pos))
                for affix in a.affixes:
                    found[affix, a.role].add(a.lemma)
            for key, s in found.items():
                per_affix[key] = per_affix.get(key, 0) + len(s)
        else:
            seen: dict[tuple[str, str], int] = {}
            for r in source:
                if seen.setdefault((r.affix, r.role), r.types) != r.types:
                    raise EvalError(f"inconsistent type counts for {r.affix}")
            for key, n in seen.items():
                per_affix[key] = per_affix.get(key, 0) + n
    derived = sum(n for (_, role), n in per_affix.items() if role == "derived")
    base = sum(n for (_, role), n in per_affix.items() if role == "base")
    return Coverage(derived, base, len(lemmas["derived"]), len(lemmas["base"]), dict(sorted(per_affix.items())))


# -- reports ------------------------------------------------------------------------


def _fmt_precision(p: float) -> str:
    return f"{p:.1f}".rstrip("0").rstrip(".")


def emit_report(rows: Iterable[PrecisionRow], format: str = "text") -> str:
    rows = list(rows)
    if format == "tsv":
        lines = ["\t".join(REPORT_HEADER)]
        for r in rows:
            correct = "" if r.correct is None else str(r.correct)
            lines.append("\t".join([r.feature, r.affix, r.role, str(r.types), correct, _fmt_precision(r.precision)]))
        return "".join(line + "\n" for line in lines)
    if format != "text":
        raise EvalError(f"unknown report format {format!r}")
    width = max([len("Feature")] + [len(r.feature) for r in rows])
    awidth = max([len("Affix")] + [len(r.affix) for r in rows])
    lines = [f"{'Feature':<{width}}  {'Affix':<{awidth}}  {'Types':>5}  {'Precision':>9}"]
    for r in rows:
        note = f"  ({len(r.unjudged)} unjudged)" if r.unjudged else ""
        lines.append(f"{r.feature:<{width}}  {r.affix:<{awidth}}  {r.types:>5}  {int(math.floor(r.precision + 0.5)):>8d}%{note}")
    return "".join(line.rstrip() + "\n" for line in lines)


def parse_report(stream: IO | str) -> list[PrecisionRow]:
    """Read the TSV report format (also used for the transcribed tables)."""
    text = stream if isinstance(stream, str) else stream.read()
    rows = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.startswith("#"):
            continue
        cols = line.split("\t")
        if tuple(cols) == REPORT_HEADER:
            continue
        if len(cols) != len(REPORT_HEADER):
            raise EvalError(f"line {lineno}: expected {len(REPORT_HEADER)} columns")
        feature, affix, role, types, correct, precision = cols
        try:
            rows.append(PrecisionRow(feature, affix, role, int(types),
                                     int(correct) if correct else None, float(precision)))
        except ValueError as exc:
            raise EvalError(f"line {lineno}: {exc}") from None
    return rows
