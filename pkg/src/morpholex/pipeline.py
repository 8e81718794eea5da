"""End-to-end extraction: corpus -> candidates -> lemmas -> parses -> store."""

from __future__ import annotations

import logging
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from .analyzer import DEFAULT_MAX_DEPTH, Analyzer, Derivation
from .corpus import TypeEntry, TypeInventory, collect_candidates, normalize_inflection, read_tagged_corpus
from .lexicon import Lexicon, load_lexicon
from .rules import AffixRule, RuleCatalog, builtin_rules, load_rules, structural_rules
from .semantics.store import AssignmentStore, assign_features, emit_store, link_antonyms

log = logging.getLogger(__name__)

REPORT_COLUMNS = ("affix", "candidates", "analyzed", "rejected", "assignments")


@dataclass
class RunConfig:
    corpus: Path
    lexicon: Path
    out: Path
    rules: Path | None = None  # None: builtin catalog
    max_depth: int = DEFAULT_MAX_DEPTH
    invent_bases: bool = False
    affixes: tuple[str, ...] = ()  # empty: every rule
    jobs: int = 1

    def __post_init__(self):
        self.corpus, self.lexicon, self.out = Path(self.corpus), Path(self.lexicon), Path(self.out)
        if self.rules is not None:
            self.rules = Path(self.rules)
        self.affixes = tuple(self.affixes)


@dataclass
class AffixCounts:
    affix: str
    candidates: int = 0
    analyzed: int = 0
    rejected: int = 0
    assignments: int = 0


@dataclass
class ExtractionReport:
    store: AssignmentStore
    counts: list[AffixCounts]
    diagnostics: list = field(default_factory=list)

    def counts_tsv(self) -> str:
        lines = ["\t".join(REPORT_COLUMNS)]
        for c in self.counts:
            lines.append(f"{c.affix}\t{c.candidates}\t{c.analyzed}\t{c.rejected}\t{c.assignments}")
        return "".join(line + "\n" for line in lines)


def _choose_lemma(entry: TypeEntry, rule: AffixRule, analyzer: Analyzer):
    """First lemma candidate (in normalization order) that parses."""
    candidates = normalize_inflection(entry.surface, entry.tag)
    if rule.kind == "ending":
        found = [(c, analyzer.analyze_ending(c, rule)) for c in candidates]
        found = [(c, d) for c, d in found if d is not None]
        if not found:
            return None, []
        # prefer a lemma the lexicon knows; endings have no base to check
        known = [(c, d) for c, d in found if c in analyzer.lexicon]
        lemma, d = (known or found)[0]
        return lemma, [d]
    for lemma in candidates:
        derivations = analyzer.analyze(lemma, rule, entry.tag)
        if derivations:
            return lemma, derivations
    return None, []


def extract_rule(inventory: TypeInventory, rule: AffixRule, analyzer: Analyzer,
                 catalog: RuleCatalog) -> tuple[AssignmentStore, AffixCounts]:
    """Extraction for a single affix rule; returns a batch store."""
    counts = AffixCounts(rule.id)
    by_lemma: dict[str, tuple[list[Derivation], dict[str, int]]] = {}
    for entry in collect_candidates(inventory, rule.pattern):
        counts.candidates += 1
        lemma, derivations = _choose_lemma(entry, rule, analyzer)
        if lemma is None:
            counts.rejected += 1
            log.debug("%s: no parse for %s/%s", rule.id, entry.surface, entry.tag)
            continue
        counts.analyzed += 1
        derivs, evidence = by_lemma.setdefault(lemma, (derivations, {}))
        evidence[f"{entry.surface}/{entry.tag}"] = entry.count
    store = AssignmentStore()
    for lemma in sorted(by_lemma):
        derivations, evidence = by_lemma[lemma]
        assign_features(derivations, catalog, store, evidence)
    return store, counts


def extract(inventory: TypeInventory, lexicon: Lexicon, catalog: RuleCatalog | None = None,
            structural: RuleCatalog | None = None, affixes=(), max_depth: int = DEFAULT_MAX_DEPTH,
            invent_bases: bool = False, jobs: int = 1) -> ExtractionReport:
    """In-memory extraction over an inventory; see :func:`run_extraction`.

    With ``jobs > 1`` the per-affix batches run in a thread pool; batches
    are merged in catalog order, so the result does not depend on ``jobs``.
    """
    catalog = builtin_rules() if catalog is None else catalog
    structural = structural_rules() if structural is None else structural
    wanted = catalog.subset(affixes) if affixes else catalog
    full = catalog | RuleCatalog(r for r in structural if r.id not in catalog)
    analyzer = Analyzer(lexicon, full, max_depth, invent_bases)

    def run(rule):
        return extract_rule(inventory, rule, analyzer, full)

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(run, wanted))
    else:
        results = [run(rule) for rule in wanted]
    store = AssignmentStore()
    counts = []
    for batch, c in results:
        store = store.merge(batch)
        counts.append(c)
    store = link_antonyms(store, full)
    for c in counts:
        c.assignments = sum(1 for a in store for affix in a.affixes if affix == c.affix)
    return ExtractionReport(store, counts, list(inventory.diagnostics))


def run_extraction(config: RunConfig) -> ExtractionReport:
    """Run the pipeline from files and write ``store.tsv`` and ``report.tsv``.

    Unreadable inputs raise; per-token corpus problems end up in
    ``report.diagnostics``.
    """
    with open(config.corpus, "rb") as fh:
        inventory = read_tagged_corpus(fh)
    with open(config.lexicon, encoding="utf-8") as fh:
        lexicon = load_lexicon(fh)
    if config.rules is not None:
        with open(config.rules, encoding="utf-8") as fh:
            catalog = load_rules(fh)
    else:
        catalog = builtin_rules()
    report = extract(inventory, lexicon, catalog, affixes=config.affixes,
                     max_depth=config.max_depth, invent_bases=config.invent_bases, jobs=config.jobs)
    os.makedirs(config.out, exist_ok=True)
    _write(config.out / "store.tsv", emit_store(report.store))
    _write(config.out / "report.tsv", report.counts_tsv())
    return report


def _write(path: Path, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)
