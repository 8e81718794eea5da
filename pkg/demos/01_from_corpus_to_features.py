"""
From a tagged corpus to lexical semantic features
==================================================

Walks one affix, -ize on adjectival bases, through every step of the
method: collect candidate types by surface pattern, undo inflection,
strip the affix against a lexicon, then read features off the parse.
"""

from pathlib import Path

from morpholex import builtin_rules, default_lexicon, read_tagged_corpus
from morpholex.analyzer import Analyzer
from morpholex.corpus import collect_candidates, normalize_inflection
from morpholex.pipeline import extract
from morpholex.rules import structural_rules
from morpholex.semantics import assign_features, emit_store

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

# The corpus is one "surface/TAG" token per item.  Reading it yields word
# types with counts; anything malformed would end up in diagnostics.
inventory = read_tagged_corpus((FIXTURES / "mini.corpus.txt").read_bytes())
print(f"{len(inventory)} types, {inventory.token_count} tokens")

# Candidates are collected by a regular expression over the uppercased
# surface plus a tag pattern.  "seize" matches too; the analyzer will
# have to throw it out.
rule = builtin_rules()["-Aize"]
candidates = collect_candidates(inventory, rule.pattern)
for entry in candidates:
    print(f"  candidate {entry.surface}/{entry.tag} x{entry.count}")

# Inflected forms are mapped back to lemma candidates by a small rule
# table.  Every candidate is kept; analysis decides which one is real.
print(normalize_inflection("centralizing", "VBG"))

# Analysis strips -ize and looks the residue up as a latinate adjective.
# Other affixes may also build the base, so nested parses come out too.
analyzer = Analyzer(default_lexicon(), builtin_rules() | structural_rules())
for word in ("centralize", "traditionalize", "formalize", "seize"):
    parses = analyzer.analyze(word, rule, "VB")
    print(f"  {word:15s}", [d.bracket() for d in parses] or "no parse")

# Fixed correspondences turn a parse into assignments: the derived verb
# is a change of state whose result is the base state; the base is
# ize-dependent.
print(emit_store(assign_features(analyzer.analyze("centralize", rule), builtin_rules())))

# The pipeline does all of the above for every affix at once and merges
# the per-affix batches.  Note "table", a deliberate -le false positive.
print(emit_store(extract(inventory, default_lexicon()).store))
