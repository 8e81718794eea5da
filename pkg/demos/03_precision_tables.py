"""
Precision tables and the summary statistic
===========================================

Precision is measured per (feature, affix) over word types: a type is
correct when the feature's axiom holds for all its relevant senses.  The
summary statistic weights each affix by its number of types.
"""

from pathlib import Path

from morpholex.eval import coverage_stats, emit_report, load_gold, parse_report, precision_table, summary_precision
from morpholex.semantics import parse_store

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

# A store of 63 -Aize verbs and a hand judgment for each one.
store = parse_store((FIXTURES / "aize" / "store.tsv").read_text())
gold = load_gold((FIXTURES / "aize" / "gold.tsv").read_text())
rows = precision_table(store, gold, "derived")
print(emit_report(rows))
print(f"internally {rows[0].precision}% ({rows[0].correct}/{rows[0].types})")

# The transcribed result tables, for derived forms and for bases.
derived = parse_report((FIXTURES / "table1.tsv").read_text())
base = parse_report((FIXTURES / "table2.tsv").read_text())
print(emit_report(derived))

# Per affix, the mean precision of its rows times its type count; summed
# and divided by all types.  Roughly three in four derived-form features
# and four in five base features come out right.
print(f"derived: {summary_precision(derived):.1f}%  base: {summary_precision(base):.1f}%")

cov = coverage_stats(derived, base)
print(f"types covered: {cov.derived_types} derived + {cov.base_types} base = {cov.total}")
