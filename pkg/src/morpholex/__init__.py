"""Acquire lexical semantic features from derivational affixes in a tagged corpus."""

from .analyzer import Analyzer, Derivation, analyze, analyze_ending, synthesize
from .corpus import SurfacePattern, TypeInventory, collect_candidates, normalize_inflection, read_tagged_corpus
from .eval import (
    PrecisionRow,
    coverage_stats,
    emit_report,
    load_gold,
    parse_report,
    precision_table,
    recall,
    summary_precision,
)
from .lexicon import LexEntry, Lexicon, default_lexicon, load_lexicon, serialize_lexicon
from .pipeline import RunConfig, extract, run_extraction
from .rules import AffixRule, RuleCatalog, builtin_rules, load_rules, serialize_rules, structural_rules

__version__ = "0.1.0"
