"""Command-line interface: ``morpholex <command> ...``.

Exit codes: 0 success, 1 usage or validation error (bad flags, malformed
input files), 2 runtime error (unreadable files and the like).
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from pathlib import Path

from . import __version__
from .analyzer import DEFAULT_MAX_DEPTH, Analyzer
from .corpus import CorpusError, normalize_inflection
from .eval import EvalError, emit_report, load_gold, parse_report, precision_table, recall, summary_precision
from .lexicon import LexiconError, default_lexicon, load_lexicon
from .pipeline import RunConfig, run_extraction
from .rules import RuleCatalog, RuleError, builtin_rules, load_rules, serialize_rules, structural_rules
from .semantics import FEATURES, ModelError, StoreError, check_axiom, instantiate_axiom, parse_model, parse_store

RULES_ENV = "MORPHOLEX_RULES"

log = logging.getLogger("morpholex")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; ours is 1
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _positive(value: str) -> int:
    n = int(value)
    if n < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return n


def _read(path) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _catalog(path) -> RuleCatalog:
    path = path or os.environ.get(RULES_ENV)
    if not path:
        return builtin_rules()
    return load_rules(_read(path))


# -- commands -------------------------------------------------------------------


def cmd_extract(args) -> int:
    catalog = _catalog(args.rules)
    unknown = [a for a in args.affix if a not in catalog]
    if unknown:
        raise UsageError(f"unknown affix id(s): {', '.join(unknown)}")
    config = RunConfig(args.corpus, args.lexicon, args.out, args.rules or os.environ.get(RULES_ENV),
                       args.max_depth, args.invent_bases, tuple(args.affix), args.jobs)
    report = run_extraction(config)
    for d in report.diagnostics:
        print(d, file=sys.stderr)
    sys.stdout.write(report.counts_tsv())
    return 0


def cmd_analyze(args) -> int:
    lexicon = load_lexicon(_read(args.lexicon)) if args.lexicon else default_lexicon()
    catalog = _catalog(args.rules)
    rules = [catalog.get(r) for r in args.rule] if args.rule else list(catalog)
    if None in rules:
        raise UsageError(f"unknown rule id in {args.rule}")
    full = catalog | RuleCatalog(r for r in structural_rules() if r.id not in catalog)
    analyzer = Analyzer(lexicon, full, args.max_depth, args.invent_bases)
    found = 0
    for rule in rules:
        if not rule.pattern.matches(args.word, args.tag):
            continue
        for lemma in normalize_inflection(args.word, args.tag):
            derivations = analyzer.analyze(lemma, rule, args.tag)
            for d in derivations:
                print(d.bracket())
            if derivations:
                found += len(derivations)
                break
    if not found:
        print(f"no analysis for {args.word}/{args.tag}", file=sys.stderr)
    return 0


def cmd_evaluate(args) -> int:
    store = parse_store(_read(args.store))
    gold = load_gold(_read(args.gold))
    rows = precision_table(store, gold, args.role)
    for r in rows:
        if r.unjudged:
            print(f"{r.feature} {r.affix}: {len(r.unjudged)} unjudged: {' '.join(r.unjudged)}", file=sys.stderr)
    sys.stdout.write(emit_report(rows, args.format))
    return 0


def cmd_summary(args) -> int:
    print(f"{summary_precision(parse_report(_read(args.table))):.1f}")
    return 0


def _lemmas(text: str, affix: str | None) -> set[str]:
    """A plain lemma list, or the derived lemmas of a store TSV."""
    if text.startswith("lemma\t"):
        store = parse_store(text)
        return {a.lemma for a in store.filter(role="derived", affix=affix)}
    return {line.strip() for line in text.splitlines() if line.strip() and not line.startswith("#")}


def cmd_recall(args) -> int:
    extracted = _lemmas(_read(args.extracted), args.affix)
    gold = _lemmas(_read(args.gold), args.affix)
    print(f"{recall(extracted, gold):.1f}")
    return 0


def cmd_report(args) -> int:
    sys.stdout.write(emit_report(parse_report(_read(args.eval)), args.format))
    return 0


def cmd_rules(args) -> int:
    catalog = _catalog(args.rules)
    if args.dump:
        sys.stdout.write(serialize_rules(catalog))
        return 0
    for r in catalog:
        features = ",".join(sorted(r.derived_features)) or "-"
        print(f"{r.id}\t{r.kind}\t{r.base_pos or '-'}\t{features}")
    return 0


def _feature(name: str):
    feature = FEATURES.get(name)
    if feature is None:
        raise UsageError(f"unknown feature {name!r}")
    if not feature.checkable:
        raise UsageError(f"{name} has no axiom ({feature.doc})")
    return feature


def cmd_axioms(args) -> int:
    feature = _feature(args.feature)
    if args.predicate:
        print(instantiate_axiom(feature.axiom, args.predicate, args.related))
    else:
        print(feature.axiom)
    return 0


def cmd_check_model(args) -> int:
    feature = _feature(args.axiom_of)
    axiom = instantiate_axiom(feature.axiom, args.predicate, args.related)
    print(check_axiom(parse_model(_read(args.model)), axiom))
    return 0


# -- parser -------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="morpholex", description="Lexical semantic features from derivational affixes.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True

    def add(name, func, help):
        p = sub.add_parser(name, help=help, description=help)
        p.add_argument("--version", action="version", version=f"morpholex {__version__}")
        p.set_defaults(func=func)
        return p

    p = add("extract", cmd_extract, "run extraction over a tagged corpus")
    p.add_argument("--corpus", required=True, type=Path)
    p.add_argument("--lexicon", required=True, type=Path)
    p.add_argument("--rules", type=Path, help=f"rule file (default: ${RULES_ENV} or the builtin catalog)")
    p.add_argument("--out", required=True, type=Path, help="directory for store.tsv and report.tsv")
    p.add_argument("--affix", action="append", default=[], metavar="ID", help="restrict to this rule (repeatable)")
    p.add_argument("--max-depth", type=_positive, default=DEFAULT_MAX_DEPTH)
    p.add_argument("--invent-bases", action="store_true")
    p.add_argument("--jobs", type=_positive, default=1, help="per-affix worker threads")

    p = add("analyze", cmd_analyze, "print every derivation of a word")
    p.add_argument("word")
    p.add_argument("--tag", required=True)
    p.add_argument("--affix", "--rule", dest="rule", action="append", default=[], metavar="ID", help="only this rule (repeatable)")
    p.add_argument("--lexicon", type=Path, help="default: the bundled fixture lexicon")
    p.add_argument("--rules", type=Path)
    p.add_argument("--max-depth", type=_positive, default=DEFAULT_MAX_DEPTH)
    p.add_argument("--invent-bases", action="store_true")

    p = add("evaluate", cmd_evaluate, "precision table of a store against gold judgments")
    p.add_argument("--store", required=True, type=Path)
    p.add_argument("--gold", required=True, type=Path)
    p.add_argument("--role", required=True, choices=("derived", "base"))
    p.add_argument("--format", choices=("tsv", "text"), default="tsv")

    p = add("summary", cmd_summary, "types-weighted precision of a table")
    p.add_argument("--table", required=True, type=Path)

    p = add("recall", cmd_recall, "recall of extracted lemmas against an exhaustive gold list")
    p.add_argument("--extracted", required=True, type=Path, help="lemma list or store TSV")
    p.add_argument("--gold", required=True, type=Path, help="lemma list or store TSV")
    p.add_argument("--affix", help="with a store, count only this rule's derived lemmas")

    p = add("report", cmd_report, "render an evaluation TSV")
    p.add_argument("--eval", required=True, type=Path)
    p.add_argument("--format", choices=("text", "tsv"), default="text")

    p = add("rules", cmd_rules, "list or dump the rule catalog")
    p.add_argument("--dump", action="store_true", help="print the catalog in rule-file format")
    p.add_argument("--rules", type=Path)

    p = add("axioms", cmd_axioms, "print a feature's axiom, optionally instantiated")
    p.add_argument("feature")
    p.add_argument("--predicate")
    p.add_argument("--related", help="the related predicate Q, where the axiom has one")

    p = add("check-model", cmd_check_model, "check an instantiated axiom on a model file")
    p.add_argument("--model", required=True, type=Path)
    p.add_argument("--axiom-of", required=True, metavar="FEATURE")
    p.add_argument("--predicate", required=True)
    p.add_argument("--related")
    return parser


# flags whose values are rule ids, which often start with "-"
_ID_FLAGS = ("--affix", "--rule")


def _join_id_flags(argv: list[str]) -> list[str]:
    out, i = [], 0
    while i < len(argv):
        if argv[i] in _ID_FLAGS and i + 1 < len(argv):
            out.append(f"{argv[i]}={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


_VALIDATION = (UsageError, CorpusError, LexiconError, RuleError, StoreError, EvalError, ModelError)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(_join_id_flags(list(sys.argv[1:] if argv is None else argv)))
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except _VALIDATION as exc:
        print(f"morpholex {args.command}: {exc}", file=sys.stderr)
        return 1
    except (OSError, UnicodeDecodeError) as exc:
        print(f"morpholex {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
