import pytest
from hypothesis import given, strategies as st

from morpholex.analyzer import Analyzer, analyze_ending
from morpholex.rules import builtin_rules, structural_rules
from morpholex.semantics import (
    AssignmentStore,
    StoreError,
    assign_features,
    emit_store,
    link_antonyms,
    parse_store,
)
from conftest import FIXTURES

CUE = builtin_rules()
FULL = CUE | structural_rules()


@pytest.fixture(scope="module")
def analyzer(lexicon):
    return Analyzer(lexicon, FULL)


def keys(store):
    return {a.key for a in store}


def test_centralize_assignments(analyzer):
    store = assign_features(analyzer.analyze("centralize", CUE["-Aize"]), FULL)
    assert keys(store) == {
        ("centralize", "verb", "derived", "CHANGE-OF-STATE"),
        ("centralize", "verb", "derived", "RSTATE-EQ-BASE"),
        ("central", "adjective", "base", "IZE-DEPENDENT"),
    }


def test_pseudo_derivation_has_no_base_assignment():
    store = assign_features([analyze_ending("chuckle", CUE["-le"])], FULL)
    assert keys(store) == {("chuckle", "verb", "derived", "ACTIVITY")}


def test_spurious_subsidize_pair_enters_store(analyzer):
    store = assign_features(analyzer.analyze("subsidize", CUE["-Nize"]), FULL)
    assert ("sidize", "verb", "derived", "CHANGE-OF-STATE") in store
    assert ("subsidize", "verb", "derived", "CHANGE-OF-STATE") in store


def test_nested_base_feature_goes_to_immediate_base():
    from morpholex.lexicon import LexEntry, Lexicon

    a = Analyzer(Lexicon([LexEntry("tradition", "noun")]), FULL)
    store = assign_features(a.analyze("traditionalize", CUE["-Aize"]), FULL)
    assert ("traditional", "adjective", "base", "IZE-DEPENDENT") in store
    assert not any(x.lemma == "tradition" for x in store)


def test_parses_of_one_word_share_evidence(analyzer):
    ds = analyzer.analyze("unfasten", CUE["Vun-"])
    assert len(ds) == 2
    store = assign_features(ds, FULL, evidence={"unfasten/VB": 2})
    a = store.get("unfasten", "verb", "derived", "CHANGE-OF-STATE")
    assert a.provenance == {"Vun-": {"unfasten/VB": 2}}


def test_every_feature_is_licensed(analyzer):
    words = ["centralize", "brighten", "unfasten", "restate", "blockage", "colorful", "formalize", "subsidize"]
    for w in words:
        for rule in CUE:
            if rule.kind == "ending":
                continue
            for d in analyzer.analyze(w, rule):
                for a in assign_features([d], FULL):
                    licensing = CUE[next(iter(a.provenance))]
                    allowed = licensing.derived_features if a.role == "derived" else licensing.base_features
                    assert a.feature in allowed


def _ful_less(*words):
    store = AssignmentStore()
    for w in words:
        rule = "-ful" if w.endswith("ful") else "-less"
        feature = "LESS-ANTONYM" if rule == "-ful" else "FUL-ANTONYM"
        store.add(w, "adjective", "derived", feature, rule, {f"{w}/JJ": 1})
    return store


def test_antonyms_link_both_ways():
    linked = link_antonyms(_ful_less("colorful", "colorless"), CUE)
    assert linked.get("colorful", "adjective", "derived", "LESS-ANTONYM").target == "colorless"
    assert linked.get("colorless", "adjective", "derived", "FUL-ANTONYM").target == "colorful"


def test_unpaired_form_gets_no_antonym():
    assert len(link_antonyms(_ful_less("peaceful"), CUE)) == 0


def test_empty_store_unchanged():
    assert len(link_antonyms(AssignmentStore(), CUE)) == 0


@given(st.sets(st.sampled_from(["color", "peace", "hope", "use", "care", "harm"]), max_size=6),
       st.sets(st.sampled_from(["color", "peace", "hope", "use", "care", "harm"]), max_size=6))
def test_antonym_links_symmetric(ful, less):
    words = [w + "ful" for w in ful] + [w + "less" for w in less]
    linked = link_antonyms(_ful_less(*words), CUE)
    targets = {a.lemma: a.target for a in linked}
    assert {w[:-3] for w in targets if w.endswith("ful")} == ful & less
    for w, t in targets.items():
        assert targets[t] == w


def test_link_does_not_mutate_input():
    store = _ful_less("colorful", "colorless")
    link_antonyms(store, CUE)
    assert all(a.target is None for a in store)


def test_add_validates():
    s = AssignmentStore()
    with pytest.raises(StoreError):
        s.add("x", "verb", "sideways", "TELIC", "re-", {"x/VB": 1})
    with pytest.raises(StoreError):
        s.add("x", "verb", "derived", "SHINY", "re-", {"x/VB": 1})
    with pytest.raises(StoreError):
        s.add("x", "verb", "derived", "TELIC", "re-", {})


def test_store_round_trip(fixtures):
    for name in ("mini.expected.tsv", "aize/store.tsv"):
        text = (fixtures / name).read_text()
        assert emit_store(parse_store(text)) == text


def test_parse_store_errors():
    with pytest.raises(StoreError, match="line 2"):
        parse_store("lemma\tpos\trole\tfeature\taffix\tevidence\ttokens\nbad\trow\n")
    with pytest.raises(StoreError, match="bad feature"):
        parse_store("x\tverb\tderived\tnot a feature\tre-\tx/VB\t1\n")


batch = st.lists(
    st.tuples(
        st.sampled_from(["centralize", "brighten", "restate"]),
        st.sampled_from(["TELIC", "CHANGE-OF-STATE"]),
        st.sampled_from(["re-", "-Aize", "-en"]),
        st.sampled_from(["a/VB", "b/VBD", "c/VBZ"]),
        st.integers(1, 5),
    ),
    max_size=8,
)


def _store(rows):
    s = AssignmentStore()
    for lemma, feature, affix, ev, n in rows:
        s.add(lemma, "verb", "derived", feature, affix, {ev: n})
    return s


@given(batch, batch, batch)
def test_merge_associative_and_commutative(a, b, c):
    x, y, z = _store(a), _store(b), _store(c)
    assert x.merge(y) == y.merge(x)
    assert x.merge(y).merge(z) == x.merge(y.merge(z))
    assert emit_store(x.merge(y)) == emit_store(y.merge(x))


@given(batch)
def test_emit_parse_fixpoint(rows):
    text = emit_store(_store(rows))
    assert emit_store(parse_store(text)) == text
