import pytest
from hypothesis import given, strategies as st

from morpholex.rules import (
    ALTERNATIONS,
    RuleError,
    affix_of,
    builtin_rules,
    load_rules,
    parse_rules,
    read_packaged_rules,
    serialize_rules,
    structural_rules,
)
from conftest import FIXTURES, RULES

SURFACE_AFFIXES = {"re-", "un-", "de-", "-ize", "-en", "-ify", "-le", "-ate", "-ee", "-er", "-ant",
                   "-age", "-ment", "mis-", "-able", "-ful", "-less", "-ness"}


def test_catalog_covers_the_eighteen_affixes():
    catalog = builtin_rules()
    assert {affix_of(r.id) for r in catalog} == SURFACE_AFFIXES
    # -ize and -ify are split by base category
    assert len(catalog) == 20
    assert [r.id for r in catalog if affix_of(r.id) in ("-ize", "-ify")] == ["-Aize", "-Nize", "-Aify", "-Nify"]


def test_aize_rule():
    r = builtin_rules()["-Aize"]
    assert (r.pattern.orthographic_pattern, r.pattern.tag_pattern) == (".*IZ(E|ING|ES|ED)$", "^V")
    assert r.base_pos == "adjective"
    assert r.base_flags == {"uninflected", "latinate"}
    assert r.derived_features == {"CHANGE-OF-STATE", "RSTATE-EQ-BASE"}
    assert r.base_features == {"IZE-DEPENDENT"}


def test_endings_do_not_use_the_lexicon():
    catalog = builtin_rules()
    assert not catalog["-le"].uses_lexicon and not catalog["-ate"].uses_lexicon
    assert catalog["-le"].derived_features == {"ACTIVITY"}
    assert catalog["-ate"].derived_features == {"CHANGE-OF-STATE"}


@pytest.mark.parametrize(
    "rule, derived, base",
    [
        ("re-", {"TELIC", "RSTATE-EQ-BASE-RSTATE", "ENTAILS-BASE", "PRESUPS-RSTATE"}, {"TELIC"}),
        ("Vun-", {"CHANGE-OF-STATE", "NEG-OF-BASE-IS-RSTATE"}, {"CHANGE-OF-STATE"}),
        ("Vde-", {"CHANGE-OF-STATE", "NEG-OF-BASE-IS-RSTATE"}, {"CHANGE-OF-STATE"}),
        ("-Nize", {"CHANGE-OF-STATE"}, set()),
        ("-ee", {"PART-IN-E", "SENTIENT", "NON-VOLITIONAL"}, set()),
        ("-ment", {"REFERS-TO-E-OR-PROP-OR-RESULT"}, set()),
        ("-ful", {"LESS-ANTONYM"}, {"ABSTRACT"}),
        ("-less", {"FUL-ANTONYM"}, set()),
    ],
)
def test_feature_correspondences(rule, derived, base):
    r = builtin_rules()[rule]
    assert (r.derived_features, r.base_features) == (derived, base)


def test_builtin_is_deterministic():
    assert builtin_rules() == builtin_rules()


def test_shipped_files_match_code():
    assert (RULES / "builtin.rules").read_text() == serialize_rules(builtin_rules())
    assert (RULES / "structural.rules").read_text() == serialize_rules(structural_rules())
    assert read_packaged_rules("builtin.rules") == serialize_rules(builtin_rules())


@pytest.mark.parametrize("catalog", [builtin_rules(), structural_rules()])
def test_serialize_load_round_trip(catalog):
    text = serialize_rules(catalog)
    assert load_rules(text) == catalog
    assert serialize_rules(load_rules(text)) == text


def test_user_rule_extends_catalog():
    catalog = load_rules((FIXTURES / "out.rules").read_text(), base=builtin_rules())
    assert len(catalog) == len(builtin_rules()) + 1
    assert catalog.ids[-1] == "out-"
    assert catalog["out-"].derived_features == {"TELIC"}
    assert len({affix_of(r.id) for r in catalog}) == 19


@pytest.mark.parametrize(
    "text, line, message",
    [
        ("kind: prefix\nstrip: X\n", 1, "missing 'id'"),
        ("\n\nid: x-\nkind: prefix\ntag_pattern: ^V\northographic_pattern: ^X\nstrip: X\n"
         "derived_pos: verb\nbase_pos: verb\ncolour: red\n", 10, "unknown key"),
        ("id: x-\nkind: prefix\ntag_pattern: ^V\northographic_pattern: ^X\nstrip: X\n"
         "derived_pos: verb\nbase_pos: verb\nderived_features: SHINY\n", 8, "unknown feature"),
    ],
)
def test_rule_file_errors(text, line, message):
    with pytest.raises(RuleError) as info:
        parse_rules(text)
    assert info.value.line == line
    assert message in str(info.value)


def test_duplicate_id_rejected():
    text = (FIXTURES / "out.rules").read_text()
    with pytest.raises(RuleError, match="duplicate"):
        parse_rules(text + "\n" + text)


def test_affix_of():
    assert [affix_of(i) for i in ("-Aize", "-Nify", "Vun-", "Vde-", "re-", "-ness")] == ["-ize", "-ify", "un-", "de-", "re-", "-ness"]


@pytest.mark.parametrize(
    "alt, residue, base",
    [
        ("identity", "central", "central"),
        ("e-restoration", "intens", "intense"),
        ("y-restoration", "glor", "glory"),
        ("il-le", "stabil", "stable"),
        ("i-y", "marri", "marry"),
        ("undoubling", "flatt", "flat"),
    ],
)
def test_alternation_examples(alt, residue, base):
    a = ALTERNATIONS[alt]
    assert a.apply(residue) == base
    assert a.invert(base) == residue


def test_identity_listed_first_for_every_lexical_rule():
    for r in builtin_rules() | structural_rules():
        if r.uses_lexicon:
            assert r.alternations[0] == "identity"


@given(st.sampled_from(sorted(ALTERNATIONS)), st.text(alphabet="abcdeilmnorstuy", min_size=2, max_size=8))
def test_apply_undoes_invert(alt, base):
    residue = ALTERNATIONS[alt].invert(base)
    if residue is not None:
        assert ALTERNATIONS[alt].apply(residue) == base
