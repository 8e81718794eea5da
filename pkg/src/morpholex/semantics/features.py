"""Feature catalog and the axiom templates that define the checkable ones."""

from __future__ import annotations

from dataclasses import dataclass

from .logic import (
    And,
    Atom,
    AxiomTemplate,
    Describes,
    Exists,
    ForAll,
    Implies,
    Or,
    Pred,
    Rel,
    RState,
)

P, Q = Pred("P"), Pred("Q")


def _iff(a, b):
    return And((Implies(a, b), Implies(b, a)))


CHANGE_OF_STATE_AXIOM = AxiomTemplate(
    "CHANGE-OF-STATE",
    ForAll(
        ("x", "y", "e"),
        Implies(
            Describes(Atom(P, ("x", "y")), "e"),
            And(
                (
                    Exists(
                        ("e1",),
                        And((Rel("at-end-of", ("e1", "e")), Rel("cause", ("e", "e1")))),
                        Describes(Atom(RState(P), ("y",)), "e1"),
                    ),
                    Exists(
                        ("e2",),
                        Rel("at-beginning-of", ("e2", "e")),
                        Describes(Atom(RState(P), ("y",)), "e2", negated=True),
                    ),
                )
            ),
        ),
    ),
    guard=("CHANGE-OF-STATE", "DYADIC"),
)

_TEMPLATES = [
    CHANGE_OF_STATE_AXIOM,
    # result state of the derived predicate is the base predicate (Q)
    AxiomTemplate(
        "RSTATE-EQ-BASE",
        ForAll(("y", "e"), _iff(Describes(Atom(RState(P), ("y",)), "e"), Describes(Atom(Q, ("y",)), "e"))),
    ),
    AxiomTemplate(
        "NEG-OF-BASE-IS-RSTATE",
        ForAll(
            ("y", "e"),
            _iff(
                Describes(Atom(RState(P), ("y",)), "e"),
                Describes(Atom(RState(Q), ("y",)), "e", negated=True),
            ),
        ),
    ),
    AxiomTemplate(
        "RSTATE-EQ-BASE-RSTATE",
        ForAll(
            ("y", "e"),
            _iff(Describes(Atom(RState(P), ("y",)), "e"), Describes(Atom(RState(Q), ("y",)), "e")),
        ),
    ),
    AxiomTemplate(
        "ENTAILS-BASE",
        ForAll(("x", "y", "e"), Implies(Describes(Atom(P, ("x", "y")), "e"), Describes(Atom(Q, ("x", "y")), "e"))),
    ),
    AxiomTemplate(
        "PRESUPS-RSTATE",
        ForAll(
            ("x", "y", "e"),
            Implies(
                Describes(Atom(P, ("x", "y")), "e"),
                Exists(("e1",), Rel("before", ("e1", "e")), Describes(Atom(RState(P), ("y",)), "e1")),
            ),
        ),
    ),
    # P is the base state predicate, Q the derived verb
    AxiomTemplate(
        "IZE-DEPENDENT",
        ForAll(
            ("y", "e"),
            Implies(
                Describes(Atom(P, ("y",)), "e"),
                Or(
                    (
                        Exists(("x", "e1"), Rel("before", ("e1", "e")), Describes(Atom(Q, ("x", "y")), "e1")),
                        ForAll(("e2",), Implies(Rel("before", ("e2", "e")), Describes(Atom(P, ("y",)), "e2"))),
                    )
                ),
            ),
        ),
    ),
]
TEMPLATES = {t.feature: t for t in _TEMPLATES}


@dataclass(frozen=True)
class Feature:
    id: str
    arity_class: str
    doc: str
    axiom: AxiomTemplate | None = None
    # antonym-style features point at another word; see link_antonyms
    counterpart: str | None = None

    @property
    def checkable(self) -> bool:
        return self.axiom is not None

    @property
    def relational(self) -> bool:
        return self.counterpart is not None


_FEATURES = [
    ("TELIC", "dyadic", "event predicate with an inherent endpoint"),
    ("CHANGE-OF-STATE", "dyadic",
     "result state holds at the end of the event and not at its beginning; entails TELIC"),
    ("NEG-OF-BASE-IS-RSTATE", "dyadic", "result state is the negation of the base's result state"),
    ("RSTATE-EQ-BASE-RSTATE", "dyadic", "result state equals the base's result state"),
    ("RSTATE-EQ-BASE", "dyadic", "result state is the base predicate"),
    ("ENTAILS-BASE", "dyadic", "an event of the derived form is an event of the base"),
    ("PRESUPS-RSTATE", "dyadic", "the result state held at some time before the event"),
    ("IZE-DEPENDENT", "monadic",
     "if the state holds then a derived-form event occurred earlier or the state always held"),
    ("ACTIVITY", "dyadic", "atelic, dynamic event predicate"),
    ("PART-IN-E", "monadic", "refers to a participant of an event described by the base"),
    ("SENTIENT", "monadic", "the participant is sentient of the event"),
    ("NON-VOLITIONAL", "monadic", "the participant is non-volitional with respect to the event"),
    ("EVENT-AND-RESULTANT", "monadic",
     "entails that a base event occurred and refers to something resulting from it"),
    ("REFERS-TO-E-OR-PROP-OR-RESULT", "monadic",
     "entails a base event and refers to it, to the proposition that it occurred, or to its result"),
    ("INCORRECT-MANNER", "dyadic", "the base action is performed in an incorrect manner"),
    ("ABLE-TO-BE-PERFORMED", "monadic", "it is possible to perform the base action on the referent"),
    ("STATE-OF-HAVING-PROP-OF-BASE", "monadic", "a state of something having the base property"),
    ("ABSTRACT", "monadic", "abstract noun"),
    ("FUL-ANTONYM", "monadic", "antonym of the corresponding -ful form"),
    ("LESS-ANTONYM", "monadic", "antonym of the corresponding -less form"),
]
_COUNTERPARTS = {"FUL-ANTONYM": "LESS-ANTONYM", "LESS-ANTONYM": "FUL-ANTONYM"}

FEATURES: dict[str, Feature] = {
    fid: Feature(fid, arity, doc, TEMPLATES.get(fid), _COUNTERPARTS.get(fid))
    for fid, arity, doc in _FEATURES
}


def get_feature(feature_id: str) -> Feature:
    try:
        return FEATURES[feature_id]
    except KeyError:
        raise KeyError(f"unknown feature {feature_id!r}") from None
