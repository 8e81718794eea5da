"""
Checking the change-of-state axiom on small models
===================================================

A feature is defined by an axiom over a placeholder predicate P.  Here
the change-of-state axiom is instantiated for "formalize" and evaluated
on a finite episodic model: episodes, individuals, episode relations and
the facts that hold in each episode.
"""

from morpholex.semantics import get_feature, instantiate_axiom, parse_model
from morpholex.semantics.logic import check_axiom

template = get_feature("CHANGE-OF-STATE").axiom
print(template)

# P becomes formalize everywhere, including inside rstate(P).
axiom = instantiate_axiom(template, "formalize")
print(axiom)

# Event e: a formalizes b.  At its end (e1, caused by e) b is formal; at
# its beginning (e2) b is not.  The rstate line says formal is the
# result state of formalize.
model_text = """
episode e e1 e2
individual a b
rstate formalize formal
rel at-end-of e1 e
rel cause e e1
rel at-beginning-of e2 e
holds formalize(a,b) @ e
holds formal(b) @ e1
"""
print(check_axiom(parse_model(model_text), axiom))

# If b was already formal at the beginning, nothing changed state.  The
# verdict names the event and the beginning episode that break the axiom.
print(check_axiom(parse_model(model_text + "holds formal(b) @ e2\n"), axiom))

# Features tied to a related word take the related predicate as Q.
rstate_eq = instantiate_axiom(get_feature("RSTATE-EQ-BASE").axiom, "centralize", "central")
print(rstate_eq)
