"""Feature catalog, axioms, model checking and word/feature assignment."""

from .features import FEATURES, TEMPLATES, Feature, get_feature
from .logic import (
    AxiomTemplate,
    EpisodicModel,
    GroundAxiom,
    ModelError,
    Verdict,
    check_axiom,
    instantiate_axiom,
    parse_model,
    serialize_model,
)
from .store import (
    AssignmentStore,
    FeatureAssignment,
    StoreError,
    assign_features,
    emit_store,
    link_antonyms,
    parse_store,
)

__all__ = [
    "FEATURES", "TEMPLATES", "Feature", "get_feature",
    "AxiomTemplate", "EpisodicModel", "GroundAxiom", "ModelError", "Verdict",
    "check_axiom", "instantiate_axiom", "parse_model", "serialize_model",
    "AssignmentStore", "FeatureAssignment", "StoreError", "assign_features",
    "emit_store", "link_antonyms", "parse_store",
]
