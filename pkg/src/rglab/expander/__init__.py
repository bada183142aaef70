"""
Expander checks and the edge-distribution audit.

This subsystem provides:
- is_expander: exact, sampled or structural (k, alpha)-expansion verdicts
- small_vertices: SMALL(G) for a degree threshold d0
- audit_properties: P1-P7 with witnesses and check modes
- sparse_backbone: the d0-per-vertex random subgraph
- ExpanderQuery / BackboneConfig / ExpanderVerdict / AuditReport: models
"""

from rglab.expander.audit import audit_properties, small_vertices
from rglab.expander.backbone import sparse_backbone
from rglab.expander.expander_models import (
    AUDIT_FORMULAS,
    AuditReport,
    AuditThresholds,
    BackboneConfig,
    Certainty,
    CheckMode,
    ExpanderQuery,
    ExpanderVerdict,
    PropertyVerdict,
)
from rglab.expander.expansion import is_expander

__all__ = [
    "is_expander",
    "small_vertices",
    "audit_properties",
    "sparse_backbone",
    "ExpanderQuery",
    "BackboneConfig",
    "ExpanderVerdict",
    "AuditReport",
    "AuditThresholds",
    "PropertyVerdict",
    "CheckMode",
    "Certainty",
    "AUDIT_FORMULAS",
]
