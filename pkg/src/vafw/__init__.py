"""Value-based argumentation workbench.

Attack graphs whose arguments promote values; audiences rank the values and
thereby decide which attacks defeat.  The package computes extensions, audience
statuses, chain decompositions, and move suggestions, and exposes them through
a CLI and an HTTP dispute service.
"""

__version__ = "0.1.0"

from .core import (DefeatGraph, PartialValueOrder, TotalValueOrder, Vaf,
                   defeats, induced_defeat_graph, is_acceptable, is_admissible,
                   is_conflict_free, monochromatic_cycles, validate, value_pref)
from .errors import (DuplicateAttackWarning, FrameworkSyntaxError, SchemaError,
                     ValidationError, VafError)

__all__ = [
    "DefeatGraph", "PartialValueOrder", "TotalValueOrder", "Vaf",
    "defeats", "induced_defeat_graph", "is_acceptable", "is_admissible",
    "is_conflict_free", "monochromatic_cycles", "validate", "value_pref",
    "DuplicateAttackWarning", "FrameworkSyntaxError", "SchemaError",
    "ValidationError", "VafError", "__version__",
]
