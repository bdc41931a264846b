"""Exact tools for groupoids whose Cayley table rows advance by a fixed step.

The table of such a groupoid is determined by its first row and the step k:
every later row is the previous one rotated right by k places.  This package
builds those tables, detects the step from a raw table, tests identities
both cell by cell and through closed forms on the first row, constructs the
stock families (left unitary, idempotent, cancellative semigroups, unions of
cyclic groups), decomposes the cancellative semigroups into cyclic groups,
and replays every supported claim by exhaustive search at small orders.
"""

from __future__ import annotations

from .constructions import (
    LabeledUnion,
    UnionSpec,
    block_product_table,
    cancellative_semigroups,
    constant_column_semigroups,
    embed,
    idempotent_groupoid,
    idempotent_positions,
    left_unitary_groupoid,
    pair_union,
    union_same_step,
    union_shifted_step,
)
from .core import (
    BoundError,
    CayleyTable,
    ConstructionError,
    InvalidInputError,
    KSequence,
    Ordering,
    ParseError,
    PreconditionError,
    TranslatableError,
    VerificationError,
    Witness,
    max_order,
    mod_rep,
    parse_sequence,
    parse_table,
    reorder,
    serialize,
)
from .properties import (
    LCOND_NAMES,
    LEFT_UNITARY_NAMES,
    NEEDS_ASSOCIATIVITY,
    PROPERTY_NAMES,
    check,
    idempotent_elements,
    lcond_check,
    left_neutral,
    left_neutral_elements,
    left_unitary_characterize,
    report,
    semigroup_criterion,
)
from .search import (
    CampaignReport,
    SequenceFilter,
    campaign_ids,
    catalog,
    catalog_count,
    enumerate_sequences,
    verify,
)
from .structure import (
    Decomposition,
    Ideal,
    Isomorphism,
    cyclic_table,
    decompose,
    ideals,
    idempotent_set,
    idempotent_set_formula,
    iso_idempotent,
    iso_left_unitary,
    iso_to_cyclic,
    left_unitary_idempotents,
    principal_ideal,
)
from .translation import (
    DualStep,
    all_rotated_presentations,
    detect,
    dual,
    dual_step,
    is_translatable,
    rotate_ordering,
    table_from_sequence,
)

__version__ = "0.1.0"

__all__ = [
    "BoundError",
    "CampaignReport",
    "CayleyTable",
    "ConstructionError",
    "Decomposition",
    "DualStep",
    "Ideal",
    "InvalidInputError",
    "Isomorphism",
    "KSequence",
    "LCOND_NAMES",
    "LEFT_UNITARY_NAMES",
    "LabeledUnion",
    "NEEDS_ASSOCIATIVITY",
    "Ordering",
    "PROPERTY_NAMES",
    "ParseError",
    "PreconditionError",
    "SequenceFilter",
    "TranslatableError",
    "UnionSpec",
    "VerificationError",
    "Witness",
    "all_rotated_presentations",
    "block_product_table",
    "campaign_ids",
    "cancellative_semigroups",
    "catalog",
    "catalog_count",
    "check",
    "constant_column_semigroups",
    "cyclic_table",
    "decompose",
    "detect",
    "dual",
    "dual_step",
    "embed",
    "enumerate_sequences",
    "ideals",
    "idempotent_elements",
    "idempotent_groupoid",
    "idempotent_positions",
    "idempotent_set",
    "idempotent_set_formula",
    "is_translatable",
    "iso_idempotent",
    "iso_left_unitary",
    "iso_to_cyclic",
    "lcond_check",
    "left_neutral",
    "left_neutral_elements",
    "left_unitary_characterize",
    "left_unitary_groupoid",
    "left_unitary_idempotents",
    "max_order",
    "mod_rep",
    "pair_union",
    "parse_sequence",
    "parse_table",
    "principal_ideal",
    "reorder",
    "report",
    "rotate_ordering",
    "semigroup_criterion",
    "serialize",
    "table_from_sequence",
    "union_same_step",
    "union_shifted_step",
    "verify",
]
