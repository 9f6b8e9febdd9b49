"""Operator residuation in finite posets.

Set-valued conjunction and implication built from lower/upper cones,
premise checkers for the LU-identities they rely on, and exhaustive
verification of (left) adjointness.
"""

from posetres.poset import (
    MAX,
    MIN,
    CycleDetected,
    DuplicateLabel,
    NotBounded,
    Poset,
    PosetError,
    UnknownLabel,
    from_covers,
)
from posetres.properties import (
    PropertyReport,
    UnaryOp,
    Verdict,
    check_unary,
    is_boolean,
    is_distributive,
    is_modular,
    is_relatively_pseudocomplemented,
    is_strongly_modular,
    relative_pseudocomplement,
    th1_premises,
    th3_premises,
)
from posetres.residuation import (
    AdjointnessVerdict,
    MissingUnaryOp,
    NoPseudocomplement,
    PremisesViolated,
    SetValuedTable,
    Variant,
    arrow,
    build_tables,
    odot,
    verify_identity_suite,
    verify_left_adjointness,
)
from posetres.enumeration import (
    Constraint,
    Premise,
    SizeBoundExceeded,
    SweepReport,
    canonical_form,
    check_corollary,
    enumerate_posets,
    enumerate_unary_ops,
    sweep,
)
from posetres.textio import (
    PartialUnaryMap,
    PosetDocument,
    PosetSyntaxError,
    parse_poset_file,
    render_poset_file,
    render_table,
)
from posetres.fixtures import FIXTURES, load_fixture

__version__ = "0.1.0"
