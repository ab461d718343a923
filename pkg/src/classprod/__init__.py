"""Finite groups as multiplication tables, with conjugacy-class products,
centralizers, cores, derived and chief series, and executable checks of
bounds on dl(G/C_G(A)) in terms of eta(AA^-1)."""

from .checks import CHECKS, VerificationReport, verify_examples
from .classes import (
    ConjugacyClass,
    aa_inverse,
    all_classes,
    class_product,
    conjugacy_class,
    decompose,
    eta,
    eta_aa,
    is_g_invariant,
)
from .constructions import (
    GroupSpec,
    alternating,
    build_from_spec,
    cyclic,
    dihedral,
    direct_product,
    example21_groups,
    extraspecial_p3,
    from_permutations,
    named,
    parse_corpus,
    parse_group_spec,
    quaternion8,
    semidirect_product,
    symmetric,
)
from .corpus import default_corpus, extended_corpus
from .group import ElementSet, Group, Subgroup, build_group, closure
from .scan import ScanRow, conjecture_scan, emit_scan_csv

__version__ = "0.1.0"
