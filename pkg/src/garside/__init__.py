"""Exact computations in Garside groups: normal forms, summit sets,
translation numbers and abelian subgroups."""

from .abelian import (
    AbelianPresentation,
    abelian_basis,
    conj_member,
    dirichlet_approx,
    hnf_complement,
    integer_relation,
    member,
    norm_constants,
    subgroups_conjugate,
    subgroups_equal,
)
from .conjugacy import (
    SummitSet,
    conjugacy_graph,
    cycling,
    decycling,
    is_conjugate,
    is_super_summit,
    is_ultra_summit,
    min_conjugator,
    summit_seek,
    summit_set,
)
from .core import (
    Element,
    GarsideStructure,
    canonical_invariants,
    equals,
    inverse,
    left_join,
    left_meet,
    multiply,
    normalize,
    right_meet,
    tau,
)
from .errors import Budget, BudgetExceeded, GarsideError, InputError, MathDomainError
from .simultaneous import (
    CommutingTuple,
    is_simultaneously_conjugate,
    is_stable,
    stable_sss,
    subgroup_to_uss,
    tuple_to_uss,
)
from .structures import BraidStructure, FreeAbelianStructure, structure_from_selector
from .translation import summit_slopes, translation_number, word_length

__version__ = "0.1.0"
