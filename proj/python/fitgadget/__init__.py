"""Group-equation gadget compiler: structural analysis of finite solvable
groups, commutator gadget polynomials, and SAT / graph-coloring reductions
to equation satisfiability, backed by a C++ core."""

from fitgadget._core import (
    FiniteGroup,
    GadgetFamily,
    GroupPolynomial,
    ReducedInstance,
    analyze,
    boolean_sat,
    build_and_gadget,
    build_sat_gadget,
    coloring,
    group_from_json,
    load_builtin,
    poleqv_bruteforce,
    polsat_bruteforce,
    prepare_context,
    reduce_coloring,
    reduce_sat,
    verify_gadget,
    verify_group,
)

__all__ = [
    "FiniteGroup",
    "GadgetFamily",
    "GroupPolynomial",
    "ReducedInstance",
    "analyze",
    "boolean_sat",
    "build_and_gadget",
    "build_sat_gadget",
    "coloring",
    "group_from_json",
    "load_builtin",
    "poleqv_bruteforce",
    "polsat_bruteforce",
    "prepare_context",
    "reduce_coloring",
    "reduce_sat",
    "verify_gadget",
    "verify_group",
]
