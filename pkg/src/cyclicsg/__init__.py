"""Cyclic subgroup graphs of finite groups and an audit of closed-form predictions."""

from .gamma_graph import GammaGraph, build_gamma
from .group_core import (
    Group,
    Subgroup,
    from_cayley_table,
    make_cyclic,
    make_dicyclic,
    make_dihedral,
    make_direct_product,
    make_generalized_quaternion,
    make_minimal_noncyclic,
    make_named_matrix_group,
)
from .graph_invariants import summarize

__all__ = [
    "GammaGraph", "Group", "Subgroup", "build_gamma", "from_cayley_table",
    "make_cyclic", "make_dicyclic", "make_dihedral", "make_direct_product",
    "make_generalized_quaternion", "make_minimal_noncyclic",
    "make_named_matrix_group", "summarize",
]
