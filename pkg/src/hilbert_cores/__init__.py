"""Exact combinatorics of symmetric cores, affine root lattices and McKay character tables."""
from .core_weyl import ComponentRecord, components, epsilon, same_component, wt
from .partitions import Box, Partition, conjugate, is_symmetric, r_core, staircase
from .residues import c_residue, res_D, res_E6
from .roots import DynkinGraph, RootVector, component_dimension, make_graph, tits_form

__all__ = [
    "Box", "ComponentRecord", "DynkinGraph", "Partition", "RootVector", "c_residue", "component_dimension",
    "components", "conjugate", "epsilon", "is_symmetric", "make_graph", "r_core", "res_D", "res_E6",
    "same_component", "staircase", "tits_form", "wt",
]
__version__ = "0.1.0"
