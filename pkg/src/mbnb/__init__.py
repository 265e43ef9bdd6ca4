"""Majoritarian branch-and-bound for subset sum with exact node counting and bounds."""

from .bounds import BoundsReport, binomial, compute_bounds, compute_t, compute_t_prime
from .instances import (GeneratorConfig, Instance, InstanceError, format_instance,
                        generate_instances, parse_instance)
from .solver import PrefixAssignment, SolveReport, check_c0, check_c1, complement, export_tree, solve
from .tuples import BinaryTuple, match_components, project_D

__all__ = [
    "BinaryTuple", "BoundsReport", "GeneratorConfig", "Instance", "InstanceError",
    "PrefixAssignment", "SolveReport", "binomial", "check_c0", "check_c1", "complement",
    "compute_bounds", "compute_t", "compute_t_prime", "export_tree", "format_instance",
    "generate_instances", "match_components", "parse_instance", "project_D", "solve",
]
