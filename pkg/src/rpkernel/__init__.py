"""Kernels by rainbow paths (RP-kernels) in arc-coloured digraphs."""
from __future__ import annotations

from .bipartite import LEAF_COVERAGE, reset_leaf_coverage, rp_kernel_bipartite
from .conditions import ClassReport, classify
from .digraph import CB5, QT4, TB4, ArcColouredDigraph, Digraph, PatternGraph
from .errors import (
    DocumentError,
    EmptyVertexSet,
    InstanceTooLarge,
    InvalidDigraph,
    NotAcyclic,
    PreconditionFailed,
    RPKError,
    SameEndpoints,
    TheoremViolation,
    UnknownFixture,
)
from .factory import GenProfile, fixture, generate
from .kernels import acyclic_kernel, all_kernels, is_kernel, kernel_of_kp, kp_sufficient
from .rainbow import RainbowReachability, WitnessPath, rainbow_closure, rainbow_path_exists, rainbow_reachability
from .result import SolveResult, is_rp_kernel
from .solver import (
    brute_force_rp_kernel,
    rp_kernel_quasi_transitive,
    rp_kernel_semicomplete,
    rp_kernel_unicyclic,
    solve,
    solve_with,
)
from .verdict import Verdict

__all__ = [
    "CB5",
    "LEAF_COVERAGE",
    "QT4",
    "TB4",
    "ArcColouredDigraph",
    "ClassReport",
    "Digraph",
    "DocumentError",
    "EmptyVertexSet",
    "GenProfile",
    "InstanceTooLarge",
    "InvalidDigraph",
    "NotAcyclic",
    "PatternGraph",
    "PreconditionFailed",
    "RPKError",
    "RainbowReachability",
    "SameEndpoints",
    "SolveResult",
    "TheoremViolation",
    "UnknownFixture",
    "Verdict",
    "WitnessPath",
    "acyclic_kernel",
    "all_kernels",
    "brute_force_rp_kernel",
    "classify",
    "fixture",
    "generate",
    "is_kernel",
    "is_rp_kernel",
    "kernel_of_kp",
    "kp_sufficient",
    "rainbow_closure",
    "rainbow_path_exists",
    "rainbow_reachability",
    "reset_leaf_coverage",
    "rp_kernel_bipartite",
    "rp_kernel_quasi_transitive",
    "rp_kernel_semicomplete",
    "rp_kernel_unicyclic",
    "solve",
    "solve_with",
]
