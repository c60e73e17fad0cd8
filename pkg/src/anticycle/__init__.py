"""Anticomplete cycle packings, induced paths and plantation reductions."""

from .graph import CapExceeded, Graph, GraphInputError, Multigraph
from .recognizer import PackingWitness, is_2O_free_via_paths, is_sO_free
from .enumeration import count_induced_paths
from .plantation import Plantation, make_plantation
from .hitting import min_feedback_vertex_set, pack_or_cover
from .covering import count_induced_paths_via_z, count_z_covering
from .pipeline import run_pipeline

__all__ = [
    "CapExceeded",
    "Graph",
    "GraphInputError",
    "Multigraph",
    "PackingWitness",
    "Plantation",
    "count_induced_paths",
    "count_induced_paths_via_z",
    "count_z_covering",
    "is_2O_free_via_paths",
    "is_sO_free",
    "make_plantation",
    "min_feedback_vertex_set",
    "pack_or_cover",
    "run_pipeline",
]
