"""Exact tools for graphs meeting the Nordhaus-Gaddum sum bound, plain and distinguishing."""

from .errors import GuardError, Graph6Error, NGLabError, NotType1Error
from .graph import Graph, complement, induced_subgraph
from .graph6 import emit_graph6, parse_graph6
from .ngd import NGDReport, ablm_partition, decide_ngd, is_ngd_oracle
from .oracles import (
    automorphisms,
    chromatic_number,
    distinguishing_chromatic_number,
    distinguishing_number,
)
from .recognition import NGClassification, is_ng_oracle, recognize_ng

__version__ = "0.1.0"

__all__ = [
    "Graph", "complement", "induced_subgraph",
    "parse_graph6", "emit_graph6",
    "chromatic_number", "automorphisms", "distinguishing_number", "distinguishing_chromatic_number",
    "recognize_ng", "is_ng_oracle", "NGClassification",
    "decide_ngd", "is_ngd_oracle", "ablm_partition", "NGDReport",
    "NGLabError", "GuardError", "Graph6Error", "NotType1Error",
]
