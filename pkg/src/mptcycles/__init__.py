"""Two-arc nested cycle certificates for strong multipartite tournaments."""

from .constructor import two_pancyclic_arcs
from .digraph import Arc, MultipartiteTournament, build, is_strong, parse, reverse, serialize
from .oracle import conjecture_report, cycle_lengths_through_arc, full_spectrum_arcs
from .witness import CycleChain, TwoArcCertificate, verify_certificate, verify_chain, verify_cycle

__all__ = [
    "Arc",
    "CycleChain",
    "MultipartiteTournament",
    "TwoArcCertificate",
    "build",
    "conjecture_report",
    "cycle_lengths_through_arc",
    "full_spectrum_arcs",
    "is_strong",
    "parse",
    "reverse",
    "serialize",
    "two_pancyclic_arcs",
    "verify_certificate",
    "verify_chain",
    "verify_cycle",
]
