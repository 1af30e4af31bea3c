"""Theorem registry, universes, oracles and the verification runner."""

from .context import Check, Context, Skip
from .oracle import RankOracle, TableOracle, frf_pseudoinverse, leibniz_det
from .runner import TheoremReport, TierMismatch, applicable_ids, recheck, verify_all, verify_theorem
from .suite import PropertyReport, property_suite
from .search import remark_420_scan, search_cline
from .theorems import LABELS, OUT_OF_SCOPE, REGISTRY, registry_ids
from .universe import Universe, UniverseError, parse_universe, singleton_universe
