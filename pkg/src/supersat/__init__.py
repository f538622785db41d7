"""Exact counting of disjoint pairs in families of sets and permutations."""
from .config import RunConfig, load_config
from .exactcomb import binom, derangement_count, factorial
from .kernels import BACKEND_NAME
from .permfam import CosetSpec, PermFamily, disj_perm, disj_T_formula, lex_perm_segment
from .report import emit_report
from .setfam import SetFamily, disj_lex_formula, disj_naive, disj_zeta, lex_segment

__version__ = "0.1.0"

__all__ = [
    "BACKEND_NAME",
    "CosetSpec",
    "PermFamily",
    "RunConfig",
    "SetFamily",
    "binom",
    "derangement_count",
    "disj_T_formula",
    "disj_lex_formula",
    "disj_naive",
    "disj_perm",
    "disj_zeta",
    "emit_report",
    "factorial",
    "lex_perm_segment",
    "lex_segment",
    "load_config",
]
