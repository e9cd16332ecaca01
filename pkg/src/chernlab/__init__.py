"""Exact-arithmetic tools for Chern rank and cup length computations."""

from .zlattice import FGGroup, member, saturates, smith_normal_form
from .gring import (Generator, GradedRing, NonAdmissiblePresentation, NonConfluent,
                    Relation, RingElement, RingPresentation, TablePresentation,
                    compile_presentation, is_cyclic, k_x, r_x)
from .chern import (Bundle, RingMap, bundle, chernrank, conjugate, dual, pullback,
                    trivial, whitney_sum)
from .rules import RankReport, SpaceMeta, rank_report, uchrank_lower, uchrank_upper
from .cuplen import (chern_monomial_length, cup_bound_hypothesis, cup_length_bound,
                     even_cup_length)
from .dsl import parse, export
from . import catalog

__version__ = "0.1.0"

__all__ = [
    "FGGroup", "member", "saturates", "smith_normal_form",
    "Generator", "GradedRing", "NonAdmissiblePresentation", "NonConfluent", "Relation",
    "RingElement", "RingPresentation", "TablePresentation", "compile_presentation",
    "is_cyclic", "k_x", "r_x",
    "Bundle", "RingMap", "bundle", "chernrank", "conjugate", "dual", "pullback", "trivial",
    "whitney_sum",
    "RankReport", "SpaceMeta", "rank_report", "uchrank_lower", "uchrank_upper",
    "chern_monomial_length", "cup_bound_hypothesis", "cup_length_bound", "even_cup_length",
    "parse", "export", "catalog",
]
