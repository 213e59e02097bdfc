"""Exact combinatorics of symmetric Nakayama representations of the infinity-gon
and of their stable (-1)-Calabi-Yau category, with a linear-algebra oracle."""

from .core import ConfigurationError, DomainError, Embedding, Gon, Lifted, Point
from .rep import (
    Hammock,
    HomReport,
    Interval,
    almost_split_sequence,
    composition_factors,
    derived,
    hammock_classify,
    hom_dim_rep,
    hom_report,
    intervals,
    middle_terms,
    proj_factor_dim,
    projective,
    simple,
)
from .stable import (
    Arc,
    almost_split_triangle,
    ar_quiver,
    arc,
    arcs,
    hom_dim,
    phi,
    phi_inv,
    serre_dual_check,
    shift,
    spherical_profile,
    tau,
    thick_closure,
)
from .formats import parse_arc, parse_interval, parse_point

__version__ = "0.1.0"
