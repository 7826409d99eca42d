"""Exact Griess algebras, Miyamoto involutions and 3-transposition groups."""

from .algebra import Element, GriessAlgebra, conformal_vector, miyamoto_sigma, miyamoto_tau
from .dihedral import make as make_dihedral
from .family import build_abxy_2A, build_abxy_3A, build_xn
from .groups import close_axes, permutation_image, three_transposition_verdict
from .lattice import build_lattice_griess, root_system
from .workbench import WorkbenchConfig, run_suite

__all__ = [
    "Element", "GriessAlgebra", "WorkbenchConfig",
    "build_abxy_2A", "build_abxy_3A", "build_lattice_griess", "build_xn", "close_axes",
    "conformal_vector", "make_dihedral", "miyamoto_sigma", "miyamoto_tau", "permutation_image",
    "root_system", "run_suite", "three_transposition_verdict",
]
__version__ = "0.1.0"
