"""Toroidal Union Jack, 4.8.8 and square lattices: spectra, incidence energy,
Laplacian-energy-like invariant, and their per-site asymptotic constants."""

from .errors import ConvergenceError, OrderCapError, SizeError
from .lattice import (
    FaceStructure,
    Graph,
    LatticeSize,
    adjacency_matrix,
    build_488,
    build_cycle,
    build_torus_grid,
    build_union_jack,
    degree_matrix,
    dual_of_488,
    face_vertex_incidence,
    incidence_matrix,
    laplacian,
    signless_laplacian,
)
from .spectra import (
    ClosedFormSpectrum,
    NumericSpectrum,
    closed_form_l_spectrum,
    closed_form_q_spectrum,
    compare_spectra,
    cycle_spectrum,
    numeric_spectrum,
)
from .invariants import InvariantReport, incidence_energy, invariant_table, lel
from .asymptotics import (
    QuadratureResult,
    component_integral,
    convergence_study,
    ie_constant,
    integrate2d,
    lel_constant,
)

__version__ = "0.1.0"
