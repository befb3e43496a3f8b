"""Seidel spectra of chain graphs: exact polynomials, numeric spectra, energy bounds, scans."""

from .bounds import bounds_report, energy_bound_suite, gamma2_closed_forms, symmetric_chain_closed_forms
from .chain import ChainSpec, ChainStringError, adjacency_matrix, parse_chain_string, seidel_matrix
from .explorer import enumerate_specs, gamma_family, min_energy_table, scan
from .poly import Poly, charpoly_quotient, charpoly_seidel, det_quotient, det_seidel
from .quotient import characteristic_matrix, equitable_partition, quotient_matrix
from .spectra import distinct_count, seidel_energy, seidel_spectrum, sign_profile

__version__ = "0.1.0"

__all__ = [
    "ChainSpec",
    "ChainStringError",
    "Poly",
    "adjacency_matrix",
    "bounds_report",
    "characteristic_matrix",
    "charpoly_quotient",
    "charpoly_seidel",
    "det_quotient",
    "det_seidel",
    "distinct_count",
    "energy_bound_suite",
    "enumerate_specs",
    "equitable_partition",
    "gamma2_closed_forms",
    "gamma_family",
    "min_energy_table",
    "parse_chain_string",
    "quotient_matrix",
    "scan",
    "seidel_energy",
    "seidel_matrix",
    "seidel_spectrum",
    "sign_profile",
    "symmetric_chain_closed_forms",
]
