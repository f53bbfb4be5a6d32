"""Event-driven Kawasaki lattice-gas simulator with droplet tracking."""

from .params import (ModelParams, DerivedConstants, derive_constants,
                     resistance, timescale, is_quasi_square)
from .lattice import (Configuration, hamiltonian, grand_energy, clusters,
                      rectangle_sites, read_snapshot, write_snapshot)

__all__ = [
    "ModelParams", "DerivedConstants", "derive_constants", "resistance",
    "timescale", "is_quasi_square", "Configuration", "hamiltonian",
    "grand_energy", "clusters", "rectangle_sites", "read_snapshot",
    "write_snapshot",
]

__version__ = "0.1.0"
