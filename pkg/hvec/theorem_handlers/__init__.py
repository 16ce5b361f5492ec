"""Handler functions, one per verifiable identity."""

from .classical import (
    handle_ds,
    handle_hilbert_decomposition,
    handle_link_contrastar,
    handle_mny,
    handle_schenzel,
    handle_stanley,
    handle_top_entry,
)
from .kernels import handle_kernel_dim
from .main_theorems import handle_h_alg_penultimate, handle_h_sigma_penultimate
from .suspension import handle_suspension
from .symmetry import handle_symmetry
from .tau import handle_tau_conjecture, handle_tau_sigma_penultimate

__all__ = [
    "handle_ds",
    "handle_h_alg_penultimate",
    "handle_h_sigma_penultimate",
    "handle_hilbert_decomposition",
    "handle_kernel_dim",
    "handle_link_contrastar",
    "handle_mny",
    "handle_schenzel",
    "handle_stanley",
    "handle_suspension",
    "handle_symmetry",
    "handle_tau_conjecture",
    "handle_tau_sigma_penultimate",
    "handle_top_entry",
]
