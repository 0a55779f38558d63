"""Sidon sets in finite abelian groups, with the three classical geometric
sources: the diagonal in k^x * k, curve images in hyperelliptic Jacobians,
and pair classes on smooth plane quartics."""

from .backend import BACKEND_NAME, available_backends
from .bounds import BoundsReport, compute_bounds_report
from .diagonal import build_diagonal, to_cyclic_integers
from .errors import SidonlabError
from .field import FiniteField
from .groups import GroupAdapter, group_structure, zn_group
from .hyperelliptic import (
    HyperellipticCurve,
    build_symmetric_sidon,
    halve_set,
)
from .quartic import PlaneQuartic
from .scan import ScanResult, ScanRow, scan_genus2, survey_curve
from .sidon import (
    SidonReport,
    brute_force_sidon,
    find_symmetric_center,
    verify_sidon,
    verify_sidon_by_oracle,
    verify_symmetric_sidon,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND_NAME",
    "BoundsReport",
    "FiniteField",
    "GroupAdapter",
    "HyperellipticCurve",
    "PlaneQuartic",
    "ScanResult",
    "ScanRow",
    "SidonReport",
    "SidonlabError",
    "available_backends",
    "brute_force_sidon",
    "build_diagonal",
    "build_symmetric_sidon",
    "compute_bounds_report",
    "find_symmetric_center",
    "group_structure",
    "halve_set",
    "scan_genus2",
    "survey_curve",
    "to_cyclic_integers",
    "verify_sidon",
    "verify_sidon_by_oracle",
    "verify_symmetric_sidon",
    "zn_group",
    "__version__",
]
