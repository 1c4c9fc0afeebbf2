"""Rauzy-Veech groups: Rauzy induction, Kontsevich-Zorich matrices, mod-2
quadratic forms, transvection calculus and finite checks of their structure."""

from .errors import RauzyVeechError
from .forms import IntersectionForm, QuadraticFormF2, arf, component_label, omega, quadratic_form
from .perm import Permutation, parse_permutation, rauzy_class, representatives, stratum_profile

__version__ = "0.1.0"

__all__ = [
    "IntersectionForm",
    "Permutation",
    "QuadraticFormF2",
    "RauzyVeechError",
    "arf",
    "component_label",
    "omega",
    "parse_permutation",
    "quadratic_form",
    "rauzy_class",
    "representatives",
    "stratum_profile",
]
