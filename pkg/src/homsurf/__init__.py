"""homsurf: the classification of complex homogeneous surfaces as executable arithmetic.

Every family of transitive holomorphic group actions on a complex surface is
implemented as concrete group/action arithmetic, together with the discrete
subgroup classifiers, quotient covering maps, and the property suites that
check them.  See the README for the catalogue and the `homsurf` CLI.
"""

from .catalogue import CatalogueRow, enumerate_catalogue
from .divisor import Divisor, QuasiperiodGroup, quasiperiod_group, weight
from .exppoly import DiffOperator, ExpPoly, Polynomial, basis_of, contains, monic_polynomial
from .families import FamilyId, GroupElement, build_family, classify_D1_subgroup, quotient_policy
from .numeric import NonDiscreteError
from .uaff import D2Label, UAffAutomorphism, UAffElement, classify_subgroup
from .verify import VerificationReport, run_verification

__version__ = "0.1.0"

__all__ = [
    "CatalogueRow",
    "D2Label",
    "DiffOperator",
    "Divisor",
    "ExpPoly",
    "FamilyId",
    "GroupElement",
    "NonDiscreteError",
    "Polynomial",
    "QuasiperiodGroup",
    "UAffAutomorphism",
    "UAffElement",
    "VerificationReport",
    "basis_of",
    "build_family",
    "classify_D1_subgroup",
    "classify_subgroup",
    "contains",
    "enumerate_catalogue",
    "monic_polynomial",
    "quasiperiod_group",
    "quotient_policy",
    "run_verification",
    "weight",
]
