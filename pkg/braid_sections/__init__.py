"""Exact computations in pure braid groups, mapping class groups of punctured disks and
configuration space cohomology, used to check which point-adding maps are sections."""

from .braid_core import BraidWord, LinkingMatrix, Permutation
from .curves import Curve, Puncture, RoundCurveSpec
from .section_algebra import SectionReport, SectionSpec
from .cohomology import GradedClass, ObstructionVerdict, Pullback
from .geometric_sections import PlanarConfig, SphereConfig
from .verdict import Verdict
