"""
Skew elements of Nichols algebras of Weyl groups, computed exactly.

Submodules: :mod:`rootsys` (root data), :mod:`weylgroup` (elements, orders,
reduced words), :mod:`braided` (tensor algebra, symmetrizer, pairing),
:mod:`skewcalc` (x_{w/v} and its invariants), :mod:`chaincomb` (saturated
chains and deletion maps), :mod:`interval2` (shuffle elements and length-two
intervals), :mod:`coinvariant` (divided differences on the coinvariant
algebra) and :mod:`cli`.
"""

from .rootsys import RootSystem, build_root_system
from .weylgroup import GroupElement, from_word, weyl_group
from .braided import BraidedVector, is_zero_in_nichols
from .skewcalc import SkewElement, nichols_equal, skew

__all__ = [
    "RootSystem", "build_root_system", "GroupElement", "from_word", "weyl_group",
    "BraidedVector", "is_zero_in_nichols", "SkewElement", "nichols_equal", "skew",
]
__version__ = "0.1.0"
