"""Local distinguishability of generalized Bell states via maximally commutative sets."""

__version__ = "0.1.0"

from .errors import GbsError
from .zmod import RingContext, make_ring, gcd_bezout, is_unit
from .gpm import (
    GpmCoord,
    GbsSet,
    DiffSet,
    commutator_exponent,
    commutes,
    congruence_solutions,
    difference_set,
    h_alpha_map,
    is_f_type,
    parse_set,
)
from .mcs import Mcs, build_mcs, enumerate_mcs, containing_mcs, verify_maximal_commutative
from .detect import (
    DetectionReport,
    detector_set,
    discriminant_set,
    check_theorem31,
    check_theorem2,
    check_theorem2_all,
    check_fan,
    full_report,
)
