"""Exact generalized inverses along an element, g-MP invertibility, and
machine verification of their theory over finite and random carriers."""

from .inverses import (AlongWitness, ConsistencyError, GmpWitness, MpResult, PreconditionError, TierError,
                       UnitWitness, along_by_green, along_triple, corner_unit_check, gmp_check, group_inverse,
                       inverse_along, invert_along, is_ep, jacobson, moore_penrose, mp_by_green, mp_inverse,
                       mp_via_star_along, one_four, one_sided_along, one_sided_along_triple, one_three, rol_commuting, shift_conjugation_check)
from .matrix import (GreenWitness, RankNormalForm, RrefResult, SquareMatrix, green_leq, inner_inverse,
                     inner_inverse_family, rank_normal_form, rref, try_invert)
from .monoid import FiniteMonoid, TableElement, closure, exhaustive_green, exhaustive_solutions, load_monoid
from .scalars import GF, QI, GaussianRational, PrimeField

__version__ = "0.1.0"
