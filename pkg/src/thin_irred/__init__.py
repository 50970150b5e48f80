"""Exact censuses of irreducible polynomials over F_q with coefficients in
multiplicative-subgroup cosets and a prescribed discriminant."""

__version__ = "0.1.0"

from .errors import (CeilingExceeded, CharacteristicTooSmall, DivisionByZero,  # noqa: E402
                     LogOfZero, NotADivisor, NotPrime, PrincipalCharacter,
                     SearchSpaceTooLarge, ThinIrredError, ZeroArgument, ZeroDerivative)
from .finite_field import FieldCtx, arith, discrete_log, make_field, power  # noqa: E402
from .polynomial import (MonicPoly, derivative, discriminant, evaluate,  # noqa: E402
                         is_irreducible, resultant, taylor_shift)
from .subgroup_char import (CosetSpec, MultChar, SubgroupSpec, char_eval,  # noqa: E402
                            characters, coset_indicator, coset_member, coset_spec,
                            square_cosets, subgroup_elements, trivial_cosets,
                            twisted_char_sum)
