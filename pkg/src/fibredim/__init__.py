"""Fibrewise Krull dimension of finitely presented algebras and their tensor products.

The base ring is Z, Z/n, F_p or Q.  Dimensions are computed fibre by fibre
over the primes of the base with a Groebner-basis kernel over Q, F_p and Z.
"""

from .dimension import EMPTY, Dim, finite
from .domains import GF, QQ, ZZ
from .dsl import parse_algebra, parse_polynomial, parse_witness, render
from .errors import (BaseMismatchError, DomainMismatchError, FibredimError,
                     IncompatiblePointError, InconsistentWitnessError, NotATripletError,
                     NotZeroDimensionalError, ParseError, UnsupportedConfigurationError,
                     WrongDomainError)
from .groebner import (GroebnerBasis, characteristic, groebner, is_trivial,
                       krull_dim_affine, max_independent_set, normal_form)
from .poly import GREVLEX, LEX, MonomialOrder, Polynomial
from .presentation import (Affine, BaseRing, Fp, Product, Q, Z, Zmod, boolean_atoms,
                           polynomial_extension, tensor_presentation)
from .spectra import (GENERIC, EffectiveSpectrum, FibreRing, PrimeWitness, SpecPoint,
                      af_check, closed, dim_at, effective_dim, effective_spectrum, fibre_at,
                      fibre_dim, height_at, is_effective, seidenberg_bounds,
                      verify_af_at_prime)
from .theorems import (DValueRequest, TensorDimReport, boolean_dim, cross_check, d_value,
                       dim_tensor, dim_tensor_at, dim_tensor_auto, dim_tensor_zero_dim,
                       effective_spectrum_tensor, is_triplet)

__version__ = "0.1.0"
