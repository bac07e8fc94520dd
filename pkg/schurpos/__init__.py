from . import (bialternant, conegeom, exactmath, exceptions, glchar, kostka, models, parsers, partitions, symfunc,
               tableaux, utils)
from .bialternant import bialternant_eval, vandermonde
from .conegeom import sample_positivity, schur_positivity_probability, slice_volume_ratio
from .exactmath import BigRational, RationalMatrix, determinant, inverse, mat_mul
from .exceptions import *
from .glchar import char_schur_eval, char_sym_square, direct_sum, sym_square_matrix
from .kostka import inverse_kostka_matrix, k_lambda, kostka_matrix, kostka_number
from .parsers import parse_partition, parse_rationals, parse_symexpr
from .partitions import Partition, dominance_leq, partitions_of
from .symfunc import (Basis, MonomialExpansion, SymPoly, expand_in_variables, is_schur_positive, monomial_sym,
                      schur_sym, schur_to_monomial, to_schur_basis)
from .tableaux import Tableau, bender_knuth, enumerate_ssyt
from .models import *
