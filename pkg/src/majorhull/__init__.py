"""Executable convex decompositions: majorization, projector hulls, hypermatrices."""

from .errors import (ConvergenceError, InfeasibleError, InfeasibleInput, MajorhullError,
                     NotMajorizedError, OutsideHullError, ReconstructionError)
from .hypergraph import (WeightedHypergraph, degrees, from_hypermatrix, realize_degrees,
                         to_hypermatrix)
from .hypermatrix import (SINGLETON, SymHypermatrix, constraint_matrix, constraint_rank, entry,
                          extreme_reduce, is_extreme, is_realizable, polytope_dimension,
                          realizability, realize, singleton_solution, slice_sums)
from .majorization import (ConvexCombination, Permutation, SubsetIndicator, caratheodory_reduce,
                           hypersimplex_decompose, is_majorized, rado_decompose, reconstruct)
from .scalar import EXACT, FLOAT, ScalarMode
from .spectral import (EigenDecomposition, fan_value, grassmann_decompose, is_in_hull,
                       is_projector_point, jacobi_eigen, random_hull_point)

__version__ = "0.1.0"
