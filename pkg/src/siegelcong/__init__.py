"""Exact class numbers, 4-core counts and newform dimensions, and checks of
congruences between them and dimensions of degree-2 Siegel cusp forms."""

from .arith import factorize, is_prime, kronecker, mobius, sigma1
from .congruences import CongruenceReport, SiegelDims
from .elliptic import dim_cusp_level1, dim_new, dim_pm_new
from .partitions import PartitionDiagram, c_t_bruteforce, hook_numbers, is_t_core, ono_sze, rep_count
from .qseries import QSeries, c4, c_t_series
from .quadforms import Discriminant, b_factor, class_number, fundamental_discriminant, hurwitz, reduced_forms
from .reptypes import ReprTypeCounts, compute_counts

__version__ = "0.1.0"
