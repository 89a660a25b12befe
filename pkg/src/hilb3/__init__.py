"""Degree-zero Donaldson-Thomas invariants of Hilbert schemes of points on threefolds,
computed exactly by torus localization on Hilb^n(A^3)."""

__version__ = "0.1.0"

from .partitions import (InfiniteColengthError, MonomialIdeal, PlanePartition, enumerate_partitions,
                         from_ideal, iter_ideals, iter_partitions, parse_ideal, partition_count,
                         quotient_basis, to_ideal)
from .tangent import (TangentReport, WeightMultiset, check_diagonal_free, check_parity,
                      check_weight_cone, dense_tangent_dim_oracle, syzygy_pairs, tangent_character,
                      tangent_dim, tangent_report)
from .localization import (LocalizationResult, OneParamSubgroup, generic_subtorus,
                           nu_at_fixed_point, weighted_euler_hilb, weighted_euler_stratum)
from .series import (IntSeries, aut_order, config_euler, dt_series, euler_series, int_pow,
                     macmahon_series, mul, stratification_sum)
from .critical import (QuasiHomogPoly, hessian_tangent_dim, in_m_cubed, is_invariant,
                       jacobian_generators, nu_isolated, parse_poly)
