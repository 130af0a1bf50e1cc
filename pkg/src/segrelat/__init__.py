"""segrelat: exact invariants of t-fold Segre powers of the subset lattice
B_n and the subspace lattice B_n(q).

The package computes every invariant by at least two independent routes
(recurrences, closed formulas, tableau counts, brute-force scans, explicit
poset walks) and cross-checks them; see the `verify` CLI subcommand and the
test suite.
"""

from .budgets import EnumerationBudgetError
from .invariants import (beta_multiplicity, beta_t, principal_specialization,
                         rank_W_t_q, rank_alpha_beta, w_t, W_t_q, whitney_char)
from .multisym import (MultiSymFunc, dimension, ms_unit, multiply, phi_t,
                       s_monomial, z_diagonal, z_monomial, z_power)
from .multisym import inner_product as multi_inner_product
from .partitions import (Partition, conjugate, multinomial, multiplicities,
                         partitions_of, z_value)
from .permutations import RankSet, count_tuples_common_ascent, perm_stats
from .posets import (ChainCensus, ELReport, LabeledPoset, boolean_lattice,
                     chain_census, fixture, mobius, rank_select, read_poset,
                     repeated_label_fixture, segre_power, subspace_lattice,
                     verify_el, write_poset)
from .qpoly import (QPoly, QRatNF, q_binomial, q_factorial, q_multinomial,
                    q_pochhammer)
from .symfunc import (SymFunc, e_to_h, h_monomial, h_to_schur, inner_product,
                      schur_to_h)
from .tableaux import kostka, syt_count, syt_count_with_descents

__version__ = "0.1.0"

__all__ = [
    "EnumerationBudgetError",
    "beta_multiplicity", "beta_t", "principal_specialization",
    "rank_W_t_q", "rank_alpha_beta", "w_t", "W_t_q", "whitney_char",
    "MultiSymFunc", "dimension", "ms_unit", "multiply", "phi_t",
    "s_monomial", "z_diagonal", "z_monomial", "z_power", "multi_inner_product",
    "Partition", "conjugate", "multinomial", "multiplicities",
    "partitions_of", "z_value",
    "RankSet", "count_tuples_common_ascent", "perm_stats",
    "ChainCensus", "ELReport", "LabeledPoset", "boolean_lattice",
    "chain_census", "fixture", "mobius", "rank_select", "read_poset",
    "repeated_label_fixture", "segre_power", "subspace_lattice",
    "verify_el", "write_poset",
    "QPoly", "QRatNF", "q_binomial", "q_factorial", "q_multinomial",
    "q_pochhammer",
    "SymFunc", "e_to_h", "h_monomial", "h_to_schur", "inner_product",
    "schur_to_h",
    "kostka", "syt_count", "syt_count_with_descents",
    "__version__",
]
