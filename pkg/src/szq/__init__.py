"""Constructive recognition of conjugates of the Suzuki groups Sz(q).

Typical use:

    from szq import build_field, GroupHandle, conjugator, precompute_tables
    F = build_field(1)                      # q = 8
    gens = ...                              # conjugated generating set
    R = conjugator(GroupHandle(gens, F, seed=0))
    tables = precompute_tables(R)
    slp = express(tables, h)                # h as a word in gens, or None
"""

__version__ = "0.1.0"

from .census import (census_matches_conjecture, conjectured_counts,
                     coset_census, small_order_proportion)
from .field import GF, NotInSubgroup, build_field, poly_roots
from .mat4 import IDENT, conj, mat_inv, mat_mul, mat_pow, order_class
from .member import (RewriteTables, TablesError, express,
                     express_in_rewriting_generators, is_member,
                     precompute_tables, write_torus, write_unipotent)
from .randgen import PrOracle, pr_init, pr_next
from .recog import (DegenerateSystem, GroupHandle, RecognitionError,
                    RecognitionOutput, RewritingGenerators, conjugator,
                    order4_element, solve_trace_system, stabilizer_pair,
                    verify_recognition)
from .slp import Slp, deserialize, eval_matrices, length, serialize, substitute
from .szstd import (BruhatForm, gen_M, gen_T, gen_U, group_order,
                    is_on_ovoid, ovoid_points, random_sigma_element,
                    sigma_decompose, sigma_membership, standard_generators)

__all__ = [
    "GF", "NotInSubgroup", "build_field", "poly_roots",
    "IDENT", "conj", "mat_inv", "mat_mul", "mat_pow", "order_class",
    "BruhatForm", "gen_M", "gen_T", "gen_U", "group_order", "is_on_ovoid",
    "ovoid_points", "random_sigma_element", "sigma_decompose",
    "sigma_membership", "standard_generators",
    "Slp", "deserialize", "eval_matrices", "length", "serialize", "substitute",
    "PrOracle", "pr_init", "pr_next",
    "DegenerateSystem", "GroupHandle", "RecognitionError",
    "RecognitionOutput", "RewritingGenerators", "conjugator",
    "order4_element", "solve_trace_system", "stabilizer_pair",
    "verify_recognition",
    "RewriteTables", "TablesError", "express",
    "express_in_rewriting_generators", "is_member", "precompute_tables",
    "write_torus", "write_unipotent",
    "census_matches_conjecture", "conjectured_counts", "coset_census",
    "small_order_proportion",
]
