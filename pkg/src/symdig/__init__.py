"""Orbital digraphs, wreath products in product action, and claim checking.

Builds the Hamming graphs and their complements, Paley tournaments, and the
SL(2,q) digraphs X_q and X_q(n), then verifies their symmetry properties
by orbit computations over generating sets.
"""

from symdig.constructions import (
    OrbitClass,
    build_hamming,
    build_paley,
    build_xq,
    build_xqn,
    canonicalize,
    delta_domain,
    orbital_graph,
    sl2_action,
)
from symdig.digraph import Digraph, a2_sets, is_isomorphic, normal_quotient, opp
from symdig.finfield import FiniteField, field_make, field_of_order
from symdig.permaction import GeneratedAction, WreathElement, orbit, pair_orbit, wreath_apply

__version__ = "0.1.0"
