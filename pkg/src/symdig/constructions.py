"""Builders for the concrete digraph families and their groups.

The central objects are the 2(q+1) classes of nonzero vectors of F_q^2
modulo multiplication by nonzero squares (q = 3 mod 4), written [a,b], with
SL(2,q) acting on them by right multiplication of row vectors.
"""

from __future__ import annotations

import itertools
from typing import NamedTuple, Sequence

from symdig.digraph import Digraph, hamming
from symdig.errors import InvalidParameterError
from symdig.finfield import FiniteField
from symdig.permaction import (
    GeneratedAction,
    identity,
    pair_orbit,
    symmetric_group_generators,
    wreath_generators,
)

MAX_VERTICES = 1 << 20


class OrbitClass(NamedTuple):
    """Canonical representative [a, b] of a class of Delta (entries are field codes)."""

    a: int
    b: int

    def __str__(self):
        return f"[{self.a},{self.b}]"


class Matrix2(NamedTuple):
    """2x2 matrix (a b; c d) over a finite field, acting on row vectors from the right."""

    a: int
    b: int
    c: int
    d: int

    def det(self, F: FiniteField) -> int:
        return F.sub(F.mul(self.a, self.d), F.mul(self.b, self.c))

    def act(self, F: FiniteField, x: int, y: int) -> tuple[int, int]:
        """(x, y) * M."""
        return (F.add(F.mul(x, self.a), F.mul(y, self.c)),
                F.add(F.mul(x, self.b), F.mul(y, self.d)))

    def times(self, F: FiniteField, other: Matrix2) -> Matrix2:
        a, b = other.act(F, self.a, self.b)
        c, d = other.act(F, self.c, self.d)
        return Matrix2(a, b, c, d)


def minus_one(F: FiniteField) -> int:
    return F.neg(1)


def z_matrix(F: FiniteField) -> Matrix2:
    """The central involution -I."""
    m = minus_one(F)
    return Matrix2(m, 0, 0, m)


def iota_matrix(F: FiniteField) -> Matrix2:
    """(0 -1; 1 0)."""
    return Matrix2(0, minus_one(F), 1, 0)


def o_matrix(F: FiniteField) -> Matrix2:
    """(0 1; 1 0): determinant -1, swaps the two coordinates of a vector."""
    return Matrix2(0, 1, 1, 0)


def check_q(F: FiniteField) -> None:
    """Reject fields outside q = 3 mod 4, q >= 7."""
    if F.q % 4 != 3:
        raise InvalidParameterError(f"q = {F.q} must satisfy q = 3 mod 4")
    if F.q < 7:
        raise InvalidParameterError(
            f"q = {F.q} is excluded: q must be at least 7 (for q = 3 the digraphs are Cayley)")


def canonicalize(F: FiniteField, a: int, b: int) -> OrbitClass:
    """The class of (a, b) under scaling by nonzero squares."""
    if F.q % 4 != 3:
        raise InvalidParameterError(f"q = {F.q} must satisfy q = 3 mod 4")
    if a == 0 and b == 0:
        raise InvalidParameterError("the zero vector has no class")
    if b != 0:
        s = F.inv(b)
        if not F.is_square(b):
            s = F.neg(s)  # -b^-1 is a square since -1 is not
        return OrbitClass(F.mul(a, s), F.mul(b, s))
    return OrbitClass(1, 0) if F.is_square(a) else OrbitClass(minus_one(F), 0)


def delta_domain(F: FiniteField) -> list[OrbitClass]:
    """Classes [a,1] by ascending a, then [a,-1], then [1,0] and [-1,0]."""
    check_q(F)
    m = minus_one(F)
    return ([OrbitClass(a, 1) for a in F.elements()]
            + [OrbitClass(a, m) for a in F.elements()]
            + [OrbitClass(1, 0), OrbitClass(m, 0)])


def matrix_permutation(F: FiniteField, M: Matrix2, domain: Sequence[OrbitClass] | None = None,
                       index: dict | None = None) -> tuple[int, ...]:
    """Permutation of Delta induced by v -> canonical(v * M)."""
    if domain is None:
        domain = delta_domain(F)
    if index is None:
        index = {c: i for i, c in enumerate(domain)}
    if M.det(F) == 0:
        raise InvalidParameterError("singular matrix")
    # Scalar matrices with square entries commute with the class map, so any
    # invertible M induces a well-defined permutation of classes.
    return tuple(index[canonicalize(F, *M.act(F, c.a, c.b))] for c in domain)


def _action(F: FiniteField, mats: Sequence[Matrix2]) -> GeneratedAction:
    domain = delta_domain(F)
    index = {c: i for i, c in enumerate(domain)}
    gens = tuple(matrix_permutation(F, M, domain, index) for M in mats)
    return GeneratedAction(len(domain), gens, tuple(domain))


def sl2_generators(F: FiniteField) -> list[Matrix2]:
    """Upper and lower transvections over the additive basis 1, x, ..., x^{k-1}."""
    basis = F.basis()
    return ([Matrix2(1, lam, 0, 1) for lam in basis]
            + [Matrix2(1, 0, lam, 1) for lam in basis])


def sl2_action(F: FiniteField) -> GeneratedAction:
    """SL(2,q) acting on Delta."""
    check_q(F)
    return _action(F, sl2_generators(F))


def borel_generators(F: FiniteField) -> list[Matrix2]:
    """Generators of the stabilizer of [1,0]: matrices (x^2 0; y x^-2)."""
    g2 = F.mul(F.generator, F.generator)
    return ([Matrix2(g2, 0, 0, F.inv(g2))]
            + [Matrix2(1, 0, lam, 1) for lam in F.basis()])


def borel_stabilizer_generators(F: FiniteField) -> GeneratedAction:
    check_q(F)
    return _action(F, borel_generators(F))


def borel_elements(F: FiniteField) -> list[Matrix2]:
    """Every matrix (x^2 0; y x^-2), enumerated directly (no generators)."""
    out = set()
    for x in range(1, F.q):
        x2 = F.mul(x, x)
        for y in F.elements():
            out.add(Matrix2(x2, 0, y, F.inv(x2)))
    return sorted(out)


def center_action(F: FiniteField) -> GeneratedAction:
    """<z> acting on Delta."""
    check_q(F)
    return _action(F, [z_matrix(F)])


def orbital_graph(action: GeneratedAction, seed: tuple[int, int]) -> Digraph:
    """Digraph whose arcs are the orbit of the ordered pair ``seed``."""
    u, v = seed
    if u == v:
        raise InvalidParameterError("orbital graph seed must be a pair of distinct points")
    return Digraph(action.size, pair_orbit(action, (u, v)), action.labels)


def build_xq(F: FiniteField) -> Digraph:
    """The orbital digraph of ([1,0], [0,1]) under SL(2,q); labels are 1-tuples."""
    H = wreath_generators(sl2_action(F), 1)
    return orbital_graph(H, (H.index_of((OrbitClass(1, 0),)), H.index_of((OrbitClass(0, 1),))))


def xqn_seed(n: int) -> tuple[tuple[OrbitClass, ...], tuple[OrbitClass, ...]]:
    """(beta, alpha): beta = ([0,1],[1,0],...,[1,0]), alpha = ([1,0],...,[1,0])."""
    alpha = (OrbitClass(1, 0),) * n
    beta = (OrbitClass(0, 1),) + (OrbitClass(1, 0),) * (n - 1)
    return beta, alpha


def build_xqn(F: FiniteField, n: int) -> tuple[Digraph, GeneratedAction]:
    """The orbital digraph (beta, alpha)^W for W = SL(2,q) wr Sym(n) on Delta^n.

    Arcs run from the beta side to the alpha side, so the in-neighbourhood of
    alpha is the W_alpha-orbit of beta.
    """
    check_q(F)
    if not isinstance(n, int) or n < 1:
        raise InvalidParameterError(f"n must be a positive integer, got {n!r}")
    if (2 * (F.q + 1)) ** n > MAX_VERTICES:
        raise InvalidParameterError(
            f"(2(q+1))^n = {(2 * (F.q + 1)) ** n} exceeds the size guard {MAX_VERTICES}")
    W = wreath_generators(sl2_action(F), n)
    beta, alpha = xqn_seed(n)
    return orbital_graph(W, (W.index_of(beta), W.index_of(alpha))), W


def hamming_action(m: int, n: int) -> GeneratedAction:
    """Sym(m) wr Sym(n) on tuples over range(m)."""
    base = GeneratedAction(m, tuple(symmetric_group_generators(m)), tuple(range(m)))
    return wreath_generators(base, n)


def build_hamming(m: int, n: int, complement: bool = False) -> Digraph:
    """H(m,n) (tuples at Hamming distance 1 adjacent), or the complement of H(m,2)."""
    if not isinstance(m, int) or m < 2:
        raise InvalidParameterError(f"m must be an integer >= 2, got {m!r}")
    if not isinstance(n, int) or n < 1:
        raise InvalidParameterError(f"n must be a positive integer, got {n!r}")
    if complement and n != 2:
        raise InvalidParameterError("the Hamming complement is only defined here for n = 2")
    if m**n > MAX_VERTICES:
        raise InvalidParameterError(f"m^n = {m**n} exceeds the size guard {MAX_VERTICES}")
    target = 2 if complement else 1
    tuples = list(itertools.product(range(m), repeat=n))
    arcs = [(i, j) for i, s in enumerate(tuples) for j, t in enumerate(tuples)
            if hamming(s, t) == target]
    return Digraph(len(tuples), arcs, tuples)


def paley_action(F: FiniteField) -> GeneratedAction:
    """Affine maps a -> x^2 a + c, generated by a -> a + 1 and a -> g^2 a."""
    g2 = F.mul(F.generator, F.generator)
    shift = tuple(F.add(a, 1) for a in F.elements())
    scale = tuple(F.mul(g2, a) for a in F.elements())
    return GeneratedAction(F.q, (shift, scale), tuple((a,) for a in F.elements()))


def translation_action(F: FiniteField) -> GeneratedAction:
    """Translations a -> a + c, generated over the additive basis."""
    gens = tuple(tuple(F.add(a, lam) for a in F.elements()) for lam in F.basis())
    return GeneratedAction(F.q, gens, tuple((a,) for a in F.elements()))


def build_paley(F: FiniteField) -> tuple[Digraph, GeneratedAction]:
    """Tournament on F_q with an arc a -> b when b - a is a nonzero square."""
    if F.q % 4 != 3:
        raise InvalidParameterError(
            f"q = {F.q} must satisfy q = 3 mod 4 (otherwise the relation is symmetric)")
    arcs = [(a, b) for a in F.elements() for b in F.elements()
            if a != b and F.is_square(F.sub(b, a))]
    return Digraph(F.q, arcs, [(a,) for a in F.elements()]), paley_action(F)


def tuple_map(F: FiniteField, M: Matrix2, n: int = 1) -> list[int]:
    """Vertex map of Delta^n applying v -> v^M in every coordinate.

    M need not lie in SL(2,q); for o (det -1) this is the opp-isomorphism.
    """
    perm = matrix_permutation(F, M)
    m = len(perm)
    out = []
    for t in itertools.product(range(m), repeat=n):
        x = 0
        for c in t:
            x = x * m + perm[c]
        out.append(x)
    return out


def identity_action(size: int, labels=None) -> GeneratedAction:
    return GeneratedAction(size, (identity(size),), labels)
