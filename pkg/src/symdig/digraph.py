"""Loopless digraphs on range(V), with optional tuple labels.

An undirected graph is a digraph whose arc set is symmetric; the
``undirected`` property is always recomputed from the arcs.
"""

from __future__ import annotations

import sys
from collections import Counter, deque
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from symdig.errors import CapExceededError, InvalidParameterError
from symdig.permaction import GeneratedAction, orbits


class Digraph:
    """Immutable digraph with sorted out- and in-adjacency lists."""

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]], labels: Sequence | None = None):
        if n < 0:
            raise InvalidParameterError("negative vertex count")
        arcset = set()
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidParameterError(f"arc ({u}, {v}) outside vertex range {n}")
            if u == v:
                raise InvalidParameterError(f"loop at vertex {u}")
            arcset.add((u, v))
        out = [[] for _ in range(n)]
        inn = [[] for _ in range(n)]
        for u, v in sorted(arcset):
            out[u].append(v)
            inn[v].append(u)
        self.n = n
        self.arcs = frozenset(arcset)
        self._out = tuple(tuple(a) for a in out)
        self._in = tuple(tuple(sorted(a)) for a in inn)
        self._out_sets = tuple(frozenset(a) for a in out)
        self.labels = None
        self._label_index = None
        if labels is not None:
            labels = tuple(tuple(lab) if isinstance(lab, list) else lab for lab in labels)
            if len(labels) != n:
                raise InvalidParameterError("label count does not match vertex count")
            if len(set(labels)) != n:
                raise InvalidParameterError("labels are not pairwise distinct")
            self.labels = labels
            self._label_index = {lab: i for i, lab in enumerate(labels)}

    def __repr__(self):
        return f"Digraph(n={self.n}, arcs={len(self.arcs)})"

    def __eq__(self, other):
        return (isinstance(other, Digraph) and self.n == other.n
                and self.arcs == other.arcs and self.labels == other.labels)

    def __hash__(self):
        return hash((self.n, self.arcs))

    @property
    def undirected(self) -> bool:
        return all((v, u) in self.arcs for u, v in self.arcs)

    def has_arc(self, u: int, v: int) -> bool:
        return v in self._out_sets[u]

    def adjacent(self, u: int, v: int) -> bool:
        return v in self._out_sets[u] or u in self._out_sets[v]

    def out_degree(self, v: int) -> int:
        return len(self._out[v])

    def in_degree(self, v: int) -> int:
        return len(self._in[v])

    def sorted_arcs(self) -> list[tuple[int, int]]:
        return sorted(self.arcs)

    def vertex(self, label) -> int:
        if self._label_index is None:
            raise InvalidParameterError("digraph is unlabeled")
        try:
            return self._label_index[label]
        except KeyError:
            raise InvalidParameterError(f"no vertex labeled {label!r}") from None

    def induced(self, vertices: Iterable[int]) -> Digraph:
        """Induced subgraph, vertices renumbered in ascending order."""
        vs = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(vs)}
        arcs = [(pos[u], pos[v]) for u in vs for v in self._out[u] if v in pos]
        labels = [self.labels[v] for v in vs] if self.labels is not None else None
        return Digraph(len(vs), arcs, labels)

    def relabel(self, perm: Sequence[int]) -> Digraph:
        """Image under the vertex bijection v -> perm[v] (labels travel along)."""
        labels = None
        if self.labels is not None:
            labels = [None] * self.n
            for v, lab in enumerate(self.labels):
                labels[perm[v]] = lab
        return Digraph(self.n, ((perm[u], perm[v]) for u, v in self.arcs), labels)


def neighbors(g: Digraph, v: int, direction: str = "out") -> list[int]:
    if not (0 <= v < g.n):
        raise InvalidParameterError(f"vertex {v} out of range")
    if direction == "out":
        return list(g._out[v])
    if direction == "in":
        return list(g._in[v])
    raise InvalidParameterError(f"direction must be 'out' or 'in', got {direction!r}")


@dataclass(frozen=True)
class PairSet:
    pairs: frozenset
    tag: str

    def __len__(self):
        return len(self.pairs)

    def __iter__(self):
        return iter(sorted(self.pairs))

    def __contains__(self, pair):
        return pair in self.pairs


def a2_sets(g: Digraph) -> tuple[PairSet, PairSet, PairSet]:
    """Distance-2 pair sets (A2+, mixed, A2-) of non-adjacent distinct vertices.

    A2+: common out-neighbour.  mixed: a path u -> w -> v.  A2-: common
    in-neighbour.
    """
    plus, mixed, minus = set(), set(), set()
    for w in range(g.n):
        ins, outs = g._in[w], g._out[w]
        for u in ins:
            for v in ins:
                if u != v and not g.adjacent(u, v):
                    plus.add((u, v))
            for v in outs:
                if u != v and not g.adjacent(u, v):
                    mixed.add((u, v))
        for u in outs:
            for v in outs:
                if u != v and not g.adjacent(u, v):
                    minus.add((u, v))
    return (PairSet(frozenset(plus), "a2plus"), PairSet(frozenset(mixed), "a2mixed"),
            PairSet(frozenset(minus), "a2minus"))


def hamming_dist(g: Digraph, u: int, v: int) -> int:
    if g.labels is None:
        raise InvalidParameterError("Hamming distance needs tuple labels")
    return hamming(g.labels[u], g.labels[v])


def hamming(s: Sequence, t: Sequence) -> int:
    if len(s) != len(t):
        raise InvalidParameterError("tuples of different length")
    return sum(1 for a, b in zip(s, t) if a != b)


def _reach(adj, start: int) -> set[int]:
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def is_connected(g: Digraph, mode: str = "weak") -> bool:
    if g.n == 0:
        return True
    if mode == "weak":
        und = [set(g._out[v]) | set(g._in[v]) for v in range(g.n)]
        return len(_reach(und, 0)) == g.n
    if mode == "strong":
        return len(_reach(g._out, 0)) == g.n and len(_reach(g._in, 0)) == g.n
    raise InvalidParameterError(f"mode must be 'weak' or 'strong', got {mode!r}")


def opp(g: Digraph) -> Digraph:
    return Digraph(g.n, ((v, u) for u, v in g.arcs), g.labels)


def complete_digraph(n: int) -> Digraph:
    return Digraph(n, ((u, v) for u in range(n) for v in range(n) if u != v))


def normal_quotient(g: Digraph, sub: GeneratedAction) -> tuple[Digraph, list[list[int]]]:
    """Quotient by the orbits of ``sub``; returns (quotient, blocks).

    Block i is the i-th orbit in order of least member.  Distinct blocks are
    joined by an arc when some arc of g runs between their members.
    """
    if sub.size != g.n:
        raise InvalidParameterError(
            f"subgroup acts on {sub.size} points, digraph has {g.n} vertices")
    blocks = orbits(sub)
    where = {}
    for i, blk in enumerate(blocks):
        for v in blk:
            where[v] = i
    arcs = {(where[u], where[v]) for u, v in g.arcs if where[u] != where[v]}
    return Digraph(len(blocks), arcs), blocks


def check_map_is_isomorphism(g1: Digraph, g2: Digraph, f: Sequence[int] | Mapping[int, int]) -> bool:
    """Whether f is a bijection with (u,v) an arc of g1 iff (f(u),f(v)) an arc of g2."""
    if g1.n != g2.n:
        return False
    fm = [f[v] for v in range(g1.n)]
    if sorted(fm) != list(range(g2.n)):
        raise InvalidParameterError("map is not a bijection between the vertex sets")
    if len(g1.arcs) != len(g2.arcs):
        return False
    return all((fm[u], fm[v]) in g2.arcs for u, v in g1.arcs)


# Isomorphism search

def _distance_profiles(g: Digraph) -> list[tuple]:
    out = []
    for v in range(g.n):
        dist = {v: 0}
        queue = deque([v])
        while queue:
            x = queue.popleft()
            for y in g._out[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        out.append(tuple(sorted(Counter(dist.values()).items())))
    return out


def _refine(graphs: list[Digraph], initial: list[list]) -> list[list[int]]:
    """Colour refinement run jointly on several digraphs so colours are comparable."""
    colours = initial
    while True:
        sigs = []
        for g, col in zip(graphs, colours):
            sigs.append([
                (col[v],
                 tuple(sorted(Counter(col[w] for w in g._out[v]).items())),
                 tuple(sorted(Counter(col[w] for w in g._in[v]).items())))
                for v in range(g.n)])
        palette = {s: i for i, s in enumerate(sorted({s for sg in sigs for s in sg}))}
        new = [[palette[s] for s in sg] for sg in sigs]
        if all(len(set(a)) == len(set(b)) for a, b in zip(new, colours)):
            return new
        colours = new


def is_isomorphic(g1: Digraph, g2: Digraph, cap: int = 512) -> list[int] | None:
    """A vertex bijection g1 -> g2 preserving arcs exactly, or None.

    Backtracking over candidates that agree on in/out degree, out-distance
    profile and stable colour-refinement class, extending the map in BFS
    order so each new vertex is checked against every mapped one.
    """
    if g1.n > cap or g2.n > cap:
        raise CapExceededError(f"isomorphism search capped at {cap} vertices")
    if g1.n != g2.n or len(g1.arcs) != len(g2.arcs):
        return None
    n = g1.n
    if n == 0:
        return []
    p1, p2 = _distance_profiles(g1), _distance_profiles(g2)
    init1 = [(g1.out_degree(v), g1.in_degree(v), p1[v]) for v in range(n)]
    init2 = [(g2.out_degree(v), g2.in_degree(v), p2[v]) for v in range(n)]
    palette = {s: i for i, s in enumerate(sorted(set(init1) | set(init2)))}
    c1, c2 = _refine([g1, g2], [[palette[s] for s in init1], [palette[s] for s in init2]])
    if Counter(c1) != Counter(c2):
        return None

    by_colour: dict[int, list[int]] = {}
    for v in range(n):
        by_colour.setdefault(c2[v], []).append(v)

    # Visit order: BFS over the underlying graph, rarest colour first per component.
    und = [sorted(set(g1._out[v]) | set(g1._in[v])) for v in range(n)]
    freq = Counter(c1)
    order, placed = [], [False] * n
    for start in sorted(range(n), key=lambda v: (freq[c1[v]], v)):
        if placed[start]:
            continue
        placed[start] = True
        queue = deque([start])
        while queue:
            x = queue.popleft()
            order.append(x)
            for y in und[x]:
                if not placed[y]:
                    placed[y] = True
                    queue.append(y)

    fmap = [-1] * n
    used = [False] * n

    def consistent(v: int, w: int) -> bool:
        for u in und[v]:
            fu = fmap[u]
            if fu < 0:
                continue
            if g1.has_arc(u, v) != g2.has_arc(fu, w) or g1.has_arc(v, u) != g2.has_arc(w, fu):
                return False
        # Non-neighbours of v must map to non-neighbours of w.
        mapped_nbrs = sum(1 for u in und[v] if fmap[u] >= 0)
        w_nbrs = sum(1 for x in set(g2._out[w]) | set(g2._in[w]) if used[x])
        return mapped_nbrs == w_nbrs

    def extend(k: int) -> bool:
        if k == n:
            return True
        v = order[k]
        for w in by_colour[c1[v]]:
            if used[w] or not consistent(v, w):
                continue
            fmap[v] = w
            used[w] = True
            if extend(k + 1):
                return True
            fmap[v] = -1
            used[w] = False
        return False

    limit = sys.getrecursionlimit()
    if limit < n + 100:
        sys.setrecursionlimit(n + 100)
    try:
        found = extend(0)
    finally:
        sys.setrecursionlimit(limit)
    return list(fmap) if found else None
