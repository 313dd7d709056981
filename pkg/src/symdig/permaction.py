"""Permutation groups given by generators, acting on {0, ..., N-1}.

Everything here is breadth-first search over generators: orbits of points,
orbits of ordered pairs, and (for small groups) enumeration of every element.
Permutations are tuples of images and act on the right, so that
``x^(gh) = (x^g)^h`` and ``compose(g, h)[x] == h[g[x]]``.
"""

from __future__ import annotations

import itertools
import warnings
from collections import deque
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Sequence

from symdig.errors import CapExceededError, InvalidParameterError

Permutation = tuple  # tuple[int, ...] of images


class VacuousTransitivityWarning(UserWarning):
    """Transitivity was asked of an empty set."""


def identity(n: int) -> Permutation:
    return tuple(range(n))


def check_perm(p: Sequence[int]) -> None:
    if sorted(p) != list(range(len(p))):
        raise InvalidParameterError("not a permutation")


def perm_compose(g: Permutation, h: Permutation) -> Permutation:
    """The product gh: first g, then h."""
    if len(g) != len(h):
        raise InvalidParameterError(f"domain mismatch: {len(g)} vs {len(h)}")
    return tuple(h[x] for x in g)


def perm_inverse(g: Permutation) -> Permutation:
    inv = [0] * len(g)
    for x, y in enumerate(g):
        inv[y] = x
    return tuple(inv)


def perm_order(g: Permutation) -> int:
    """Order of g as the lcm of its cycle lengths."""
    from math import lcm

    seen = [False] * len(g)
    out = 1
    for start in range(len(g)):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = g[x]
            length += 1
        out = lcm(out, length)
    return out


def transposition(n: int, i: int, j: int) -> Permutation:
    img = list(range(n))
    img[i], img[j] = img[j], img[i]
    return tuple(img)


def cycle(n: int, points: Sequence[int]) -> Permutation:
    img = list(range(n))
    for a, b in zip(points, list(points[1:]) + [points[0]]):
        img[a] = b
    return tuple(img)


def symmetric_group_generators(m: int) -> list[Permutation]:
    """A transposition and an m-cycle, which generate Sym(m)."""
    if m < 2:
        return []
    if m == 2:
        return [transposition(2, 0, 1)]
    return [transposition(m, 0, 1), cycle(m, list(range(m)))]


@dataclass(frozen=True)
class GeneratedAction:
    """A permutation group on range(size), given by generators.

    ``labels`` optionally attaches an external object to each point, e.g. a
    class of Delta or a tuple in Delta^n.
    """

    size: int
    generators: tuple[Permutation, ...]
    labels: tuple | None = None
    _index: dict = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        gens = tuple(tuple(g) for g in self.generators)
        for g in gens:
            if len(g) != self.size:
                raise InvalidParameterError(
                    f"generator of degree {len(g)} on a domain of size {self.size}")
            check_perm(g)
        object.__setattr__(self, "generators", gens)
        if self.labels is not None:
            labels = tuple(self.labels)
            if len(labels) != self.size:
                raise InvalidParameterError("label count does not match domain size")
            object.__setattr__(self, "labels", labels)
            object.__setattr__(self, "_index", {lab: i for i, lab in enumerate(labels)})

    def index_of(self, label: Hashable) -> int:
        if self._index is None:
            raise InvalidParameterError("action has no labels")
        try:
            return self._index[label]
        except KeyError:
            raise InvalidParameterError(f"{label!r} is not a point of this action") from None

    def with_generators(self, gens: Iterable[Permutation]) -> GeneratedAction:
        return GeneratedAction(self.size, tuple(gens), self.labels)

    def _check_point(self, x: int) -> None:
        if not (0 <= x < self.size):
            raise InvalidParameterError(f"point {x} outside domain of size {self.size}")


def orbit(action: GeneratedAction, point: int) -> list[int]:
    """The orbit of ``point``, sorted ascending."""
    action._check_point(point)
    seen = {point}
    queue = deque([point])
    while queue:
        x = queue.popleft()
        for g in action.generators:
            y = g[x]
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return sorted(seen)


def orbits(action: GeneratedAction) -> list[list[int]]:
    """All orbits, each sorted, ordered by least member."""
    done = [False] * action.size
    out = []
    for x in range(action.size):
        if not done[x]:
            orb = orbit(action, x)
            for y in orb:
                done[y] = True
            out.append(orb)
    return out


def pair_orbit(action: GeneratedAction, seed: tuple[int, int]) -> set[tuple[int, int]]:
    """Orbit of an ordered pair under the diagonal action."""
    a, b = seed
    action._check_point(a)
    action._check_point(b)
    seen = {(a, b)}
    queue = deque([(a, b)])
    gens = action.generators
    while queue:
        x, y = queue.popleft()
        for g in gens:
            pair = (g[x], g[y])
            if pair not in seen:
                seen.add(pair)
                queue.append(pair)
    return seen


def is_transitive_on(action: GeneratedAction, subset: Iterable) -> bool:
    """Whether ``subset`` (of points, or of ordered pairs) is exactly one orbit.

    An empty subset is vacuously a single orbit: returns True and emits a
    VacuousTransitivityWarning.
    """
    s = set(subset)
    if not s:
        warnings.warn("transitivity on an empty set is vacuous", VacuousTransitivityWarning,
                      stacklevel=2)
        return True
    start = min(s)
    if isinstance(start, tuple):
        orb = pair_orbit(action, start)
    else:
        orb = set(orbit(action, start))
    return orb == s


def is_transitive(action: GeneratedAction) -> bool:
    return action.size == 0 or len(orbit(action, 0)) == action.size


def group_enumerate(action: GeneratedAction, cap: int = 10**6) -> list[Permutation]:
    """Every element of the generated group, in BFS order from the identity."""
    if cap <= 0:
        raise InvalidParameterError("cap must be positive")
    e = identity(action.size)
    seen = {e}
    out = [e]
    queue = deque([e])
    while queue:
        x = queue.popleft()
        for g in action.generators:
            y = tuple(g[i] for i in x)  # x then g
            if y not in seen:
                seen.add(y)
                out.append(y)
                if len(out) > cap:
                    raise CapExceededError(f"enumeration cap exceeded: group has more than {cap} elements")
                queue.append(y)
    return out


def group_order(action: GeneratedAction, cap: int = 10**6) -> int:
    return len(group_enumerate(action, cap))


def stabilizer_elements(elements: Iterable[Permutation], point: int) -> list[Permutation]:
    return [g for g in elements if g[point] == point]


def orbit_length_duality_check(action: GeneratedAction, eta: int, nu: int,
                               cap: int = 10**6) -> tuple[bool, int, int]:
    """Compare |eta^{H_nu}| with |nu^{H_eta}| by filtering the enumerated group.

    Returns (equal, |eta^{H_nu}|, |nu^{H_eta}|).
    """
    action._check_point(eta)
    action._check_point(nu)
    elems = group_enumerate(action, cap)
    eta_orbit = {g[eta] for g in stabilizer_elements(elems, nu)}
    nu_orbit = {g[nu] for g in stabilizer_elements(elems, eta)}
    return len(eta_orbit) == len(nu_orbit), len(eta_orbit), len(nu_orbit)


# Wreath products in product action

@dataclass(frozen=True)
class WreathElement:
    """sigma(h_1, ..., h_n): sigma permutes coordinates, h_i acts on coordinate i."""

    top: Permutation
    base: tuple[Permutation, ...]

    def __post_init__(self):
        object.__setattr__(self, "top", tuple(self.top))
        object.__setattr__(self, "base", tuple(tuple(h) for h in self.base))
        if len(self.top) != len(self.base):
            raise InvalidParameterError("top permutation and base have different lengths")
        if len({len(h) for h in self.base}) > 1:
            raise InvalidParameterError("base entries act on different domains")

    @property
    def n(self) -> int:
        return len(self.top)

    def compose(self, other: WreathElement) -> WreathElement:
        """self * other, acting as self first."""
        if other.n != self.n:
            raise InvalidParameterError("wreath elements of different rank")
        top = perm_compose(self.top, other.top)
        inv = perm_inverse(other.top)
        base = tuple(perm_compose(self.base[inv[j]], other.base[j]) for j in range(self.n))
        return WreathElement(top, base)


def wreath_apply(g: WreathElement, t: Sequence[int]) -> tuple[int, ...]:
    """Coordinate i of the image is t[i^{sigma^-1}] moved by h_i."""
    if len(t) != g.n:
        raise InvalidParameterError(f"tuple of length {len(t)} for a rank-{g.n} element")
    inv = perm_inverse(g.top)
    return tuple(g.base[i][t[inv[i]]] for i in range(g.n))


def tuple_index(t: Sequence[int], m: int) -> int:
    """Mixed-radix code of a tuple over range(m); coordinate 0 most significant."""
    x = 0
    for c in t:
        x = x * m + c
    return x


def index_tuple(x: int, m: int, n: int) -> tuple[int, ...]:
    out = [0] * n
    for i in range(n - 1, -1, -1):
        x, out[i] = divmod(x, m)
    return tuple(out)


def wreath_element_permutation(g: WreathElement, m: int) -> Permutation:
    """The permutation of Delta^n (|Delta| = m) induced by g."""
    return tuple(tuple_index(wreath_apply(g, t), m)
                 for t in itertools.product(range(m), repeat=g.n))


def wreath_generators(base_action: GeneratedAction, n: int) -> GeneratedAction:
    """H wr Sym(n) acting on Delta^n, where H is ``base_action`` on Delta.

    Generators: each generator of H in coordinate 0, and the adjacent
    coordinate transpositions.  Points are tuples in mixed-radix order.
    """
    if not isinstance(n, int) or n < 1:
        raise InvalidParameterError(f"rank n must be a positive integer, got {n!r}")
    m = base_action.size
    if n == 1:
        labels = None
        if base_action.labels is not None:
            labels = tuple((lab,) for lab in base_action.labels)
        return GeneratedAction(m, base_action.generators, labels)
    ident = identity(m)
    gens = []
    for h in base_action.generators:
        elem = WreathElement(identity(n), (h,) + (ident,) * (n - 1))
        gens.append(wreath_element_permutation(elem, m))
    for i in range(n - 1):
        elem = WreathElement(transposition(n, i, i + 1), (ident,) * n)
        gens.append(wreath_element_permutation(elem, m))
    points = itertools.product(range(m), repeat=n)
    if base_action.labels is not None:
        labels = tuple(tuple(base_action.labels[c] for c in t) for t in points)
    else:
        labels = tuple(points)
    return GeneratedAction(m**n, tuple(gens), labels)
