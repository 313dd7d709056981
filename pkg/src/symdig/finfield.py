"""Arithmetic in GF(p^k).

Elements are encoded as integers: the residue c_0 + c_1 x + ... + c_{k-1} x^{k-1}
of the polynomial ring modulo the field's modulus maps to c_0 + c_1 p + ... +
c_{k-1} p^{k-1}.  Every ordering used downstream (vertex order of Paley
tournaments, of the class domain Delta, ...) derives from this encoding.

Multiplication goes through discrete log/exp tables built from the least
primitive element, so all operations are table lookups or digit loops.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field

from symdig.errors import InvalidParameterError

MAX_ORDER = 1 << 20


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# Polynomials over Z_p are coefficient lists, constant term first, no trailing zeros.

def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_mod(a: list[int], m: list[int], p: int) -> list[int]:
    """Remainder of a modulo the monic polynomial m over Z_p."""
    a = _poly_trim(list(a))
    dm = len(m) - 1
    while len(a) - 1 >= dm:
        c = a[-1]
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
        _poly_trim(a)
    return a


def _monic_polys(p: int, degree: int):
    """All monic polynomials of the given degree, in increasing encoding order."""
    for low in range(p**degree):
        coeffs = []
        for _ in range(degree):
            coeffs.append(low % p)
            low //= p
        yield coeffs + [1]


def is_irreducible(m: list[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg(m)/2."""
    deg = len(m) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for f in _monic_polys(p, d):
            if not poly_mod(m, f, p):
                return False
    return True


def least_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Monic irreducible of degree k whose lower coefficients have least encoding."""
    if k == 1:
        return (0, 1)
    for m in _monic_polys(p, k):
        if is_irreducible(m, p):
            return tuple(m)
    raise InvalidParameterError(f"no irreducible polynomial of degree {k} over Z_{p}")


@dataclass(frozen=True, eq=False)
class FiniteField:
    """GF(p^k) with a fixed modulus; elements are integer codes in [0, q)."""

    p: int
    k: int
    modulus: tuple[int, ...]
    _exp: tuple[int, ...] = field(repr=False, default=())
    _log: tuple[int, ...] = field(repr=False, default=())

    @property
    def q(self) -> int:
        return self.p**self.k

    @property
    def generator(self) -> int:
        """The least primitive element (generator of the multiplicative group)."""
        return self._exp[1] if self.q > 2 else 1

    def __eq__(self, other):
        return (isinstance(other, FiniteField) and self.p == other.p
                and self.modulus == other.modulus)

    def __hash__(self):
        return hash((self.p, self.modulus))

    def __repr__(self):
        return f"GF({self.p}^{self.k})" if self.k > 1 else f"GF({self.p})"

    def elements(self) -> range:
        return range(self.q)

    def basis(self) -> list[int]:
        """Codes of 1, x, ..., x^{k-1}: an additive basis over Z_p."""
        return [self.p**i for i in range(self.k)]

    def digits(self, x: int) -> list[int]:
        out = []
        for _ in range(self.k):
            out.append(x % self.p)
            x //= self.p
        return out

    def from_digits(self, ds) -> int:
        x = 0
        for d in reversed(list(ds)):
            x = x * self.p + d
        return x

    def _check(self, x: int) -> None:
        if not (isinstance(x, int) and 0 <= x < self.q):
            raise InvalidParameterError(f"{x!r} is not an element code of {self!r}")

    def add(self, x: int, y: int) -> int:
        if self.k == 1:
            return (x + y) % self.p
        p = self.p
        out, scale = 0, 1
        while x or y:
            out += ((x % p + y % p) % p) * scale
            x //= p
            y //= p
            scale *= p
        return out

    def neg(self, x: int) -> int:
        if self.k == 1:
            return -x % self.p
        return self.from_digits(-d % self.p for d in self.digits(x))

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        if x == 0 or y == 0:
            return 0
        return self._exp[(self._log[x] + self._log[y]) % (self.q - 1)]

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return self._exp[-self._log[x] % (self.q - 1)]

    def div(self, x: int, y: int) -> int:
        return self.mul(x, self.inv(y))

    def pow(self, x: int, e: int) -> int:
        if x == 0:
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 1 if e == 0 else 0
        return self._exp[(self._log[x] * e) % (self.q - 1)]

    def is_square(self, x: int) -> bool:
        """Euler's criterion; zero is rejected since only nonzero squares matter here."""
        self._check(x)
        if x == 0:
            raise InvalidParameterError("is_square is undefined for zero")
        if self.p == 2:
            return True
        return self.pow(x, (self.q - 1) // 2) == 1

    def element(self, x: int) -> FieldElement:
        self._check(x)
        return FieldElement(x, self)


def _build_tables(p: int, k: int, modulus: tuple[int, ...]):
    q = p**k
    m = list(modulus)

    def mulpoly(a: int, b: int) -> int:
        da = [(a // p**i) % p for i in range(k)]
        db = [(b // p**i) % p for i in range(k)]
        prod = [0] * (2 * k)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        if k == 1:
            r = [prod[0] % p]
        else:
            r = poly_mod(prod, m, p)
        return sum(c * p**i for i, c in enumerate(r))

    def powpoly(a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = mulpoly(r, a)
            a = mulpoly(a, a)
            e >>= 1
        return r

    g = 1
    if q > 2:
        factors = prime_factors(q - 1)
        g = next(c for c in range(2, q)
                 if all(powpoly(c, (q - 1) // f) != 1 for f in factors))
    exp = [1]
    for _ in range(q - 2):
        exp.append(mulpoly(exp[-1], g))
    log = [0] * q
    for i, v in enumerate(exp):
        log[v] = i
    return tuple(exp), tuple(log)


@functools.lru_cache(maxsize=None)
def field_make(p: int, k: int = 1) -> FiniteField:
    """Build GF(p^k) with the least monic irreducible modulus."""
    if not isinstance(p, int) or not is_prime(p):
        raise InvalidParameterError(f"characteristic {p!r} is not prime")
    if not isinstance(k, int) or k < 1:
        raise InvalidParameterError(f"degree {k!r} must be a positive integer")
    if p**k > MAX_ORDER:
        raise InvalidParameterError(f"field order {p}^{k} exceeds the size guard {MAX_ORDER}")
    modulus = least_irreducible(p, k)
    exp, log = _build_tables(p, k, modulus)
    return FiniteField(p, k, modulus, exp, log)


def field_of_order(q: int) -> FiniteField:
    """GF(q) for a prime power q."""
    if not isinstance(q, int) or q < 2:
        raise InvalidParameterError(f"{q!r} is not a prime power")
    for p in range(2, q + 1):
        if q % p == 0:
            break
    k, r = 0, q
    while r % p == 0:
        r //= p
        k += 1
    if r != 1 or not is_prime(p):
        raise InvalidParameterError(f"{q} is not a prime power")
    return field_make(p, k)


@dataclass(frozen=True)
class FieldElement:
    """An element of a FiniteField with operator overloading."""

    value: int
    field: FiniteField

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise InvalidParameterError("elements belong to different fields")
            return other.value
        if isinstance(other, int):
            return other % self.field.p if self.field.k == 1 else self.field.element(other).value
        return NotImplemented

    def _wrap(self, v: int) -> FieldElement:
        return FieldElement(v, self.field)

    def __add__(self, other):
        return self._wrap(self.field.add(self.value, self._coerce(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return self._wrap(self.field.sub(self.value, self._coerce(other)))

    def __rsub__(self, other):
        return self._wrap(self.field.sub(self._coerce(other), self.value))

    def __mul__(self, other):
        return self._wrap(self.field.mul(self.value, self._coerce(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self._wrap(self.field.div(self.value, self._coerce(other)))

    def __neg__(self):
        return self._wrap(self.field.neg(self.value))

    def __pow__(self, e: int):
        return self._wrap(self.field.pow(self.value, e))

    def inverse(self) -> FieldElement:
        return self._wrap(self.field.inv(self.value))

    def is_square(self) -> bool:
        return self.field.is_square(self.value)

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.value}@{self.field!r}"


def field_arith(x: FieldElement, y: FieldElement | None, op: str) -> FieldElement:
    """Dispatch a named operation: add, sub, mul, div, neg, inv, pow.

    For ``pow`` the second argument is an integer exponent.
    """
    if op == "neg":
        return -x
    if op == "inv":
        return x.inverse()
    if op == "pow":
        return x ** int(y)
    if not isinstance(y, FieldElement) or y.field != x.field:
        raise InvalidParameterError("operands belong to different fields")
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    raise InvalidParameterError(f"unknown field operation {op!r}")


def is_square(x: FieldElement) -> bool:
    return x.is_square()
