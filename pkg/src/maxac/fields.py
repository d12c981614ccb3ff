"""Finite fields GF(p^k) with elements encoded as integers.

An element is the polynomial ``sum c_i x^i`` over GF(p) stored as the base-p
integer ``sum c_i p^i``; addition and multiplication go through precomputed
tables, so ``q <= 1024`` stays cheap.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

MAX_ORDER = 1024


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def prime_power(q: int) -> tuple[int, int] | None:
    """``(p, k)`` with ``q == p**k``, or ``None`` when ``q`` is not a prime power."""
    if q < 2:
        return None
    p = next(i for i in range(2, q + 1) if q % i == 0)
    k = 0
    while q % p == 0:
        q //= p
        k += 1
    return (p, k) if q == 1 else None


class NotPrimePowerError(ValueError):
    pass


# polynomials over GF(p) as coefficient lists, lowest degree first


def _poly_mod(a: list[int], m: list[int], p: int) -> list[int]:
    a = list(a)
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) >= len(m):
        coef = a[-1] * inv_lead % p
        shift = len(a) - len(m)
        for i, mc in enumerate(m):
            a[shift + i] = (a[shift + i] - coef * mc) % p
        while a and a[-1] == 0:
            a.pop()
    return a


def is_irreducible(poly: list[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree ``1..deg/2``."""
    k = len(poly) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    for deg in range(1, k // 2 + 1):
        for tail in product(range(p), repeat=deg):
            divisor = list(tail) + [1]
            if not _poly_mod(poly, divisor, p):
                return False
    return True


def find_irreducible(p: int, k: int) -> list[int]:
    """First monic irreducible of degree ``k`` in lexicographic search order."""
    for tail in product(range(p), repeat=k):
        poly = list(reversed(tail)) + [1]
        if is_irreducible(poly, p):
            return poly
    raise ArithmeticError(f"no irreducible polynomial of degree {k} over GF({p})")


class FiniteField:
    """GF(p^k).  Elements are ints ``0..q-1``; 0 and 1 are the field's zero and one."""

    def __init__(self, p: int, k: int = 1):
        if not is_prime(p):
            raise NotPrimePowerError(f"{p} is not prime")
        if k < 1:
            raise ValueError("extension degree must be >= 1")
        if p**k > MAX_ORDER:
            raise ValueError(f"field order {p}^{k} exceeds {MAX_ORDER}")
        self.p = p
        self.k = k
        self.q = p**k
        self.reduction_polynomial = find_irreducible(p, k) if k > 1 else [0, 1]
        q = self.q
        self._digits = [self._to_digits(x) for x in range(q)]
        self.add_table = [[self._from_digits([(a + b) % p for a, b in zip(self._digits[x], self._digits[y])])
                           for y in range(q)] for x in range(q)]
        self.mul_table = [[self._mul_slow(x, y) for y in range(q)] for x in range(q)]
        self.neg_table = [self.add_table[x].index(0) for x in range(q)]
        self.inv_table = [0] + [self.mul_table[x].index(1) for x in range(1, q)]

    def _to_digits(self, x: int) -> list[int]:
        out = []
        for _ in range(self.k):
            out.append(x % self.p)
            x //= self.p
        return out

    def _from_digits(self, digits) -> int:
        x = 0
        for c in reversed(list(digits)):
            x = x * self.p + c
        return x

    def _mul_slow(self, x: int, y: int) -> int:
        a, b, p = self._digits[x], self._digits[y], self.p
        prod = [0] * (2 * self.k - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] = (prod[i + j] + ai * bj) % p
        while prod and prod[-1] == 0:
            prod.pop()
        if self.k > 1:
            prod = _poly_mod(prod, self.reduction_polynomial, p)
        return self._from_digits(prod + [0] * (self.k - len(prod)))

    # arithmetic ---------------------------------------------------------

    @property
    def elements(self) -> range:
        return range(self.q)

    def add(self, x: int, y: int) -> int:
        return self.add_table[x][y]

    def sub(self, x: int, y: int) -> int:
        return self.add_table[x][self.neg_table[y]]

    def mul(self, x: int, y: int) -> int:
        return self.mul_table[x][y]

    def neg(self, x: int) -> int:
        return self.neg_table[x]

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.inv_table[x]

    def dot(self, u, v) -> int:
        s = 0
        for a, b in zip(u, v):
            s = self.add_table[s][self.mul_table[a][b]]
        return s

    def __repr__(self) -> str:
        return f"FiniteField(p={self.p}, k={self.k})"


@lru_cache(maxsize=None)
def field_create(p: int, k: int = 1) -> FiniteField:
    return FiniteField(p, k)


def field_of_order(q: int) -> FiniteField:
    pk = prime_power(q)
    if pk is None:
        raise NotPrimePowerError(f"{q} is not a prime power")
    return field_create(*pk)


def projective_points(F: FiniteField) -> list[tuple[int, int, int]]:
    """Normalised triples (first nonzero coordinate 1) in lexicographic order."""
    out = [(0, 0, 1)]
    out += [(0, 1, c) for c in F.elements]
    out += [(1, b, c) for b in F.elements for c in F.elements]
    return sorted(out)


def normalize(F: FiniteField, triple) -> tuple[int, int, int]:
    for x in triple:
        if x:
            s = F.inv(x)
            return tuple(F.mul(s, y) for y in triple)
    raise ValueError("the zero triple is not a projective point")
