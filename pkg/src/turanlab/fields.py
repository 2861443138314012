"""Small finite fields for the algebraic constructions.

Prime orders use plain modular arithmetic. The prime-power orders 4, 8, 9,
16, 25, 27 are built as GF(p)[x] modulo a fixed irreducible polynomial, with
elements packed into integers by base-p digits (digit i = coefficient of
x^i). The packing makes elements hashable, comparable, and directly usable
as vertex indices.
"""

from __future__ import annotations

from functools import lru_cache


class FieldError(ValueError):
    pass


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


# q -> (p, degree, digits of the reduction of x^degree, low to high)
_EXTENSIONS = {
    4: (2, 2, (1, 1)),        # x^2 + x + 1
    8: (2, 3, (1, 1, 0)),     # x^3 + x + 1
    9: (3, 2, (2, 0)),        # x^2 + 1
    16: (2, 4, (1, 1, 0, 0)), # x^4 + x + 1
    25: (5, 2, (2, 0)),       # x^2 + 3
    27: (3, 3, (2, 1, 0)),    # x^3 + 2x + 1
}


class FiniteField:
    """Arithmetic in GF(q) for q prime or one of 4, 8, 9, 16, 25, 27."""

    def __init__(self, q: int):
        if q in _EXTENSIONS:
            self.p, self.deg, self._red = _EXTENSIONS[q]
        elif _is_prime(q):
            self.p, self.deg, self._red = q, 1, None
        else:
            raise FieldError(
                f"unsupported field order {q}: need a prime or one of {sorted(_EXTENSIONS)}"
            )
        self.q = q
        self.zero = 0
        self.one = 1

    def elements(self) -> range:
        return range(self.q)

    def _check(self, a: int) -> int:
        if not 0 <= a < self.q:
            raise FieldError(f"element {a} out of range for GF({self.q})")
        return a

    def _digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.deg):
            out.append(a % self.p)
            a //= self.p
        return out

    def _pack(self, digits) -> int:
        out = 0
        for d in reversed(digits):
            out = out * self.p + d
        return out

    def add(self, a: int, b: int) -> int:
        self._check(a), self._check(b)
        if self.deg == 1:
            return (a + b) % self.p
        da, db = self._digits(a), self._digits(b)
        return self._pack([(x + y) % self.p for x, y in zip(da, db)])

    def neg(self, a: int) -> int:
        self._check(a)
        if self.deg == 1:
            return (-a) % self.p
        return self._pack([(-x) % self.p for x in self._digits(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        self._check(a), self._check(b)
        if self.deg == 1:
            return (a * b) % self.p
        da, db = self._digits(a), self._digits(b)
        d = self.deg
        prod = [0] * (2 * d - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % self.p
        # fold degrees >= d down via x^d = red(x)
        for i in range(2 * d - 2, d - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                for j, r in enumerate(self._red):
                    prod[i - d + j] = (prod[i - d + j] + c * r) % self.p
        return self._pack(prod[:d])

    def pow(self, a: int, e: int) -> int:
        self._check(a)
        if e < 0:
            return self.pow(self.inv(a), -e)
        result = self.one
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        if self._check(a) == 0:
            raise FieldError("zero has no inverse")
        if self.deg == 1:
            return pow(a, -1, self.p)
        return self.pow(a, self.q - 2)

    def generator(self) -> int:
        """Least element generating the multiplicative group."""
        return _generator(self.q)


@lru_cache(maxsize=None)
def _generator(q: int) -> int:
    f = FiniteField(q)
    order = q - 1
    prime_factors = []
    m = order
    d = 2
    while d * d <= m:
        if m % d == 0:
            prime_factors.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        prime_factors.append(m)
    for g in range(1, q):
        if all(f.pow(g, order // pf) != f.one for pf in prime_factors):
            return g
    raise FieldError(f"no generator found for GF({q})")  # unreachable
