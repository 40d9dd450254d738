"""Exact arithmetic in Z[zeta_r], represented on the power basis mod Phi_r."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence


class CyclotomicError(ArithmeticError):
    """A value that must be a rational integer (or divisible) is not."""


def _poly_divmod(num: list[int], den: Sequence[int]) -> tuple[list[int], list[int]]:
    # den is monic; coefficients are low -> high
    num = list(num)
    d = len(den) - 1
    if len(num) - 1 < d:
        return [0], num
    quot = [0] * (len(num) - d)
    for k in range(len(num) - 1, d - 1, -1):
        c = num[k]
        if c:
            quot[k - d] = c
            for i, dc in enumerate(den):
                num[k - d + i] -= c * dc
    return quot, num[:d] or [0]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(r: int) -> tuple[int, ...]:
    """Phi_r as a coefficient tuple, lowest degree first.

    >>> cyclotomic_polynomial(6)
    (1, -1, 1)
    """
    if r < 1:
        raise ValueError(f"r must be positive, got {r}")
    num = [-1] + [0] * (r - 1) + [1]
    for d in range(1, r):
        if r % d == 0:
            num, rem = _poly_divmod(num, cyclotomic_polynomial(d))
            assert not any(rem), "x^r - 1 must be divisible by Phi_d"
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return tuple(num)


@lru_cache(maxsize=None)
def _power_table(r: int, upto: int) -> tuple[tuple[int, ...], ...]:
    """Reduced coefficient vectors of x^0 .. x^(upto-1) modulo Phi_r."""
    phi = cyclotomic_polynomial(r)
    d = len(phi) - 1
    rows = []
    cur = [1] + [0] * (d - 1)
    for _ in range(upto):
        rows.append(tuple(cur))
        # multiply by x, then replace x^d by -(phi_0 + ... + phi_{d-1} x^{d-1})
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            cur = [c - top * p for c, p in zip(cur, phi[:d])]
    return tuple(rows)


def degree(r: int) -> int:
    """phi(r), the dimension of Z[zeta_r] over Z."""
    return len(cyclotomic_polynomial(r)) - 1


def _reduce(r: int, coeffs: Sequence[int]) -> tuple[int, ...]:
    d = degree(r)
    if len(coeffs) <= d:
        return tuple(coeffs) + (0,) * (d - len(coeffs))
    table = _power_table(r, max(len(coeffs), 2 * d))
    out = list(coeffs[:d])
    for k in range(d, len(coeffs)):
        c = coeffs[k]
        if c:
            for i, t in enumerate(table[k]):
                if t:
                    out[i] += c * t
    return tuple(out)


class CyclotomicInt:
    """An element of Z[zeta_r] with arbitrary-precision integer coefficients."""

    __slots__ = ("r", "coeffs")

    def __init__(self, r: int, coeffs: Iterable[int] = ()):
        self.r = r
        self.coeffs = _reduce(r, [int(c) for c in coeffs])

    @classmethod
    def from_int(cls, r: int, value: int) -> CyclotomicInt:
        return cls(r, [value])

    def _coerce(self, other) -> CyclotomicInt:
        if isinstance(other, CyclotomicInt):
            if other.r != self.r:
                raise ValueError(f"mixing Z[zeta_{self.r}] and Z[zeta_{other.r}]")
            return other
        if isinstance(other, int):
            return CyclotomicInt(self.r, [other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return _raw(self.r, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return _raw(self.r, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return _raw(self.r, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return _raw(self.r, tuple(a * other for a in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        prod = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return CyclotomicInt(self.r, prod)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not supported")
        result = CyclotomicInt(self.r, [1])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = CyclotomicInt(self.r, [other])
        if not isinstance(other, CyclotomicInt):
            return NotImplemented
        return self.r == other.r and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.r, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def __repr__(self):
        return f"CyclotomicInt(r={self.r}, {list(self.coeffs)})"

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                mono = "z" if k == 1 else f"z^{k}"
                terms.append(f"{c}*{mono}")
        if not terms:
            return "0"
        return " + ".join(terms).replace("+ -", "- ")

    def conjugate(self) -> CyclotomicInt:
        return conjugate(self)

    def is_integer(self) -> bool:
        return not any(self.coeffs[1:])


def _raw(r: int, coeffs: tuple[int, ...]) -> CyclotomicInt:
    # bypass reduction for already-reduced vectors
    obj = CyclotomicInt.__new__(CyclotomicInt)
    obj.r = r
    obj.coeffs = coeffs
    return obj


def zero(r: int) -> CyclotomicInt:
    return _raw(r, (0,) * degree(r))


def one(r: int) -> CyclotomicInt:
    return root_power(r, 0)


@lru_cache(maxsize=None)
def root_power(r: int, k: int) -> CyclotomicInt:
    """zeta_r^k."""
    k %= r
    return _raw(r, _power_table(r, max(r, 2 * degree(r)))[k])


def from_exponent_counts(r: int, counts: Sequence[int]) -> CyclotomicInt:
    """sum_k counts[k] * zeta_r^k, for k in range(r)."""
    out = [0] * degree(r)
    for k, c in enumerate(counts):
        if c:
            for i, t in enumerate(root_power(r, k).coeffs):
                out[i] += c * t
    return _raw(r, tuple(out))


def conjugate(a: CyclotomicInt) -> CyclotomicInt:
    """Complex conjugation zeta_r -> zeta_r^(r-1)."""
    counts = [0] * a.r
    for k, c in enumerate(a.coeffs):
        counts[(-k) % a.r] += c
    return from_exponent_counts(a.r, counts)


def as_integer(a: CyclotomicInt) -> int:
    if not a.is_integer():
        raise CyclotomicError(f"{a} is not a rational integer")
    return a.coeffs[0]


def exact_divide(a: CyclotomicInt, m: int) -> CyclotomicInt:
    if m <= 0:
        raise ValueError(f"divisor must be positive, got {m}")
    if any(c % m for c in a.coeffs):
        raise CyclotomicError(f"{a} is not divisible by {m}")
    return _raw(a.r, tuple(c // m for c in a.coeffs))
