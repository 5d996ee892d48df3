"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Every scalar in this package is a ``Cyc``: a vector of rationals in the
power basis {1, z, ..., z^(phi(N)-1)} of Q(zeta_N), reduced modulo the
N-th cyclotomic polynomial.  Mixed-order expressions are promoted to the
lcm order, using the embedding zeta_N -> zeta_M^(M/N) for N | M.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from math import gcd

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _phi(n: int) -> int:
    result, k = n, n
    p = 2
    while p * p <= k:
        if k % p == 0:
            while k % p == 0:
                k //= p
            result -= result // p
        p += 1
    if k > 1:
        result -= result // k
    return result


def _poly_divmod(num: list[Fraction], den: list[Fraction]):
    num = num[:]
    q = [_ZERO] * max(1, len(num) - len(den) + 1)
    dlead = den[-1]
    for i in range(len(num) - len(den), -1, -1):
        c = num[i + len(den) - 1] / dlead
        if c:
            q[i] = c
            for j, d in enumerate(den):
                num[i + j] -= c * d
    while len(num) > 1 and not num[-1]:
        num.pop()
    return q, num


_cyclotomic_cache: dict[int, list[Fraction]] = {}


def cyclotomic_polynomial(n: int) -> list[Fraction]:
    """Coefficients of Phi_n, low degree first."""
    if n in _cyclotomic_cache:
        return _cyclotomic_cache[n]
    # divide x^n - 1 by the proper cyclotomic divisors
    poly = [-_ONE] + [_ZERO] * (n - 1) + [_ONE]
    for d in range(1, n):
        if n % d == 0:
            poly, rem = _poly_divmod(poly, cyclotomic_polynomial(d))
            assert len(rem) == 1 and not rem[0]
    _cyclotomic_cache[n] = poly
    return poly


_reduction_cache: dict[int, list[tuple[Fraction, ...]]] = {}


def _reduction_table(n: int) -> list[tuple[Fraction, ...]]:
    """Power basis expansion of zeta_n^e for 0 <= e < max(2*phi(n), n)."""
    if n in _reduction_cache:
        return _reduction_cache[n]
    phi = _phi(n)
    mod = cyclotomic_polynomial(n)
    rows: list[tuple[Fraction, ...]] = []
    current = [_ONE] + [_ZERO] * (phi - 1)
    for _ in range(max(2 * phi, n)):
        rows.append(tuple(current))
        nxt = [_ZERO] + current[:-1]
        top = current[-1]
        if top:
            for j in range(phi):
                nxt[j] -= top * mod[j]
        current = nxt
    _reduction_cache[n] = rows
    return rows


def _reduce(n: int, coeffs: list[Fraction]) -> tuple[Fraction, ...]:
    phi = _phi(n)
    table = _reduction_table(n)
    out = list(coeffs[:phi]) + [_ZERO] * (phi - len(coeffs))
    for e in range(phi, len(coeffs)):
        c = coeffs[e]
        if c:
            row = table[e]
            for j in range(phi):
                out[j] += c * row[j]
    return tuple(out)


class Cyc:
    """An element of Q(zeta_N) in reduced power basis coordinates."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs) -> None:
        if not isinstance(order, int) or order < 1:
            raise ValueError(f"cyclotomic order must be a positive integer, got {order!r}")
        self.order = order
        coeffs = tuple(Fraction(c) for c in coeffs)
        phi = _phi(order)
        if len(coeffs) != phi:
            coeffs = _reduce(order, list(coeffs))
        object.__setattr__  # immutable by convention; slots carry the data
        self.coeffs = coeffs

    # -- constructors ---------------------------------------------------

    @staticmethod
    def rational(value) -> "Cyc":
        return Cyc(1, (Fraction(value),))

    @staticmethod
    def zeta(order: int, power: int = 1) -> "Cyc":
        if not isinstance(order, int) or order < 1:
            raise ValueError(f"cyclotomic order must be a positive integer, got {order!r}")
        k = power % order
        phi = _phi(order)
        coeffs = [_ZERO] * (k + 1)
        coeffs[k] = _ONE
        return Cyc(order, _reduce(order, coeffs))

    # -- order promotion ------------------------------------------------

    def promote(self, order: int) -> "Cyc":
        """Embed into Q(zeta_order); requires self.order | order."""
        if order == self.order:
            return self
        if order % self.order:
            raise ValueError(f"cannot promote order {self.order} into order {order}")
        step = order // self.order
        out = [_ZERO] * order
        for k, c in enumerate(self.coeffs):
            if c:
                out[k * step] += c
        return Cyc(order, _reduce(order, out))

    def _common(self, other: "Cyc"):
        if self.order == other.order:
            return self, other
        m = self.order * other.order // gcd(self.order, other.order)
        return self.promote(m), other.promote(m)

    # -- ring operations -------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._common(other)
        return Cyc(a.order, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return Cyc(self.order, tuple(-x for x in self.coeffs))

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._common(other)
        n = len(a.coeffs)
        if n == 1:
            return Cyc(a.order, (a.coeffs[0] * b.coeffs[0],))
        prod = [_ZERO] * (2 * n - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        prod[i + j] += x * y
        return Cyc(a.order, _reduce(a.order, prod))

    __rmul__ = __mul__

    def inverse(self) -> "Cyc":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        n = len(self.coeffs)
        if n == 1:
            return Cyc(self.order, (1 / self.coeffs[0],))
        # solve (mult-by-self) x = 1 in the power basis
        table = _reduction_table(self.order)
        cols = []
        for j in range(n):
            col = [_ZERO] * (2 * n - 1)
            for i, c in enumerate(self.coeffs):
                col[i + j] = c
            cols.append(_reduce(self.order, col))
        aug = [[cols[j][i] for j in range(n)] + [_ONE if i == 0 else _ZERO] for i in range(n)]
        for col in range(n):
            piv = next(r for r in range(col, n) if aug[r][col])
            aug[col], aug[piv] = aug[piv], aug[col]
            inv = 1 / aug[col][col]
            aug[col] = [v * inv for v in aug[col]]
            for r in range(n):
                if r != col and aug[r][col]:
                    f = aug[r][col]
                    aug[r] = [v - f * w for v, w in zip(aug[r], aug[col])]
        return Cyc(self.order, tuple(aug[i][n] for i in range(n)))

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = Cyc.rational(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def conj(self) -> "Cyc":
        """Field automorphism zeta_N -> zeta_N^(N-1); complex conjugation."""
        n = self.order
        if n <= 2:
            return self
        table = _reduction_table(n)
        out = [_ZERO] * _phi(n)
        for k, c in enumerate(self.coeffs):
            if c:
                row = table[(k * (n - 1)) % n]
                for j in range(len(out)):
                    out[j] += c * row[j]
        return Cyc(n, tuple(out))

    # -- predicates and conversions ---------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coeffs[0]

    def real_part(self) -> "Cyc":
        return (self + self.conj()) * Cyc.rational(Fraction(1, 2))

    def imag_part(self) -> "Cyc":
        """Imaginary part times 2i, divided out exactly: (a - conj a)/(2i)."""
        i = Cyc.zeta(4)
        return (self - self.conj()) / (i + i)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._common(other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.order, self.coeffs))

    def to_complex(self) -> complex:
        return sum(
            complex(c) * cmath.exp(2j * cmath.pi * k / self.order)
            for k, c in enumerate(self.coeffs)
            if c
        ) or complex(0)

    def to_json(self) -> dict:
        return {
            "N": self.order,
            "coeffs": [[c.numerator, c.denominator] for c in self.coeffs],
        }

    @staticmethod
    def from_json(data: dict) -> "Cyc":
        return Cyc(data["N"], tuple(Fraction(n, d) for n, d in data["coeffs"]))

    def __repr__(self) -> str:
        if self.is_rational():
            return f"Cyc({self.coeffs[0]})"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                if k == 0:
                    terms.append(str(c))
                else:
                    terms.append(f"{c}*z{self.order}^{k}" if k > 1 else f"{c}*z{self.order}")
        return "Cyc(" + " + ".join(terms) + ")"


def _coerce(value):
    if isinstance(value, Cyc):
        return value
    if isinstance(value, (int, Fraction)):
        return Cyc.rational(value)
    return NotImplemented


ZERO = Cyc.rational(0)
ONE = Cyc.rational(1)


def root_of_unity(order: int, power: int) -> Cyc:
    """zeta_order^power in canonical form; root_of_unity(N, 0) == 1."""
    return Cyc.zeta(order, power)


def cyc(value) -> Cyc:
    """Coerce an int, Fraction or Cyc to a Cyc."""
    out = _coerce(value)
    if out is NotImplemented:
        raise TypeError(f"cannot interpret {value!r} as a cyclotomic number")
    return out
