"""Exact arithmetic in cyclotomic fields Q(zeta_M).

Elements are canonical remainders modulo the M-th cyclotomic polynomial Phi_M,
with Fraction coefficients, so equality is coefficient equality.  M is kept a
multiple of 4 so that i = zeta_M^(M/4) is always available.
"""

from fractions import Fraction
from math import gcd

import mpmath

_PHI_CACHE = {}
_POWER_TABLE_CACHE = {}


def _divisors(n):
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


def euler_phi(n):
    result = n
    p = 2
    m = n
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _poly_trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return _poly_trim(out)


def _poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return _poly_trim([x - y for x, y in zip(a, b)])


def _poly_divmod(a, b):
    a = _poly_trim(list(a))
    b = _poly_trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    lead = b[-1]
    while len(a) >= len(b):
        shift = len(a) - len(b)
        coeff = a[-1] / lead
        q[shift] = coeff
        for i, bi in enumerate(b):
            a[shift + i] -= coeff * bi
        _poly_trim(a)
    return _poly_trim(q), a


def cyclotomic_polynomial(m):
    """Coefficients (ascending) of Phi_m, by dividing x^m - 1 by all proper Phi_d."""
    if m in _PHI_CACHE:
        return _PHI_CACHE[m]
    num = [Fraction(-1)] + [Fraction(0)] * (m - 1) + [Fraction(1)]
    for d in _divisors(m):
        if d == m:
            continue
        q, r = _poly_divmod(num, cyclotomic_polynomial(d))
        assert not r, f"x^{m}-1 not divisible by Phi_{d}"
        num = q
    assert all(c.denominator == 1 for c in num)
    _PHI_CACHE[m] = tuple(num)
    return _PHI_CACHE[m]


def _power_table(m):
    """x^e mod Phi_m for e in [0, m), as tuples of Fractions of length deg(Phi_m)."""
    if m in _POWER_TABLE_CACHE:
        return _POWER_TABLE_CACHE[m]
    phi = cyclotomic_polynomial(m)
    deg = len(phi) - 1
    table = []
    cur = [Fraction(0)] * deg
    cur[0] = Fraction(1)
    for _ in range(m):
        table.append(tuple(cur))
        nxt = [Fraction(0)] + cur[: deg - 1]
        top = cur[deg - 1]
        if top != 0:
            for i in range(deg):
                nxt[i] -= top * phi[i]
        cur = nxt
    _POWER_TABLE_CACHE[m] = table
    return table


class CyclotomicNumber:
    """An element of Q(zeta_M), M a positive multiple of 4, in canonical form."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order, coeffs):
        if order <= 0 or order % 4 != 0:
            raise ValueError(f"order must be a positive multiple of 4, got {order}")
        deg = euler_phi(order)
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != deg:
            raise ValueError(f"expected {deg} coefficients for order {order}, got {len(coeffs)}")
        self.order = order
        self.coeffs = coeffs

    # -- constructors -------------------------------------------------

    @staticmethod
    def from_rational(r, order=4):
        deg = euler_phi(order)
        coeffs = [Fraction(r)] + [Fraction(0)] * (deg - 1)
        return CyclotomicNumber(order, coeffs)

    @staticmethod
    def root(order, k):
        """zeta_order^k in canonical form (k reduced mod order)."""
        table = _power_table(order)
        return CyclotomicNumber(order, table[k % order])

    @staticmethod
    def zero(order=4):
        return CyclotomicNumber.from_rational(0, order)

    @staticmethod
    def one(order=4):
        return CyclotomicNumber.from_rational(1, order)

    @staticmethod
    def i(order=4):
        return CyclotomicNumber.root(order, order // 4)

    # -- order promotion ----------------------------------------------

    def promote(self, order):
        if order == self.order:
            return self
        if order % self.order != 0:
            raise ValueError(f"cannot promote order {self.order} to {order}")
        step = order // self.order
        table = _power_table(order)
        deg = euler_phi(order)
        out = [Fraction(0)] * deg
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            for j, t in enumerate(table[(k * step) % order]):
                out[j] += c * t
        return CyclotomicNumber(order, out)

    @staticmethod
    def common(a, b):
        if a.order == b.order:
            return a, b
        m = a.order * b.order // gcd(a.order, b.order)
        return a.promote(m), b.promote(m)

    def _coerce(self, other):
        if isinstance(other, CyclotomicNumber):
            return other
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber.from_rational(other, self.order)
        return NotImplemented

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = CyclotomicNumber.common(self, other)
        return CyclotomicNumber(a.order, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.order, [-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = CyclotomicNumber.common(self, other)
        deg = len(a.coeffs)
        prod = [Fraction(0)] * (2 * deg - 1)
        for i, x in enumerate(a.coeffs):
            if x == 0:
                continue
            for j, y in enumerate(b.coeffs):
                if y != 0:
                    prod[i + j] += x * y
        phi = list(cyclotomic_polynomial(a.order))
        _, rem = _poly_divmod(prod, phi)
        rem = rem + [Fraction(0)] * (deg - len(rem))
        return CyclotomicNumber(a.order, rem)

    __rmul__ = __mul__

    def inv(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic number")
        # extended Euclid of self against Phi_M in Q[x]: s*self + t*Phi = gcd
        phi = list(cyclotomic_polynomial(self.order))
        r0, r1 = _poly_trim(list(self.coeffs)), phi
        s0, s1 = [Fraction(1)], []
        while r1:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        # r0 is a nonzero constant gcd (Phi irreducible, self != 0)
        assert len(r0) == 1 and r0[0] != 0
        g = r0[0]
        deg = len(self.coeffs)
        out = [c / g for c in s0] + [Fraction(0)] * deg
        return CyclotomicNumber(self.order, out[:deg])

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        return self.inv() * other

    # -- structure -----------------------------------------------------

    def conj(self):
        """The field automorphism zeta_M -> zeta_M^{-1} (complex conjugation)."""
        m = self.order
        table = _power_table(m)
        deg = len(self.coeffs)
        out = [Fraction(0)] * deg
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            for j, t in enumerate(table[(m - k) % m]):
                out[j] += c * t
        return CyclotomicNumber(m, out)

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def is_real(self):
        return self == self.conj()

    def is_rational(self):
        return all(c == 0 for c in self.coeffs[1:])

    def rational_value(self):
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def real_part(self):
        return (self + self.conj()) * Fraction(1, 2)

    def imag_part(self):
        i = CyclotomicNumber.i(self.order)
        return (self - self.conj()) / (2 * i)

    def sign(self):
        """Exact sign (-1, 0, 1) of a real element.

        Zero is decided symbolically on the canonical form; a nonzero sign is
        decided by interval evaluation refined until the interval excludes zero
        (terminates because the value is exactly nonzero).
        """
        if not self.is_real():
            raise ValueError("sign of a non-real cyclotomic number")
        if self.is_zero():
            return 0
        bound_mass = sum(abs(c) for c in self.coeffs)
        dps = 30
        while True:
            with mpmath.workdps(dps):
                val = mpmath.mpf(0)
                for k, c in enumerate(self.coeffs):
                    if c == 0:
                        continue
                    val += mpmath.mpf(c.numerator) / c.denominator * mpmath.cos(
                        2 * mpmath.pi * k / self.order
                    )
                err = mpmath.mpf(int(bound_mass) + 1) * mpmath.mpf(10) ** (-dps + 5)
                if abs(val) > err:
                    return 1 if val > 0 else -1
            dps *= 2

    # -- comparisons / hashing ------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = CyclotomicNumber.common(self, other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        if self.is_rational():
            return hash(("cyc", self.coeffs[0]))
        return hash(("cyc", self.order, self.coeffs))

    def __bool__(self):
        return not self.is_zero()

    # -- rendering / serialization --------------------------------------

    def __repr__(self):
        return f"CyclotomicNumber({self.order}, {list(self.coeffs)})"

    def __str__(self):
        if self.is_zero():
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                mon = f"z{self.order}^{k}" if k > 1 else f"z{self.order}"
                terms.append(mon if c == 1 else f"{c}*{mon}")
        return " + ".join(terms)

    def to_json(self):
        return {
            "order": self.order,
            "coeffs": [[c.numerator, c.denominator] for c in self.coeffs],
        }

    @staticmethod
    def from_json(obj):
        return CyclotomicNumber(
            obj["order"], [Fraction(n, d) for n, d in obj["coeffs"]]
        )


def field_order(n):
    """Order M = lcm(4, 2N) of the scalar field used for H_N^i."""
    m = 2 * n
    return 4 * m // gcd(4, m)
