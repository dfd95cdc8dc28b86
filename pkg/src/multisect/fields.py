"""Exact coefficient domains: arbitrary-precision rationals and cyclotomic
field elements in canonical reduced form.

Rationals are `fractions.Fraction` (already canonical: positive denominator,
lowest terms, decidable equality). A cyclotomic number of order r is a
residue in Q[x]/(Phi_r) stored as a fixed-length vector of phi(r) rational
coordinates, so equality is coordinate equality. Every value is immutable.
"""

from __future__ import annotations

import functools
from fractions import Fraction

from .errors import DivisionByZero, NotRational, OrderMismatch

Rational = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


def parse_rational(text: str) -> Fraction:
    """Parse the exact wire form "p/q" (or "p")."""
    return Fraction(text)


def format_rational(value: Fraction) -> str:
    """Exact wire form: "p/q", or "p" when the denominator is 1."""
    return str(value)


def totient(n: int) -> int:
    if n < 1:
        raise ValueError("totient needs n >= 1")
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _trim(coeffs: list[Fraction]) -> list[Fraction]:
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return coeffs


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            if bj:
                out[i + j] += ai * bj
    return out


def _poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    out = [
        (a[i] if i < len(a) else _ZERO) - (b[i] if i < len(b) else _ZERO)
        for i in range(n)
    ]
    return _trim(out)


def _poly_divmod(a: list[Fraction], b: list[Fraction]):
    """Euclidean division over Q; b must be nonzero."""
    rem = list(a)
    db, lead = len(b) - 1, b[-1]
    quot = [_ZERO] * max(len(a) - db, 0)
    for k in range(len(rem) - 1, db - 1, -1):
        c = rem[k]
        if not c:
            continue
        q = c / lead
        quot[k - db] = q
        for i in range(db + 1):
            rem[k - db + i] -= q * b[i]
    return _trim(quot), _trim(rem)


@functools.lru_cache(maxsize=None)
def _cyclotomic_coeffs(r: int) -> tuple[Fraction, ...]:
    if r < 1:
        raise ValueError("cyclotomic order must be >= 1")
    if r == 1:
        return (Fraction(-1), _ONE)
    # divide x^r - 1 by the product of the lower cyclotomic polynomials
    num = [_ZERO] * (r + 1)
    num[0], num[r] = Fraction(-1), _ONE
    den = [_ONE]
    for d in _divisors(r)[:-1]:
        den = _poly_mul(den, list(_cyclotomic_coeffs(d)))
    quot, rem = _poly_divmod(num, den)
    assert not rem and len(quot) == totient(r) + 1
    return tuple(quot)


def cyclotomic_polynomial(r: int) -> tuple[Fraction, ...]:
    """Coefficients (ascending) of the r-th cyclotomic polynomial."""
    return _cyclotomic_coeffs(r)


class CyclotomicNumber:
    """An element of Q(zeta_r), reduced modulo Phi_r.

    `coeffs` always has exactly phi(r) entries; the k-th entry is the
    coordinate of zeta^k. Construction reduces, so equal values have equal
    coordinate vectors.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs, *, _reduced: bool = False):
        object.__setattr__(self, "order", order)
        if _reduced:
            object.__setattr__(self, "coeffs", coeffs)
            return
        vec = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        phi = list(_cyclotomic_coeffs(order))
        if len(vec) >= len(phi):
            _, vec = _poly_divmod(vec, phi)
        deg = len(phi) - 1
        vec = list(vec) + [_ZERO] * (deg - len(vec))
        object.__setattr__(self, "coeffs", tuple(vec))

    def __setattr__(self, name, value):
        raise AttributeError("CyclotomicNumber is immutable")

    # -- field structure ---------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, CyclotomicNumber):
            if other.order != self.order:
                raise OrderMismatch(
                    f"orders {self.order} and {other.order} cannot mix")
            return other
        if isinstance(other, (int, Fraction)):
            return cyclotomic_field(self.order).from_rational(Fraction(other))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CyclotomicNumber(
            self.order,
            tuple(a + b for a, b in zip(self.coeffs, o.coeffs)),
            _reduced=True)

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(
            self.order, tuple(-a for a in self.coeffs), _reduced=True)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CyclotomicNumber(
            self.order,
            tuple(a - b for a, b in zip(self.coeffs, o.coeffs)),
            _reduced=True)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return CyclotomicNumber(
                self.order, tuple(a * q for a in self.coeffs), _reduced=True)
        prod = _poly_mul(list(self.coeffs), list(o.coeffs))
        return CyclotomicNumber(self.order, prod)

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicNumber":
        if not self:
            raise DivisionByZero("inverse of zero cyclotomic number")
        # extended Euclid against Phi_r; the gcd is a nonzero constant
        # because Phi_r is irreducible over Q
        phi = list(_cyclotomic_coeffs(self.order))
        r0, r1 = _trim(list(self.coeffs)), phi
        s0, s1 = [_ONE], []
        while r1:
            q, rem = _poly_divmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        assert len(r0) == 1
        g = r0[0]
        return CyclotomicNumber(self.order, [c / g for c in s0])

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o:
            raise DivisionByZero("division by zero cyclotomic number")
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return CyclotomicNumber(
                self.order, tuple(a / q for a in self.coeffs), _reduced=True)
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = cyclotomic_field(self.order).one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- identity ------------------------------------------------------------

    def __bool__(self) -> bool:
        return any(self.coeffs)

    @property
    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def __eq__(self, other) -> bool:
        if isinstance(other, CyclotomicNumber):
            if other.order == self.order:
                return self.coeffs == other.coeffs
            return (self.is_rational and other.is_rational
                    and self.coeffs[0] == other.coeffs[0])
        if isinstance(other, (int, Fraction)):
            return self.is_rational and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        if self.is_rational:
            return hash(self.coeffs[0])
        return hash(("cyclotomic", self.order, self.coeffs))

    def __repr__(self):
        return f"CyclotomicNumber(order={self.order}, coeffs={self.coeffs})"

    def __str__(self):
        if not self:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                parts.append(str(c))
            else:
                mono = "z" if k == 1 else f"z^{k}"
                parts.append(mono if c == 1 else f"-{mono}" if c == -1
                             else f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def galois_square(z: CyclotomicNumber) -> CyclotomicNumber:
    """Apply the field automorphism zeta -> zeta^2 (orders are odd in every
    use downstream, where this map is invertible)."""
    r = z.order
    out = [_ZERO] * r
    for k, c in enumerate(z.coeffs):
        if c:
            out[(2 * k) % r] += c
    return CyclotomicNumber(r, out)


def rational_part(z: CyclotomicNumber) -> Fraction:
    """The value of z as a Rational; raises NotRational outside the subfield."""
    if not z.is_rational:
        raise NotRational(f"{z!r} is not rational")
    return z.coeffs[0]


class RationalField:
    """The field of exact rationals (a stateless singleton, `QQ`)."""

    zero = _ZERO
    one = _ONE

    def coerce(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        raise TypeError(f"cannot coerce {x!r} into the rational field")

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


QQ = RationalField()


class CyclotomicField:
    """Q(zeta_r) as a coefficient field."""

    __slots__ = ("order", "degree", "zero", "one")

    def __init__(self, order: int):
        if order < 1:
            raise ValueError("cyclotomic order must be >= 1")
        self.order = order
        self.degree = totient(order)
        self.zero = CyclotomicNumber(order, (_ZERO,) * self.degree,
                                     _reduced=True)
        one = [_ZERO] * self.degree
        one[0] = _ONE
        self.one = CyclotomicNumber(order, tuple(one), _reduced=True)

    def zeta(self, power: int = 1) -> CyclotomicNumber:
        """zeta_r^power, any integer power."""
        k = power % self.order
        if k < self.degree:
            vec = [_ZERO] * self.degree
            vec[k] = _ONE
            return CyclotomicNumber(self.order, tuple(vec), _reduced=True)
        mono = [_ZERO] * (k + 1)
        mono[k] = _ONE
        return CyclotomicNumber(self.order, mono)

    def from_rational(self, q) -> CyclotomicNumber:
        vec = [_ZERO] * self.degree
        vec[0] = Fraction(q)
        return CyclotomicNumber(self.order, tuple(vec), _reduced=True)

    def coerce(self, x):
        if isinstance(x, CyclotomicNumber):
            if x.order != self.order:
                raise OrderMismatch(
                    f"value of order {x.order} in field of order {self.order}")
            return x
        if isinstance(x, (int, Fraction)):
            return self.from_rational(x)
        raise TypeError(f"cannot coerce {x!r} into Q(zeta_{self.order})")

    def __repr__(self):
        return f"CyclotomicField({self.order})"

    def __eq__(self, other):
        return (isinstance(other, CyclotomicField)
                and other.order == self.order)

    def __hash__(self):
        return hash(("cyclotomic_field", self.order))


@functools.lru_cache(maxsize=None)
def cyclotomic_field(order: int) -> CyclotomicField:
    return CyclotomicField(order)
