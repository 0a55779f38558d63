"""Finite fields F_(p^m) with canonical, deterministic choices throughout.

Elements are coefficient vectors over F_p, low-to-high degree, reduced modulo
a monic irreducible modulus of degree m.  The modulus is not configurable: the
constructor picks the lexicographically smallest monic irreducible polynomial
(coefficient tuples compared low-to-high), so a field is reproducible from
(p, m) alone.  For m = 1 the modulus is X and arithmetic is plain mod p.

Canonical element order = lexicographic on coefficient tuples; this is the
enumeration order, the tie-break order for square roots, and the search order
for the smallest primitive root.

Serialization: an element is "c0,c1,...", a field is "p^m:modulus".
"""

import itertools

from . import polyfp
from .errors import (
    DivisionByZeroError,
    FieldTooLargeError,
    NotPrimeError,
)

MAX_FIELD_SIZE = 1 << 20


def is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class FieldElement:
    """An element of a FiniteField; immutable and hashable.

    Arithmetic via operators; mixed int operands are coerced through the
    field's embedding of the prime subfield.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = coeffs  # full tuple of length m

    def __add__(self, other):
        other = self.field.coerce(other)
        return FieldElement(self.field, self.field._add(self.coeffs, other.coeffs))

    __radd__ = __add__

    def __sub__(self, other):
        other = self.field.coerce(other)
        return FieldElement(self.field, self.field._sub(self.coeffs, other.coeffs))

    def __rsub__(self, other):
        return self.field.coerce(other) - self

    def __neg__(self):
        return FieldElement(self.field, self.field._neg(self.coeffs))

    def __mul__(self, other):
        other = self.field.coerce(other)
        return FieldElement(self.field, self.field._mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self.field.coerce(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.field.coerce(other) / self

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        return FieldElement(self.field, self.field._pow(self.coeffs, e))

    def inverse(self):
        return FieldElement(self.field, self.field._inv(self.coeffs))

    def is_zero(self):
        return not any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.field.coerce(other)
        return (
            isinstance(other, FieldElement)
            and self.field is other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field.p, self.field.m, self.coeffs))

    def encode(self):
        """Canonical serialization, e.g. "2,1" for 2 + X."""
        return ",".join(str(c) for c in self.coeffs)

    def __repr__(self):
        return f"FieldElement({self.encode()!r} in GF({self.field.q}))"


class FiniteField:
    """F_(p^m) for prime p, with q = p^m capped at 2^20."""

    def __init__(self, p, m=1):
        if not is_prime(p):
            raise NotPrimeError(f"{p} is not prime")
        if m < 1:
            raise ValueError("extension degree must be >= 1")
        if p**m > MAX_FIELD_SIZE:
            raise FieldTooLargeError(f"{p}^{m} exceeds the {MAX_FIELD_SIZE} cap")
        self.p = p
        self.m = m
        self.q = p**m
        self.modulus = self._find_modulus()
        self._zero = (0,) * m
        self._one = (1,) + (0,) * (m - 1)

    def _find_modulus(self):
        p, m = self.p, self.m
        if m == 1:
            return (0, 1)  # X
        # lexicographically smallest (c0, ..., c_{m-1}) with X^m + ... irreducible;
        # c0 = 0 makes X a factor, so start at c0 = 1
        for tail in itertools.product(range(p), repeat=m):
            if tail[0] == 0:
                continue
            cand = polyfp.trim(tail + (1,))
            if polyfp.is_irreducible(cand, p):
                return tuple(tail) + (1,)
        raise AssertionError("no irreducible polynomial found")  # unreachable

    # -- raw coefficient-tuple arithmetic (fast paths used by counting loops) --

    def _pad(self, t):
        return tuple(t) + (0,) * (self.m - len(t))

    def _add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def _sub(self, a, b):
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def _neg(self, a):
        p = self.p
        return tuple((-x) % p for x in a)

    def _mul(self, a, b):
        if self.m == 1:
            return ((a[0] * b[0]) % self.p,)
        prod = polyfp.mul(polyfp.trim(a), polyfp.trim(b), self.p)
        return self._pad(polyfp.mod(prod, self.modulus, self.p))

    def _pow(self, a, e):
        out = self._one
        base = a
        while e > 0:
            if e & 1:
                out = self._mul(out, base)
            base = self._mul(base, base)
            e >>= 1
        return out

    def _inv(self, a):
        if not any(a):
            raise DivisionByZeroError("inverse of zero")
        if self.m == 1:
            return (pow(a[0], self.p - 2, self.p),)
        g, s, _ = polyfp.xgcd(polyfp.trim(a), self.modulus, self.p)
        assert g == polyfp.ONE
        return self._pad(s)

    # -- public API --

    def element(self, value):
        """Build an element from an int (prime-subfield value) or coefficients."""
        if isinstance(value, FieldElement):
            if value.field is not self:
                raise ValueError("element belongs to a different field")
            return value
        if isinstance(value, int):
            return FieldElement(self, ((value % self.p),) + (0,) * (self.m - 1))
        coeffs = tuple(int(c) % self.p for c in value)
        if len(coeffs) > self.m:
            raise ValueError("too many coefficients")
        return FieldElement(self, coeffs + (0,) * (self.m - len(coeffs)))

    coerce = element

    def zero(self):
        return FieldElement(self, self._zero)

    def one(self):
        return FieldElement(self, self._one)

    def elements(self):
        """All q elements in canonical (lexicographic) order."""
        for coeffs in itertools.product(range(self.p), repeat=self.m):
            yield FieldElement(self, coeffs)

    def is_square(self, x):
        """Whether x is a square in the field; zero counts as a square."""
        x = self.coerce(x)
        if x.is_zero():
            return True
        if self.p == 2:
            return True  # Frobenius is a bijection in characteristic 2
        e = self._pow(x.coeffs, (self.q - 1) // 2)
        return e == self._one

    def sqrt(self, x):
        """A canonical square root of x, or None if x is not a square.

        Of the two roots r and -r, returns the one with the smaller coefficient
        tuple.  Small fields (q <= 4096) are searched exhaustively; larger odd q
        uses Tonelli-Shanks in the multiplicative group, larger even q uses the
        inverse-Frobenius power x^(2^(m-1)).
        """
        x = self.coerce(x)
        if x.is_zero():
            return self.zero()
        if self.q <= 4096:
            best = None
            for r in self.elements():
                if self._mul(r.coeffs, r.coeffs) == x.coeffs:
                    if best is None or r.coeffs < best.coeffs:
                        best = r
            return best
        if self.p == 2:
            return FieldElement(self, self._pow(x.coeffs, 1 << (self.m - 1)))
        if not self.is_square(x):
            return None
        r = self._tonelli_shanks(x.coeffs)
        other = self._neg(r)
        return FieldElement(self, min(r, other))

    def _tonelli_shanks(self, a):
        q = self.q
        s, t = 0, q - 1
        while t % 2 == 0:
            s += 1
            t //= 2
        # deterministic non-square: first in canonical order
        z = None
        for cand in self.elements():
            if not cand.is_zero() and not self.is_square(cand):
                z = cand.coeffs
                break
        c = self._pow(z, t)
        r = self._pow(a, (t + 1) // 2)
        u = self._pow(a, t)
        md = s
        while u != self._one:
            # find least i with u^(2^i) = 1
            i = 0
            probe = u
            while probe != self._one:
                probe = self._mul(probe, probe)
                i += 1
            b = c
            for _ in range(md - i - 1):
                b = self._mul(b, b)
            r = self._mul(r, b)
            c = self._mul(b, b)
            u = self._mul(u, c)
            md = i
        return r

    def primitive_root(self):
        """The multiplicative generator with the smallest coefficient tuple."""
        if self.q == 2:
            return self.one()
        n = self.q - 1
        primes = polyfp.prime_divisors(n)
        for cand in self.elements():
            if cand.is_zero():
                continue
            if all(self._pow(cand.coeffs, n // ell) != self._one for ell in primes):
                return cand
        raise AssertionError("no generator found")  # unreachable

    def encode(self):
        return f"{self.p}^{self.m}:" + ",".join(str(c) for c in self.modulus)

    def parse_element(self, s):
        return self.element([int(c) for c in s.strip().split(",")])

    def __eq__(self, other):
        return (
            isinstance(other, FiniteField)
            and self.p == other.p
            and self.m == other.m
        )

    def __hash__(self):
        return hash((self.p, self.m))

    def __repr__(self):
        return f"FiniteField({self.p}, {self.m})"


def parse_field(s):
    """Inverse of FiniteField.encode, e.g. "3^2:1,0,1"."""
    head, _, mod_s = s.partition(":")
    p_s, _, m_s = head.partition("^")
    fld = FiniteField(int(p_s), int(m_s) if m_s else 1)
    if mod_s:
        got = tuple(int(c) for c in mod_s.split(","))
        if got != fld.modulus:
            raise ValueError(f"modulus mismatch: expected {fld.modulus}, got {got}")
    return fld
