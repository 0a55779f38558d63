"""Dense univariate polynomial arithmetic over prime fields F_p.

A polynomial is a tuple of ints in [0, p), coefficients low-to-high, with no
trailing zeros; the zero polynomial is the empty tuple ().  All functions take
the prime modulus p explicitly, so there is no polynomial class to allocate in
inner loops.
"""

import random

from .errors import DivisionByZeroError

ZERO = ()
ONE = (1,)
X = (0, 1)


def trim(coeffs):
    """Drop trailing zeros and return a canonical tuple."""
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def deg(a):
    return len(a) - 1


def constant(c, p):
    c %= p
    return (c,) if c else ZERO


def add(a, b, p):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % p
    return trim(out)


def neg(a, p):
    return tuple((-c) % p for c in a)


def sub(a, b, p):
    return add(a, neg(b, p), p)


def scale(a, c, p):
    c %= p
    if c == 0:
        return ZERO
    if c == 1:
        return tuple(a)
    return trim((x * c) % p for x in a)


def mul(a, b, p):
    if not a or not b:
        return ZERO
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return trim(c % p for c in out)


def make_monic(a, p):
    if not a:
        return ZERO
    lc = a[-1]
    if lc == 1:
        return tuple(a)
    return scale(a, pow(lc, p - 2, p), p)


def divmod_(a, b, p):
    """Quotient and remainder; b must be nonzero."""
    if not b:
        raise DivisionByZeroError("polynomial division by zero")
    if len(a) < len(b):
        return ZERO, tuple(a)
    inv_lc = pow(b[-1], p - 2, p)
    rem = list(a)
    db = len(b) - 1
    quot = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = rem[i] % p
        if c:
            q = (c * inv_lc) % p
            quot[i - db] = q
            for j in range(db + 1):
                rem[i - db + j] = (rem[i - db + j] - q * b[j]) % p
    return trim(quot), trim(rem[:db])


def mod(a, b, p):
    return divmod_(a, b, p)[1]


def divexact(a, b, p):
    q, r = divmod_(a, b, p)
    if r:
        raise ArithmeticError("inexact polynomial division")
    return q


def gcd(a, b, p):
    """Monic gcd; gcd(0, 0) = 0."""
    a, b = trim(a), trim(b)
    while b:
        a, b = b, mod(a, b, p)
    return make_monic(a, p)


def xgcd(a, b, p):
    """Return (g, s, t) with s*a + t*b = g and g the monic gcd."""
    r0, r1 = trim(a), trim(b)
    s0, s1 = ONE, ZERO
    t0, t1 = ZERO, ONE
    while r1:
        q, r = divmod_(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1, p), p)
        t0, t1 = t1, sub(t0, mul(q, t1, p), p)
    if not r0:
        return ZERO, ZERO, ZERO
    c = pow(r0[-1], p - 2, p)
    return scale(r0, c, p), scale(s0, c, p), scale(t0, c, p)


def deriv(a, p):
    return trim((i * a[i]) % p for i in range(1, len(a)))


def evalp(a, x, p):
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % p
    return acc


def pow_mod(base, e, m, p):
    """base**e reduced mod the polynomial m."""
    result = mod(ONE, m, p)
    base = mod(base, m, p)
    while e > 0:
        if e & 1:
            result = mod(mul(result, base, p), m, p)
        base = mod(mul(base, base, p), m, p)
        e >>= 1
    return result


def is_squarefree(f, p):
    """True iff f has no repeated roots over the algebraic closure.

    gcd(f, f') is nonconstant exactly when f has a repeated factor; this covers
    the char-p corner where f' vanishes identically (f a p-th power).
    """
    g = gcd(f, deriv(f, p), p)
    return deg(g) == 0


def to_str(a):
    if not a:
        return "0"
    return ",".join(str(c) for c in a)


def from_str(s):
    s = s.strip()
    if s == "0":
        return ZERO
    return trim(int(c) for c in s.split(","))


# ---------------------------------------------------------------------------
# Factorization helpers (used by the plane-quartic smoothness decision).
# Distinct irreducible factors only; multiplicities are never needed there.
# ---------------------------------------------------------------------------


def _pth_root(f, p):
    # f with f' == 0 is g(X^p); over F_p the coefficient Frobenius is identity.
    return trim(f[i] for i in range(0, len(f), p))


def _frobenius_power(m, p, d):
    """X^(p^d) mod m."""
    out = mod(X, m, p)
    for _ in range(d):
        out = pow_mod(out, p, m, p)
    return out


def prime_divisors(n):
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


def is_irreducible(f, p):
    """Deterministic irreducibility test for monic f of degree >= 1.

    f is irreducible over F_p iff X^(p^n) = X mod f and, for every prime ell
    dividing n, gcd(X^(p^(n/ell)) - X, f) is constant -- i.e. f has no root in
    any proper subfield F_(p^d), d | n.
    """
    f = make_monic(f, p)
    n = deg(f)
    if n <= 0:
        return False
    if n == 1:
        return True
    if mod(sub(_frobenius_power(f, p, n), X, p), f, p) != ZERO:
        return False
    for ell in prime_divisors(n):
        h = sub(_frobenius_power(f, p, n // ell), X, p)
        if deg(gcd(h, f, p)) > 0:
            return False
    return True


def _equal_degree_split(f, d, p, rng):
    """Split monic squarefree f (all factors of degree d) into two factors."""
    n = deg(f)
    while True:
        r = trim(rng.randrange(p) for _ in range(n))
        if deg(r) < 1:
            continue
        g = gcd(r, f, p)
        if 0 < deg(g) < n:
            return g
        if p == 2:
            # trace map over F_{2^d}
            t = mod(r, f, p)
            acc = t
            for _ in range(d - 1):
                t = pow_mod(t, 2, f, p)
                acc = add(acc, t, p)
            g = gcd(acc, f, p)
        else:
            e = (p**d - 1) // 2
            g = gcd(sub(pow_mod(r, e, f, p), ONE, p), f, p)
        if 0 < deg(g) < n:
            return g


def _equal_degree_factor(f, d, p, rng):
    if deg(f) == d:
        return [f]
    g = _equal_degree_split(f, d, p, rng)
    h = divexact(f, g, p)
    return _equal_degree_factor(g, d, p, rng) + _equal_degree_factor(h, d, p, rng)


def distinct_irreducible_factors(f, p):
    """All distinct monic irreducible factors of f (any multiplicities).

    Deterministic: the equal-degree stage draws from an RNG seeded by (p, f).
    """
    f = trim(f)
    found = {}

    def walk(g):
        g = make_monic(g, p)
        if deg(g) < 1:
            return
        dg = deriv(g, p)
        if dg == ZERO:
            walk(_pth_root(g, p))
            return
        rep = gcd(g, dg, p)
        sqf = divexact(g, rep, p)
        # distinct-degree split of the squarefree part
        seed = hash((p,) + f) & 0xFFFFFFFF
        rng = random.Random(seed)
        rem = sqf
        d = 1
        while deg(rem) >= 1:
            if deg(rem) < 2 * d:
                found.setdefault(rem, True)
                break
            h = gcd(sub(_frobenius_power(rem, p, d), X, p), rem, p)
            if deg(h) > 0:
                for irr in _equal_degree_factor(h, d, p, rng):
                    found.setdefault(irr, True)
                rem = divexact(rem, h, p)
            d += 1
        if deg(rep) >= 1:
            walk(rep)

    walk(f)
    return sorted(found, key=lambda q: (len(q), q))
