"""Pure-Python kernels for hyperelliptic jacobian hot loops.

This is the fallback twin of the compiled module sidonlab._kernel; both expose
the same functions with identical outputs (tuples, ordering, normalization),
and the test suite cross-checks them when the compiled one is available.

Divisors are reduced Mumford pairs (u, v): u monic, deg v < deg u <= genus,
u | v^2 - f, encoded as trimmed low-to-high coefficient tuples with () for the
zero polynomial.  The identity is ((1,), ()).
"""

from . import polyfp

IDENTITY = ((1,), ())


def count_points_affine(p, f):
    """#{(x, y) in F_p^2 : y^2 = f(x)} by a square-root count table."""
    counts = [0] * p
    for y in range(p):
        counts[(y * y) % p] += 1
    total = 0
    rev = tuple(reversed(f))
    for x in range(p):
        acc = 0
        for c in rev:
            acc = (acc * x + c) % p
        total += counts[acc]
    return total


def enumerate_reduced_divisors(p, f, genus):
    """All reduced Mumford divisors, deterministic order.

    Iterates monic u of degree d = 0..genus and v of degree < d, both by
    little-endian base-p index, keeping pairs with v^2 = f mod u.
    """
    out = [IDENTITY]
    for d in range(1, genus + 1):
        pd = p**d
        for ui in range(pd):
            u = _poly_from_index(ui, d, p) + (1,)
            f_mod = polyfp.mod(f, u, p)
            for vi in range(pd):
                v = polyfp.trim(_poly_from_index(vi, d, p))
                if polyfp.mod(polyfp.mul(v, v, p), u, p) == f_mod:
                    out.append((u, v))
    return out


def _poly_from_index(idx, length, p):
    coeffs = []
    for _ in range(length):
        coeffs.append(idx % p)
        idx //= p
    return tuple(coeffs)


def cantor_neg(p, f, div):
    u, v = div
    return (u, polyfp.mod(polyfp.neg(v, p), u, p))


def cantor_add(p, f, d1, d2):
    """Cantor composition + reduction for an odd-degree monic model."""
    genus = (polyfp.deg(f) - 1) // 2
    u1, v1 = d1
    u2, v2 = d2
    # composition
    g1, e1, e2 = polyfp.xgcd(u1, u2, p)
    vsum = polyfp.add(v1, v2, p)
    d, c1, c2 = polyfp.xgcd(g1, vsum, p)
    s1 = polyfp.mul(c1, e1, p)
    s2 = polyfp.mul(c1, e2, p)
    s3 = c2
    u = polyfp.divexact(
        polyfp.mul(u1, u2, p), polyfp.mul(d, d, p), p
    )
    t = polyfp.add(
        polyfp.add(
            polyfp.mul(polyfp.mul(s1, u1, p), v2, p),
            polyfp.mul(polyfp.mul(s2, u2, p), v1, p),
            p,
        ),
        polyfp.mul(s3, polyfp.add(polyfp.mul(v1, v2, p), f, p), p),
        p,
    )
    v = polyfp.mod(polyfp.divexact(t, d, p), u, p)
    # reduction
    while polyfp.deg(u) > genus:
        u = polyfp.divexact(polyfp.sub(f, polyfp.mul(v, v, p), p), u, p)
        u = polyfp.make_monic(u, p)
        v = polyfp.mod(polyfp.neg(v, p), u, p)
    return (polyfp.make_monic(u, p), v)


def scalar_mul(p, f, div, n):
    if n < 0:
        return scalar_mul(p, f, cantor_neg(p, f, div), -n)
    acc = IDENTITY
    base = div
    while n > 0:
        if n & 1:
            acc = cantor_add(p, f, acc, base)
        base = cantor_add(p, f, base, base)
        n >>= 1
    return acc
