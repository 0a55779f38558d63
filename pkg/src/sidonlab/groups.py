"""Abelian-group plumbing: adapters, orders, invariant-factor structure.

A GroupAdapter is the minimal surface the verifiers need: add, neg, an
identity element, and an injective encode of elements to hashable canonical
values.  Adapters are cheap wrappers; the elements themselves stay opaque.
"""

from . import polyfp
from .errors import NotAGroupError


class GroupAdapter:
    def __init__(self, add, neg, identity, encode, name=""):
        self.add = add
        self.neg = neg
        self.identity = identity
        self.encode = encode
        self.name = name

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def scalar_mul(self, x, n):
        """n*x by double-and-add; n may be any nonnegative int."""
        if n < 0:
            return self.scalar_mul(self.neg(x), -n)
        acc = self.identity
        base = x
        while n > 0:
            if n & 1:
                acc = self.add(acc, base)
            base = self.add(base, base)
            n >>= 1
        return acc

    def __repr__(self):
        return f"GroupAdapter({self.name or 'anonymous'})"


def zn_group(n):
    """The cyclic group Z_n with decimal-residue encoding."""
    return GroupAdapter(
        add=lambda a, b: (a + b) % n,
        neg=lambda a: (-a) % n,
        identity=0,
        encode=lambda a: a % n,
        name=f"Z_{n}",
    )


def check_group_laws(adapter, elements, rng, trials=50):
    """Spot-check the abelian-group axioms on sampled triples."""
    ident = adapter.identity
    enc = adapter.encode
    for _ in range(trials):
        a = elements[rng.randrange(len(elements))]
        b = elements[rng.randrange(len(elements))]
        c = elements[rng.randrange(len(elements))]
        if enc(adapter.add(a, b)) != enc(adapter.add(b, a)):
            return False
        lhs = adapter.add(adapter.add(a, b), c)
        rhs = adapter.add(a, adapter.add(b, c))
        if enc(lhs) != enc(rhs):
            return False
        if enc(adapter.add(a, ident)) != enc(a):
            return False
        if enc(adapter.add(a, adapter.neg(a))) != enc(ident):
            return False
    return True


def element_order(adapter, x, group_order):
    """Order of x given the ambient group order (Lagrange descent)."""
    o = group_order
    for ell in polyfp.prime_divisors(group_order):
        while o % ell == 0:
            cand = o // ell
            if adapter.encode(adapter.scalar_mul(x, cand)) == adapter.encode(
                adapter.identity
            ):
                o = cand
            else:
                break
    return o


def group_structure(elements, adapter):
    """Invariant factors (d_1 | d_2 | ... | d_r) of a finite abelian group.

    elements must list every group element exactly once.  For each prime ell
    dividing n = len(elements), counts solutions of ell^k * x = identity; the
    count profile determines the ell-primary partition, and aligning partitions
    across primes gives the invariant factors.  Raises NotAGroupError when the
    counts are inconsistent with any abelian group (e.g. duplicated or missing
    elements).

    Returns (factors, is_cyclic) with factors an ascending divisibility chain.
    """
    n = len(elements)
    if n == 0:
        raise NotAGroupError("empty element list")
    enc_id = adapter.encode(adapter.identity)
    if sum(1 for x in elements if adapter.encode(x) == enc_id) != 1:
        raise NotAGroupError("identity must appear exactly once")
    if n == 1:
        return (1,), True

    partitions = {}  # ell -> exponent partition, descending
    for ell in polyfp.prime_divisors(n):
        e = 0
        m = n
        while m % ell == 0:
            e += 1
            m //= ell
        counts = [1]
        cur = list(elements)
        while counts[-1] != ell**e:
            if len(counts) > e + 1:
                raise NotAGroupError(f"{ell}-torsion counts do not stabilize")
            cur = [adapter.scalar_mul(x, ell) for x in cur]
            c = sum(1 for x in cur if adapter.encode(x) == enc_id)
            if c < counts[-1] or c % counts[-1] != 0:
                raise NotAGroupError(f"inconsistent {ell}-torsion counts")
            counts.append(c)
        # r_k = #parts >= k, from N_k / N_{k-1} = ell^(r_k)
        rs = []
        for k in range(1, len(counts)):
            ratio = counts[k] // counts[k - 1]
            r = 0
            while ratio > 1:
                if ratio % ell:
                    raise NotAGroupError("torsion count is not an ell-power")
                ratio //= ell
                r += 1
            rs.append(r)
        if any(rs[i] < rs[i + 1] for i in range(len(rs) - 1)):
            raise NotAGroupError("torsion profile is not a partition")
        width = rs[0] if rs else 0
        partition = [sum(1 for r in rs if r >= i) for i in range(1, width + 1)]
        if sum(partition) != e:
            raise NotAGroupError("partition does not account for the full order")
        partitions[ell] = partition

    rank = max(len(part) for part in partitions.values())
    factors = []
    for j in range(rank):  # largest invariant factor first
        d = 1
        for ell, part in partitions.items():
            if j < len(part):
                d *= ell ** part[j]
        factors.append(d)
    factors.reverse()  # ascending: d_1 | d_2 | ... | d_r
    prod = 1
    for d in factors:
        prod *= d
    if prod != n:
        raise NotAGroupError("invariant factors do not multiply to the order")
    for i in range(len(factors) - 1):
        if factors[i + 1] % factors[i]:
            raise NotAGroupError("invariant factors do not form a chain")
    return tuple(factors), len(factors) == 1
