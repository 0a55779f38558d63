"""The diagonal Sidon set in k^x * k for a finite field k.

S = {(x, x) : x in k^x} inside the product of the multiplicative and additive
groups of k.  Sidonness reduces to the fact that a monic quadratic over a
field has at most one root pair: fixing x1*x2 and x1+x2 fixes {x1, x2} as the
roots of (X - x1)(X - x2).

For prime fields the ambient group is cyclic of order q(q-1); to_cyclic_integers
maps (x, x) to the residue n mod q(q-1) with n = dlog_g(x) mod (q-1) and
n = x mod q, giving a classical perfect-difference-style Sidon set of integers.
"""

from .errors import ExtensionFieldUnsupportedError
from .field import FiniteField
from .groups import GroupAdapter


def product_group(fld: FiniteField) -> GroupAdapter:
    """The group k^x * k: first coordinate multiplies, second adds."""

    def add(u, v):
        return (u[0] * v[0], u[1] + v[1])

    def neg(u):
        return (u[0].inverse(), -u[1])

    def encode(u):
        return u[0].encode() + "|" + u[1].encode()

    return GroupAdapter(
        add=add,
        neg=neg,
        identity=(fld.one(), fld.zero()),
        encode=encode,
        name=f"GF({fld.q})^x*GF({fld.q})",
    )


def build_diagonal(fld: FiniteField):
    """Return (group, S) with S = [(x, x) for nonzero x], |S| = q - 1."""
    group = product_group(fld)
    S = [(x, x) for x in fld.elements() if not x.is_zero()]
    return group, S


def enumerate_product_group(fld: FiniteField):
    """All q(q-1) elements of k^x * k, enumeration order."""
    return [
        (a, b)
        for a in fld.elements()
        if not a.is_zero()
        for b in fld.elements()
    ]


def proof_identity_check(fld: FiniteField, x1, x2, x3, x4):
    """The defining implication for one quadruple of nonzero field elements:
    if x1*x2 = x3*x4 and x1 + x2 = x3 + x4 then x1 in {x3, x4}."""
    if x1 * x2 == x3 * x4 and x1 + x2 == x3 + x4:
        return x1 == x3 or x1 == x4
    return True


def to_cyclic_integers(fld: FiniteField, S):
    """Residues of the diagonal set in Z_(q(q-1)), sorted ascending.

    Prime fields only: the additive group of an extension field is not cyclic,
    so there is no such integer model for m > 1.
    """
    if fld.m != 1:
        raise ExtensionFieldUnsupportedError(
            "integer export needs a prime field (additive group must be cyclic)"
        )
    q = fld.q
    g = fld.primitive_root()
    dlog = {}
    acc = fld.one()
    for k in range(q - 1):
        dlog[acc.coeffs[0]] = k
        acc = acc * g
    out = []
    inv = pow(q - 1, -1, q)
    for mult_part, add_part in S:
        r1 = dlog[mult_part.coeffs[0]]  # n mod q-1
        r2 = add_part.coeffs[0]  # n mod q
        k = ((r2 - r1) * inv) % q
        out.append((r1 + (q - 1) * k) % (q * (q - 1)))
    return sorted(out)
