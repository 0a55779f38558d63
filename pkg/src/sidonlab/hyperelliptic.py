"""Odd-degree hyperelliptic curves y^2 = f(x) over prime fields.

Centers on the jacobian as a finite abelian group: reduced Mumford divisors,
Cantor arithmetic (through the selected kernel backend), point counting over
small extensions, the genus-2 zeta closed form, and the curve-image Sidon
constructions (symmetric set of point classes, halved set).
"""

from . import polyfp
from .backend import kernel
from .errors import (
    BadDegreeError,
    EvenCharacteristicError,
    GenusUnsupportedError,
    InconsistentCenterError,
    NotMonicError,
    NotPrimeError,
    NotSquarefreeError,
    SetTooLargeError,
)
from .field import FiniteField, is_prime
from .groups import GroupAdapter

MAX_GENUS = 3
MAX_JACOBIAN_SCALE = 10**5  # enumeration refused when p^genus exceeds this

IDENTITY_DIVISOR = ((1,), ())


def divisor_sort_key(div):
    """Total order on Mumford pairs: (deg u, u, deg v, v), low-to-high tuples."""
    u, v = div
    return (len(u), u, len(v), v)


def divisor_to_str(div):
    u, v = div
    return polyfp.to_str(u) + ";" + polyfp.to_str(v)


def divisor_from_str(s):
    us, _, vs = s.partition(";")
    if not vs and ";" not in s:
        raise ValueError(f"expected 'u;v', got {s!r}")
    return (polyfp.from_str(us), polyfp.from_str(vs))


class HyperellipticCurve:
    """y^2 = f(x) with f monic squarefree of odd degree 2g+1, char p > 2.

    Points are None (the point at infinity) or (x, y) int pairs; divisors are
    reduced Mumford pairs of coefficient tuples.
    """

    def __init__(self, p, f):
        if not is_prime(p):
            raise NotPrimeError(f"{p} is not prime")
        if p == 2:
            raise EvenCharacteristicError("characteristic 2 is not supported")
        self.p = p
        self.f = polyfp.trim(c % p for c in f)
        d = polyfp.deg(self.f)
        if d < 5 or d % 2 == 0:
            raise BadDegreeError(
                f"deg f = {d}; need odd degree >= 5 (genus >= 2)"
            )
        if self.f[-1] != 1:
            raise NotMonicError("f must be monic")
        if not polyfp.is_squarefree(self.f, p):
            raise NotSquarefreeError("f has a repeated root; curve is singular")
        self.genus = (d - 1) // 2

    def __repr__(self):
        return f"HyperellipticCurve(p={self.p}, f=[{polyfp.to_str(self.f)}])"

    # ------------------------------------------------------------------
    # Points
    # ------------------------------------------------------------------

    def is_on_curve(self, pt):
        if pt is None:
            return True
        x, y = pt
        return (y * y - polyfp.evalp(self.f, x, self.p)) % self.p == 0

    def points(self):
        """None first (infinity), then affine (x, y) ascending."""
        p = self.p
        out = [None]
        for x in range(p):
            fx = polyfp.evalp(self.f, x, p)
            for y in range(p):
                if (y * y) % p == fx:
                    out.append((x, y))
        return out

    def involution(self, pt):
        """The hyperelliptic involution (x, y) -> (x, -y)."""
        if pt is None:
            return None
        x, y = pt
        return (x, (-y) % self.p)

    def embed(self, pt):
        """Divisor class of P - infinity in Mumford form."""
        if pt is None:
            return IDENTITY_DIVISOR
        x, y = pt
        u = ((-x) % self.p, 1)
        v = (y % self.p,) if y % self.p else ()
        return (u, v)

    # ------------------------------------------------------------------
    # Jacobian
    # ------------------------------------------------------------------

    def jacobian(self):
        p, f = self.p, self.f
        return GroupAdapter(
            add=lambda a, b: kernel.cantor_add(p, f, a, b),
            neg=lambda a: kernel.cantor_neg(p, f, a),
            identity=IDENTITY_DIVISOR,
            encode=divisor_to_str,
            name=f"Jac(y^2=[{polyfp.to_str(f)}] / F_{p})",
        )

    def enumerate_jacobian(self):
        """Every reduced divisor, identity first then by divisor_sort_key."""
        if self.genus > MAX_GENUS:
            raise GenusUnsupportedError(
                f"genus {self.genus} > {MAX_GENUS}: enumeration refused"
            )
        if self.p**self.genus > MAX_JACOBIAN_SCALE:
            raise SetTooLargeError(
                f"p^genus = {self.p ** self.genus} exceeds "
                f"{MAX_JACOBIAN_SCALE}; jacobian too large to enumerate"
            )
        divisors = kernel.enumerate_reduced_divisors(self.p, self.f, self.genus)
        return sorted(divisors, key=divisor_sort_key)

    def count_points(self, d=1):
        """#C(F_{p^d}) including the single point at infinity."""
        if d == 1:
            return 1 + kernel.count_points_affine(self.p, self.f)
        fld = FiniteField(self.p, d)
        coeffs = [fld.element((c,)) for c in self.f]
        total = 1
        for x in fld.elements():
            acc = fld.zero()
            for c in reversed(coeffs):
                acc = acc * x + c
            if acc.is_zero():
                total += 1
            elif fld.is_square(acc):
                total += 2
        return total

    def jacobian_order_zeta(self):
        """|Jac(F_p)| from N_1 and N_2 via the genus-2 zeta closed form."""
        if self.genus != 2:
            raise GenusUnsupportedError(
                f"zeta closed form implemented for genus 2 only, "
                f"not genus {self.genus}"
            )
        p = self.p
        n1 = self.count_points(1)
        n2 = self.count_points(2)
        a1 = n1 - (p + 1)
        twice_a2 = a1 * a1 + n2 - p * p - 1
        if twice_a2 % 2 != 0:
            raise ArithmeticError(
                f"inconsistent point counts N1={n1}, N2={n2} for p={p}"
            )
        a2 = twice_a2 // 2
        return 1 + a1 + a2 + p * a1 + p * p


# ----------------------------------------------------------------------
# Sidon sets from the curve image in its jacobian
# ----------------------------------------------------------------------


def symmetric_center(curve):
    """The common value iota(P) + iota(w(P)) over all rational points.

    w is the hyperelliptic involution; the sum must be the same divisor class
    for every P, and it is the center of symmetry of the point image.
    """
    adapter = curve.jacobian()
    center = None
    for pt in curve.points():
        c = adapter.add(curve.embed(pt), curve.embed(curve.involution(pt)))
        if center is None:
            center = c
        elif c != center:
            raise InconsistentCenterError(
                f"iota(P)+iota(w(P)) not constant: {divisor_to_str(center)} "
                f"vs {divisor_to_str(c)} at P={pt}"
            )
    return center


def build_symmetric_sidon(curve):
    """(adapter, S, center): S is the point image, symmetric about center."""
    adapter = curve.jacobian()
    S = [curve.embed(pt) for pt in curve.points()]
    return adapter, S, symmetric_center(curve)


def halve_set(S, adapter, center):
    """One divisor per reflection orbit {D, center - D}, ordered.

    Orbits of size two keep their divisor_sort_key minimum.  Fixed divisors
    (center - D = D) collide pairwise at the center, so exactly one survives:
    the global divisor_sort_key minimum among them.
    """
    fixed = []
    orbit_pick = {}
    for div in S:
        mirror = adapter.sub(center, div)
        if mirror == div:
            fixed.append(div)
        else:
            key = frozenset((divisor_to_str(div), divisor_to_str(mirror)))
            cur = orbit_pick.get(key)
            if cur is None or divisor_sort_key(div) < divisor_sort_key(cur):
                orbit_pick[key] = div
    out = list(orbit_pick.values())
    if fixed:
        out.append(min(fixed, key=divisor_sort_key))
    return sorted(out, key=divisor_sort_key)
