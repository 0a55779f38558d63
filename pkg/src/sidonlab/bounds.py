"""Weil-interval checks and the epsilon / Erdos-Turan size report.

All interval verdicts are exact: an integer X is compared against a + b*sqrt(q)
by sign analysis and squaring, never through floats.  The genus-2 epsilon is
defined by S = q + (4 - epsilon)*sqrt(q) + 1 and kept as an exact Fraction
when q is a perfect square.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union


def _sign(x):
    return (x > 0) - (x < 0)


def cmp_with_surd(x, a, b, q):
    """Sign of x - (a + b*sqrt(q)) for integers x, a, b and q >= 1."""
    l = x - a
    if b == 0:
        return _sign(l)
    if l == 0:
        return -_sign(b)
    if l > 0 and b < 0:
        return 1
    if l < 0 and b > 0:
        return -1
    if l > 0:
        return _sign(l * l - b * b * q)
    return _sign(b * b * q - l * l)


def surd_power(q, genus):
    """(sqrt(q) + 1)^(2*genus) written as P + Q*sqrt(q) with P, Q integers;
    the conjugate (sqrt(q) - 1)^(2*genus) is then P - Q*sqrt(q)."""
    n = 2 * genus
    P = Q = 0
    for k in range(n + 1):
        c = math.comb(n, k)
        e = n - k
        if e % 2 == 0:
            P += c * q ** (e // 2)
        else:
            Q += c * q ** ((e - 1) // 2)
    return P, Q


def weil_set_ok(set_size, q, genus):
    """q + 1 - 2g*sqrt(q) <= set_size <= q + 1 + 2g*sqrt(q), exactly."""
    lo = cmp_with_surd(set_size, q + 1, -2 * genus, q)
    hi = cmp_with_surd(set_size, q + 1, 2 * genus, q)
    return lo >= 0 and hi <= 0


def weil_group_ok(order, q, genus):
    """(sqrt(q)-1)^(2g) <= order <= (sqrt(q)+1)^(2g), exactly."""
    P, Q = surd_power(q, genus)
    return (
        cmp_with_surd(order, P, -Q, q) >= 0
        and cmp_with_surd(order, P, Q, q) <= 0
    )


@dataclass(frozen=True)
class BoundsReport:
    q: int
    g: int
    s_size: int
    a_order: int
    weil_s_ok: bool
    weil_a_ok: bool
    epsilon: Optional[Union[Fraction, float]]
    et_lower: Optional[float]
    et_ratio: float

    def to_dict(self):
        eps_exact = None
        eps = self.epsilon
        if isinstance(eps, Fraction):
            eps_exact = str(eps)
            eps = float(eps)
        return {
            "q": self.q,
            "g": self.g,
            "S_size": self.s_size,
            "A_order": self.a_order,
            "weil_S_ok": self.weil_s_ok,
            "weil_A_ok": self.weil_a_ok,
            "epsilon": eps,
            "epsilon_exact": eps_exact,
            "et_lower": self.et_lower,
            "et_ratio": self.et_ratio,
        }


def compute_bounds_report(q, g, s_size, a_order):
    """Exact Weil verdicts plus the genus-2 epsilon and size comparisons.

    epsilon and et_lower are genus-2 quantities and stay None otherwise;
    et_ratio = S / (A^(1/2) + A^(1/4) + 1) is computed for every genus.
    """
    if q < 2 or g < 1 or s_size < 1 or a_order < 1:
        raise ValueError("all inputs must be positive (q >= 2, g >= 1)")
    s_ok = weil_set_ok(s_size, q, g)
    a_ok = weil_group_ok(a_order, q, g)
    epsilon = None
    et_lower = None
    if g == 2:
        r = math.isqrt(q)
        if r * r == q:
            epsilon = Fraction(q + 4 * r + 1 - s_size, r)
            eps_f = float(epsilon)
        else:
            eps_f = (q + 4 * math.sqrt(q) + 1 - s_size) / math.sqrt(q)
            epsilon = eps_f
        et_lower = (
            a_order**0.5 + (2 - eps_f) * a_order**0.25 - 2
        )
    et_ratio = s_size / (a_order**0.5 + a_order**0.25 + 1)
    return BoundsReport(
        q=q,
        g=g,
        s_size=s_size,
        a_order=a_order,
        weil_s_ok=s_ok,
        weil_a_ok=a_ok,
        epsilon=epsilon,
        et_lower=et_lower,
        et_ratio=et_ratio,
    )
