"""Smooth plane quartics over prime fields and degree-2 divisor comparison.

A quartic is 15 coefficients of a homogeneous F(X, Y, Z), monomials ordered
lexicographically by descending exponent triple from (4,0,0) to (0,0,4).
Smoothness is decided exactly over the algebraic closure by bivariate
elimination on the three affine charts, and the module's centerpiece is a
linear-equivalence oracle for point pairs: P1 + P2 ~ P3 + P4 in the jacobian
iff the residual divisors cut by the two chords agree, which for distinct
lines forces both residuals to be twice the intersection point.  No explicit
jacobian arithmetic is ever needed.
"""

from . import polyfp
from .errors import (
    FieldTooLargeError,
    InternalMultiplicityError,
    NotPrimeError,
    PointNotOnCurveError,
    SetTooLargeError,
    SingularCurveError,
    ZeroFormError,
)
from .field import MAX_FIELD_SIZE, is_prime
from .sidon import verify_sidon_by_oracle

MAX_PAIRS = 5000
WITNESS_SCAN_CAP = 64

# all (i, j, k) with i + j + k = 4, descending lex; fixes coefficient order
EXPONENTS = tuple(
    sorted(
        (
            (i, j, 4 - i - j)
            for i in range(5)
            for j in range(5 - i)
        ),
        reverse=True,
    )
)

# chart name -> (dehomogenized variable index pair, point reconstruction)
CHARTS = {
    "z": ((0, 1), lambda a, b: (a, b, 1)),
    "y": ((0, 2), lambda a, b: (a, 1, b)),
    "x": ((1, 2), lambda a, b: (1, a, b)),
}


def normalize_point(p, pt):
    """Scale so the first nonzero coordinate is 1."""
    for i, c in enumerate(pt):
        c %= p
        if c:
            inv = pow(c, p - 2, p)
            return tuple((x * inv) % p for x in pt)
    raise ValueError("(0:0:0) is not a projective point")


def point_str(pt):
    return ":".join(str(c) for c in pt)


def proj_points(p):
    """All points of P^2(F_p) in canonical (ascending normalized) order."""
    out = [(0, 0, 1)]
    for z in range(p):
        out.append((0, 1, z))
    for y in range(p):
        for z in range(p):
            out.append((1, y, z))
    return out


# ---------------------------------------------------------------------------
# Homogeneous forms as {exponent triple: coefficient} dicts
# ---------------------------------------------------------------------------


def form_from_coeffs(p, coeffs):
    return {e: c % p for e, c in zip(EXPONENTS, coeffs) if c % p}


def form_partial(form, var, p):
    out = {}
    for exps, c in form.items():
        if exps[var] == 0:
            continue
        d = (c * exps[var]) % p
        if d:
            e = list(exps)
            e[var] -= 1
            out[tuple(e)] = d
    return out


def form_eval(form, pt, p):
    x, y, z = pt
    total = 0
    for (i, j, k), c in form.items():
        total += c * pow(x, i, p) * pow(y, j, p) * pow(z, k, p)
    return total % p


def form_dehom(form, chart, p):
    """Restrict to an affine chart as a bivariate: tuple over the b-degree,
    entries dense a-polys (low-to-high)."""
    (ai, bi), _ = CHARTS[chart]
    rows = {}
    for exps, c in form.items():
        da, db = exps[ai], exps[bi]
        row = rows.setdefault(db, {})
        row[da] = (row.get(da, 0) + c) % p
    if not rows:
        return ()
    out = []
    for db in range(max(rows) + 1):
        row = rows.get(db, {})
        if row:
            inner = [0] * (max(row) + 1)
            for da, c in row.items():
                inner[da] = c
            out.append(polyfp.trim(inner))
        else:
            out.append(())
    return _btrim(tuple(out))


# ---------------------------------------------------------------------------
# Bivariate polynomials: outer variable b, coefficients in F_p[a]
# ---------------------------------------------------------------------------


def _btrim(g):
    g = tuple(polyfp.trim(c) for c in g)
    n = len(g)
    while n > 0 and g[n - 1] == ():
        n -= 1
    return g[:n]


def _bdeg(g):
    return len(g) - 1


def _bscale(g, c, p):
    return _btrim(tuple(polyfp.mul(inner, c, p) for inner in g))


def _bsub(g, h, p):
    n = max(len(g), len(h))
    out = []
    for i in range(n):
        a = g[i] if i < len(g) else ()
        b = h[i] if i < len(h) else ()
        out.append(polyfp.sub(a, b, p))
    return _btrim(tuple(out))


def _bcontent(g, p):
    c = ()
    for inner in g:
        c = polyfp.gcd(c, inner, p)
    return c


def _bprimitive(g, p):
    if not g:
        return ()
    c = _bcontent(g, p)
    if polyfp.deg(c) == 0:
        return _btrim(g)
    return _btrim(tuple(polyfp.divexact(inner, c, p) for inner in g))


def _bprem(A, B, p):
    """Pseudo-remainder of A by B in the outer variable."""
    lc = B[-1]
    R = A
    while R and _bdeg(R) >= _bdeg(B):
        shift = _bdeg(R) - _bdeg(B)
        top = R[-1]
        Rl = _bscale(R, lc, p)
        sub = tuple(() for _ in range(shift)) + tuple(
            polyfp.mul(inner, top, p) for inner in B
        )
        R = _bsub(Rl, sub, p)
    return R


def _bgcd_primitive(A, B, p):
    """Primitive gcd of the primitive parts (detects shared b-positive
    factors: nonconstant in b iff Res_b vanishes identically)."""
    A = _bprimitive(A, p)
    B = _bprimitive(B, p)
    if _bdeg(A) < _bdeg(B):
        A, B = B, A
    while B:
        R = _bprem(A, B, p)
        A, B = B, _bprimitive(R, p)
    if not A:
        return ()
    # normalize: leading inner polynomial made monic (constant rescale)
    c = A[-1][-1]
    if c != 1:
        cinv = pow(c, p - 2, p)
        A = tuple(polyfp.scale(inner, cinv, p) for inner in A)
    return A


def _bdivexact(g, c, p):
    """Exact division in the outer variable; inner steps stay polynomial."""
    q = [()] * (len(g) - len(c) + 1)
    r = list(g)
    while True:
        rt = _btrim(tuple(r))
        if not rt:
            break
        if _bdeg(rt) < _bdeg(c):
            raise ArithmeticError("bivariate division not exact")
        shift = _bdeg(rt) - _bdeg(c)
        qc = polyfp.divexact(rt[-1], c[-1], p)
        q[shift] = qc
        r = list(rt)
        for i, inner in enumerate(c):
            term = polyfp.mul(inner, qc, p)
            r[i + shift] = polyfp.sub(r[i + shift], term, p)
    return _btrim(tuple(q))


def _sylvester_resultant(g, h, p):
    """Res_b(g, h) as an a-poly, by fraction-free (Bareiss) elimination."""
    m, n = _bdeg(g), _bdeg(h)
    size = m + n
    grow = [g[m - i] if 0 <= m - i < len(g) else () for i in range(m + 1)]
    hrow = [h[n - i] if 0 <= n - i < len(h) else () for i in range(n + 1)]
    M = []
    for r in range(n):
        M.append([()] * r + grow + [()] * (size - r - m - 1))
    for r in range(m):
        M.append([()] * r + hrow + [()] * (size - r - n - 1))
    return _poly_det(M, p)


def _poly_det(M, p):
    n = len(M)
    sign = 1
    prev = (1,)
    for k in range(n - 1):
        if M[k][k] == ():
            for r in range(k + 1, n):
                if M[r][k] != ():
                    M[k], M[r] = M[r], M[k]
                    sign = -sign
                    break
            else:
                return ()
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = polyfp.sub(
                    polyfp.mul(M[i][j], M[k][k], p),
                    polyfp.mul(M[i][k], M[k][j], p),
                    p,
                )
                M[i][j] = polyfp.divexact(num, prev, p)
            M[i][k] = ()
        prev = M[k][k]
    det = M[n - 1][n - 1]
    return polyfp.neg(det, p) if sign < 0 else det


# ---------------------------------------------------------------------------
# Arithmetic in L[b] where L = F_p[a]/(pi), pi irreducible
# ---------------------------------------------------------------------------


def _linv(x, pi, p):
    g, s, _ = polyfp.xgcd(x, pi, p)
    if polyfp.deg(g) != 0:
        raise ArithmeticError("element not invertible mod irreducible factor")
    return polyfp.mod(s, pi, p)


def _lreduce(g, pi, p):
    out = tuple(polyfp.mod(inner, pi, p) for inner in g)
    n = len(out)
    while n > 0 and out[n - 1] == ():
        n -= 1
    return out[:n]


def _lmod(u, v, pi, p):
    inv = _linv(v[-1], pi, p)
    r = list(u)
    while len(r) >= len(v):
        r = [polyfp.mod(c, pi, p) for c in r]
        while r and r[-1] == ():
            r.pop()
        if len(r) < len(v):
            break
        c = polyfp.mod(polyfp.mul(r[-1], inv, p), pi, p)
        shift = len(r) - len(v)
        for i, vc in enumerate(v):
            r[i + shift] = polyfp.sub(
                r[i + shift], polyfp.mul(c, vc, p), p
            )
    out = tuple(polyfp.mod(c, pi, p) for c in r)
    n = len(out)
    while n > 0 and out[n - 1] == ():
        n -= 1
    return out[:n]


def _lgcd(u, v, pi, p):
    u = _lreduce(u, pi, p)
    v = _lreduce(v, pi, p)
    while v:
        u, v = v, _lmod(u, v, pi, p)
    return u


# ---------------------------------------------------------------------------
# Emptiness of a bivariate system over the algebraic closure
# ---------------------------------------------------------------------------


def _rational_root(d, p):
    for pi in polyfp.distinct_irreducible_factors(d, p):
        if polyfp.deg(pi) == 1:
            return (-pi[0]) % p
    return None


def _decide_system(members, p):
    """Common zero of the system over the closure of F_p?

    Returns None when the zero set is empty, ("rational", (a, b)) for an
    explicit F_p zero, or ("algebraic", description) when every common zero
    lives in a proper extension.
    """
    members = [m for m in (_btrim(g) for g in members) if m]
    if not members:
        return ("rational", (0, 0))
    for g in members:
        if _bdeg(g) == 0 and polyfp.deg(g[0]) == 0:
            return None  # nonzero constant in the ideal
    bpos = [g for g in members if _bdeg(g) >= 1]
    bfree = [g[0] for g in members if _bdeg(g) == 0]

    if not bpos:
        d = bfree[0]
        for g in bfree[1:]:
            d = polyfp.gcd(d, g, p)
        if polyfp.deg(d) == 0:
            return None
        root = _rational_root(d, p)
        if root is not None:
            return ("rational", (root, 0))
        return ("algebraic", "common a-factor " + polyfp.to_str(d))

    # shared b-positive factor between two members: split off the common
    # component (its zero set is handled with the rest of the system) and
    # recurse on the cofactors
    for i in range(len(bpos)):
        for j in range(i + 1, len(bpos)):
            c = _bgcd_primitive(bpos[i], bpos[j], p)
            if _bdeg(c) >= 1:
                others = []
                skipped = [False, False]
                for g in members:
                    if g == bpos[i] and not skipped[0]:
                        skipped[0] = True
                    elif g == bpos[j] and not skipped[1]:
                        skipped[1] = True
                    else:
                        others.append(g)
                hit = _decide_system(others + [c], p)
                if hit is not None:
                    return hit
                return _decide_system(
                    others
                    + [_bdivexact(bpos[i], c, p), _bdivexact(bpos[j], c, p)],
                    p,
                )

    if len(bpos) == 1 and not bfree:
        # a single nonconstant polynomial in two variables always vanishes
        # somewhere over the closure
        g = bpos[0]
        if p <= WITNESS_SCAN_CAP:
            for a in range(p):
                col = polyfp.trim(
                    polyfp.evalp(inner, a, p) for inner in g
                )
                if col == ():
                    return ("rational", (a, 0))
                root = _rational_root(col, p) if polyfp.deg(col) >= 1 else None
                if root is not None:
                    return ("rational", (a, root))
        return ("algebraic", "nonconstant component (single equation)")

    # eliminate b: every common zero's a-coordinate kills all pairwise
    # resultants and all b-free members
    hpolys = list(bfree)
    for i in range(len(bpos)):
        for j in range(i + 1, len(bpos)):
            hpolys.append(_sylvester_resultant(bpos[i], bpos[j], p))
    H = hpolys[0]
    for g in hpolys[1:]:
        H = polyfp.gcd(H, g, p)
    if polyfp.deg(H) == 0:
        return None

    for pi in polyfp.distinct_irreducible_factors(H, p):
        if polyfp.deg(pi) == 1:
            alpha = (-pi[0]) % p
            reduced = []
            all_zero = True
            for g in members:
                col = polyfp.trim(polyfp.evalp(inner, alpha, p) for inner in g)
                if col != ():
                    all_zero = False
                    reduced.append(col)
            if all_zero:
                return ("rational", (alpha, 0))
            d = reduced[0]
            for g in reduced[1:]:
                d = polyfp.gcd(d, g, p)
            if polyfp.deg(d) >= 1:
                beta = _rational_root(d, p)
                if beta is not None:
                    return ("rational", (alpha, beta))
                return (
                    "algebraic",
                    f"a = {alpha}, b-factor " + polyfp.to_str(d),
                )
        else:
            reduced = [_lreduce(g, pi, p) for g in members]
            reduced = [g for g in reduced if g]
            if not reduced:
                return ("algebraic", "a-factor " + polyfp.to_str(pi))
            d = reduced[0]
            for g in reduced[1:]:
                d = _lgcd(d, g, pi, p)
            if len(d) - 1 >= 1:
                return (
                    "algebraic",
                    "a-factor " + polyfp.to_str(pi) + ", common b-divisor "
                    "of positive degree over the extension",
                )
    return None


def is_smooth(p, coeffs):
    """Exact smoothness verdict with evidence.

    Returns (True, None) or (False, evidence dict).  A curve is singular iff
    F and its three partials share a projective zero over the closure; per
    chart that reduces (by the integer Euler identity 4F = X F_X + Y F_Y +
    Z F_Z, valid in every characteristic) to the chart system
    {f, f_a, f_b} having a common affine zero.
    """
    F = form_from_coeffs(p, coeffs)
    if not F:
        raise ZeroFormError("the zero form is not a quartic")
    partials = [form_partial(F, v, p) for v in range(3)]
    for chart, ((ai, bi), recon) in CHARTS.items():
        system = [
            form_dehom(F, chart, p),
            form_dehom(partials[ai], chart, p),
            form_dehom(partials[bi], chart, p),
        ]
        hit = _decide_system(system, p)
        if hit is None:
            continue
        kind, data = hit
        evidence = {"chart": chart, "kind": kind}
        if kind == "rational":
            pt = normalize_point(p, recon(*data))
            forms = [F] + partials
            assert all(form_eval(g, pt, p) == 0 for g in forms)
            evidence["point"] = pt
            evidence["detail"] = "singular point at " + point_str(pt)
        else:
            evidence["detail"] = data
        return (False, evidence)
    return (True, None)


# ---------------------------------------------------------------------------
# Binary forms (restriction of the quartic to a line)
# ---------------------------------------------------------------------------


def _bf_mul(u, v, p):
    out = [0] * (len(u) + len(v) - 1)
    for i, a in enumerate(u):
        for j, b in enumerate(v):
            out[i + j] = (out[i + j] + a * b) % p
    return tuple(out)


def _bf_normalize(u, p):
    for c in u:
        if c:
            inv = pow(c, p - 2, p)
            return tuple((x * inv) % p for x in u)
    raise ZeroFormError("zero binary form")


def _bf_eval(u, s, t, p):
    d = len(u) - 1
    return sum(
        c * pow(s, d - i, p) * pow(t, i, p) for i, c in enumerate(u)
    ) % p


def _bf_div_linear(u, lin, p):
    """Exact division of a binary form by a linear form (c0, c1)."""
    c0, c1 = lin
    d = len(u) - 1
    q = [0] * d
    if c0:
        inv = pow(c0, p - 2, p)
        for k in range(d):
            prev = q[k - 1] if k else 0
            q[k] = ((u[k] - c1 * prev) * inv) % p
        if (u[d] - c1 * q[d - 1]) % p:
            raise InternalMultiplicityError(
                "restriction does not vanish at a required parameter"
            )
    else:
        inv = pow(c1, p - 2, p)
        if u[0] % p:
            raise InternalMultiplicityError(
                "restriction does not vanish at a required parameter"
            )
        for k in range(d):
            q[k] = (u[k + 1] * inv) % p
    return tuple(q)


# ---------------------------------------------------------------------------
# The quartic itself
# ---------------------------------------------------------------------------


class PlaneQuartic:
    """A validated smooth quartic; the constructor rejects singular input."""

    def __init__(self, p, coeffs):
        if not is_prime(p):
            raise NotPrimeError(f"{p} is not prime (prime base fields only)")
        if p > MAX_FIELD_SIZE:
            raise FieldTooLargeError(f"p = {p} exceeds {MAX_FIELD_SIZE}")
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != 15:
            raise ValueError(f"need 15 coefficients, got {len(coeffs)}")
        self.p = p
        self.coeffs = tuple(c % p for c in coeffs)
        smooth, evidence = is_smooth(p, self.coeffs)
        if not smooth:
            raise SingularCurveError(
                "the quartic is singular: " + evidence["detail"],
                evidence=evidence,
            )
        self.form = form_from_coeffs(p, self.coeffs)
        self.partials = [form_partial(self.form, v, p) for v in range(3)]
        self._points = None
        self._line_cache = {}

    def __repr__(self):
        return f"PlaneQuartic(p={self.p}, coeffs={self.coeffs})"

    def evaluate(self, pt):
        return form_eval(self.form, pt, self.p)

    def is_on_curve(self, pt):
        return self.evaluate(pt) == 0

    def rational_points(self):
        if self._points is None:
            self._points = [
                pt for pt in proj_points(self.p) if self.evaluate(pt) == 0
            ]
        return list(self._points)

    # -- lines ---------------------------------------------------------

    def tangent_line(self, pt):
        grad = tuple(form_eval(g, pt, self.p) for g in self.partials)
        return normalize_point(self.p, grad)

    def line_through(self, P, Q):
        if P == Q:
            return self.tangent_line(P)
        x1, y1, z1 = P
        x2, y2, z2 = Q
        l = (y1 * z2 - z1 * y2, z1 * x2 - x1 * z2, x1 * y2 - y1 * x2)
        return normalize_point(self.p, l)

    def line_points(self, line):
        """The p+1 points of the line, canonical order."""
        p = self.p
        lx, ly, lz = line
        pivot = next(i for i, c in enumerate(line) if c)
        inv = pow(line[pivot], p - 2, p)
        basis = []
        for j in range(3):
            if j == pivot:
                continue
            v = [0, 0, 0]
            v[j] = 1
            v[pivot] = (-line[j] * inv) % p
            basis.append(tuple(v))
        k1, k2 = basis
        pts = {normalize_point(p, k1)}
        for t in range(p):
            pts.add(
                normalize_point(
                    p, tuple((a * t + b) % p for a, b in zip(k1, k2))
                )
            )
        return sorted(pts)

    def _params_on_line(self, B1, B2, P):
        """(s : t) with s*B1 + t*B2 projectively equal to P."""
        p = self.p
        for i in range(3):
            for j in range(i + 1, 3):
                det = (B1[i] * B2[j] - B1[j] * B2[i]) % p
                if det:
                    inv = pow(det, p - 2, p)
                    s = ((P[i] * B2[j] - P[j] * B2[i]) * inv) % p
                    t = ((B1[i] * P[j] - B1[j] * P[i]) * inv) % p
                    if (s, t) == (0, 0):
                        raise ValueError("point not on the line")
                    return normalize_point(p, (s, t, 0))[:2]
        raise ValueError("degenerate base points")

    def _restrict(self, B1, B2):
        """F(s*B1 + t*B2) as a binary quartic."""
        p = self.p
        acc = (0, 0, 0, 0, 0)
        for (i, j, k), c in self.form.items():
            term = (c % p,)
            for var, e in ((0, i), (1, j), (2, k)):
                lin = (B1[var] % p, B2[var] % p)
                for _ in range(e):
                    term = _bf_mul(term, lin, p)
            acc = tuple((a + b) % p for a, b in zip(acc, term))
        return acc

    def _line_data(self, P, Q):
        """Cached line, base points, and residual quadratic for a pair."""
        key = tuple(sorted((P, Q)))
        hit = self._line_cache.get(key)
        if hit is not None:
            return hit
        p = self.p
        line = self.line_through(P, Q)
        B1, B2 = self.line_points(line)[:2]
        B = self._restrict(B1, B2)
        if all(c == 0 for c in B):
            raise InternalMultiplicityError(
                "line lies on the quartic; the form cannot be irreducible"
            )
        residual = B
        for pt in (P, Q):
            s0, t0 = self._params_on_line(B1, B2, pt)
            if _bf_eval(residual, s0, t0, p) != 0:
                raise InternalMultiplicityError(
                    f"restriction nonzero at the parameter of {point_str(pt)}"
                )
            residual = _bf_div_linear(residual, (t0, (-s0) % p), p)
        data = {
            "line": line,
            "base": (B1, B2),
            "residual": _bf_normalize(residual, p),
        }
        self._line_cache[key] = data
        return data

    def line_and_residual(self, P, Q):
        """(line, residual quadratic) with L.C = P + Q + residual divisor."""
        for pt in (P, Q):
            if not self.is_on_curve(pt):
                raise PointNotOnCurveError(f"{point_str(pt)} is not on the curve")
        data = self._line_data(P, Q)
        return data["line"], data["residual"]

    # -- the equivalence oracle ------------------------------------------

    def pair_class_equivalent(self, pair1, pair2):
        """Whether the two point pairs have linearly equivalent sums.

        Cancel common points; an empty remainder is equality of divisors, a
        single leftover point per side is never equivalent (degree-1 classes
        separate points on a positive-genus curve), and the two-on-each-side
        case compares the chord residuals: distinct lines give equivalent
        pairs iff both residuals equal twice the lines' intersection point.
        """
        for pt in (*pair1, *pair2):
            if not self.is_on_curve(pt):
                raise PointNotOnCurveError(f"{point_str(pt)} is not on the curve")
        left = sorted(pair1)
        right = sorted(pair2)
        for pt in list(left):
            if pt in right:
                left.remove(pt)
                right.remove(pt)
        if not left:
            return True
        if len(left) == 1:
            return left[0] == right[0]
        d1 = self._line_data(*left)
        d2 = self._line_data(*right)
        if d1["line"] == d2["line"]:
            return False
        p = self.p
        lx1, ly1, lz1 = d1["line"]
        lx2, ly2, lz2 = d2["line"]
        R = (
            ly1 * lz2 - lz1 * ly2,
            lz1 * lx2 - lx1 * lz2,
            lx1 * ly2 - ly1 * lx2,
        )
        R = normalize_point(p, R)
        if not self.is_on_curve(R):
            return False
        for data in (d1, d2):
            s0, t0 = self._params_on_line(*data["base"], R)
            lin = (t0, (-s0) % p)
            square = _bf_normalize(_bf_mul(lin, lin, p), p)
            if data["residual"] != square:
                return False
        return True

    def verify_sidon(self):
        """Run the pair-sum oracle over the whole point image.

        Returns (SidonReport, oracle_calls).
        """
        points = self.rational_points()
        n = len(points)
        if n * (n + 1) // 2 > MAX_PAIRS:
            raise SetTooLargeError(
                f"{n} points give {n * (n + 1) // 2} pairs > {MAX_PAIRS}"
            )
        calls = [0]

        def equiv(pair1, pair2):
            calls[0] += 1
            return self.pair_class_equivalent(pair1, pair2)

        report = verify_sidon_by_oracle(points, equiv, encode=point_str)
        return report, calls[0]
