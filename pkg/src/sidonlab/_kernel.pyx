# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for hyperelliptic jacobian hot loops.

Twin of sidonlab._kernel_py: same functions, same tuple outputs, same
ordering and normalization.  Polynomials ride in fixed C buffers (dense
low-to-high, tracked length); coefficients stay below 2^20 so products fit
comfortably in 64-bit arithmetic.
"""

from libc.stdlib cimport free, malloc

ctypedef long long i64

DEF MAXD = 64

IDENTITY = ((1,), ())


cdef inline i64 inv_mod(i64 a, i64 p):
    cdef i64 old_r = a % p, r = p
    cdef i64 old_s = 1, s = 0
    cdef i64 q, tmp
    if old_r < 0:
        old_r += p
    while r != 0:
        q = old_r / r
        tmp = old_r - q * r
        old_r = r
        r = tmp
        tmp = old_s - q * s
        old_s = s
        s = tmp
    old_s %= p
    if old_s < 0:
        old_s += p
    return old_s


cdef inline int ptrim(i64* a, int n):
    while n > 0 and a[n - 1] == 0:
        n -= 1
    return n


cdef inline void pcopy(i64* dst, i64* src, int n):
    cdef int i
    for i in range(n):
        dst[i] = src[i]


cdef int padd(i64* out, i64* a, int na, i64* b, int nb, i64 p):
    cdef int n = na if na > nb else nb
    cdef int i
    cdef i64 x, y
    for i in range(n):
        x = a[i] if i < na else 0
        y = b[i] if i < nb else 0
        out[i] = (x + y) % p
    return ptrim(out, n)


cdef int psub(i64* out, i64* a, int na, i64* b, int nb, i64 p):
    cdef int n = na if na > nb else nb
    cdef int i
    cdef i64 x, y
    for i in range(n):
        x = a[i] if i < na else 0
        y = b[i] if i < nb else 0
        out[i] = (x - y) % p
        if out[i] < 0:
            out[i] += p
    return ptrim(out, n)


cdef int pmul(i64* out, i64* a, int na, i64* b, int nb, i64 p):
    cdef int i, j
    if na == 0 or nb == 0:
        return 0
    for i in range(na + nb - 1):
        out[i] = 0
    for i in range(na):
        if a[i] == 0:
            continue
        for j in range(nb):
            out[i + j] = (out[i + j] + a[i] * b[j]) % p
    return ptrim(out, na + nb - 1)


cdef void pdivmod(i64* q, int* nq, i64* r, int* nr,
                  i64* a, int na, i64* b, int nb, i64 p):
    cdef int i, j, k
    cdef i64 lc_inv, c
    pcopy(r, a, na)
    if na < nb:
        nq[0] = 0
        nr[0] = ptrim(r, na)
        return
    lc_inv = inv_mod(b[nb - 1], p)
    for i in range(na - nb + 1):
        q[i] = 0
    k = na - nb
    while k >= 0:
        c = (r[k + nb - 1] * lc_inv) % p
        q[k] = c
        if c != 0:
            for j in range(nb):
                r[k + j] = (r[k + j] - c * b[j]) % p
                if r[k + j] < 0:
                    r[k + j] += p
        k -= 1
    nq[0] = ptrim(q, na - nb + 1)
    nr[0] = ptrim(r, nb - 1)


cdef int pmod(i64* out, i64* a, int na, i64* b, int nb, i64 p):
    cdef i64 q[MAXD]
    cdef int nq, nr
    pdivmod(q, &nq, out, &nr, a, na, b, nb, p)
    return nr


cdef int pmonic(i64* a, int n, i64 p):
    cdef i64 c
    cdef int i
    if n == 0 or a[n - 1] == 1:
        return n
    c = inv_mod(a[n - 1], p)
    for i in range(n):
        a[i] = (a[i] * c) % p
    return n


cdef void pxgcd(i64* g, int* ng, i64* s, int* ns, i64* t, int* nt,
                i64* a, int na, i64* b, int nb, i64 p):
    """Monic g = gcd(a, b) with s*a + t*b = g."""
    cdef i64 r0[MAXD]
    cdef i64 r1[MAXD]
    cdef i64 s0[MAXD]
    cdef i64 s1[MAXD]
    cdef i64 t0[MAXD]
    cdef i64 t1[MAXD]
    cdef i64 q[MAXD]
    cdef i64 rem[MAXD]
    cdef i64 mbuf[MAXD]
    cdef i64 nbuf[MAXD]
    cdef int nr0 = na, nr1 = nb, ns0 = 1, ns1 = 0, nt0 = 0, nt1 = 1
    cdef int nq, nrem, nm, nn, i
    cdef i64 c
    pcopy(r0, a, na)
    pcopy(r1, b, nb)
    s0[0] = 1
    t1[0] = 1
    while nr1 > 0:
        pdivmod(q, &nq, rem, &nrem, r0, nr0, r1, nr1, p)
        pcopy(r0, r1, nr1)
        nr0 = nr1
        pcopy(r1, rem, nrem)
        nr1 = nrem
        nm = pmul(mbuf, q, nq, s1, ns1, p)
        nn = psub(nbuf, s0, ns0, mbuf, nm, p)
        pcopy(s0, s1, ns1)
        ns0 = ns1
        pcopy(s1, nbuf, nn)
        ns1 = nn
        nm = pmul(mbuf, q, nq, t1, nt1, p)
        nn = psub(nbuf, t0, nt0, mbuf, nm, p)
        pcopy(t0, t1, nt1)
        nt0 = nt1
        pcopy(t1, nbuf, nn)
        nt1 = nn
    c = inv_mod(r0[nr0 - 1], p) if nr0 > 0 else 1
    for i in range(nr0):
        g[i] = (r0[i] * c) % p
    for i in range(ns0):
        s[i] = (s0[i] * c) % p
    for i in range(nt0):
        t[i] = (t0[i] * c) % p
    ng[0] = nr0
    ns[0] = ns0
    nt[0] = nt0


cdef int load_poly(i64* out, poly):
    cdef int i = 0
    for c in poly:
        out[i] = c
        i += 1
    return i


cdef tuple pack_poly(i64* a, int n):
    cdef int i
    return tuple([a[i] for i in range(n)])


def count_points_affine(long long p, tuple f):
    """#{(x, y) in F_p^2 : y^2 = f(x)} by a square-root count table."""
    cdef i64 fb[MAXD]
    cdef int nf = load_poly(fb, f)
    cdef i64* counts = <i64*>malloc(p * sizeof(i64))
    cdef i64 x, y, acc, total = 0
    cdef int i
    if counts == NULL:
        raise MemoryError()
    try:
        for x in range(p):
            counts[x] = 0
        for y in range(p):
            counts[(y * y) % p] += 1
        for x in range(p):
            acc = 0
            for i in range(nf - 1, -1, -1):
                acc = (acc * x + fb[i]) % p
            total += counts[acc]
    finally:
        free(counts)
    return total


def enumerate_reduced_divisors(long long p, tuple f, int genus):
    """All reduced Mumford divisors, deterministic order.

    Same iteration as the pure twin: degree d = 0..genus, then monic u and v
    by little-endian base-p index.
    """
    cdef i64 fb[MAXD]
    cdef i64 ub[MAXD]
    cdef i64 vd[MAXD]
    cdef i64 fmod[MAXD]
    cdef i64 vv[MAXD]
    cdef i64 vvm[MAXD]
    cdef int nf = load_poly(fb, f)
    cdef int d, i, k, nfm, nv, nvv, nvvm, match
    cdef i64 ucount, vcount, ui, vi
    out = [IDENTITY]
    for d in range(1, genus + 1):
        ucount = 1
        for i in range(d):
            ucount *= p
            ub[i] = 0
        ub[d] = 1
        for ui in range(ucount):
            nfm = pmod(fmod, fb, nf, ub, d + 1, p)
            for i in range(d):
                vd[i] = 0
            for vi in range(ucount):
                nv = ptrim(vd, d)
                nvv = pmul(vv, vd, nv, vd, nv, p)
                nvvm = pmod(vvm, vv, nvv, ub, d + 1, p)
                match = 1 if nvvm == nfm else 0
                if match:
                    for k in range(nfm):
                        if vvm[k] != fmod[k]:
                            match = 0
                            break
                if match:
                    out.append((pack_poly(ub, d + 1), pack_poly(vd, nv)))
                # odometer step for v
                for k in range(d):
                    vd[k] += 1
                    if vd[k] == p:
                        vd[k] = 0
                    else:
                        break
            # odometer step for u (low digits only; ub[d] stays 1)
            for k in range(d):
                ub[k] += 1
                if ub[k] == p:
                    ub[k] = 0
                else:
                    break
    return out


cdef void cantor_add_c(i64 p, i64* fb, int nf,
                       i64* u1, int nu1, i64* v1, int nv1,
                       i64* u2, int nu2, i64* v2, int nv2,
                       i64* uo, int* nuo, i64* vo, int* nvo):
    cdef i64 g1[MAXD]
    cdef i64 e1[MAXD]
    cdef i64 e2[MAXD]
    cdef i64 vsum[MAXD]
    cdef i64 dd[MAXD]
    cdef i64 c1[MAXD]
    cdef i64 c2[MAXD]
    cdef i64 s1[MAXD]
    cdef i64 s2[MAXD]
    cdef i64 m1[MAXD]
    cdef i64 m2[MAXD]
    cdef i64 t1[MAXD]
    cdef i64 t2[MAXD]
    cdef i64 t3[MAXD]
    cdef i64 tt[MAXD]
    cdef i64 q[MAXD]
    cdef i64 r[MAXD]
    cdef i64 u[MAXD]
    cdef i64 v[MAXD]
    cdef int ng1, ne1, ne2, nvs, ndd, nc1, nc2, ns1, ns2
    cdef int nm1, nm2, nt1, nt2, nt3, ntt, nq, nr, nu, nv
    cdef int genus = (nf - 2) // 2
    cdef int i
    # composition
    pxgcd(g1, &ng1, e1, &ne1, e2, &ne2, u1, nu1, u2, nu2, p)
    nvs = padd(vsum, v1, nv1, v2, nv2, p)
    pxgcd(dd, &ndd, c1, &nc1, c2, &nc2, g1, ng1, vsum, nvs, p)
    ns1 = pmul(s1, c1, nc1, e1, ne1, p)
    ns2 = pmul(s2, c1, nc1, e2, ne2, p)
    nm1 = pmul(m1, u1, nu1, u2, nu2, p)
    nm2 = pmul(m2, dd, ndd, dd, ndd, p)
    pdivmod(u, &nu, r, &nr, m1, nm1, m2, nm2, p)
    # t = s1*u1*v2 + s2*u2*v1 + c2*(v1*v2 + f)
    nm1 = pmul(m1, s1, ns1, u1, nu1, p)
    nt1 = pmul(t1, m1, nm1, v2, nv2, p)
    nm1 = pmul(m1, s2, ns2, u2, nu2, p)
    nt2 = pmul(t2, m1, nm1, v1, nv1, p)
    nm1 = pmul(m1, v1, nv1, v2, nv2, p)
    nm2 = padd(m2, m1, nm1, fb, nf, p)
    nt3 = pmul(t3, c2, nc2, m2, nm2, p)
    ntt = padd(tt, t1, nt1, t2, nt2, p)
    ntt = padd(m1, tt, ntt, t3, nt3, p)
    pcopy(tt, m1, ntt)
    pdivmod(m2, &nm2, r, &nr, tt, ntt, dd, ndd, p)
    nv = pmod(v, m2, nm2, u, nu, p)
    # reduction
    while nu - 1 > genus:
        nm1 = pmul(m1, v, nv, v, nv, p)
        nm2 = psub(m2, fb, nf, m1, nm1, p)
        pdivmod(q, &nq, r, &nr, m2, nm2, u, nu, p)
        nu = pmonic(q, nq, p)
        pcopy(u, q, nu)
        for i in range(nv):
            if v[i] != 0:
                v[i] = p - v[i]
        nv = pmod(m1, v, nv, u, nu, p)
        pcopy(v, m1, nv)
    nu = pmonic(u, nu, p)
    pcopy(uo, u, nu)
    pcopy(vo, v, nv)
    nuo[0] = nu
    nvo[0] = nv


def cantor_add(long long p, tuple f, tuple d1, tuple d2):
    """Cantor composition + reduction for an odd-degree monic model."""
    cdef i64 fb[MAXD]
    cdef i64 u1[MAXD]
    cdef i64 v1[MAXD]
    cdef i64 u2[MAXD]
    cdef i64 v2[MAXD]
    cdef i64 uo[MAXD]
    cdef i64 vo[MAXD]
    cdef int nf = load_poly(fb, f)
    cdef int nu1 = load_poly(u1, d1[0])
    cdef int nv1 = load_poly(v1, d1[1])
    cdef int nu2 = load_poly(u2, d2[0])
    cdef int nv2 = load_poly(v2, d2[1])
    cdef int nuo, nvo
    cantor_add_c(p, fb, nf, u1, nu1, v1, nv1, u2, nu2, v2, nv2,
                 uo, &nuo, vo, &nvo)
    return (pack_poly(uo, nuo), pack_poly(vo, nvo))


def cantor_neg(long long p, tuple f, tuple div):
    cdef i64 ub[MAXD]
    cdef i64 vb[MAXD]
    cdef int nu = load_poly(ub, div[0])
    cdef int nv = load_poly(vb, div[1])
    cdef int i
    for i in range(nv):
        if vb[i] != 0:
            vb[i] = p - vb[i]
    return (pack_poly(ub, nu), pack_poly(vb, nv))


def scalar_mul(long long p, tuple f, tuple div, n):
    cdef i64 fb[MAXD]
    cdef i64 ua[MAXD]
    cdef i64 va[MAXD]
    cdef i64 ub[MAXD]
    cdef i64 vb[MAXD]
    cdef i64 ut[MAXD]
    cdef i64 vt[MAXD]
    cdef int nf = load_poly(fb, f)
    cdef int nua = 1, nva = 0
    cdef int nub, nvb, nut, nvt, i
    cdef long long m
    if n < 0:
        return scalar_mul(p, f, cantor_neg(p, f, div), -n)
    m = n
    ua[0] = 1
    nub = load_poly(ub, div[0])
    nvb = load_poly(vb, div[1])
    while m > 0:
        if m & 1:
            cantor_add_c(p, fb, nf, ua, nua, va, nva, ub, nub, vb, nvb,
                         ut, &nut, vt, &nvt)
            pcopy(ua, ut, nut)
            pcopy(va, vt, nvt)
            nua = nut
            nva = nvt
        m >>= 1
        if m > 0:
            cantor_add_c(p, fb, nf, ub, nub, vb, nvb, ub, nub, vb, nvb,
                         ut, &nut, vt, &nvt)
            pcopy(ub, ut, nut)
            pcopy(vb, vt, nvt)
            nub = nut
            nvb = nvt
    return (pack_poly(ua, nua), pack_poly(va, nva))
