# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled Groebner engine.

Same algorithm and data layout as the pure-Python twin in ``pure.py``:
fraction-free reduction on (key, exp, coeff) term lists, Gebauer-Moeller
pair pruning, normal pair selection, final inter-reduction.  Exponents and
order keys are small C longs (the degree cap guarantees no overflow);
coefficients stay arbitrary-precision Python ints.  Both engines return the
identical reduced basis, which the parity tests assert.
"""

from math import gcd

from ..errors import ResourceLimitExceeded

BACKEND_NAME = "cython"

cdef long _CONTENT_STRIDE = 8


cdef inline tuple _tadd(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef list out = [0] * n
    for i in range(n):
        out[i] = <long> a[i] + <long> b[i]
    return tuple(out)


cdef inline tuple _tsub(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef list out = [0] * n
    for i in range(n):
        out[i] = <long> a[i] - <long> b[i]
    return tuple(out)


cdef inline tuple _tmax(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef list out = [0] * n
    cdef long x, y
    for i in range(n):
        x = <long> a[i]
        y = <long> b[i]
        out[i] = x if x >= y else y
    return tuple(out)


cdef inline bint _divides(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    for i in range(n):
        if <long> a[i] > <long> b[i]:
            return False
    return True


cdef inline long _deg(tuple a):
    cdef Py_ssize_t i, n = len(a)
    cdef long s = 0
    for i in range(n):
        s += <long> a[i]
    return s


def make_key(exp, long kind, long block):
    return _make_key(tuple(exp), kind, block)


cdef tuple _make_key(tuple exp, long kind, long block):
    cdef Py_ssize_t i, n = len(exp)
    cdef list out
    if kind == 0:
        return exp
    if kind == 1:
        out = [0] * (n + 1)
        out[0] = _deg(exp)
        for i in range(n):
            out[i + 1] = -(<long> exp[n - 1 - i])
        return tuple(out)
    out = [0] * (n + 2)
    out[0] = 0
    cdef long s = 0
    for i in range(block):
        s += <long> exp[i]
    out[0] = s
    for i in range(block):
        out[1 + i] = -(<long> exp[block - 1 - i])
    s = 0
    for i in range(block, n):
        s += <long> exp[i]
    out[1 + block] = s
    for i in range(n - block):
        out[2 + block + i] = -(<long> exp[n - 1 - i])
    return tuple(out)


cdef list _attach_keys(list pairs, long kind, long block):
    cdef list terms = []
    for e, c in pairs:
        if c:
            te = tuple(e)
            terms.append((_make_key(te, kind, block), te, c))
    terms.sort(key=_key_of, reverse=True)
    return _primitive(terms)


def _key_of(t):
    return (<tuple> t)[0]


cdef object _content(list terms):
    cdef object g = 0
    for t in terms:
        g = gcd(g, (<tuple> t)[2])
        if g == 1:
            return g
    return g


cdef list _primitive(list terms):
    if not terms:
        return terms
    cdef object g = _content(terms)
    if (<tuple> terms[0])[2] < 0:
        g = -g
    if g == 1:
        return terms
    cdef list out = []
    for t in terms:
        tt = <tuple> t
        out.append((tt[0], tt[1], tt[2] // g))
    return out


cdef list _strip_keys(list poly):
    cdef list out = []
    for t in poly:
        tt = <tuple> t
        out.append((tt[1], tt[2]))
    return out


cdef list _combine(object ca, list a, object cb, list b):
    """ca*a + cb*b, both sorted descending by key; merged, zero-free."""
    cdef list out = []
    cdef Py_ssize_t i = 0, j = 0, la = len(a), lb = len(b)
    cdef tuple ta, tb
    cdef object c
    while i < la and j < lb:
        ta = <tuple> a[i]
        tb = <tuple> b[j]
        if ta[0] > tb[0]:
            out.append((ta[0], ta[1], ca * ta[2]))
            i += 1
        elif tb[0] > ta[0]:
            out.append((tb[0], tb[1], cb * tb[2]))
            j += 1
        else:
            c = ca * ta[2] + cb * tb[2]
            if c:
                out.append((ta[0], ta[1], c))
            i += 1
            j += 1
    while i < la:
        ta = <tuple> a[i]
        out.append((ta[0], ta[1], ca * ta[2]))
        i += 1
    while j < lb:
        tb = <tuple> b[j]
        out.append((tb[0], tb[1], cb * tb[2]))
        j += 1
    return out


cdef list _shift(list poly, tuple dkey, tuple dexp, object c):
    """c * x^dexp * poly."""
    cdef list out = []
    cdef tuple t
    for item in poly:
        t = <tuple> item
        out.append((_tadd(t[0], dkey), _tadd(t[1], dexp), c * t[2]))
    return out


cdef tuple _reduce(list f, list basis, bint track_multiplier):
    cdef list heads = []
    cdef tuple g0t
    for g in basis:
        g0t = <tuple> (<list> g)[0]
        heads.append((g0t[1], g0t[2], g))
    cdef list tail = []
    cdef list h = list(f)
    cdef Py_ssize_t i = 0
    cdef object mult = 1
    cdef long steps = 0
    cdef tuple t0, ge_gc_g
    cdef tuple k0, e0, ge, dexp, dkey
    cdef object c0, gc, gfound, g0c
    cdef list g_list, scaled
    while i < len(h):
        t0 = <tuple> h[i]
        k0 = <tuple> t0[0]
        e0 = <tuple> t0[1]
        c0 = t0[2]
        gfound = None
        for head in heads:
            ge_gc_g = <tuple> head
            if _divides(<tuple> ge_gc_g[0], e0):
                gfound = ge_gc_g
                break
        if gfound is None:
            tail.append(t0)
            i += 1
            continue
        ge = <tuple> (<tuple> gfound)[0]
        gc = (<tuple> gfound)[1]
        g_list = <list> (<tuple> gfound)[2]
        dexp = _tsub(e0, ge)
        dkey = _tsub(k0, <tuple> (<tuple> g_list[0])[0])
        h = _combine(gc, h[i:], -1, _shift(g_list, dkey, dexp, c0))
        i = 0
        if gc != 1:
            if tail:
                scaled = []
                for t in tail:
                    tt = <tuple> t
                    scaled.append((tt[0], tt[1], tt[2] * gc))
                tail = scaled
            mult = mult * gc
        steps += 1
        if steps % _CONTENT_STRIDE == 0 and h:
            g0c = _content(h)
            if tail:
                g0c = gcd(g0c, _content(tail))
            if track_multiplier:
                g0c = gcd(g0c, mult)
            if g0c > 1:
                h = _divide_all(h, g0c)
                tail = _divide_all(tail, g0c)
                if track_multiplier:
                    mult = mult // g0c
    if not track_multiplier:
        return _primitive(tail), 1
    return tail, mult


cdef list _divide_all(list terms, object g):
    cdef list out = []
    for t in terms:
        tt = <tuple> t
        out.append((tt[0], tt[1], tt[2] // g))
    return out


def buchberger(gens, nvars, kind, block, max_pairs=200_000, max_degree=200):
    """Reduced Groebner basis; same contract as the pure engine."""
    cdef long ckind = kind, cblock = block
    cdef list polys = []
    cdef list p
    for g in gens:
        p = _attach_keys(list(g), ckind, cblock)
        if p:
            polys.append(p)
    if not polys:
        return []

    cdef list nxt
    cdef bint changed
    cdef Py_ssize_t i
    while True:
        polys.sort(key=_lead_key)
        nxt = []
        changed = False
        for i in range(len(polys)):
            p = <list> polys[i]
            others = nxt + polys[i + 1 :]
            if others:
                r, _ = _reduce(p, others, False)
            else:
                r = p
            if r:
                nxt.append(r)
            if r != p:
                changed = True
        polys = nxt
        if not changed:
            break
        if not polys:
            return []

    cdef list f = list(polys)
    G = set()
    CP = set()
    for i in range(len(f)):
        G, CP = _update(f, G, CP, i, ckind, cblock)

    cdef long pairs_done = 0
    cdef tuple lcm_exp, d1, d2
    cdef object c1, c2, dcoef
    while CP:
        best = None
        best_key = None
        for pr in CP:
            m = _tmax((<list> f[pr[0]])[0][1], (<list> f[pr[1]])[0][1])
            kk = (_make_key(m, ckind, cblock), pr)
            if best_key is None or kk < best_key:
                best_key = kk
                best = pr
        CP.remove(best)
        pairs_done += 1
        if pairs_done > max_pairs:
            raise ResourceLimitExceeded(f"pair cap {max_pairs} exceeded")
        i1, i2 = best
        p1 = <list> f[i1]
        p2 = <list> f[i2]
        e1 = (<tuple> p1[0])[1]
        e2 = (<tuple> p2[0])[1]
        lcm_exp = _tmax(e1, e2)
        c1 = (<tuple> p1[0])[2]
        c2 = (<tuple> p2[0])[2]
        dcoef = gcd(c1, c2)
        d1 = _tsub(lcm_exp, e1)
        d2 = _tsub(lcm_exp, e2)
        s = _combine(
            1,
            _shift(p1, _make_key(d1, ckind, cblock), d1, c2 // dcoef),
            -1,
            _shift(p2, _make_key(d2, ckind, cblock), d2, c1 // dcoef),
        )
        if not s:
            continue
        divisors = sorted((f[ig] for ig in G), key=_lead_key)
        r, _ = _reduce(s, divisors, False)
        if not r:
            continue
        if _deg((<tuple> r[0])[1]) > max_degree:
            raise ResourceLimitExceeded(f"degree cap {max_degree} exceeded")
        f.append(r)
        G, CP = _update(f, G, CP, len(f) - 1, ckind, cblock)

    chosen = sorted(G, key=lambda ig: (<list> f[ig])[0][0])
    cdef list minimal = []
    for ig in chosen:
        e = (<tuple> (<list> f[ig])[0])[1]
        if any(_divides((<tuple> (<list> f[jg])[0])[1], e) for jg in minimal):
            continue
        minimal = [
            jg
            for jg in minimal
            if not _divides(e, (<tuple> (<list> f[jg])[0])[1])
        ]
        minimal.append(ig)

    cdef list result = []
    cdef list mins = [f[ig] for ig in minimal]
    for i in range(len(mins)):
        others = mins[:i] + mins[i + 1 :]
        if others:
            r, _ = _reduce(<list> mins[i], others, False)
        else:
            r = mins[i]
        result.append(r)
    result.sort(key=_lead_key)
    return [_strip_keys(<list> p) for p in result]


def _lead_key(p):
    return (<tuple> (<list> p)[0])[0]


cdef tuple _update(list f, set G, set B, Py_ssize_t ih, long kind, long block):
    # Gebauer-Moeller pair pruning, [Becker-Weispfenning] p. 230
    cdef list h = <list> f[ih]
    cdef tuple mh = (<tuple> h[0])[1]
    C = set(G)
    D = set()
    cdef tuple mg, lcm_hg
    while C:
        ig = C.pop()
        mg = (<tuple> (<list> f[ig])[0])[1]
        lcm_hg = _tmax(mh, mg)
        if _tadd(mh, mg) == lcm_hg:
            D.add((ih, ig))
            continue
        keep = True
        for ip in C:
            if _divides(_tmax(mh, (<tuple> (<list> f[ip])[0])[1]), lcm_hg):
                keep = False
                break
        if keep:
            for pr in D:
                if _divides(
                    _tmax(mh, (<tuple> (<list> f[pr[1]])[0])[1]), lcm_hg
                ):
                    keep = False
                    break
        if keep:
            D.add((ih, ig))
    E = set()
    while D:
        pr = D.pop()
        mg = (<tuple> (<list> f[pr[1]])[0])[1]
        if _tadd(mh, mg) != _tmax(mh, mg):
            E.add(pr)
    B_new = set()
    cdef tuple mg1, mg2, lcm12
    while B:
        prb = B.pop()
        ig1, ig2 = prb
        mg1 = (<tuple> (<list> f[ig1])[0])[1]
        mg2 = (<tuple> (<list> f[ig2])[0])[1]
        lcm12 = _tmax(mg1, mg2)
        if (
            not _divides(mh, lcm12)
            or _tmax(mg1, mh) == lcm12
            or _tmax(mg2, mh) == lcm12
        ):
            B_new.add(prb)
    B_new |= E
    G_new = set()
    for ig in G:
        if not _divides(mh, (<tuple> (<list> f[ig])[0])[1]):
            G_new.add(ig)
    G_new.add(ih)
    return G_new, B_new


def normal_form(fpairs, basis_pairs, nvars, kind, block):
    """Exact remainder as (tail, multiplier); same contract as pure."""
    cdef long ckind = kind, cblock = block
    cdef list terms = []
    for e, c in fpairs:
        if c:
            te = tuple(e)
            terms.append((_make_key(te, ckind, cblock), te, c))
    terms.sort(key=_key_of, reverse=True)
    cdef list basis = []
    cdef list p
    for b in basis_pairs:
        p = _attach_keys(list(b), ckind, cblock)
        if p:
            basis.append(p)
    if not terms:
        return [], 1
    if not basis:
        return _strip_keys(terms), 1
    tail, mult = _reduce(terms, basis, True)
    return _strip_keys(<list> tail), mult
