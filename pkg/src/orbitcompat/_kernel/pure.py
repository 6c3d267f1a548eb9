"""Pure-Python Groebner engine.

Works on raw term lists so the hot loops never touch the public polynomial
wrappers.  A term is ``(key, exp, coeff)`` where ``key`` is the monomial's
sort key under the active order, ``exp`` the exponent tuple and ``coeff`` a
Python int.  A polynomial is a list of terms sorted descending by key and
kept primitive (integer content 1, positive leading coefficient), which
keeps the arithmetic fraction-free: reductions scale by leading coefficients
instead of dividing.

Orders are encoded as ``(kind, block)`` with kind 0 = lex, 1 = grevlex,
2 = block elimination (grevlex on the first ``block`` variables, then
grevlex on the rest).  All three keys are additive under monomial
multiplication, so products just add key tuples.

The compiled extension ``_speedups`` implements the same API; results are
bit-identical because the reduced Groebner basis is unique.
"""

from __future__ import annotations

from math import gcd
from operator import add, sub

from ..errors import ResourceLimitExceeded

BACKEND_NAME = "pure"

# Re-normalise integer content after this many reduction steps to keep
# coefficient growth in check without paying a gcd on every step.
_CONTENT_STRIDE = 8


def make_key(exp, kind, block):
    if kind == 0:
        return exp
    if kind == 1:
        return (sum(exp), *(-e for e in reversed(exp)))
    head = exp[:block]
    tail = exp[block:]
    return (
        sum(head),
        *(-e for e in reversed(head)),
        sum(tail),
        *(-e for e in reversed(tail)),
    )


def _attach_keys(pairs, kind, block):
    """[(exp, int)] -> engine poly, normalised primitive."""
    terms = [(make_key(e, kind, block), e, c) for e, c in pairs if c]
    terms.sort(key=lambda t: t[0], reverse=True)
    return _primitive(terms)


def _strip_keys(poly):
    return [(e, c) for _, e, c in poly]


def _content(terms):
    g = 0
    for _, _, c in terms:
        g = gcd(g, c)
        if g == 1:
            return 1
    return g


def _primitive(terms):
    """Divide out the content; flip signs so the leading coefficient is > 0."""
    if not terms:
        return terms
    g = _content(terms)
    if terms[0][2] < 0:
        g = -g
    if g != 1:
        terms = [(k, e, c // g) for k, e, c in terms]
    return terms


def _combine(ca, a, cb, b):
    """ca*a + cb*b for term lists sorted descending; result sorted, no zeros."""
    out = []
    append = out.append
    i, j, la, lb = 0, 0, len(a), len(b)
    while i < la and j < lb:
        ta = a[i]
        tb = b[j]
        ka = ta[0]
        kb = tb[0]
        if ka > kb:
            append((ka, ta[1], ca * ta[2]))
            i += 1
        elif kb > ka:
            append((kb, tb[1], cb * tb[2]))
            j += 1
        else:
            c = ca * ta[2] + cb * tb[2]
            if c:
                append((ka, ta[1], c))
            i += 1
            j += 1
    while i < la:
        ta = a[i]
        append((ta[0], ta[1], ca * ta[2]))
        i += 1
    while j < lb:
        tb = b[j]
        append((tb[0], tb[1], cb * tb[2]))
        j += 1
    return out


def _divides(a, b):
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _shift(poly, dkey, dexp):
    """x^dexp * poly (dkey = key of dexp, keys are additive)."""
    return [
        (tuple(map(add, k, dkey)), tuple(map(add, e, dexp)), c)
        for k, e, c in poly
    ]


def _reduce(f, basis, track_multiplier=False):
    """Fully reduce ``f`` modulo ``basis`` (fraction-free).

    Returns ``(tail, mult)`` with ``mult * f = (combination of basis) + tail``
    and no tail monomial divisible by any basis leading monomial.  When
    ``track_multiplier`` is false the tail is normalised primitive and mult
    is meaningless (callers that only need the remainder up to a scalar).
    """
    heads = [(g[0][1], g[0][2], g) for g in basis]
    tail = []
    h = list(f)
    i = 0
    mult = 1
    steps = 0
    while i < len(h):
        k0, e0, c0 = h[i]
        hit = None
        for ge, gc, g in heads:
            if _divides(ge, e0):
                hit = (ge, gc, g)
                break
        if hit is None:
            tail.append(h[i])
            i += 1
            continue
        ge, gc, g = hit
        dexp = tuple(map(sub, e0, ge))
        dkey = tuple(map(sub, k0, g[0][0]))
        h = _combine(gc, h[i:], -c0, _shift(g, dkey, dexp))
        i = 0
        if gc != 1:
            if tail:
                tail = [(k, e, c * gc) for k, e, c in tail]
            mult *= gc
        steps += 1
        if steps % _CONTENT_STRIDE == 0 and h:
            g0 = gcd(_content(h), _content(tail)) if tail else _content(h)
            if track_multiplier:
                g0 = gcd(g0, mult)
            if g0 > 1:
                h = [(k, e, c // g0) for k, e, c in h]
                tail = [(k, e, c // g0) for k, e, c in tail]
                if track_multiplier:
                    mult //= g0
    if not track_multiplier:
        return _primitive(tail), 1
    return tail, mult


def buchberger(gens, nvars, kind, block, max_pairs=200_000, max_degree=200):
    """Reduced Groebner basis of ``gens`` (list of [(exp, int)] term lists).

    Returns a list of primitive integer polynomials as [(exp, int)] lists,
    each sorted descending in the order, the basis sorted ascending by
    leading monomial.  Raises ResourceLimitExceeded past the caps.
    """
    polys = []
    for g in gens:
        p = _attach_keys(g, kind, block)
        if p:
            polys.append(p)
    if not polys:
        return []

    # Mutual pre-reduction of the inputs until stable; cheap and trims the
    # pair set considerably.
    while True:
        polys.sort(key=lambda p: p[0][0])
        nxt = []
        changed = False
        for i, p in enumerate(polys):
            others = nxt + polys[i + 1 :]
            if others:
                r, _ = _reduce(p, others)
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

    f = list(polys)  # every polynomial ever created; G and pairs hold indices

    def update(G, B, ih):
        # Gebauer-Moeller pair pruning, [Becker-Weispfenning] p. 230.
        h = f[ih]
        mh = h[0][1]
        C = set(G)
        D = set()
        while C:
            ig = C.pop()
            mg = f[ig][0][1]
            lcm_hg = tuple(map(max, mh, mg))

            def lcm_divides(ip):
                m = tuple(map(max, mh, f[ip][0][1]))
                return _divides(m, lcm_hg)

            if tuple(map(add, mh, mg)) == lcm_hg or (
                not any(lcm_divides(ip) for ip in C)
                and not any(lcm_divides(pr[1]) for pr in D)
            ):
                D.add((ih, ig))
        E = set()
        while D:
            ih2, ig = D.pop()
            mg = f[ig][0][1]
            lcm_hg = tuple(map(max, mh, mg))
            if tuple(map(add, mh, mg)) != lcm_hg:
                E.add((ih2, ig))
        B_new = set()
        while B:
            ig1, ig2 = B.pop()
            mg1 = f[ig1][0][1]
            mg2 = f[ig2][0][1]
            lcm12 = tuple(map(max, mg1, mg2))
            if (
                not _divides(mh, lcm12)
                or tuple(map(max, mg1, mh)) == lcm12
                or tuple(map(max, mg2, mh)) == lcm12
            ):
                B_new.add((ig1, ig2))
        B_new |= E
        G_new = {ig for ig in G if not _divides(mh, f[ig][0][1])}
        G_new.add(ih)
        return G_new, B_new

    G = set()
    CP = set()
    for i in range(len(f)):
        G, CP = update(G, CP, i)

    pairs_done = 0
    while CP:
        # normal strategy: smallest lcm in the order; index tie-break keeps
        # runs reproducible even though the reduced result is unique anyway
        best = None
        best_key = None
        for pr in CP:
            m = tuple(map(max, f[pr[0]][0][1], f[pr[1]][0][1]))
            kk = (make_key(m, kind, block), pr)
            if best_key is None or kk < best_key:
                best_key = kk
                best = pr
        CP.remove(best)
        pairs_done += 1
        if pairs_done > max_pairs:
            raise ResourceLimitExceeded(f"pair cap {max_pairs} exceeded")
        i1, i2 = best
        p1, p2 = f[i1], f[i2]
        e1, e2 = p1[0][1], p2[0][1]
        lcm_exp = tuple(map(max, e1, e2))
        c1, c2 = p1[0][2], p2[0][2]
        d = gcd(c1, c2)
        d1 = tuple(map(sub, lcm_exp, e1))
        d2 = tuple(map(sub, lcm_exp, e2))
        s = _combine(
            c2 // d,
            _shift(p1, make_key(d1, kind, block), d1),
            -(c1 // d),
            _shift(p2, make_key(d2, kind, block), d2),
        )
        if not s:
            continue
        divisors = sorted((f[ig] for ig in G), key=lambda p: p[0][0])
        r, _ = _reduce(s, divisors)
        if not r:
            continue
        if sum(r[0][1]) > max_degree:
            raise ResourceLimitExceeded(f"degree cap {max_degree} exceeded")
        f.append(r)
        G, CP = update(G, CP, len(f) - 1)

    # Minimalise: drop members whose leading monomial another member divides.
    chosen = sorted(G, key=lambda ig: f[ig][0][0])
    minimal = []
    for ig in chosen:
        e = f[ig][0][1]
        if any(_divides(f[jg][0][1], e) for jg in minimal):
            continue
        minimal = [jg for jg in minimal if not _divides(e, f[jg][0][1])]
        minimal.append(ig)

    # Tail-reduce each member against the rest for the unique reduced basis.
    result = []
    mins = [f[ig] for ig in minimal]
    for idx, p in enumerate(mins):
        others = mins[:idx] + mins[idx + 1 :]
        if others:
            r, _ = _reduce(p, others)
        else:
            r = p
        result.append(r)
    result.sort(key=lambda p: p[0][0])
    return [_strip_keys(p) for p in result]


def normal_form(fpairs, basis_pairs, nvars, kind, block):
    """Exact remainder of f modulo a (Groebner) basis.

    Input and basis are [(exp, int)] term lists; returns ``(tail, mult)``
    with the exact normal form equal to tail / mult.  The input is not
    content-normalised: the multiplier accounts for everything.
    """
    terms = [(make_key(e, kind, block), e, c) for e, c in fpairs if c]
    terms.sort(key=lambda t: t[0], reverse=True)
    basis = []
    for b in basis_pairs:
        p = _attach_keys(b, kind, block)
        if p:
            basis.append(p)
    if not terms:
        return [], 1
    if not basis:
        return _strip_keys(terms), 1
    tail, mult = _reduce(terms, basis, track_multiplier=True)
    return _strip_keys(tail), mult
