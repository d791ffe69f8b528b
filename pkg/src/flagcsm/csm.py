"""Demazure-Lusztig operators, CSM class representatives for Schubert
cells, expansion of classes in the CSM basis, and the brute-force product
oracle used to verify every closed-form rule.

A CSM class is represented by a polynomial obtained from the point class
(the top double Schubert polynomial) by a chain of Demazure-Lusztig
operators.  Representatives are only well defined modulo the symmetric
ideal, so nothing here ever asserts equality of raw representatives:
all comparisons go through basis coefficients.
"""

from __future__ import annotations

from .exact import MPoly, divide_exact_linear, ring
from .perm import Permutation
from .schubert import CohClass, double_schubert, expand_in_schubert, localize


def dl_operator(f, i, n):
    """T_i = -s_i + d_i: negated swap of x_i, x_{i+1} plus the divided
    difference.  An involution satisfying the braid relations.

    Fused single pass over the terms: each monomial emits its divided-
    difference summands and its negated swap at once."""
    rg = ring(n)
    a, b = rg.x_slot(i), rg.x_slot(i + 1)
    out = {}
    get = out.get
    for e, c in f.terms.items():
        p, q = e[a], e[b]
        if p == q:
            key = e
        else:
            if p > q:
                lo, hi, sgn = q, p, c
            else:
                lo, hi, sgn = p, q, -c
            base = list(e)
            tot = p + q - 1
            for s in range(lo, hi):
                base[a] = s
                base[b] = tot - s
                key = tuple(base)
                v = get(key, 0) + sgn
                if v:
                    out[key] = v
                elif key in out:
                    del out[key]
            base[a] = q
            base[b] = p
            key = tuple(base)
        v = get(key, 0) - c
        if v:
            out[key] = v
        elif key in out:
            del out[key]
    r = MPoly(f.nvars)
    r.terms = out
    return r


_CSM_CACHE = {}


def csm_class(w):
    """Polynomial representative of the equivariant CSM class of the
    Schubert cell of w: transport the point class along Demazure-Lusztig
    operators for any word of w^-1 w0.  Cached per n."""
    n = w.n
    cache = _CSM_CACHE.setdefault(n, {})
    hit = cache.get(w)
    if hit is not None:
        return hit
    w0 = Permutation.longest(n)
    cur = cache.get(w0)
    if cur is None:
        cur = double_schubert(w0)
        cache[w0] = cur
    word = w.inverse().compose(w0).reduced_word()
    # T_u f applies the last letter first; track the cell as we go
    node = w0
    for i in reversed(word):
        cur = dl_operator(cur, i, n)
        node = node.compose(Permutation.transposition(i, i + 1, n))
        cache.setdefault(node, cur)
    if node != w:
        raise AssertionError("operator chain ended at %s, wanted %s" % (node, w))
    return cur


_PACK_BITS = 5
_PACK_MAX = 15  # headroom: localization sums two exponents per slot


def _pack_terms(p):
    """Exponent tuples packed into ints, 5 bits per slot; None when some
    exponent is too large for the packed form."""
    out = {}
    for e, c in p.terms.items():
        key = 0
        for i, d in enumerate(e):
            if d > _PACK_MAX:
                return None
            key |= d << (_PACK_BITS * i)
        out[key] = c
    return out


def _unpack_key(key, nvars):
    mask = (1 << _PACK_BITS) - 1
    return tuple((key >> (_PACK_BITS * i)) & mask for i in range(nvars))


def _dl_packed(terms, a, b):
    """The Demazure-Lusztig kernel on packed exponent keys."""
    bits = _PACK_BITS
    mask = (1 << bits) - 1
    sa, sb = bits * a, bits * b
    out = {}
    get = out.get
    for key, c in terms.items():
        p = (key >> sa) & mask
        q = (key >> sb) & mask
        if p == q:
            k2 = key
        else:
            base = key - (p << sa) - (q << sb)
            if p > q:
                lo, hi, sgn = q, p, c
            else:
                lo, hi, sgn = p, q, -c
            tot = p + q - 1
            k = base + (lo << sa) + ((tot - lo) << sb)
            step = (1 << sa) - (1 << sb)
            for _ in range(lo, hi):
                v = get(k, 0) + sgn
                if v:
                    out[k] = v
                elif k in out:
                    del out[k]
                k += step
            k2 = base + (q << sa) + (p << sb)
        v = get(k2, 0) - c
        if v:
            out[k2] = v
        elif k2 in out:
            del out[k2]
    return out


def csm_class_nonequivariant(w):
    """The t = 0 specialization of the CSM representative."""
    n = w.n
    rg = ring(n)
    return csm_class(w).specialize({rg.t_slot(i): 0 for i in range(1, n + 1)})


def _one_plus_root_factors(n):
    rg = ring(n)
    return [rg.one + rg.t(i) - rg.t(j)
            for i in range(1, n + 1) for j in range(i + 1, n + 1)]


def _min_left_descent(w):
    inv = w.inverse()
    for i in range(1, w.n):
        if inv(i) > inv(i + 1):
            return i
    return None


def expand_in_csm(f, n, equivariant=True):
    """Coefficients c^w(t) with f = sum c^w csm(w) modulo the symmetric
    ideal.

    Walks a spanning tree of left multiplications in weak order, so each
    permutation costs one operator application; the coefficient at w is
    the identity-localization of T_w(f), divided exactly by the product
    of all 1 + t_i - t_j.  In the nonequivariant case (f free of t) the
    divisor is 1 and localization is evaluation at x = 0."""
    rg = ring(n)
    out = CohClass("csm", equivariant)
    factors = _one_plus_root_factors(n) if equivariant else None
    idperm = Permutation.identity(n)
    bits = _PACK_BITS
    xmask = sum(((1 << bits) - 1) << (bits * i) for i in range(n))

    def coefficient_packed(terms):
        if equivariant:
            # x_i -> t_i is one shift: the x block lands on the t block
            loc = {}
            get = loc.get
            for key, c in terms.items():
                head = key & xmask
                k = (key - head) + (head << (bits * n)) if head else key
                v = get(k, 0) + c
                if v:
                    loc[k] = v
                elif k in loc:
                    del loc[k]
            if not loc:
                return None
            val = MPoly(rg.nvars)
            val.terms = {_unpack_key(k, rg.nvars): c for k, c in loc.items()}
            for form in factors:
                val = divide_exact_linear(val, form)
            return val
        const = 0
        for key, c in terms.items():
            if not key & xmask:
                if key:
                    raise ValueError("nonequivariant expansion needs t-free input")
                const += c
        return const if const else None

    def coefficient_poly(fw):
        if equivariant:
            val = localize(fw, idperm)
            if val.is_zero():
                return None
            for form in factors:
                val = divide_exact_linear(val, form)
            return val
        val = fw.specialize({rg.x_slot(i): 0 for i in range(1, n + 1)})
        if val.is_zero():
            return None
        return val.constant_value()

    packed = _pack_terms(f)

    def rec(w, fw):
        if packed is not None:
            c = coefficient_packed(fw)
        else:
            c = coefficient_poly(fw)
        if c is not None:
            out.add(w, c if equivariant else rg.const(c))
        lw = w.length()
        for i in range(1, n):
            w2 = Permutation.transposition(i, i + 1, n).compose(w)
            if w2.length() == lw + 1 and _min_left_descent(w2) == i:
                if packed is not None:
                    child = _dl_packed(fw, rg.x_slot(i), rg.x_slot(i + 1))
                else:
                    child = dl_operator(fw, i, n)
                rec(w2, child)

    rec(Permutation.identity(n), packed if packed is not None else f)
    return out


def oracle_product(u, g, basis, equivariant=True):
    """Brute-force product: multiply the representative of u's class (CSM
    or Schubert) by g as raw polynomials, then expand in the requested
    basis.  The independent verifier for every closed-form rule."""
    n = u.n
    rg = ring(n)
    if basis == "csm":
        if equivariant:
            return expand_in_csm(csm_class(u) * g, n, True)
        g0 = g.specialize({rg.t_slot(i): 0 for i in range(1, n + 1)})
        return expand_in_csm(csm_class_nonequivariant(u) * g0, n, False)
    if basis == "schubert":
        got = expand_in_schubert(double_schubert(u) * g, n)
        return got if equivariant else got.specialize_t0()
    raise ValueError("basis must be 'csm' or 'schubert'")
