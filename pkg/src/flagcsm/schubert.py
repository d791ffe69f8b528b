"""Double Schubert polynomials, divided-difference operators, fixed-point
localization, and expansion of equivariant classes in the Schubert basis.

Expansion works by triangular interpolation over the torus-fixed points:
processing permutations along a linear extension of Bruhat order, each
coefficient is the residual localization divided (exactly) by the diagonal
value, which is a product of linear forms t_i - t_j.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .exact import MPoly, divide_exact_linear, divided_difference, ring
from .perm import Permutation, all_permutations, coset_decompose


@dataclass
class CohClass:
    """A cohomology class as a finite basis-element -> coefficient map.

    Coefficients are polynomials in t alone; in the nonequivariant case
    they are constants.  Zero coefficients are never stored."""

    basis: str  # 'schubert' or 'csm'
    equivariant: bool
    coeffs: dict = field(default_factory=dict)

    def add(self, w, poly):
        cur = self.coeffs.get(w)
        val = poly if cur is None else cur + poly
        if isinstance(val, MPoly) and val.is_zero():
            self.coeffs.pop(w, None)
        elif not isinstance(val, MPoly) and val == 0:
            self.coeffs.pop(w, None)
        else:
            self.coeffs[w] = val

    def items_sorted(self):
        return sorted(self.coeffs.items(), key=lambda kv: kv[0].oneline)

    def specialize_t0(self):
        out = CohClass(self.basis, False)
        for w, c in self.coeffs.items():
            if isinstance(c, MPoly):
                n = (c.nvars - 2) // 2
                rg = ring(n)
                c = c.specialize({rg.t_slot(i): 0 for i in range(1, n + 1)})
            out.add(w, c)
        return out

    def __eq__(self, other):
        if not isinstance(other, CohClass):
            return NotImplemented
        return (self.basis == other.basis
                and self.equivariant == other.equivariant
                and self.coeffs == other.coeffs)


def demazure_ab(f, a, b, n):
    """The divided difference (f - f with x_a, x_b swapped)/(x_a - x_b)."""
    rg = ring(n)
    return divided_difference(f, rg.x_slot(a), rg.x_slot(b))


def demazure_i(f, i, n):
    return demazure_ab(f, i, i + 1, n)


def localize(f, w):
    """Restriction to the fixed point of w: substitute x_i -> t_{w(i)}.

    Direct exponent surgery: the x-exponent of slot i is added onto the
    t-exponent of slot w(i)."""
    n = w.n
    perm = w.oneline
    zeros = (0,) * n
    out = {}
    get = out.get
    for e, c in f.terms.items():
        head = e[:n]
        if any(head):
            tail = list(e[n:2 * n])
            for i, d in enumerate(head):
                if d:
                    tail[perm[i] - 1] += d
            key = zeros + tuple(tail) + e[2 * n:]
        else:
            key = e
        v = get(key, 0) + c
        if v:
            out[key] = v
        elif key in out:
            del out[key]
    r = MPoly(f.nvars)
    r.terms = out
    return r


_SCHUB_CACHE = {}


def _longest_schubert(n):
    rg = ring(n)
    out = rg.one
    for i in range(1, n + 1):
        for j in range(1, n + 1 - i):
            out = out * (rg.x(i) - rg.t(j))
    return out


def _grassmannian_tableau_schubert(w, k):
    """Double Schubert polynomial of a Grassmannian permutation with
    descent at k, as the factorial Schur sum over semistandard tableaux:
    each box (i, j) filled with v contributes (x_v - t_{v+j-i}).

    Equivalent to the divided-difference chain but independent of n!, so
    usable for the large-n localizations in the rim hook machinery."""
    from .symfun import _ssyt

    n = w.n
    rg = ring(n)
    lam, _ = coset_decompose(w, k)
    out = rg.zero
    for tab in _ssyt(lam, k):
        term = rg.one
        for i, row in enumerate(tab, start=1):
            for j, v in enumerate(row, start=1):
                term = term * (rg.x(v) - rg.t(v + j - i))
        out = out + term
    return out


def double_schubert(w):
    """The double Schubert polynomial of w, from the longest element by
    divided differences along a reduced word; cached per n.

    Grassmannian permutations in large symmetric groups bypass the chain
    through the (huge) top polynomial via the tableau formula."""
    n = w.n
    cache = _SCHUB_CACHE.setdefault(n, {})
    hit = cache.get(w)
    if hit is not None:
        return hit
    if n >= 6:
        desc = w.descents()
        if not desc:
            val = ring(n).one
            cache[w] = val
            return val
        if len(desc) == 1:
            val = _grassmannian_tableau_schubert(w, desc[0])
            cache[w] = val
            return val
    w0 = Permutation.longest(n)
    cur = cache.get(w0)
    if cur is None:
        cur = _longest_schubert(n)
        cache[w0] = cur
    v = w0.compose(w)  # w = w0 . v, length-complementary
    node = w0
    for i in v.reduced_word():
        node = node.compose(Permutation.transposition(i, i + 1, n))
        nxt = cache.get(node)
        if nxt is None:
            nxt = demazure_i(cur, i, n)
            cache[node] = nxt
        cur = nxt
    return cur


def schubert_diagonal_factors(u):
    """The localization S_u(ut, t) as its forced list of linear factors
    t_{u(a)} - t_{u(b)}, one per inversion pair of u."""
    rg = ring(u.n)
    out = []
    for a in range(1, u.n + 1):
        for b in range(a + 1, u.n + 1):
            if u(a) > u(b):
                out.append(rg.t(u(a)) - rg.t(u(b)))
    return out


_LOC_TABLE = {}


def _schubert_localization(n, v, u):
    """Cached S_v(ut, t)."""
    table = _LOC_TABLE.setdefault(n, {})
    key = (v, u)
    hit = table.get(key)
    if hit is None:
        hit = localize(double_schubert(v), u)
        table[key] = hit
    return hit


def expand_in_schubert(f, n):
    """Coefficients c_w(t) with f = sum c_w S_w(x,t) modulo the symmetric
    ideal, by interpolation over fixed points in a linear extension of
    Bruhat order.  Divisions by the diagonal factors must be exact."""
    coeffs = {}
    for u in all_permutations(n):
        val = localize(f, u)
        for v, cv in coeffs.items():
            sv = _schubert_localization(n, v, u)
            if not sv.is_zero():
                val = val - cv * sv
        if val.is_zero():
            continue
        for form in schubert_diagonal_factors(u):
            val = divide_exact_linear(val, form)
        coeffs[u] = val
    out = CohClass("schubert", True)
    for w, c in coeffs.items():
        out.add(w, c)
    return out


def giambelli_hook(alpha, beta, k, n):
    """A representative of the Schubert class of the hook-shape
    Grassmannian permutation built from hook Schur polynomials: the
    x-free term is the single Schubert polynomial of the inverse
    permutation evaluated at -t, and each smaller hook contributes an
    e/h correction at negated t-variables."""
    from .perm import grassmannian_from_partition
    from .symfun import complete_sym, elem_sym, schur_hook, t_range, x_range

    lam = (alpha + 1,) + (1,) * beta
    w_hook = grassmannian_from_partition(lam, k, n)  # raises on overflow
    rg = ring(n)

    single = double_schubert(w_hook.inverse())
    single = single.specialize({rg.t_slot(i): 0 for i in range(1, n + 1)})
    single = single.substitute({rg.x_slot(i): -rg.t(i) for i in range(1, n + 1)})

    out = single
    for a2 in range(alpha + 1):
        for b2 in range(beta + 1):
            out = out + (schur_hook(n, a2, b2, x_range(k))
                         * elem_sym(n, alpha - a2, t_range(k + alpha), sign=-1)
                         * complete_sym(n, beta - b2, t_range(k - beta), sign=-1))
    return out


def column_perm(k, r, n):
    """The Grassmannian permutation of the one-column partition (1^r)
    with descent at k."""
    from .perm import grassmannian_from_partition

    return grassmannian_from_partition((1,) * r, k, n)


def row_perm(k, r, n):
    """The Grassmannian permutation of the one-row partition (r) with
    descent at k."""
    from .perm import grassmannian_from_partition

    return grassmannian_from_partition((r,), k, n)


def molev_class(kind, k, r, n):
    """Chern/Segre-type representatives of the one-column and one-row
    Grassmannian Schubert classes, produced in both displayed forms and
    asserted equal:

      column: sum over 1<=i_1<...<i_r<=k of prod (x_{i_j} - t_{i_j-j+1})
            = sum_{i+j=r} e_i(x_[k]) h_j(-t_[k-r+1])
      row:    sum over 1<=i_1<=...<=i_r<=k of prod (x_{i_j} - t_{i_j+j-1})
            = sum_{i+j=r} h_i(x_[k]) e_j(-t_[k+r-1])
    """
    from itertools import combinations, combinations_with_replacement

    from .symfun import complete_sym, elem_sym, t_range, x_range

    rg = ring(n)
    if kind == "column":
        if r > k or k >= n:
            raise ValueError("no column permutation c[%d,%d] in S_%d" % (k, r, n))
        direct = rg.zero
        for idx in combinations(range(1, k + 1), r):
            term = rg.one
            for j, i in enumerate(idx, start=1):
                term = term * (rg.x(i) - rg.t(i - j + 1))
            direct = direct + term
        eh = rg.zero
        for i in range(r + 1):
            eh = eh + elem_sym(n, i, x_range(k)) \
                * complete_sym(n, r - i, t_range(k - r + 1), sign=-1)
    elif kind == "row":
        if k + r > n:
            raise ValueError("no row permutation c'[%d,%d] in S_%d" % (k, r, n))
        direct = rg.zero
        for idx in combinations_with_replacement(range(1, k + 1), r):
            term = rg.one
            for j, i in enumerate(idx, start=1):
                term = term * (rg.x(i) - rg.t(i + j - 1))
            direct = direct + term
        eh = rg.zero
        for i in range(r + 1):
            eh = eh + complete_sym(n, i, x_range(k)) \
                * elem_sym(n, r - i, t_range(k + r - 1), sign=-1)
    else:
        raise ValueError("kind must be 'column' or 'row'")
    if direct != eh:
        raise AssertionError("the two displayed forms disagree for %s[%d,%d]"
                             % (kind, k, r))
    return direct
