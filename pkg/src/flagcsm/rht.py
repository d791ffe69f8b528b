"""Standard r-rim-hook tableaux counted three independent ways:

1. direct enumeration by recursive hook stripping;
2. an exact limit, at a primitive r-th root of unity, of the ratio of
   Schubert-class localizations specialized at t_i = z^i;
3. the major-index generating function of standard Young tableaux
   evaluated at the root of unity;

plus the hook-length quotient formula for straight shapes.  All three
agree shape by shape; disagreement aborts, since each method checks the
other two.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .exact import (
    CycloElt,
    ExactnessError,
    UPoly,
    limit_ratio_at_root,
    ring,
)
from .grassmann import (
    contains,
    normalize_partition,
    rim_hook_removals,
)
from .perm import grassmannian_from_partition
from .schubert import double_schubert, localize


@dataclass(frozen=True)
class RimHookTableau:
    """A chain of partitions from the inner shape to the outer one, each
    step adding a rim hook of size exactly r; carries the summed height."""

    chain: tuple
    r: int
    total_height: int


def _hook_height(outer, inner):
    inner = tuple(inner) + (0,) * (len(outer) - len(inner))
    rows = [i for i in range(len(outer)) if outer[i] > inner[i]]
    return max(rows) - min(rows)


def enumerate_rht(Lam, lam, r):
    """All standard r-rim-hook tableaux of the skew shape, by stripping
    r-hooks from the outer shape."""
    Lam = normalize_partition(Lam)
    lam = normalize_partition(lam)
    if not contains(Lam, lam):
        raise ValueError("inner shape not contained in outer")
    size = sum(Lam) - sum(lam)
    if size % r:
        raise ValueError("skew size %d not divisible by r=%d" % (size, r))
    out = []

    def strip(cur, suffix, height):
        if sum(cur) == sum(lam):
            if cur == lam:
                out.append(RimHookTableau(
                    chain=(lam,) + suffix, r=r, total_height=height))
            return
        for mu in rim_hook_removals(cur, r):
            if contains(mu, lam):
                strip(mu, (cur,) + suffix, height + _hook_height(cur, mu))

    strip(Lam, (), 0)
    return out


def rht_sign(Lam, lam, r):
    """(-1)^height common to every tableau of the shape (their parities
    agree, asserted during enumeration); 0 when no tableau exists."""
    tabs = enumerate_rht(Lam, lam, r)
    if not tabs:
        return 0
    parity = tabs[0].total_height % 2
    if any(t.total_height % 2 != parity for t in tabs):
        raise AssertionError("height parity differs between tableaux")
    return -1 if parity else 1


def _ambient(Lam, k=None, n=None):
    Lam = normalize_partition(Lam)
    if k is None:
        k = max(len(Lam), 1)
    if n is None:
        n = k + (Lam[0] if Lam else 1)
    return k, n


def y_poly(lam, Lam, k=None, n=None):
    """The Schubert class of the inner shape localized at the fixed point
    of the outer shape, specialized t_i -> z^i: a univariate polynomial.

    The ambient rectangle defaults to the smallest one containing the
    outer shape; the ratio used downstream is rectangle-independent."""
    lam = normalize_partition(lam)
    Lam = normalize_partition(Lam)
    if not contains(Lam, lam):
        raise ValueError("inner shape not contained in outer")
    k, n = _ambient(Lam, k, n)
    rg = ring(n)
    wl = grassmannian_from_partition(lam, k, n)
    wL = grassmannian_from_partition(Lam, k, n)
    loc = localize(double_schubert(wl), wL)
    coeffs = {}
    for e, c in loc.terms.items():
        if any(e[rg.x_slot(i)] for i in range(1, n + 1)) or e[rg.q_slot]:
            raise AssertionError("localization left non-t variables")
        d = sum((i + 1) * e[rg.t_slot(i + 1)] for i in range(n)) + e[rg.z_slot]
        coeffs[d] = coeffs.get(d, 0) + c
    top = max(coeffs, default=-1)
    return UPoly([coeffs.get(d, 0) for d in range(top + 1)])


def rht_count_limit(Lam, lam, r, k=None, n=None):
    """Tableau count from the exact limit of
    Y_{lam,Lam}(z) (z^r-1)^d / Y_{Lam,Lam}(z) at a primitive r-th root of
    unity, scaled by sign . r^d . d!; the result must be a nonnegative
    rational integer."""
    Lam = normalize_partition(Lam)
    lam = normalize_partition(lam)
    size = sum(Lam) - sum(lam)
    if size % r:
        raise ValueError("skew size %d not divisible by r=%d" % (size, r))
    d = size // r
    if d == 0:
        return 1
    num = y_poly(lam, Lam, k, n) * (UPoly.monomial(r) - 1) ** d
    den = y_poly(Lam, Lam, k, n)
    lim = limit_ratio_at_root(num, den, r)
    if not lim.is_rational():
        raise ExactnessError("limit is not rational: %r" % lim)
    sgn = rht_sign(Lam, lam, r)
    count = sgn * r ** d * factorial(d) * lim.rational_value()
    if count != int(count) or count < 0:
        raise ExactnessError("limit count is not a nonnegative integer: %r"
                             % count)
    return int(count)


def _box_chains(Lam, lam):
    """Single-box growth chains from the inner shape to the outer one;
    each chain is the row index of box i = 1..m, which is all the major
    index needs."""
    Lam = normalize_partition(Lam)
    lam = normalize_partition(lam)
    rows = len(Lam)

    def addable(cur):
        full = list(cur) + [0] * (rows - len(cur))
        for i in range(rows):
            if full[i] < Lam[i] and (i == 0 or full[i] < full[i - 1]):
                yield i + 1, normalize_partition(
                    tuple(full[:i] + [full[i] + 1] + full[i + 1:]))

    out = []

    def rec(cur, rows_so_far):
        if cur == Lam:
            out.append(tuple(rows_so_far))
            return
        for row, nxt in addable(cur):
            rec(nxt, rows_so_far + [row])

    rec(lam, [])
    return out


def standard_tableaux_maj(Lam, lam):
    """Major indices of all standard Young tableaux of the skew shape:
    maj(T) = sum of i such that i+1 sits in a strictly lower row."""
    return [sum(i + 1 for i in range(len(chain) - 1)
                if chain[i + 1] > chain[i])
            for chain in _box_chains(Lam, lam)]


def rht_count_maj(Lam, lam, r):
    """Tableau count as sign times the major-index generating function of
    standard Young tableaux evaluated at a primitive r-th root of unity,
    computed exactly in the cyclotomic quotient ring."""
    size = sum(normalize_partition(Lam)) - sum(normalize_partition(lam))
    if size % r:
        raise ValueError("skew size %d not divisible by r=%d" % (size, r))
    if size == 0:
        return 1
    total = CycloElt(r, UPoly())
    for m in standard_tableaux_maj(Lam, lam):
        total = total + CycloElt.zeta_power(r, m)
    sgn = rht_sign(Lam, lam, r)
    val = sgn * total
    if not val.is_rational():
        raise ExactnessError("maj evaluation is not rational: %r" % val)
    count = val.rational_value()
    if count != int(count) or count < 0:
        raise ExactnessError("maj count is not a nonnegative integer: %r"
                             % count)
    return int(count)


def hook_lengths(Lam):
    Lam = normalize_partition(Lam)
    conj = [0] * (Lam[0] if Lam else 0)
    for p in Lam:
        for j in range(p):
            conj[j] += 1
    return [Lam[i] - (j + 1) + conj[j] - (i + 1) + 1
            for i in range(len(Lam)) for j in range(Lam[i])]


def rht_count_hook(Lam, r):
    """Hook-length quotient count for a straight shape: zero unless the
    number of hook lengths divisible by r is exactly the number of hooks
    to place, else r^d d! over the product of those hook lengths."""
    Lam = normalize_partition(Lam)
    size = sum(Lam)
    if size % r:
        raise ValueError("size %d not divisible by r=%d" % (size, r))
    d = size // r
    hooks = hook_lengths(Lam)
    divisible = [h for h in hooks if h % r == 0]
    if len(divisible) != d:
        return 0
    num = r ** d * factorial(d)
    den = 1
    for h in divisible:
        den *= h
    if num % den:
        raise ExactnessError("hook quotient is not integral: %d/%d"
                             % (num, den))
    return num // den
