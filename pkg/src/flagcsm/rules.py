"""Closed-form product rules for CSM and Schubert classes: Pieri rules
for hook Schur polynomials and hook-shape Schubert classes, the
Murnaghan-Nakayama rule for power sums, and the rigidity lifts that
assemble equivariant structure constants from nonequivariant counts.

Conventions shared by all rules: the multiplier lives in x_1..x_k, paths
run in the extended k-Bruhat order for CSM expansions and in the
ordinary (cover-only) order for Schubert expansions, and the diagonal
coefficient is the multiplier evaluated at t_{u(1)},..,t_{u(k)}.
"""

from __future__ import annotations

from .bruhat import enumerate_paths, moved_values, sigma_delta
from .exact import ring
from .perm import Permutation, cycles_through, grassmannian_from_partition
from .schubert import CohClass, column_perm, double_schubert, localize, row_perm
from .symfun import VarSubset, complete_sym, elem_sym, power_sum, schur_hook, ts


def _hook_fits(alpha, beta, k, n):
    return beta + 1 <= k and alpha + 1 <= n - k


def _diag_subset(u, k):
    return VarSubset("t", tuple(u(i) for i in range(1, k + 1)))


def pieri_hook_csm(u, k, hook, equivariant=True):
    """Expansion of the CSM class of u times the hook Schur polynomial
    s_(1+alpha, 1^beta)(x_[k]).

    Equivariant coefficients sum h_{alpha-in} e_{beta-de} over peakless
    paths, evaluated on the t-variables indexed by Sigma_k(u,w) and
    Delta_k(u,w); nonequivariantly the coefficient is the number of
    peakless paths with in = alpha and de = beta exactly."""
    return _pieri_hook(u, k, hook, equivariant, cover_only=False, basis="csm")


def pieri_hook_schubert(u, k, hook, equivariant=True):
    """Same expansion in the Schubert basis: identical coefficients, but
    the peakless paths are restricted to the ordinary k-Bruhat order."""
    return _pieri_hook(u, k, hook, equivariant, cover_only=True,
                       basis="schubert")


def _pieri_hook(u, k, hook, equivariant, cover_only, basis):
    n = u.n
    alpha, beta = hook
    rg = ring(n)
    out = CohClass(basis, equivariant)
    if equivariant:
        out.add(u, schur_hook(n, alpha, beta, _diag_subset(u, k)))
        grouped = enumerate_paths(u, k, ("peakless_le", alpha, beta), cover_only)
        for w, paths in grouped.items():
            if w == u:
                continue
            sd = sigma_delta(u, w, range(1, k + 1))
            acc = rg.zero
            for p in paths:
                pin, pde = p.stats()
                acc = acc + complete_sym(n, alpha - pin, ts(*sd.sigma)) \
                    * elem_sym(n, beta - pde, ts(*sd.delta))
            out.add(w, acc)
    else:
        grouped = enumerate_paths(u, k, ("peakless", alpha, beta), cover_only)
        for w, paths in grouped.items():
            count = sum(1 for p in paths if len(p))
            if count:
                out.add(w, rg.const(count))
    return out


def pieri_schubertclass_csm(u, k, hook):
    """Expansion of the CSM class of u times the equivariant Schubert
    class of the hook-shape Grassmannian permutation with descent at k.

    The diagonal is the localization of that Schubert class at u; the
    off-diagonal coefficients split each hook budget between the path
    factors (on Sigma/Delta) and correction factors at negated
    t-variables coming from the hook Giambelli expansion."""
    from .symfun import t_range

    n = u.n
    alpha, beta = hook
    if not _hook_fits(alpha, beta, k, n):
        raise ValueError("hook (alpha=%d, beta=%d) does not fit in %dx%d"
                         % (alpha, beta, k, n - k))
    rg = ring(n)
    w_hook = grassmannian_from_partition((alpha + 1,) + (1,) * beta, k, n)
    out = CohClass("csm", True)
    out.add(u, localize(double_schubert(w_hook), u))
    grouped = enumerate_paths(u, k, ("peakless_le", alpha, beta), False)
    for w, paths in grouped.items():
        if w == u:
            continue
        sd = sigma_delta(u, w, range(1, k + 1))
        acc = rg.zero
        for p in paths:
            pin, pde = p.stats()
            for a1 in range(alpha - pin + 1):
                a2 = alpha - pin - a1
                for b1 in range(beta - pde + 1):
                    b2 = beta - pde - b1
                    acc = acc + (complete_sym(n, a1, ts(*sd.sigma))
                                 * elem_sym(n, b1, ts(*sd.delta))
                                 * elem_sym(n, a2, t_range(k + alpha), sign=-1)
                                 * complete_sym(n, b2, t_range(k - beta), sign=-1))
        out.add(w, acc)
    return out


def _completion_perm(values, m, n):
    """A permutation whose image of [m] is the given sorted value set,
    remaining values ascending afterwards; the localized class only sees
    the first m positions, so any completion would do."""
    values = sorted(values)
    if len(values) != m:
        raise ValueError("need exactly %d values" % m)
    rest = sorted(set(range(1, n + 1)) - set(values))
    return Permutation(values + rest)


def pieri_eh_localized(u, k, r, kind):
    """Pieri rule for the one-column class c[k,r] (kind 'column') or the
    one-row class c'[k,r] (kind 'row'), with every coefficient produced
    as a localization of a smaller column/row Schubert class.

    Decreasing (resp. increasing) paths of each length r' <= r pick out
    the endpoints; the coefficient at the endpoint w is the class
    c[k-r', r-r'] localized at any permutation mapping [k-r'] onto
    Delta_k(u,w) (resp. c'[k+r', r-r'] at [k+r'] -> Sigma_k(u,w))."""
    n = u.n
    if kind == "column":
        if r > k:
            raise ValueError("column class needs r <= k")
        shape = "decreasing"
    elif kind == "row":
        if k + r > n:
            raise ValueError("row class needs k + r <= n")
        shape = "increasing"
    else:
        raise ValueError("kind must be 'column' or 'row'")
    out = CohClass("csm", True)
    for rp in range(0, r + 1):
        grouped = enumerate_paths(u, k, (shape, rp), False)
        for w in grouped:
            sd = sigma_delta(u, w, range(1, k + 1))
            if kind == "column":
                cls = double_schubert(column_perm(k - rp, r - rp, n))
                spot = _completion_perm(sd.delta, k - rp, n)
            else:
                cls = double_schubert(row_perm(k + rp, r - rp, n))
                spot = _completion_perm(sd.sigma, k + rp, n)
            out.add(w, localize(cls, spot))
    return out


def mn_csm(u, k, r, equivariant=True):
    """Murnaghan-Nakayama rule: expansion of the CSM class of u times the
    power sum p_r(x_[k]).

    Cycles eta of each length r'+1 <= r+1 with u below u.eta contribute
    (-1)^{k-height} h_{r-r'} on the t-variables u M(eta); the
    nonequivariant rule keeps only r' = r with coefficient the sign."""
    n = u.n
    rg = ring(n)
    out = CohClass("csm", equivariant)
    if equivariant:
        out.add(u, power_sum(n, r, _diag_subset(u, k)))
    for cyc, eta in cycles_through(u, k, r):
        rp = len(cyc) - 1
        w = u.compose(eta)
        sign = -1 if eta.k_height(k) % 2 else 1
        if equivariant:
            moved = tuple(sorted(u(i) for i in eta.nonfixed_set()))
            out.add(w, sign * complete_sym(n, r - rp, ts(*moved)))
        elif rp == r:
            out.add(w, rg.const(sign))
    return out


def mn_schubert(u, k, r, equivariant=True):
    """The Schubert-basis Murnaghan-Nakayama rule: as `mn_csm` but keeping
    only cycles with l(u.eta) = l(u) + r'."""
    n = u.n
    rg = ring(n)
    out = CohClass("schubert", equivariant)
    if equivariant:
        out.add(u, power_sum(n, r, _diag_subset(u, k)))
    lu = u.length()
    for cyc, eta in cycles_through(u, k, r):
        rp = len(cyc) - 1
        w = u.compose(eta)
        if w.length() != lu + rp:
            continue
        sign = -1 if eta.k_height(k) % 2 else 1
        if equivariant:
            moved = tuple(sorted(u(i) for i in eta.nonfixed_set()))
            out.add(w, sign * complete_sym(n, r - rp, ts(*moved)))
        elif rp == r:
            out.add(w, rg.const(sign))
    return out


# ---------------------------------------------------------------------------
# rigidity: equivariant coefficients from nonequivariant counts


def _nonequivariant_hook_counts(u, A, k, alpha, beta):
    """Path-count route for A = [k]; oracle route for a general subset."""
    if k is not None and A == tuple(range(1, k + 1)):
        counts = {}
        grouped = enumerate_paths(u, k, ("peakless_le", alpha, beta), False)
        for w, paths in grouped.items():
            for p in paths:
                if not len(p):
                    continue
                pin, pde = p.stats()
                key = (pin, pde)
                counts.setdefault(w, {})[key] = counts.get(w, {}).get(key, 0) + 1
        return counts
    from .csm import oracle_product

    n = u.n
    counts = {}
    for a2 in range(alpha + 1):
        for b2 in range(beta + 1):
            g = schur_hook(n, a2, b2, VarSubset("x", A))
            got = oracle_product(u, g, "csm", equivariant=False)
            for w, c in got.coeffs.items():
                if w == u:
                    continue
                counts.setdefault(w, {})[(a2, b2)] = int(c.constant_value())
    return counts


def rigidity_lift_hook(u, hook, k=None, A=None):
    """Equivariant hook-Pieri coefficients assembled from nonequivariant
    structure constants: each smaller hook's count is dressed with
    h_{alpha-alpha'} e_{beta-beta'} on Sigma_A/Delta_A, and the diagonal
    is the hook Schur polynomial at t_{uA}."""
    n = u.n
    alpha, beta = hook
    if A is None:
        if k is None:
            raise ValueError("pass k or an explicit subset A")
        A = tuple(range(1, k + 1))
    else:
        A = tuple(sorted(A))
    rg = ring(n)
    out = CohClass("csm", True)
    out.add(u, schur_hook(n, alpha, beta,
                          VarSubset("t", tuple(u(i) for i in A))))
    counts = _nonequivariant_hook_counts(u, A, k, alpha, beta)
    for w, by_shape in counts.items():
        sd = sigma_delta(u, w, A)
        acc = rg.zero
        for (a2, b2), cnt in by_shape.items():
            acc = acc + cnt * complete_sym(n, alpha - a2, ts(*sd.sigma)) \
                * elem_sym(n, beta - b2, ts(*sd.delta))
        out.add(w, acc)
    return out


def rigidity_lift(kind, u, params, k=None, A=None):
    """Dispatcher: kind 'hook' lifts a hook Pieri expansion (params =
    (alpha, beta)), kind 'powersum' a Murnaghan-Nakayama one (params = r)."""
    if kind == "hook":
        return rigidity_lift_hook(u, params, k=k, A=A)
    if kind == "powersum":
        return rigidity_lift_powersum(u, params, k=k, A=A)
    raise ValueError("kind must be 'hook' or 'powersum'")


def rigidity_lift_powersum(u, r, k=None, A=None):
    """Equivariant Murnaghan-Nakayama coefficients assembled from
    nonequivariant ones: d^w_r(t) = sum_{r'} d^w_{r'} h_{r-r'} on the
    moved t-values, diagonal p_r(t_{uA})."""
    n = u.n
    if A is None:
        if k is None:
            raise ValueError("pass k or an explicit subset A")
        A = tuple(range(1, k + 1))
    else:
        A = tuple(sorted(A))
    rg = ring(n)
    out = CohClass("csm", True)
    out.add(u, power_sum(n, r, VarSubset("t", tuple(u(i) for i in A))))

    base = {}
    if k is not None and A == tuple(range(1, k + 1)):
        for cyc, eta in cycles_through(u, k, r):
            rp = len(cyc) - 1
            sign = -1 if eta.k_height(k) % 2 else 1
            base.setdefault(u.compose(eta), {})[rp] = sign
    else:
        from .csm import oracle_product

        for rp in range(1, r + 1):
            got = oracle_product(u, power_sum(n, rp, VarSubset("x", A)), "csm",
                                 equivariant=False)
            for w, c in got.coeffs.items():
                if w != u:
                    base.setdefault(w, {})[rp] = int(c.constant_value())

    for w, by_len in base.items():
        moved = moved_values(u, w)
        acc = rg.zero
        for rp, cnt in by_len.items():
            acc = acc + cnt * complete_sym(n, r - rp, ts(*moved))
        out.add(w, acc)
    return out
