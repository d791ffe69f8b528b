"""Partitions in the k x (n-k) rectangle, the labeled k-Bruhat graph on
partitions (edges = rim hook additions), pushforward of flag-variety
expansions, and the parabolic Pieri and Murnaghan-Nakayama rules.

Partitions are tuples of positive parts (no trailing zeros); rows and
columns are 1-based, row 1 on top.  The boundary labeling walks the
southeast lattice path of a partition from bottom left to top right,
numbering the n unit steps 1..n; rows read bottom-to-top give the first
k values of the Grassmannian permutation, columns the rest.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exact import ring
from .perm import Permutation, coset_decompose, grassmannian_from_partition

from .symfun import VarSubset, complete_sym, power_sum


def parse_partition(text):
    text = text.strip()
    if not text or text == "0":
        return ()
    parts = tuple(int(p) for p in text.split(","))
    return normalize_partition(parts)


def normalize_partition(parts):
    parts = tuple(p for p in parts)
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError("parts must be weakly decreasing: %r" % (parts,))
    if any(p < 0 for p in parts):
        raise ValueError("parts must be nonnegative: %r" % (parts,))
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    return parts


def partition_str(lam, k=None):
    parts = tuple(lam)
    if k is not None:
        parts = parts + (0,) * (k - len(parts))
    return ",".join(str(p) for p in parts) if parts else "0"


def fits_in_rectangle(lam, k, n):
    return len(lam) <= k and (not lam or lam[0] <= n - k)


def contains(outer, inner):
    outer, inner = tuple(outer), tuple(inner)
    if any(p > 0 for p in inner[len(outer):]):
        return False
    return all(b <= a for a, b in zip(outer, inner))


def boundary_labels(lam, k, n):
    """Labels 1..n along the southeast boundary of lam inside k x (n-k):
    returns (row_label, col_label) dicts, rows indexed 1..k top-down and
    columns 1..n-k.  Row i of the diagram receives the label of its
    east-edge step; doubling as a second Grassmannian constructor."""
    if not fits_in_rectangle(lam, k, n):
        raise ValueError("%r does not fit in %dx%d" % (lam, k, n - k))
    full = tuple(lam) + (0,) * (k - len(lam))
    row_label = {}
    col_label = {}
    label = 0
    c = 0
    for i in range(k, 0, -1):  # rows bottom-up
        while c < full[i - 1]:
            c += 1
            label += 1
            col_label[c] = label
        label += 1
        row_label[i] = label
    while c < n - k:
        c += 1
        label += 1
        col_label[c] = label
    return row_label, col_label


def grassmannian_from_labels(lam, k, n):
    """w_lam reconstructed from the boundary walk: w(i) is the label of
    row k+1-i for i <= k, then the column labels."""
    row_label, col_label = boundary_labels(lam, k, n)
    first = [row_label[k + 1 - i] for i in range(1, k + 1)]
    rest = [col_label[c] for c in range(1, n - k + 1)]
    return Permutation(first + rest)


@dataclass(frozen=True)
class RimHook:
    """A rim hook addition inside the rectangle: outer/inner is an
    edgewise-connected skew shape with no 2x2 square."""

    inner: tuple
    outer: tuple
    size: int
    height: int          # rows spanned minus one
    tail: tuple          # (row, col) of the leftmost box of the bottom row
    labels: tuple        # L(outer/inner) in the boundary labeling of outer
    tau: int             # min of labels


def rim_hook_additions(lam, k, n, size_range=None):
    """All rim hooks addable to lam inside the k x (n-k) rectangle, with
    tail, height, boundary label set, and edge label tau = min L.

    A rim hook spanning rows r1..r2 is determined by its head column in
    row r1; every lower row is forced to end one column right of the row
    above it in the inner shape."""
    lam = normalize_partition(lam)
    if not fits_in_rectangle(lam, k, n):
        raise ValueError("%r does not fit in %dx%d" % (lam, k, n - k))
    full = list(lam) + [0] * (k - len(lam))
    lo, hi = size_range if size_range else (1, k * (n - k))
    out = []
    for r1 in range(1, k + 1):
        cap = n - k if r1 == 1 else full[r1 - 2]
        for h in range(full[r1 - 1] + 1, cap + 1):
            mu = list(full)
            mu[r1 - 1] = h
            size = h - full[r1 - 1]
            for r2 in range(r1, k + 1):
                if r2 > r1:
                    want = full[r2 - 2] + 1
                    if want <= full[r2 - 1]:
                        break
                    mu[r2 - 1] = want
                    size += want - full[r2 - 1]
                if lo <= size <= hi:
                    outer = normalize_partition(mu)
                    labels = _hook_labels(outer, full[r2 - 1] + 1, size, k, n)
                    out.append(RimHook(
                        inner=lam, outer=outer, size=size,
                        height=r2 - r1, tail=(r2, full[r2 - 1] + 1),
                        labels=labels, tau=min(labels)))
    out.sort(key=lambda rh: (rh.size, rh.outer))
    return out


def _hook_labels(outer, tail_col, size, k, n):
    """L(outer/inner): the labels of the hook's southeast boundary in the
    labeling of the outer shape, which form size+1 consecutive integers
    starting at the column label of the tail column."""
    _, col_label = boundary_labels(outer, k, n)
    start = col_label[tail_col]
    return tuple(range(start, start + size + 1))


def rim_hook_removals(Lam, r):
    """All inner shapes mu with Lam/mu a rim hook of size exactly r.

    Mirror of the addition enumerator: a hook in rows r1..r2 forces
    mu_j = Lam_{j+1} - 1 for r1 <= j < r2, leaving only the bottom row's
    remaining length free, which the target size then pins down."""
    Lam = normalize_partition(Lam)
    rows = len(Lam)
    out = []
    for r2 in range(1, rows + 1):
        for r1 in range(r2, 0, -1):
            mu = list(Lam)
            ok = True
            size_above = 0
            for j in range(r1, r2):
                forced = Lam[j] - 1  # Lam_{j+1} - 1, 0-based access
                if forced < 0:
                    ok = False
                    break
                mu[j - 1] = forced
                size_above += Lam[j - 1] - forced
            if not ok or size_above >= r:
                if size_above >= r:
                    break  # taller hooks through r2 only get bigger
                continue
            tail_need = r - size_above
            below = Lam[r2] if r2 < rows else 0
            bottom = Lam[r2 - 1] - tail_need
            if bottom < below:
                continue
            mu[r2 - 1] = bottom
            out.append(normalize_partition(tuple(mu)))
    return sorted(set(out))


def lift_path(steps, u, k):
    """The unique lift of a labeled partition path to the k-Bruhat graph
    on S_n starting at u (which must satisfy Gr(u) = the first shape):
    each step is matched by the single k-edge with its label and shape."""
    from .bruhat import LabeledPath, k_edges_from

    n = u.n
    lam0 = steps[0].inner if steps else None
    if steps and coset_decompose(u, k)[0] != normalize_partition(lam0):
        raise ValueError("u does not lie over the first shape")
    edges = []
    cur = u
    for rh in steps:
        matches = [e for e in k_edges_from(cur, k)
                   if e.tau == rh.tau
                   and coset_decompose(e.target, k)[0] == rh.outer]
        if len(matches) != 1:
            raise AssertionError("lift not unique: %d matches" % len(matches))
        edges.append(matches[0])
        cur = matches[0].target
    return LabeledPath(tuple(edges))


def pushforward(expansion, k):
    """Fiberwise sum of an expansion over Gr(w): coefficient at mu is the
    sum of coefficients over all w with Gr(w) = mu.  For Schubert-basis
    expansions every non-Grassmannian coefficient must already vanish
    (they do for products pulled back from the Grassmannian), so the sum
    degenerates to re-indexing."""
    out = {}
    for w, c in expansion.coeffs.items():
        lam, v = coset_decompose(w, k)
        if expansion.basis == "schubert" and not v.is_identity():
            raise AssertionError(
                "Schubert expansion has weight at non-Grassmannian %s" % w)
        cur = out.get(lam)
        out[lam] = c if cur is None else cur + c
    return {lam: c for lam, c in sorted(out.items())
            if not (hasattr(c, "is_zero") and c.is_zero())}


def parabolic_pieri(lam, k, n, hook):
    """Nonequivariant CSM Pieri rule on the Grassmannian: the coefficient
    at mu counts chains of alpha+beta+1 rim hooks from lam to mu whose
    first beta+1 tails move strictly down and whose last alpha+1 tails
    move strictly right."""
    lam = normalize_partition(lam)
    alpha, beta = hook
    m = alpha + beta + 1
    counts = {}

    def rec(cur, depth, prev_tail):
        if depth == m:
            counts[cur] = counts.get(cur, 0) + 1
            return
        for rh in rim_hook_additions(cur, k, n):
            if depth > 0:
                if depth <= beta:
                    if rh.tail[0] <= prev_tail[0]:
                        continue
                else:
                    if rh.tail[1] <= prev_tail[1]:
                        continue
            rec(rh.outer, depth + 1, rh.tail)

    rec(lam, 0, None)
    return dict(sorted(counts.items()))


def parabolic_mn(lam, k, n, r):
    """Equivariant Murnaghan-Nakayama rule on the Grassmannian: diagonal
    p_r at the row labels of lam; each rim hook of size r' <= r adds
    (-1)^height h_{r-r'} on the t-variables indexed by its boundary
    labels."""
    lam = normalize_partition(lam)
    if r < 1:
        raise ValueError("r must be positive")
    rg = ring(n)
    wlam = grassmannian_from_partition(lam, k, n)
    out = {lam: power_sum(n, r, VarSubset("t", tuple(wlam(i) for i in range(1, k + 1))))}
    for rh in rim_hook_additions(lam, k, n, (1, r)):
        sign = -1 if rh.height % 2 else 1
        coeff = sign * complete_sym(n, r - rh.size, VarSubset("t", rh.labels))
        if coeff.is_zero():
            continue
        cur = out.get(rh.outer)
        out[rh.outer] = coeff if cur is None else cur + coeff
    return dict(sorted(out.items()))
