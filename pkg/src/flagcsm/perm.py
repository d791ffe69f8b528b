"""Permutations of S_n in one-line notation, with the statistics the
product rules consume: length, non-fixed set, k-height, Grassmannian
encodings, and admissible-cycle enumeration.

>>> Permutation.parse("23154").length()
3
>>> Permutation.parse("2,3,1,5,4").k_height(2)
1
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations


class Permutation:
    """A permutation of {1..n}, stored as its one-line tuple."""

    __slots__ = ("oneline",)

    def __init__(self, oneline):
        ol = tuple(oneline)
        if sorted(ol) != list(range(1, len(ol) + 1)):
            raise ValueError("not a permutation of 1..n: %r" % (ol,))
        self.oneline = ol

    @classmethod
    def parse(cls, text):
        """Accepts digit strings ("23154", n <= 9) and comma form
        ("2,3,1,5,4")."""
        text = text.strip()
        if "," in text:
            return cls(int(p) for p in text.split(","))
        return cls(int(ch) for ch in text)

    @classmethod
    def identity(cls, n):
        return cls(range(1, n + 1))

    @classmethod
    def longest(cls, n):
        return cls(range(n, 0, -1))

    @classmethod
    def transposition(cls, a, b, n):
        ol = list(range(1, n + 1))
        ol[a - 1], ol[b - 1] = ol[b - 1], ol[a - 1]
        return cls(ol)

    @classmethod
    def from_cycle(cls, cycle, n):
        """The cycle (c1 c2 ... cm): c1 -> c2 -> ... -> cm -> c1."""
        ol = list(range(1, n + 1))
        cycle = list(cycle)
        for i, c in enumerate(cycle):
            ol[c - 1] = cycle[(i + 1) % len(cycle)]
        return cls(ol)

    # -- basic structure

    @property
    def n(self):
        return len(self.oneline)

    def __call__(self, i):
        return self.oneline[i - 1]

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.oneline == other.oneline

    def __hash__(self):
        return hash(self.oneline)

    def __lt__(self, other):
        return self.oneline < other.oneline

    def __repr__(self):
        return "Permutation(%r)" % (self.oneline,)

    def __str__(self):
        if self.n <= 9:
            return "".join(str(v) for v in self.oneline)
        return ",".join(str(v) for v in self.oneline)

    def compose(self, other):
        """(self . other)(i) = self(other(i))."""
        if self.n != other.n:
            raise ValueError("size mismatch")
        return Permutation(self.oneline[v - 1] for v in other.oneline)

    __mul__ = compose

    def inverse(self):
        inv = [0] * self.n
        for i, v in enumerate(self.oneline):
            inv[v - 1] = i + 1
        return Permutation(inv)

    def is_identity(self):
        return all(v == i + 1 for i, v in enumerate(self.oneline))

    # -- statistics

    def length(self):
        """Number of inversion pairs."""
        ol = self.oneline
        return sum(1 for i in range(len(ol)) for j in range(i + 1, len(ol))
                   if ol[i] > ol[j])

    def nonfixed_set(self):
        """M(w) = {i : w(i) != i}, sorted."""
        return tuple(i + 1 for i, v in enumerate(self.oneline) if v != i + 1)

    def k_height(self, k):
        """One less than the number of non-fixed points among the first k."""
        return sum(1 for i in range(k) if self.oneline[i] != i + 1) - 1

    def descents(self):
        ol = self.oneline
        return tuple(i + 1 for i in range(len(ol) - 1) if ol[i] > ol[i + 1])

    def is_grassmannian(self):
        """At most one descent (the identity counts)."""
        return len(self.descents()) <= 1

    # -- words

    def reduced_word(self):
        """Deterministic reduced word (i1,...,il) with
        self = s_{i1} . s_{i2} . ... . s_{il}, stripped off by repeatedly
        removing the leftmost descent."""
        word = []
        ol = list(self.oneline)
        while True:
            for i in range(len(ol) - 1):
                if ol[i] > ol[i + 1]:
                    ol[i], ol[i + 1] = ol[i + 1], ol[i]
                    word.append(i + 1)
                    break
            else:
                break
        word.reverse()
        return tuple(word)


def grassmannian_from_partition(lam, k, n):
    """The Grassmannian permutation w with descent at most k whose first k
    values encode the partition: lam_i = w(k-i+1) - (k-i+1)."""
    lam = tuple(lam) + (0,) * (k - len(lam))
    if len(lam) > k or (lam and lam[0] > n - k):
        raise ValueError("partition %r does not fit in %dx%d" % (lam, k, n - k))
    first = [lam[k - j] + j for j in range(1, k + 1)]
    if sorted(first) != first or len(set(first)) != k:
        raise ValueError("partition is not weakly decreasing: %r" % (lam,))
    rest = sorted(set(range(1, n + 1)) - set(first))
    return Permutation(first + rest)


def coset_decompose(w, k):
    """The unique w = w_lam . v with v in S_k x S_{n-k}; returns
    (lam, v) where lam is the partition Gr(w) in the k x (n-k) rectangle."""
    n = w.n
    first = sorted(w.oneline[:k])
    rest = sorted(w.oneline[k:])
    wlam = Permutation(first + rest)
    lam = tuple(first[k - i] - (k - i + 1) for i in range(1, k + 1))
    while lam and lam[-1] == 0:
        lam = lam[:-1]
    v = wlam.inverse().compose(w)
    return lam, v


@lru_cache(maxsize=None)
def all_permutations(n):
    """All of S_n sorted by (length, one-line)."""
    perms = [Permutation(p) for p in permutations(range(1, n + 1))]
    perms.sort(key=lambda w: (w.length(), w.oneline))
    return tuple(perms)


def all_cycles(n, min_len=2, max_len=None):
    """All cycles in S_n of the given lengths, each in canonical form
    (minimum element of the support first), in a deterministic order."""
    if max_len is None:
        max_len = n
    out = []
    for m in range(min_len, max_len + 1):
        for support in combinations(range(1, n + 1), m):
            lead, rest = support[0], support[1:]
            for tail in permutations(rest):
                out.append(((lead,) + tail, Permutation.from_cycle((lead,) + tail, n)))
    return out


def cycles_through(u, k, max_len):
    """All cycles eta of length 2..max_len+1 with u <=_k u.eta in the
    extended k-Bruhat order.  Returns (cycle tuple, eta) pairs."""
    from .bruhat import leq_k  # deferred: bruhat depends on this module

    out = []
    for cyc, eta in all_cycles(u.n, 2, max_len + 1):
        if leq_k(u, u.compose(eta), k):
            out.append((cyc, eta))
    return out
