"""Partition combinatorics.

Partitions are plain tuples of positive integers in weakly decreasing order;
``()`` is the empty partition.  An r-tuple of partitions is a tuple of such
tuples.  Boxes are 1-based ``(row, col)`` pairs.
"""
from fractions import Fraction
from functools import lru_cache
from itertools import product


def make_partition(parts):
    """Normalize an iterable of parts into a partition tuple, dropping zeros."""
    p = tuple(int(x) for x in parts if x)
    if any(x < 0 for x in p) or any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"not a partition: {parts!r}")
    return p


def size(mu):
    return sum(mu)


def tuple_size(mus):
    return sum(sum(mu) for mu in mus)


def part(mu, i):
    """The i-th part (1-based), zero beyond the length."""
    return mu[i - 1] if 1 <= i <= len(mu) else 0


@lru_cache(maxsize=None)
def conjugate(mu):
    if not mu:
        return ()
    return tuple(sum(1 for x in mu if x >= j) for j in range(1, mu[0] + 1))


def boxes(mu):
    for i, row in enumerate(mu, start=1):
        for j in range(1, row + 1):
            yield (i, j)


def arm_leg(mu, nu, s):
    """Return ``(a_mu(s), l_nu(s))``; either may be negative off the diagram."""
    row, col = s
    return part(mu, row) - col, part(conjugate(nu), col) - row


def hook_product(mu):
    mup = conjugate(mu)
    out = 1
    for i, j in boxes(mu):
        out *= part(mu, i) - j + part(mup, j) - i + 1
    return out


@lru_cache(maxsize=None)
def partitions_of(n, max_part=None):
    """All partitions of n in reverse lexicographic order ([n] first)."""
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_upto(n):
    out = []
    for k in range(n + 1):
        out.extend(partitions_of(k))
    return out


def compositions(n, r):
    """Weak compositions of n into r parts, first entry descending."""
    if r == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in compositions(n - first, r - 1):
            yield (first,) + rest


def enumerate_tuples(n, r):
    """All r-tuples of partitions of total size n.

    Ordered lexicographically (descending) on the size vector, then on parts.
    """
    out = []
    for sizes in compositions(n, r):
        for combo in product(*(partitions_of(s) for s in sizes)):
            out.append(tuple(combo))
    return out


def enumerate_tuples_upto(n, r):
    out = []
    for k in range(n + 1):
        out.extend(enumerate_tuples(k, r))
    return out


@lru_cache(maxsize=None)
def border_strips(mu, n):
    """All (lam, height) with lam/mu a border strip of n boxes.

    Computed on beta-numbers: adding an n-strip moves one bead from x to x+n
    onto an empty position; the height is the number of beads jumped over.
    """
    if n < 1:
        raise ValueError("strip length must be positive")
    length = len(mu) + n + 1
    beads = [part(mu, i) - i for i in range(1, length + 1)]
    occupied = set(beads)
    out = []
    for x in beads:
        y = x + n
        if y in occupied:
            continue
        height = sum(1 for b in beads if x < b < y)
        new = sorted([b for b in beads if b != x] + [y], reverse=True)
        lam = make_partition(b + i for i, b in enumerate(new, start=1))
        out.append((lam, height))
    out.sort(key=lambda t: t[0], reverse=True)
    return tuple(out)


@lru_cache(maxsize=None)
def removable_strips(lam, n):
    """All (mu, height) with lam/mu a border strip of n boxes."""
    length = len(lam) + 1
    beads = [part(lam, i) - i for i in range(1, length + 1)]
    occupied = set(beads)
    out = []
    for x in beads:
        y = x - n
        # positions below -length are always occupied
        if y in occupied or y < -length:
            continue
        height = sum(1 for b in beads if y < b < x)
        new = sorted([b for b in beads if b != x] + [y], reverse=True)
        mu = make_partition(b + i for i, b in enumerate(new, start=1))
        out.append((mu, height))
    return tuple(out)


# ---------------------------------------------------------------- blending

def blend_truncation(mus, ks):
    """Per-component bead count offset used by :func:`blend`.

    Taking ``L + k_j`` beads of component j leaves the tail ``{x <= -L}`` in
    every component, whose image under ``x -> r*x - j + 1`` is all integers
    ``<= -r*L``.  Any ``L > max_j(len(mu_j) + |k_j|)`` keeps every nonzero
    part inside the truncation.
    """
    return max((len(m) + abs(k) for m, k in zip(mus, ks)), default=0) + 1


def blend(mus, ks, L=None):
    """Blend an r-tuple of partitions with charges into ``(mu, sum(ks))``."""
    mus = tuple(tuple(m) for m in mus)
    ks = tuple(int(k) for k in ks)
    r = len(mus)
    if r < 1 or len(ks) != r:
        raise ValueError("need r >= 1 partitions and r charges")
    bound = blend_truncation(mus, ks)
    if L is None:
        L = bound
    assert L >= bound, f"truncation {L} below bound {bound}"
    k = sum(ks)
    merged = []
    for j, (m, kj) in enumerate(zip(mus, ks), start=1):
        for i in range(1, L + kj + 1):
            merged.append(r * (part(m, i) - i + 1 + kj) - j + 1)
    merged.sort(reverse=True)
    assert len(merged) == r * L + k
    assert len(set(merged)) == len(merged)
    mu = [y + i - 1 - k for i, y in enumerate(merged, start=1)]
    assert all(x >= 0 for x in mu)
    return make_partition(mu), k


def unblend(mu, k, r, L=None):
    """Inverse of :func:`blend`: split beta-numbers by residue mod r."""
    mu = tuple(mu)
    if L is None:
        L = len(mu) + abs(k) + 1
    n = r * L + k
    assert n >= len(mu)
    comps = [[] for _ in range(r)]
    for i in range(1, n + 1):
        y = part(mu, i) - i + 1 + k
        j = (-y) % r + 1
        comps[j - 1].append((y + j - 1) // r)
    mus, ks = [], []
    for xs in comps:
        kj = len(xs) - L
        xs.sort(reverse=True)
        mus.append(make_partition(x + i - 1 - kj for i, x in enumerate(xs, start=1)))
        ks.append(kj)
    return tuple(mus), tuple(ks)


def blend_norm(ks, r=None):
    """The size offset d_k with |blend(mus, ks)| = r|mus| + d_k."""
    ks = [int(k) for k in ks]
    if r is None:
        r = len(ks)
    d = Fraction(r - 1, 2) * sum(k * k for k in ks)
    d += sum(Fraction(r + 1 - 2 * i, 2) * k for i, k in enumerate(ks, start=1))
    d -= sum(ks[i] * ks[j] for i in range(len(ks)) for j in range(i + 1, len(ks)))
    assert d.denominator == 1
    return int(d)


def staircase(k):
    """The partition labelling the lowest vector of charge k."""
    if k >= 0:
        return tuple(range(2 * k, 0, -1))
    return tuple(range(-2 * k - 1, 0, -1))


def _shuffle_inversions(mus, ks, L):
    r = len(mus)
    beads = []
    for j, (mu, kj) in enumerate(zip(mus, ks), start=1):
        beads.extend((r * (part(mu, i) - i + 1 + kj) - j + 1, j) for i in range(1, L + kj + 1))
    return sum(1 for a in beads for b in beads if a[1] < b[1] and a[0] < b[0])


def blend_sign(mus, ks):
    """Sign relating the blended basis vector at charges ks to the one at zero charge.

    Interleaving the component wedges into one wedge costs the sign of the
    sorting shuffle; this returns that sign relative to the vacuum tuple,
    divided by the same relative sign at ks = 0.
    """
    zero = tuple(0 for _ in ks)
    empty = tuple(() for _ in mus)
    L = max(blend_truncation(mus, ks), blend_truncation(mus, zero))
    total = (_shuffle_inversions(mus, ks, L) - _shuffle_inversions(empty, ks, L)
             - _shuffle_inversions(mus, zero, L) + _shuffle_inversions(empty, zero, L))
    return -1 if total % 2 else 1
