"""Bosonic Fock space as polynomials in power sums p_k = alpha_{-k} v_0.

A state is a dict mapping a partition lam to the coefficient of
``p_lam = alpha_{-lam_1} ... alpha_{-lam_l} v_0``.  The Heisenberg algebra acts
by ``alpha_{-k} = p_k *`` and ``alpha_k = k d/dp_k``, and the invariant
inner product has ``<p_lam, p_lam> = z_lam``.
"""
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from ..partitions import make_partition, partitions_of


def z_lambda(lam):
    out = 1
    for k, mult in Counter(lam).items():
        out *= k ** mult * factorial(mult)
    return out


def add_into(out, vec, scale=1):
    for k, v in vec.items():
        nv = out.get(k, 0) + scale * v
        if nv:
            out[k] = nv
        else:
            out.pop(k, None)
    return out


def scale(vec, s):
    return {k: v * s for k, v in vec.items()} if s else {}


def combine(*pairs):
    """Linear combination of states: combine((c1, v1), (c2, v2), ...)."""
    out = {}
    for c, v in pairs:
        add_into(out, v, c)
    return out


def degree(lam):
    return sum(lam)


def max_degree(state):
    return max((sum(lam) for lam in state), default=-1)


def inner(f, g):
    return sum((c * g[lam] * z_lambda(lam) for lam, c in f.items() if lam in g), Fraction(0))


def merge(lam, mu):
    return tuple(sorted(lam + mu, reverse=True))


def times_p(k, state):
    return {merge(lam, (k,)): c for lam, c in state.items()}


def d_dp(k, state):
    out = {}
    for lam, c in state.items():
        mult = lam.count(k)
        if mult:
            rest = list(lam)
            rest.remove(k)
            add_into(out, {tuple(rest): c * mult})
    return out


def alpha(n, state):
    if n == 0:
        raise ValueError("alpha_0 acts by the charge, which is zero here")
    if n < 0:
        return times_p(-n, state)
    return scale(d_dp(n, state), n)


def parity_ok(k, parity):
    return parity == "full" or (parity == "even") == (k % 2 == 0)


@lru_cache(maxsize=None)
def _shift_monomial(lam, s, parity):
    """exp(s * sum_{k in parity} d/dp_k) p_lam, graded by lowered degree.

    Returns a tuple over lowered degree b of ((partition, coeff), ...) pairs.
    This is the Taylor shift p_k -> p_k + s for k of the given parity.
    """
    counts = Counter(lam)
    pieces = [((), 0, Fraction(1))]  # (kept parts, lowered degree, coefficient)
    for k, e in sorted(counts.items(), reverse=True):
        new = []
        for kept, low, coef in pieces:
            if parity_ok(k, parity):
                for j in range(e + 1):
                    new.append((kept + (k,) * (e - j), low + j * k, coef * comb(e, j) * s ** j))
            else:
                new.append((kept + (k,) * e, low, coef))
        pieces = new
    graded = {}
    for kept, low, coef in pieces:
        if coef:
            bucket = graded.setdefault(low, {})
            add_into(bucket, {make_partition(kept): coef})
    top = max(graded, default=0)
    return tuple(tuple(graded.get(b, {}).items()) for b in range(top + 1))


def shift_graded(state, s, parity="full"):
    """exp(s * sum alpha_k / k) applied to state; list indexed by lowered degree."""
    s = Fraction(s)
    out = []
    for lam, c in state.items():
        for b, piece in enumerate(_shift_monomial(lam, s, parity)):
            while len(out) <= b:
                out.append({})
            add_into(out[b], dict(piece), c)
    return out


def shift(state, s, parity="full"):
    out = {}
    for piece in shift_graded(state, s, parity):
        add_into(out, piece)
    return out


@lru_cache(maxsize=None)
def _exp_raise_table(s, parity, top):
    """[x^a] exp(s * sum_{k in parity} x^k p_k / k) for a = 0..top."""
    table = [dict() for _ in range(top + 1)]
    table[0] = {(): Fraction(1)}
    # a * E_a = sum_k s x^k p_k E_{a-k} from differentiating the exponential
    for a in range(1, top + 1):
        acc = {}
        for k in range(1, a + 1):
            if parity_ok(k, parity) and table[a - k]:
                add_into(acc, times_p(k, table[a - k]), s)
        table[a] = scale(acc, Fraction(1, a))
    return tuple(tuple(t.items()) for t in table)


def exp_raise(s, parity, top):
    return [dict(t) for t in _exp_raise_table(Fraction(s), parity, top)]


def multiply(f, g):
    out = {}
    for l1, c1 in f.items():
        for l2, c2 in g.items():
            add_into(out, {merge(l1, l2): c1 * c2})
    return out


def gamma_minus(s, state, parity, top):
    """exp(s sum x^k alpha_{-k}/k) state, list indexed by raised degree <= top."""
    table = exp_raise(s, parity, top)
    return [multiply(t, state) for t in table]


def vertex_coefficient(m, j, state, parity="full"):
    """Coefficient of y^j in Gamma^{(m)}_parity(y) applied to state.

    Gamma^{(m)}(y) = exp(m sum y^k alpha_{-k}/k) exp(-m sum y^{-k} alpha_k/k),
    restricted to modes of the given parity.
    """
    m = Fraction(m)
    lowered = shift_graded(state, -m, parity)
    top = len(lowered) - 1 + j
    if top < 0:
        return {}
    raise_table = exp_raise(m, parity, max(top, 0))
    out = {}
    for b, piece in enumerate(lowered):
        a = b + j
        if 0 <= a < len(raise_table) and piece and raise_table[a]:
            add_into(out, multiply(raise_table[a], piece))
    return out


def split_even_odd(lam):
    even = tuple(k for k in lam if k % 2 == 0)
    odd = tuple(k for k in lam if k % 2 == 1)
    return even, odd


def gamma_split(state):
    """The isomorphism to Lambda_e (x) Lambda_o: dict (even, odd) -> coefficient."""
    out = {}
    for lam, c in state.items():
        key = split_even_odd(lam)
        out[key] = out.get(key, 0) + c
    return {k: v for k, v in out.items() if v}


def gamma_join(tensor):
    out = {}
    for (ev, od), c in tensor.items():
        add_into(out, {merge(ev, od): c})
    return out


def odd_partitions(n):
    return [lam for lam in partitions_of(n) if all(k % 2 for k in lam)]


def even_partitions(n):
    return [lam for lam in partitions_of(n) if all(k % 2 == 0 for k in lam)]
