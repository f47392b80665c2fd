"""Virasoro Verma modules, Shapovalov forms, vertex-operator matrix elements, blocks.

Vectors in a Verma module are dicts mapping a partition mu (parts descending)
to its coefficient on ``v_mu = L_{-mu_1} ... L_{-mu_l} v_0``.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .errors import SingularGram
from .exactmath import QSeries, mat_inverse
from .partitions import compositions, partitions_of


@dataclass(frozen=True)
class VirParams:
    c: Fraction
    h: Fraction


def _add(out, vec, scale=1):
    for k, v in vec.items():
        out[k] = out.get(k, 0) + scale * v
        if not out[k]:
            del out[k]
    return out


@lru_cache(maxsize=None)
def _act(n, mu, c, h):
    """L_n applied to v_mu, as a tuple of (partition, coefficient) pairs."""
    if n == 0:
        return ((mu, h + sum(mu)),)
    if not mu:
        return (((-n,), Fraction(1)),) if n < 0 else ()
    a, rest = mu[0], mu[1:]
    out = {}
    if n < 0:
        b = -n
        if b >= a:
            return (((b,) + mu, Fraction(1)),)
        # L_{-b} L_{-a} = L_{-a} L_{-b} + (a - b) L_{-a-b}
        for lam, coef in _act(n, rest, c, h):
            for nu, c2 in _act(-a, lam, c, h):
                _add(out, {nu: coef * c2})
        for lam, coef in _act(-(a + b), rest, c, h):
            _add(out, {lam: (a - b) * coef})
        return tuple(out.items())
    # n > 0: L_n L_{-a} = L_{-a} L_n + (n + a) L_{n-a} + delta_{n,a} (n^3 - n)/12 c
    for lam, coef in _act(n, rest, c, h):
        for nu, c2 in _act(-a, lam, c, h):
            _add(out, {nu: coef * c2})
    for lam, coef in _act(n - a, rest, c, h):
        _add(out, {lam: (n + a) * coef})
    if n == a:
        _add(out, {rest: Fraction(n ** 3 - n, 12) * c})
    return tuple(out.items())


def apply_L(n, v, p):
    """Exact action of L_n on a Verma vector (dict partition -> coefficient)."""
    out = {}
    c, h = Fraction(p.c), Fraction(p.h)
    for mu, coef in v.items():
        for lam, c2 in _act(n, tuple(mu), c, h):
            _add(out, {lam: coef * c2})
    return out


def apply_word(word, v, p):
    """Apply L_{word[0]} L_{word[1]} ... to v (rightmost first)."""
    for n in reversed(word):
        v = apply_L(n, v, p)
    return v


def basis_vector(mu):
    return {tuple(mu): Fraction(1)}


@lru_cache(maxsize=None)
def _gram(n, c, h):
    basis = partitions_of(n)
    p = VirParams(c, h)
    rows = []
    for mu in basis:
        row = []
        for nu in basis:
            # (L_{-mu_1} ... v, v_nu) = (v, ... L_{mu_2} L_{mu_1} v_nu)
            v = basis_vector(nu)
            for part in mu:
                v = apply_L(part, v, p)
            row.append(v.get((), Fraction(0)))
        rows.append(tuple(row))
    return tuple(rows)


def gram(n, p):
    """Shapovalov matrix at level n in the basis ``partitions_of(n)``."""
    return [list(row) for row in _gram(n, Fraction(p.c), Fraction(p.h))]


@lru_cache(maxsize=None)
def _gram_inverse(n, c, h):
    inv = mat_inverse(_gram(n, c, h), level=n)
    return tuple(tuple(row) for row in inv)


def gram_inverse(n, p):
    return [list(row) for row in _gram_inverse(n, Fraction(p.c), Fraction(p.h))]


# ---------------------------------------------------------------- vertex operator

class VertexElements:
    """Normalized matrix elements S_{mu,nu}(k1, h, k2) at central charge c.

    Evaluated by peeling generators off either argument with the intertwining
    relation; ``peel`` chooses which side is reduced first.
    """

    def __init__(self, k1, h, k2, c, peel="right"):
        self.k1, self.h, self.k2, self.c = (Fraction(x) for x in (k1, h, k2, c))
        if peel not in ("right", "left"):
            raise ValueError("peel must be 'right' or 'left'")
        self.peel = peel
        self.src = VirParams(self.c, self.k1)
        self.dst = VirParams(self.c, self.k2)
        self._cache = {}

    def grading(self, mu, nu):
        return self.k2 - self.h - self.k1 + sum(nu) - sum(mu)

    def __call__(self, mu, nu):
        mu, nu = tuple(mu), tuple(nu)
        key = (mu, nu)
        if key not in self._cache:
            self._cache[key] = self._compute(mu, nu)
        return self._cache[key]

    def pair(self, u, w):
        """Bilinear extension to Verma vectors u in M_k1, w in M_k2."""
        return sum((cu * cw * self(mu, nu) for mu, cu in u.items() for nu, cw in w.items()),
                   Fraction(0))

    def _compute(self, mu, nu):
        if not mu and not nu:
            return Fraction(1)
        right_first = self.peel == "right"
        if nu and (right_first or not mu):
            n, rest = nu[0], nu[1:]
            lowered = apply_L(n, basis_vector(mu), self.src)
            coef = self.h * (n + 1) + self.grading(mu, rest)
            return self.pair(lowered, basis_vector(rest)) + coef * self(mu, rest)
        n, rest = mu[0], mu[1:]
        lowered = apply_L(n, basis_vector(nu), self.dst)
        coef = self.h * (1 - n) + self.grading(rest, nu)
        return self.pair(basis_vector(rest), lowered) - coef * self(rest, nu)


def S_element(mu, nu, k1, h, k2, c, peel="right"):
    return VertexElements(k1, h, k2, c, peel)(mu, nu)


def block(c, ks, hs, order):
    """Torus conformal block, contracted with inverse Shapovalov matrices.

    ``ks[i]`` is the weight of the module between vertex operators i-1 and i
    (cyclically); operator i maps M_{ks[i]} to M_{ks[i+1]} with weight hs[i].
    """
    c = Fraction(c)
    ks = [Fraction(k) for k in ks]
    hs = [Fraction(h) for h in hs]
    N = len(ks)
    if len(hs) != N:
        raise ValueError("need as many module weights as vertex weights")
    ops = [VertexElements(ks[i], hs[i], ks[(i + 1) % N], c) for i in range(N)]
    invs = {}

    def inverse(i, n):
        if (i, n) not in invs:
            try:
                invs[(i, n)] = _gram_inverse(n, c, ks[i])
            except SingularGram as exc:
                raise SingularGram(f"singular Shapovalov form at level {n}, weight {ks[i]}", n) from exc
        return invs[(i, n)]

    coeffs = {}
    for total in range(order + 1):
        for sizes in compositions(total, N):
            bases = [partitions_of(s) for s in sizes]
            value = Fraction(0)
            # sum over mu_i, nu_i in level sizes[i] of prod S_{nu_i, mu_{i+1}} [K^-1]_{mu_i nu_i}
            index_sets = [range(len(b)) for b in bases]
            for mus in product(*index_sets):
                for nus in product(*index_sets):
                    term = Fraction(1)
                    for i in range(N):
                        kinv = inverse(i, sizes[i])[mus[i]][nus[i]]
                        if not kinv:
                            term = 0
                            break
                        j = (i + 1) % N
                        term *= kinv * ops[i](bases[i][nus[i]], bases[j][mus[j]])
                        if not term:
                            break
                    value += term
            if value:
                coeffs[sizes] = coeffs.get(sizes, 0) + value
    return QSeries(N, order, coeffs)


def agt_substitution(t1, t2, a_list, m_list):
    """Map gauge parameters to (c, ks, hs)."""
    t1, t2 = Fraction(t1), Fraction(t2)
    s = t1 + t2
    c = 1 + 6 * s * s / (t1 * t2)
    ks = [(s * s - 4 * Fraction(a) ** 2) / (4 * t1 * t2) for a in a_list]
    hs = [Fraction(m) * (s - Fraction(m)) / (t1 * t2) for m in m_list]
    return c, ks, hs
