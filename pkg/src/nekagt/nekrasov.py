"""Instanton partition functions: direct localization sum, Ext-operator trace, Z'."""
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .characters import half_weight, w_weight, w_weight_general
from .errors import DegenerateParameters
from .exactmath import QSeries, euler_function, qpochhammer
from .partitions import compositions, enumerate_tuples, tuple_size


@dataclass
class GaugeConfig:
    """Rank r, N punctures, framings a[i] (each an r-list), masses m[i]."""

    r: int
    a: list
    m: list
    t1: Fraction = Fraction(1)
    t2: Fraction = Fraction(-1)
    order: int = 2
    N: int = field(init=False)

    def __post_init__(self):
        self.a = [[Fraction(x) for x in ai] for ai in self.a]
        self.m = [Fraction(x) for x in self.m]
        self.t1 = Fraction(self.t1)
        self.t2 = Fraction(self.t2)
        self.N = len(self.m)
        if self.r < 1 or self.N < 1 or len(self.a) != self.N:
            raise ValueError("need r >= 1 and one framing per mass")
        if any(len(ai) != self.r for ai in self.a):
            raise ValueError("each framing must have r entries")

    @property
    def specialized(self):
        return self.t1 + self.t2 == 0


@dataclass(frozen=True)
class WMatrixElement:
    source: tuple
    target: tuple
    value: Fraction
    x_power: int


def chains(N, r, order):
    """All N-tuples of r-tuples of partitions of total size <= order."""
    for n in range(order + 1):
        for sizes in compositions(n, N):
            yield from product(*(enumerate_tuples(s, r) for s in sizes))


def x_exponent(i, N):
    """The q-monomial x_i = q_1 q_{i+1} ... q_N (1-based i) as an exponent vector."""
    return tuple(1 if (j == 1 or j > i) else 0 for j in range(1, N + 1))


def _weight(cfg, mus, nus, a, b, m):
    if cfg.specialized:
        return w_weight(mus, nus, a, b, m, cfg.t1)
    return w_weight_general(mus, nus, a, b, m, cfg.t1, cfg.t2)


def Z_direct(cfg):
    """Localization sum over N-tuples of r-tuples of partitions."""
    N = cfg.N
    coeffs = {}
    for chain in chains(N, cfg.r, cfg.order):
        term = Fraction(1)
        for i in range(N):
            j = (i + 1) % N
            try:
                num = _weight(cfg, chain[i], chain[j], cfg.a[i], cfg.a[j], cfg.m[i])
                if not num:
                    term = Fraction(0)
                    break
                term *= num / _weight(cfg, chain[i], chain[i], cfg.a[i], cfg.a[i], 0)
            except (DegenerateParameters, ZeroDivisionError) as exc:
                raise DegenerateParameters(f"degenerate weight at {chain}", chain) from exc
        if term:
            e = tuple(tuple_size(mus) for mus in chain)
            coeffs[e] = coeffs.get(e, 0) + term
    return QSeries(N, cfg.order, coeffs)


def W_element(mus, nus, a, b, m, t=1):
    """Matrix element of the Ext operator from mus (framing a) to nus (framing b)."""
    r = len(mus)
    n_mu = tuple_size(mus)
    hw = half_weight(mus, a, t) * half_weight(nus, b, t)
    if hw == 0:
        raise DegenerateParameters("vanishing half weight", (mus, nus))
    value = (-1) ** (r * n_mu) * w_weight(mus, nus, a, b, m, t) / hw
    return WMatrixElement(tuple(mus), tuple(nus), value, tuple_size(nus) - n_mu)


def Z_trace(cfg):
    """Tr q^d W(x_N) ... W(x_1), with x_i rewritten as q-monomials."""
    if not cfg.specialized:
        raise ValueError("the trace form needs t1 + t2 = 0")
    N = cfg.N
    xs = [x_exponent(i, N) for i in range(1, N + 1)]
    q = (1,) * N
    coeffs = {}
    for chain in chains(N, cfg.r, cfg.order):
        value = Fraction(1)
        exp = [tuple_size(chain[0]) * qe for qe in q]
        for i in range(N):
            j = (i + 1) % N
            try:
                el = W_element(chain[i], chain[j], cfg.a[i], cfg.a[j], cfg.m[i], cfg.t1)
            except (DegenerateParameters, ZeroDivisionError) as exc:
                raise DegenerateParameters(f"degenerate weight at {chain}", chain) from exc
            value *= el.value
            exp = [e + el.x_power * xe for e, xe in zip(exp, xs[i])]
        if value:
            assert min(exp) >= 0
            exp = tuple(exp)
            coeffs[exp] = coeffs.get(exp, 0) + value
    return QSeries(N, cfg.order, coeffs)


def delta(m, n, t1, t2):
    return Fraction(m) * (t1 + t2 - Fraction(n)) / (t1 * t2)


def Z_prime(cfg):
    """(q;q)^{2 sum Delta_ii - 1} prod_{i<j} (x_i/x_j; q)^{2 Delta_ij} (q x_j/x_i; q)^{2 Delta_ji}."""
    N, Q = cfg.N, cfg.order
    t1, t2, m = cfg.t1, cfg.t2, cfg.m
    q = (1,) * N
    total = sum(2 * delta(mi, mi, t1, t2) for mi in m) - 1
    out = euler_function(N, Q).pow(total)
    for i in range(1, N + 1):
        for j in range(i + 1, N + 1):
            ratio = tuple(1 if i < k <= j else 0 for k in range(1, N + 1))
            other = tuple(a - b for a, b in zip(q, ratio))
            out = out * qpochhammer(ratio, q, N, Q).pow(2 * delta(m[i - 1], m[j - 1], t1, t2))
            out = out * qpochhammer(other, q, N, Q).pow(2 * delta(m[j - 1], m[i - 1], t1, t2))
    return out
