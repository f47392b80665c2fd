"""Exact scalars, Laurent polynomials, truncated q-series and small matrices.

Everything is over :class:`fractions.Fraction`.  Symbolic parameters are never
carried around; identities between rational functions are checked by
evaluating at several random rational points (see :func:`random_point`).
"""
from fractions import Fraction
from math import factorial
import random

from .errors import DegenerateParameters, NonConvergent, NonUnitSeries, SingularGram

Rat = Fraction

RANDOM_BOUND = 97


def rat(x):
    """Parse ints, Fractions and ``"p/q"`` strings into a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x.strip())
    return Fraction(x)


def rat_str(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def random_point(seed, names, bound=RANDOM_BOUND):
    """Deterministic small nonzero rationals ``p/q`` with ``|p|, q <= bound``."""
    rng = random.Random(seed)
    point = {}
    for name in names:
        num = 0
        while num == 0:
            num = rng.randint(-bound, bound)
        point[name] = Fraction(num, rng.randint(1, bound))
    return point


# ---------------------------------------------------------------- Laurent polynomials

class LaurentPoly:
    """Integer Laurent polynomial in a fixed, ordered list of variables."""

    __slots__ = ("vars", "terms")

    def __init__(self, variables, terms=None):
        self.vars = tuple(variables)
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != len(self.vars):
                raise ValueError("exponent length does not match variables")
            if c:
                clean[exp] = clean.get(exp, 0) + c
                if not clean[exp]:
                    del clean[exp]
        self.terms = clean

    @classmethod
    def monomial(cls, variables, exp, coeff=1):
        return cls(variables, {tuple(exp): coeff})

    @classmethod
    def const(cls, variables, c=1):
        return cls(variables, {(0,) * len(tuple(variables)): c})

    def _check(self, other):
        if self.vars != other.vars:
            raise ValueError(f"variable mismatch {self.vars} vs {other.vars}")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(self.vars, out)

    def __neg__(self):
        return LaurentPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly(self.vars, {e: c * other for e, c in self.terms.items()})
        self._check(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(self.vars, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, LaurentPoly) and self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def __len__(self):
        return len(self.terms)

    def conjugate(self):
        return LaurentPoly(self.vars, {tuple(-a for a in e): c for e, c in self.terms.items()})

    def substitute(self, new_vars, images):
        """Monomial substitution: variable i goes to the exponent vector images[i]."""
        out = {}
        n = len(new_vars)
        for e, c in self.terms.items():
            ne = [0] * n
            for a, img in zip(e, images):
                for k in range(n):
                    ne[k] += a * img[k]
            ne = tuple(ne)
            out[ne] = out.get(ne, 0) + c
        return LaurentPoly(new_vars, out)

    def coefficient_sum(self):
        return sum(self.terms.values())

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(
                v if a == 1 else f"{v}^{a}" for v, a in zip(self.vars, e) if a
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts)


def laurent_conjugate(p):
    return p.conjugate()


def euler_eval(chi, point, shift=0):
    """Equivariant Euler class of a character at a rational parameter point.

    Each monomial ``k * prod x_j^{a_j}`` contributes ``(shift + sum a_j p_j)^k``
    where ``p_j = point[x_j]``.  A zero weight with ``k > 0`` makes the result
    zero; with ``k < 0`` it is a pole and raises :class:`DegenerateParameters`.
    """
    shift = Fraction(shift)
    values = []
    for v in chi.vars:
        if v not in point:
            raise KeyError(f"variable {v!r} unbound in parameter point")
        values.append(Fraction(point[v]))
    num = Fraction(1)
    den = Fraction(1)
    zero = False
    for e, k in chi.terms.items():
        wt = shift + sum(a * p for a, p in zip(e, values) if a)
        if wt == 0:
            if k < 0:
                raise DegenerateParameters(f"zero weight in denominator at monomial {e}", e)
            zero = True
        elif k > 0:
            num *= wt ** k
        else:
            den *= wt ** (-k)
    return Fraction(0) if zero else num / den


# ---------------------------------------------------------------- truncated q-series

class QSeries:
    """Power series in ``nvars`` variables truncated at total degree ``order``."""

    __slots__ = ("nvars", "order", "coeffs")

    def __init__(self, nvars, order, coeffs=None):
        self.nvars = nvars
        self.order = order
        clean = {}
        for e, c in (coeffs or {}).items():
            e = tuple(e)
            if len(e) != nvars or min(e, default=0) < 0:
                raise ValueError(f"bad exponent {e}")
            if sum(e) <= order and c:
                clean[e] = clean.get(e, 0) + Fraction(c)
                if not clean[e]:
                    del clean[e]
        self.coeffs = clean

    @classmethod
    def one(cls, nvars, order):
        return cls(nvars, order, {(0,) * nvars: 1})

    @classmethod
    def monomial(cls, nvars, order, exp, coeff=1):
        return cls(nvars, order, {tuple(exp): coeff})

    def constant_term(self):
        return self.coeffs.get((0,) * self.nvars, Fraction(0))

    def _compatible(self, other):
        if not isinstance(other, QSeries):
            other = QSeries(self.nvars, self.order, {(0,) * self.nvars: other})
        if other.nvars != self.nvars:
            raise ValueError("variable count mismatch")
        return other

    def __add__(self, other):
        other = self._compatible(other)
        order = min(self.order, other.order)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return QSeries(self.nvars, order, out)

    __radd__ = __add__

    def __neg__(self):
        return QSeries(self.nvars, self.order, {e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-self._compatible(other))

    def __rsub__(self, other):
        return self._compatible(other) - self

    def __mul__(self, other):
        if not isinstance(other, QSeries):
            c = Fraction(other)
            return QSeries(self.nvars, self.order, {e: v * c for e, v in self.coeffs.items()})
        other = self._compatible(other)
        order = min(self.order, other.order)
        out = {}
        for e1, c1 in self.coeffs.items():
            d1 = sum(e1)
            for e2, c2 in other.coeffs.items():
                if d1 + sum(e2) > order:
                    continue
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return QSeries(self.nvars, order, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.nvars == other.nvars and self.order == other.order and self.coeffs == other.coeffs

    def truncate(self, order):
        return QSeries(self.nvars, min(order, self.order), self.coeffs)

    def coefficient(self, exp):
        return self.coeffs.get(tuple(exp), Fraction(0))

    def invert(self):
        c0 = self.constant_term()
        if c0 == 0:
            raise NonUnitSeries("series with zero constant term is not invertible")
        g = QSeries.one(self.nvars, self.order) - self * (1 / c0)
        # 1/f = (1/c0) * sum g^n, g has no constant term
        out = QSeries.one(self.nvars, self.order)
        term = QSeries.one(self.nvars, self.order)
        for _ in range(self.order):
            term = term * g
            out = out + term
        return out * (1 / c0)

    def log(self):
        if self.constant_term() != 1:
            raise NonUnitSeries("log needs constant term 1")
        g = self - 1
        out = QSeries(self.nvars, self.order)
        term = QSeries.one(self.nvars, self.order)
        for n in range(1, self.order + 1):
            term = term * g
            out = out + term * Fraction((-1) ** (n + 1), n)
        return out

    def exp(self):
        if self.constant_term() != 0:
            raise NonUnitSeries("exp needs zero constant term")
        out = QSeries.one(self.nvars, self.order)
        term = QSeries.one(self.nvars, self.order)
        for n in range(1, self.order + 1):
            term = term * self
            out = out + term * Fraction(1, factorial(n))
        return out

    def pow(self, alpha):
        alpha = Fraction(alpha)
        if self.constant_term() != 1:
            raise NonUnitSeries("rational powers need constant term 1")
        if alpha == 0:
            return QSeries.one(self.nvars, self.order)
        return (self.log() * alpha).exp()

    def __repr__(self):
        if not self.coeffs:
            return f"O(deg {self.order + 1})"
        items = sorted(self.coeffs.items(), key=lambda t: (sum(t[0]), tuple(-a for a in t[0])))
        parts = []
        for e, c in items:
            mono = "*".join(
                (f"q{i + 1}" if self.nvars > 1 else "q") + (f"^{a}" if a > 1 else "")
                for i, a in enumerate(e) if a
            )
            parts.append(rat_str(c) + ("*" + mono if mono else ""))
        return " + ".join(parts) + f" + O(deg {self.order + 1})"


def series_mul(a, b):
    return a * b


def series_add(a, b):
    return a + b


def series_invert(a):
    return a.invert()


def series_pow_rational(f, alpha):
    return f.pow(alpha)


def qpochhammer(x_exp, q_exp, nvars, order):
    """Truncated ``prod_{i>=0} (1 - x q^i)`` for q-monomials x and q.

    ``x_exp`` and ``q_exp`` are exponent vectors; q must have positive degree.
    """
    x_exp = tuple(x_exp)
    q_exp = tuple(q_exp)
    if sum(q_exp) <= 0:
        raise NonConvergent("q must be a monomial of positive degree")
    if sum(x_exp) <= 0:
        raise NonConvergent("x must be a monomial of positive degree")
    out = QSeries.one(nvars, order)
    i = 0
    while sum(x_exp) + i * sum(q_exp) <= order:
        e = tuple(a + i * b for a, b in zip(x_exp, q_exp))
        out = out * (QSeries.one(nvars, order) - QSeries.monomial(nvars, order, e))
        i += 1
    return out


def euler_function(nvars, order, q_exp=None):
    """``(q;q)_inf`` for the monomial q (default: q1*...*qN)."""
    if q_exp is None:
        q_exp = (1,) * nvars
    return qpochhammer(q_exp, q_exp, nvars, order)


# ---------------------------------------------------------------- exact matrices

def mat_mul(a, b):
    return [[sum((a[i][k] * b[k][j] for k in range(len(b))), Fraction(0))
             for j in range(len(b[0]))] for i in range(len(a))]


def identity(n):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def mat_inverse(m, level=None):
    """Gauss-Jordan inverse over the rationals; raises SingularGram."""
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(m)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            raise SingularGram(f"singular matrix at level {level}", level)
        a[col], a[pivot] = a[pivot], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def mat_rank(m):
    a = [[Fraction(x) for x in row] for row in m]
    if not a:
        return 0
    rows, cols = len(a), len(a[0])
    rank = 0
    for col in range(cols):
        pivot = next((r for r in range(rank, rows) if a[r][col] != 0), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        for r in range(rank + 1, rows):
            if a[r][col] != 0:
                f = a[r][col] / a[rank][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[rank])]
        rank += 1
        if rank == rows:
            break
    return rank
