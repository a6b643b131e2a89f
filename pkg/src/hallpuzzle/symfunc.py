"""Hall-Littlewood, t-Schur and Schur polynomials in finitely many variables.

Everything is built from polynomial steps only: Hall-Littlewood polynomials
come from sums over interlacing chains, t-Schur polynomials from a
Jacobi-Trudi determinant or from one-variable branching, and Schur
polynomials from the classical determinant in complete homogeneous
polynomials.
"""

from enum import Enum
from functools import lru_cache
from itertools import combinations_with_replacement

from .partitions import (
    Partition,
    horizontal_strips_below,
    is_horizontal_strip,
    is_vertical_strip,
    partitions_of,
)
from .polyalg import ONE, ZERO, InconsistencyError, MultiPoly, UniPoly


class Basis(Enum):
    HL_P = "hl_p"
    SCHUR = "schur"


class CoeffFns:
    """Scalar coefficient functions of partitions."""

    @staticmethod
    def b(lam):
        return _b(Partition(lam).stripped())

    @staticmethod
    def B(lam):
        lam = Partition(lam)
        out = _b(lam.stripped())
        for j in range(1, lam.multiplicity(0) + 1):
            out = out * UniPoly.one_minus_t_pow(j)
        return out

    @staticmethod
    def psi(lam, mu):
        """Zero unless ``lam/mu`` is a horizontal strip."""
        lam, mu = Partition(lam).stripped(), Partition(mu).stripped()
        if not is_horizontal_strip(lam, mu):
            return ZERO
        out = ONE
        for i in set(mu):
            m_mu = mu.multiplicity(i)
            if m_mu == lam.multiplicity(i) + 1:
                out = out * UniPoly.one_minus_t_pow(m_mu)
        return out

    @staticmethod
    def phi(lam, mu):
        """``(b_lam / b_mu) psi_{lam/mu}``; a polynomial for every horizontal strip."""
        psi = CoeffFns.psi(lam, mu)
        if not psi:
            return ZERO
        return (CoeffFns.b(lam) * psi).exact_divide(CoeffFns.b(mu))


@lru_cache(maxsize=None)
def _b(lam):
    out = ONE
    for i in set(lam):
        for j in range(1, lam.multiplicity(i) + 1):
            out = out * UniPoly.one_minus_t_pow(j)
    return out


class SymPoly:
    """A polynomial in ``x1..xn`` known to be symmetric."""

    __slots__ = ("poly",)

    def __init__(self, poly, check=False):
        if isinstance(poly, SymPoly):
            poly = poly.poly
        if check and not poly.is_symmetric():
            raise InconsistencyError("polynomial is not symmetric")
        self.poly = poly

    @property
    def n(self):
        return self.poly.n

    @property
    def terms(self):
        return self.poly.terms

    def is_symmetric(self):
        return self.poly.is_symmetric()

    def __eq__(self, other):
        if isinstance(other, SymPoly):
            other = other.poly
        return self.poly == other

    def __hash__(self):
        return hash(self.poly)

    def __add__(self, other):
        return SymPoly(self.poly + _unwrap(other))

    __radd__ = __add__

    def __sub__(self, other):
        return SymPoly(self.poly - _unwrap(other))

    def __neg__(self):
        return SymPoly(-self.poly)

    def __mul__(self, other):
        return SymPoly(self.poly * _unwrap(other))

    __rmul__ = __mul__

    def coeff_of(self, exponents):
        return self.poly.coeff_of(exponents)

    def substitute_t(self, value):
        return SymPoly(self.poly.substitute_t(value))

    def __str__(self):
        return str(self.poly)

    def __repr__(self):
        return f"SymPoly({self.poly})"


def _unwrap(value):
    return value.poly if isinstance(value, SymPoly) else value


def _extend(terms, power):
    """Append one variable carrying ``power`` to every exponent vector."""
    return {e + (power,): c for e, c in terms.items()}


def _accumulate(out, terms, coeff):
    for e, c in terms.items():
        v = c * coeff
        prev = out.get(e)
        if prev is None:
            out[e] = v
        else:
            s = prev + v
            if s:
                out[e] = s
            else:
                del out[e]


@lru_cache(maxsize=None)
def _skew_P_dict(lam, mu, n):
    # lam, mu stripped; the returned dict is shared and must not be mutated
    if n == 0:
        return {(): ONE} if lam == mu else {}
    out = {}
    for nu in horizontal_strips_below(lam, len(lam)):
        nu = nu.stripped()
        if not nu.contains(mu) or len(nu) > len(mu) + n - 1:
            continue
        psi = CoeffFns.psi(lam, nu)
        if not psi:
            continue
        inner = _skew_P_dict(nu, mu, n - 1)
        if inner:
            _accumulate(out, _extend(inner, sum(lam) - sum(nu)), psi)
    return out


def hl_skew_P(lam, mu, n):
    """Skew Hall-Littlewood P in ``n`` variables (zero if ``mu`` is not inside ``lam``)."""
    lam, mu = Partition(lam).stripped(), Partition(mu).stripped()
    if not lam.contains(mu):
        return SymPoly(MultiPoly(n))
    return SymPoly(MultiPoly._wrap(n, dict(_skew_P_dict(lam, mu, n))))


def hl_P(lam, n):
    lam = Partition(lam)
    if len(lam.stripped()) > n:
        return SymPoly(MultiPoly(n))
    return hl_skew_P(lam, (), n)


def hl_skew_Q(lam, mu, n):
    """``(b_lam / b_mu) P_{lam/mu}``, divided coefficientwise."""
    P = hl_skew_P(lam, mu, n)
    b_lam, b_mu = CoeffFns.b(lam), CoeffFns.b(mu)
    return SymPoly(P.poly.map_coeffs(lambda c: (c * b_lam).exact_divide(b_mu)))


def hl_Q(lam, n):
    return hl_skew_Q(lam, (), n)


@lru_cache(maxsize=None)
def _q_terms(k, n):
    if k < 0:
        return ()
    if k == 0:
        return (((0,) * n, ONE),)
    one_minus_t = UniPoly.one_minus_t_pow(1)
    out = []
    for combo in combinations_with_replacement(range(n), k):
        e = [0] * n
        for i in combo:
            e[i] += 1
        out.append((tuple(e), one_minus_t ** sum(1 for x in e if x)))
    return tuple(out)


def q_gen(k, n):
    """Coefficient of ``y^k`` in ``prod_i (1 - t x_i y) / (1 - x_i y)``."""
    return SymPoly(MultiPoly._wrap(n, dict(_q_terms(k, n))))


def complete_h(k, n):
    if k < 0:
        return MultiPoly(n)
    out = {}
    for combo in combinations_with_replacement(range(n), k):
        e = [0] * n
        for i in combo:
            e[i] += 1
        out[tuple(e)] = ONE
    return MultiPoly._wrap(n, out)


def _determinant(entry, size, n):
    """Laplace expansion along rows, memoized on the set of used columns."""
    memo = {}

    def minor(row, used):
        if row == size:
            return MultiPoly.constant(n, 1)
        key = (row, used)
        if key in memo:
            return memo[key]
        total = MultiPoly(n)
        sign = 1
        for col in range(size):
            if used >> col & 1:
                continue
            e = entry(row, col)
            if e:
                sub = minor(row + 1, used | (1 << col))
                if sub:
                    term = e * sub
                    total = total + (term if sign > 0 else -term)
            sign = -sign
        memo[key] = total
        return total

    return minor(0, 0)


@lru_cache(maxsize=None)
def _tschur(lam, n):
    size = len(lam)
    return _determinant(lambda i, j: q_gen(lam[i] - i + j, n).poly, size, n)


def tschur_S(lam, n):
    """t-Schur polynomial via the Jacobi-Trudi determinant in ``q_k``."""
    return SymPoly(_tschur(Partition(lam).stripped(), n))


def one_variable_skew_S(lam, nu):
    """Coefficient of ``z^{|lam|-|nu|}`` in the one-variable skew t-Schur polynomial."""
    lam, nu = Partition(lam).stripped(), Partition(nu).stripped()
    return _one_var_S(lam, nu)


@lru_cache(maxsize=None)
def _one_var_S(lam, nu):
    if not lam.contains(nu):
        return ZERO
    total = ZERO
    minus_t = UniPoly((0, -1))
    for mu in _between(lam, nu):
        if is_horizontal_strip(mu, nu) and is_vertical_strip(lam, mu):
            total = total + minus_t ** (sum(lam) - sum(mu))
    return total


def _between(outer, inner):
    """Partitions ``p`` with ``inner`` inside ``p`` inside ``outer``."""
    n = len(outer)
    inner = inner.pad_to(n)
    out = []

    def rec(k, acc):
        if k == n:
            out.append(Partition(acc).stripped())
            return
        hi = outer[k] if k == 0 else min(outer[k], acc[-1])
        for v in range(inner[k], hi + 1):
            rec(k + 1, acc + (v,))
    rec(0, ())
    return out


@lru_cache(maxsize=None)
def _tschur_skew(lam, mu, n):
    if n == 0:
        return {(): ONE} if lam == mu else {}
    out = {}
    for nu in _between(lam, mu):
        c = _one_var_S(lam, nu)
        if not c:
            continue
        inner = _tschur_skew(nu, mu, n - 1)
        if inner:
            _accumulate(out, _extend(inner, sum(lam) - sum(nu)), c)
    return out


def tschur_skew_S(lam, mu, n):
    """Skew t-Schur polynomial by iterated one-variable branching."""
    lam, mu = Partition(lam).stripped(), Partition(mu).stripped()
    if not lam.contains(mu):
        return SymPoly(MultiPoly(n))
    return SymPoly(MultiPoly._wrap(n, dict(_tschur_skew(lam, mu, n))))


@lru_cache(maxsize=None)
def _schur(lam, n):
    return _determinant(lambda i, j: complete_h(lam[i] - i + j, n), len(lam), n)


def schur_s(lam, n):
    """Schur polynomial via the Jacobi-Trudi determinant in ``h_k``."""
    lam = Partition(lam).stripped()
    if len(lam) > n:
        return SymPoly(MultiPoly(n))
    return SymPoly(_schur(lam, n))


def monomial_m(lam, n):
    """Monomial symmetric polynomial."""
    lam = Partition(lam).stripped()
    if len(lam) > n:
        return SymPoly(MultiPoly(n))
    exps = set(_permutations(tuple(lam.pad_to(n))))
    return SymPoly(MultiPoly._wrap(n, {e: ONE for e in exps}))


def _permutations(seq):
    if len(seq) <= 1:
        yield seq
        return
    seen = set()
    for i, x in enumerate(seq):
        if x in seen:
            continue
        seen.add(x)
        for rest in _permutations(seq[:i] + seq[i + 1:]):
            yield (x,) + rest


def _dominant_part(terms):
    """Terms whose exponent vector is weakly decreasing."""
    return {e: c for e, c in terms.items() if all(a >= b for a, b in zip(e, e[1:]))}


@lru_cache(maxsize=None)
def _basis_dominant(basis, lam, n):
    if basis is Basis.HL_P:
        poly = hl_P(lam, n).poly
    else:
        poly = schur_s(lam, n).poly
    return tuple(_dominant_part(poly.terms).items())


def expand_in_basis(f, basis, n=None, stop_below=None):
    """Coefficients of ``f`` in the Hall-Littlewood P or Schur basis.

    The lexicographically largest weakly decreasing exponent vector is always
    the leading term of its basis element, so it is peeled off repeatedly.
    Only weakly decreasing exponents are tracked; symmetry of ``f`` is checked
    once up front. With ``stop_below`` set, elimination stops as soon as the
    leading exponent falls lexicographically below that partition, leaving the
    coefficients of everything at or above it exact.
    """
    poly = _unwrap(f)
    if n is not None and n != poly.n:
        raise ValueError("variable count mismatch")
    n = poly.n
    if not poly.is_symmetric():
        raise InconsistencyError("cannot expand a non-symmetric polynomial")
    if isinstance(basis, str):
        basis = Basis(basis)
    stop = tuple(Partition(stop_below).stripped().pad_to(n)) if stop_below is not None else None
    work = _dominant_part(poly.terms)
    result = {}
    while work:
        lead = max(work)
        if stop is not None and lead < stop:
            break
        c = work[lead]
        lam = Partition(lead).stripped()
        result[lam] = c
        for e, v in _basis_dominant(basis, lam, n):
            prod = v * c
            prev = work.get(e)
            s = -prod if prev is None else prev - prod
            if s:
                work[e] = s
            else:
                work.pop(e, None)
        if lead in work:
            raise InconsistencyError(f"leading term {lead} not eliminated")
    return result


def branching_check(lam, n, m):
    """Verify ``P_lam(x, y) = sum_mu P_{lam/mu}(x) P_mu(y)`` with ``x`` the first ``n`` variables."""
    lam = Partition(lam)
    total = n + m
    lhs = hl_P(lam, total).poly
    rhs = {}
    for mu in _between(lam.stripped(), Partition(())):
        skew = hl_skew_P(lam, mu, n).poly
        if not skew:
            continue
        straight = hl_P(mu, m).poly
        if not straight:
            continue
        for e1, c1 in skew.terms.items():
            for e2, c2 in straight.terms.items():
                _accumulate(rhs, {e1 + e2: c1}, c2)
    return lhs == MultiPoly._wrap(total, rhs)


def cauchy_check(n_x, n_y, D):
    """Verify the t-Schur/Schur Cauchy identity through total x-degree ``D``."""
    total = n_x + n_y
    lhs = {}
    for d in range(D + 1):
        for lam in partitions_of(d, None, n_y):
            S = tschur_S(lam, n_x).poly
            s = schur_s(lam, n_y).poly
            for e1, c1 in S.terms.items():
                for e2, c2 in s.terms.items():
                    _accumulate(lhs, {e1 + e2: c1}, c2)
    # truncated product, degree tracked in the x variables
    rhs = {(0,) * total: ONE}
    one_minus_t = UniPoly.one_minus_t_pow(1)
    for i in range(n_x):
        for j in range(n_y):
            new = {}
            for e, c in rhs.items():
                deg = sum(e[:n_x])
                _accumulate(new, {e: c}, ONE)
                for k in range(1, D - deg + 1):
                    e2 = list(e)
                    e2[i] += k
                    e2[n_x + j] += k
                    _accumulate(new, {tuple(e2): c}, one_minus_t)
            rhs = new
    return MultiPoly._wrap(total, lhs) == MultiPoly._wrap(total, rhs)
