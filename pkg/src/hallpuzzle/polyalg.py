"""Exact polynomial arithmetic over the integers.

``UniPoly`` is a polynomial in the deformation parameter ``t``.
``MultiPoly`` is a sparse polynomial in ``x1..xn`` (or ``z1..zn``) whose
coefficients are ``UniPoly`` values; in Laurent mode exponents may be negative
down to a configured bound.
"""

import re
from dataclasses import dataclass
from functools import lru_cache


class InconsistencyError(ArithmeticError):
    """An exactness guarantee failed (nonzero remainder, stray Laurent term)."""


class UniPoly:
    """Integer polynomial in ``t`` stored as an ascending coefficient tuple."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs=()):
        if isinstance(coeffs, int):
            coeffs = (coeffs,)
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)
        self._hash = None

    @classmethod
    def _raw(cls, coeffs):
        obj = cls.__new__(cls)
        obj.coeffs = coeffs
        obj._hash = None
        return obj

    @classmethod
    def coerce(cls, value):
        if isinstance(value, UniPoly):
            return value
        if isinstance(value, int):
            return ONE if value == 1 else cls((value,))
        raise TypeError(f"cannot coerce {value!r} to UniPoly")

    @classmethod
    def monomial(cls, power, coeff=1):
        if power < 0:
            raise InconsistencyError(f"negative power t^{power}")
        return cls((0,) * power + (coeff,))

    @classmethod
    def one_minus_t_pow(cls, k):
        """``1 - t^k`` (zero for k = 0)."""
        return _one_minus_t_pow(k)

    def __bool__(self):
        return bool(self.coeffs)

    def is_zero(self):
        return not self.coeffs

    def degree(self):
        return len(self.coeffs) - 1

    def low_degree(self):
        """Smallest power with a nonzero coefficient (-1 for zero)."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return -1

    def __eq__(self, other):
        if isinstance(other, int):
            other = UniPoly(other)
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("UniPoly", self.coeffs))
        return self._hash

    def __add__(self, other):
        if isinstance(other, int):
            other = UniPoly(other)
        elif not isinstance(other, UniPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly._raw(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, int):
            other = UniPoly(other)
        elif not isinstance(other, UniPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return UniPoly.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return ZERO
            return UniPoly._raw(tuple(c * other for c in self.coeffs))
        if not isinstance(other, UniPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        if len(b) == 1:
            if b[0] == 1:
                return self
            return UniPoly._raw(tuple(c * b[0] for c in a))
        if len(a) == 1:
            if a[0] == 1:
                return other
            return UniPoly._raw(tuple(c * a[0] for c in b))
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, t):
        value = 0
        for c in reversed(self.coeffs):
            value = value * t + c
        return value

    def shift(self, k):
        """Multiply by ``t^k``; negative ``k`` must divide exactly."""
        if k >= 0:
            return UniPoly._raw((0,) * k + self.coeffs) if self.coeffs else ZERO
        if any(self.coeffs[:-k]):
            raise InconsistencyError(f"{self} is not divisible by t^{-k}")
        return UniPoly._raw(self.coeffs[-k:])

    def divmod(self, other):
        other = UniPoly.coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        lead = other.coeffs[-1]
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return ZERO, self
        quot = [0] * (dq + 1)
        for k in range(dq, -1, -1):
            c = rem[k + len(other.coeffs) - 1]
            if c % lead:
                raise InconsistencyError(f"non-integral quotient dividing {self} by {other}")
            q = c // lead
            quot[k] = q
            if q:
                for j, d in enumerate(other.coeffs):
                    rem[k + j] -= q * d
        return UniPoly(quot), UniPoly(rem)

    def exact_divide(self, other):
        quot, rem = self.divmod(other)
        if rem:
            raise InconsistencyError(f"{self} is not divisible by {other}")
        return quot

    def __str__(self):
        return format_unipoly(self)

    def __repr__(self):
        return f"UniPoly({format_unipoly(self)!r})"


ZERO = UniPoly(())
ONE = UniPoly((1,))
T = UniPoly((0, 1))


@lru_cache(maxsize=None)
def _one_minus_t_pow(k):
    if k == 0:
        return ZERO
    return UniPoly((1,) + (0,) * (k - 1) + (-1,))


def format_unipoly(p, var="t"):
    """Ascending powers with explicit signs, e.g. ``1 - t^3``."""
    if not p.coeffs:
        return "0"
    pieces = []
    for k, c in enumerate(p.coeffs):
        if not c:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            power = var if k == 1 else f"{var}^{k}"
            body = power if mag == 1 else f"{mag}{power}"
        if not pieces:
            pieces.append(body if c > 0 else f"-{body}")
        else:
            pieces.append(("+ " if c > 0 else "- ") + body)
    return " ".join(pieces)


_TERM = re.compile(r"^(\d*)(?:t(?:\^(\d+))?)?$")


def parse_unipoly(text):
    """Inverse of ``format_unipoly``."""
    text = text.strip()
    if text == "0":
        return ZERO
    tokens = text.replace("- ", "-").replace("+ ", "+").split()
    out = {}
    for tok in tokens:
        sign = 1
        if tok[0] in "+-":
            sign = -1 if tok[0] == "-" else 1
            tok = tok[1:]
        m = _TERM.match(tok)
        if not m or not tok:
            raise ValueError(f"cannot parse polynomial term {tok!r}")
        digits, power = m.group(1), m.group(2)
        if "t" in tok:
            k = int(power) if power else 1
            c = int(digits) if digits else 1
        else:
            k, c = 0, int(digits)
        out[k] = out.get(k, 0) + sign * c
    top = max(out) if out else -1
    return UniPoly(tuple(out.get(k, 0) for k in range(top + 1)))


@dataclass(frozen=True)
class SeriesTruncation:
    """Maximum power retained for each geometric factor of the kernel."""

    bound: int

    def __post_init__(self):
        if self.bound < 0:
            raise ValueError("series bound must be non-negative")


class MultiPoly:
    """Sparse polynomial in ``n`` variables with ``UniPoly`` coefficients."""

    __slots__ = ("n", "terms", "laurent_bound", "var")

    def __init__(self, n, terms=None, laurent_bound=None, var="x"):
        self.n = n
        self.laurent_bound = laurent_bound
        self.var = var
        self.terms = {}
        if terms:
            for exps, c in terms.items():
                c = UniPoly.coerce(c)
                if c:
                    exps = tuple(exps)
                    self._check_exps(exps)
                    prev = self.terms.get(exps)
                    s = c if prev is None else prev + c
                    if s:
                        self.terms[exps] = s
                    else:
                        self.terms.pop(exps, None)

    def _check_exps(self, exps):
        if len(exps) != self.n:
            raise ValueError(f"exponent vector {exps} has wrong length for {self.n} variables")
        low = 0 if self.laurent_bound is None else self.laurent_bound
        if any(e < low for e in exps):
            raise InconsistencyError(f"exponent below {low} in {exps}")

    @classmethod
    def _wrap(cls, n, terms, laurent_bound=None, var="x"):
        obj = cls.__new__(cls)
        obj.n = n
        obj.terms = terms
        obj.laurent_bound = laurent_bound
        obj.var = var
        return obj

    @classmethod
    def constant(cls, n, c=1, var="x"):
        c = UniPoly.coerce(c)
        return cls._wrap(n, {(0,) * n: c} if c else {}, var=var)

    @classmethod
    def variable(cls, i, n, var="x"):
        """The variable ``x_i`` (1-based)."""
        exps = [0] * n
        exps[i - 1] = 1
        return cls._wrap(n, {tuple(exps): ONE}, var=var)

    @classmethod
    def monomial(cls, exps, coeff=1, var="x"):
        exps = tuple(exps)
        bound = min(0, min(exps, default=0))
        poly = cls._wrap(len(exps), {}, laurent_bound=bound if bound < 0 else None, var=var)
        c = UniPoly.coerce(coeff)
        if c:
            poly.terms[exps] = c
        return poly

    def _like(self, terms):
        return MultiPoly._wrap(self.n, terms, self.laurent_bound, self.var)

    def copy(self):
        return self._like(dict(self.terms))

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, UniPoly)):
            other = MultiPoly.constant(self.n, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def _bound_with(self, other):
        bounds = [b for b in (self.laurent_bound, other.laurent_bound) if b is not None]
        return min(bounds) if bounds else None

    def __add__(self, other):
        if isinstance(other, (int, UniPoly)):
            other = MultiPoly.constant(self.n, other, self.var)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        if other.n != self.n:
            raise ValueError("variable counts differ")
        out = dict(self.terms)
        for e, c in other.terms.items():
            prev = out.get(e)
            if prev is None:
                out[e] = c
            else:
                s = prev + c
                if s:
                    out[e] = s
                else:
                    del out[e]
        return MultiPoly._wrap(self.n, out, self._bound_with(other), self.var)

    __radd__ = __add__

    def __neg__(self):
        return self._like({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, UniPoly)):
            other = MultiPoly.constant(self.n, other, self.var)
        return self + (-other)

    def __rsub__(self, other):
        return MultiPoly.constant(self.n, other, self.var) - self

    def __mul__(self, other):
        if isinstance(other, (int, UniPoly)):
            c = UniPoly.coerce(other)
            if not c:
                return self._like({})
            return self._like({e: v * c for e, v in self.terms.items()})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        if other.n != self.n:
            raise ValueError("variable counts differ")
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                prod = c1 * c2
                prev = out.get(e)
                if prev is None:
                    out[e] = prod
                else:
                    s = prev + prod
                    if s:
                        out[e] = s
                    else:
                        del out[e]
        out = {e: c for e, c in out.items() if c}
        return MultiPoly._wrap(self.n, out, self._bound_with(other), self.var)

    __rmul__ = __mul__

    def __pow__(self, k):
        result = MultiPoly.constant(self.n, 1, self.var)
        for _ in range(k):
            result = result * self
        return result

    def scaled_shift(self, coeff, i, power):
        """Multiply by ``coeff * x_i^power`` (1-based ``i``)."""
        coeff = UniPoly.coerce(coeff)
        if not coeff:
            return self._like({})
        k = i - 1
        out = {}
        for e, c in self.terms.items():
            if power:
                e = e[:k] + (e[k] + power,) + e[k + 1:]
            out[e] = c * coeff
        return self._like(out)

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self, degree=None):
        degrees = {sum(e) for e in self.terms}
        if not degrees:
            return True
        if len(degrees) > 1:
            return False
        return degree is None or degrees == {degree}

    def coeff_of(self, exponents):
        exponents = tuple(exponents)
        if len(exponents) != self.n:
            raise ValueError(f"exponent vector {exponents} has wrong length for {self.n} variables")
        return self.terms.get(exponents, ZERO)

    def limit_at_zero(self):
        """Constant term; every exponent must be non-negative."""
        for e in self.terms:
            if any(x < 0 for x in e):
                raise InconsistencyError("negative exponent present; limit at zero undefined")
        return self.terms.get((0,) * self.n, ZERO)

    def permute_vars(self, perm):
        """Variable ``i`` becomes variable ``perm[i]`` (0-based permutation)."""
        out = {}
        for e, c in self.terms.items():
            new = [0] * self.n
            for i, x in enumerate(e):
                new[perm[i]] = x
            out[tuple(new)] = c
        return self._like(out)

    def swap(self, i, j):
        """Exchange variables ``x_i`` and ``x_j`` (1-based)."""
        perm = list(range(self.n))
        perm[i - 1], perm[j - 1] = j - 1, i - 1
        return self.permute_vars(perm)

    def substitute_t(self, value):
        """Specialize the deformation parameter to an integer."""
        out = {}
        for e, c in self.terms.items():
            v = c(value)
            if v:
                out[e] = UniPoly((v,))
        return self._like(out)

    def substitute(self, i, value):
        """Set ``x_i`` (1-based) to an integer value; the variable count is kept."""
        k = i - 1
        out = MultiPoly._wrap(self.n, {}, self.laurent_bound, self.var)
        for e, c in self.terms.items():
            if e[k] < 0:
                raise InconsistencyError("cannot substitute into a negative power")
            term = {e[:k] + (0,) + e[k + 1:]: c * (value ** e[k])}
            out = out + MultiPoly._wrap(self.n, term, self.laurent_bound, self.var)
        return out

    def map_coeffs(self, fn):
        out = {}
        for e, c in self.terms.items():
            v = fn(c)
            if v:
                out[e] = v
        return self._like(out)

    def is_symmetric(self):
        return all(self.swap(i, i + 1) == self for i in range(1, self.n))

    def restrict(self, predicate):
        return self._like({e: c for e, c in self.terms.items() if predicate(e)})

    def sorted_terms(self):
        """Terms in graded lexicographic order, largest first."""
        return sorted(self.terms.items(), key=lambda item: (sum(item[0]), item[0]), reverse=True)

    def __str__(self):
        return format_multipoly(self)

    def __repr__(self):
        return f"MultiPoly({self.n}, {format_multipoly(self)!r})"


def format_multipoly(f):
    if not f.terms:
        return "0"
    pieces = []
    for exps, c in f.sorted_terms():
        mono = "*".join(
            f"{f.var}{i + 1}" if e == 1 else f"{f.var}{i + 1}^{e}"
            for i, e in enumerate(exps) if e
        )
        coeff = format_unipoly(c)
        if len(c.coeffs) - c.coeffs.count(0) > 1:
            coeff = f"({coeff})"
        if mono:
            if coeff == "1":
                body = mono
            elif coeff == "-1":
                body = "-" + mono
            else:
                body = f"{coeff}*{mono}"
        else:
            body = coeff
        pieces.append(body)
    return " + ".join(pieces).replace("+ -", "- ")


def _dd_monomial(exps, k):
    """Divided difference in positions k, k+1 (0-based) of one monomial."""
    a, b = exps[k], exps[k + 1]
    if a == b:
        return []
    low, sign = (b, -1) if a > b else (a, 1)
    span = abs(a - b)
    out = []
    for j in range(span):
        e = list(exps)
        e[k] = low + j
        e[k + 1] = low + span - 1 - j
        out.append((tuple(e), sign))
    return out


def divided_difference(f, i):
    """``(s_i f - f) / (x_i - x_{i+1})`` for 1 <= i < n.

    Each monomial is divided in closed form; the result is exact by
    construction and checked against the defining identity on request via
    ``check_divided_difference``.
    """
    if not 1 <= i < f.n:
        raise ValueError(f"index {i} out of range for {f.n} variables")
    if f.laurent_bound is not None and f.laurent_bound < 0:
        for e in f.terms:
            if any(x < 0 for x in e):
                raise InconsistencyError("divided differences need non-negative exponents")
    out = {}
    for e, c in f.terms.items():
        for e2, sign in _dd_monomial(e, i - 1):
            v = c if sign > 0 else -c
            prev = out.get(e2)
            if prev is None:
                out[e2] = v
            else:
                s = prev + v
                if s:
                    out[e2] = s
                else:
                    del out[e2]
    return MultiPoly._wrap(f.n, out, None, f.var)


def check_divided_difference(f, i):
    """Verify ``(x_i - x_{i+1}) * D_i f == s_i f - f`` exactly."""
    d = divided_difference(f, i)
    diff = MultiPoly.variable(i, f.n, f.var) - MultiPoly.variable(i + 1, f.n, f.var)
    return diff * d == f.swap(i, i + 1) - f


@lru_cache(maxsize=None)
def chain_constant_monomial(exps, indices):
    """Constant term of ``D_{indices[0]} ... D_{indices[-1]} x^exps`` as an integer."""
    if not indices:
        return 1 if not any(exps) else 0
    if sum(exps) < len(indices):
        return 0
    total = 0
    for e2, sign in _dd_monomial(exps, indices[-1] - 1):
        total += sign * chain_constant_monomial(e2, indices[:-1])
    return total


def chain_step(active, b):
    """One step of ``D_1 ... D_N`` evaluated at zero, streamed from the top variable down.

    ``active`` is the exponent of ``x_{k+1}`` after ``D_{k+1} ... D_N`` with
    ``x_{k+2}, ...`` already set to zero (no later operator touches them), and
    ``b`` the exponent of ``x_k``. Applying ``D_k`` and setting ``x_{k+1} = 0``
    leaves a single monomial; returns ``(sign, new_active)`` or ``None``.
    """
    if active == b or (active and b):
        return None
    return (-1 if b else 1), active + b - 1


def divided_difference_chain_constant(f, indices):
    """Constant term of ``D_{indices[0]} ... D_{indices[-1]} f``.

    The rightmost operator acts first. Monomial images are memoized, which is
    what makes long chains over large partition functions affordable.
    """
    indices = tuple(indices)
    result = ZERO
    for e, c in f.terms.items():
        if any(x < 0 for x in e):
            raise InconsistencyError("divided differences need non-negative exponents")
        v = chain_constant_monomial(e, indices)
        if v:
            result = result + c * v
    return result


def ct_kernel(n, trunc, var="z"):
    """Truncated ``prod_{i<j} (1 - z_j/z_i) / (1 - t z_j/z_i)`` as a Laurent polynomial.

    Each geometric factor keeps powers ``(z_j/z_i)^k`` with ``k <= trunc.bound``.
    """
    D = trunc.bound if isinstance(trunc, SeriesTruncation) else int(trunc)
    result = MultiPoly._wrap(n, {(0,) * n: ONE}, -D * n if n > 1 else None, var)
    for i in range(n):
        for j in range(i + 1, n):
            factor = {}
            for k in range(D + 1):
                e = [0] * n
                e[i], e[j] = -k, k
                factor[tuple(e)] = kernel_factor_coeff(k)
            result = result * MultiPoly._wrap(n, factor, -D * n, var)
    return result


@lru_cache(maxsize=None)
def kernel_factor_coeff(k):
    """Coefficient of ``u^k`` in ``(1 - u) / (1 - t u)``."""
    if k == 0:
        return ONE
    return UniPoly.monomial(k) - UniPoly.monomial(k - 1)


def ct_coefficient(G, target, trunc):
    """Coefficient of ``z^target`` in ``ct_kernel(n, trunc) * G``.

    Rather than expanding the kernel, the kernel coefficient of each needed
    Laurent monomial is found by distributing the required exponent flow over
    the ordered pairs ``i < j`` with every pair power at most ``trunc.bound``.
    """
    D = trunc.bound if isinstance(trunc, SeriesTruncation) else int(trunc)
    n = G.n
    target = tuple(target)
    if len(target) != n:
        raise ValueError("target exponent vector has wrong length")
    memo = {}

    def flow(delta):
        # coefficient of z^delta in the truncated kernel
        hit = memo.get(delta)
        if hit is not None:
            return hit
        result = _flow(delta, 0)
        memo[delta] = result
        return result

    sub_memo = {}

    def _flow(delta, i):
        # variables before i are settled; variable i sends flow to later ones
        if i >= n - 1:
            return ONE if all(d == 0 for d in delta[i:]) else ZERO
        key = (delta[i:], i)
        hit = sub_memo.get(key)
        if hit is not None:
            return hit
        need = -delta[i]
        total = ZERO
        if need >= 0:
            for split in _compositions(need, n - 1 - i, D):
                w = ONE
                rest = list(delta)
                for off, k in enumerate(split):
                    if k:
                        w = w * kernel_factor_coeff(k)
                        rest[i + 1 + off] -= k
                rest[i] = 0
                sub = _flow(tuple(rest), i + 1)
                if sub:
                    total = total + w * sub
        sub_memo[key] = total
        return total

    result = ZERO
    for e, c in G.terms.items():
        delta = tuple(t - x for t, x in zip(target, e))
        k = flow(delta)
        if k:
            result = result + c * k
    return result


def _compositions(total, parts, cap):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(min(total, cap), -1, -1):
        for rest in _compositions(total - first, parts - 1, cap):
            yield (first,) + rest
