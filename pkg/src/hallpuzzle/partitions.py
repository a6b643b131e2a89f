"""Partitions, their Fock-space encodings, complements and strip predicates.

Zero parts are significant throughout: ``Partition((2, 1, 0))`` has length 3
and differs from ``Partition((2, 1))``.
"""

from dataclasses import dataclass
from functools import lru_cache


class DomainError(ValueError):
    """Raised when an argument violates a documented precondition."""


class Partition(tuple):
    """Weakly decreasing tuple of non-negative integers, zeros retained."""

    def __new__(cls, parts=()):
        if isinstance(parts, Partition):
            return parts
        parts = tuple(int(p) for p in parts)
        for i, p in enumerate(parts):
            if p < 0:
                raise DomainError(f"negative part {p} in {parts}")
            if i and parts[i - 1] < p:
                raise DomainError(f"parts not weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text):
        """Parse ``"4,1,1,1"``; the empty string is the empty partition."""
        text = text.strip()
        if not text:
            return cls(())
        parts = []
        for token in text.split(","):
            token = token.strip()
            if not token.isdigit():
                raise DomainError(f"bad partition token {token!r}")
            parts.append(int(token))
        return cls(parts)

    def __repr__(self):
        return f"Partition({tuple(self)!r})"

    def __str__(self):
        return ",".join(str(p) for p in self)

    def length(self):
        return len(self)

    def weight(self):
        return sum(self)

    def multiplicity(self, i):
        return sum(1 for p in self if p == i)

    def largest(self):
        return self[0] if self else 0

    def stripped(self):
        """Drop trailing zeros."""
        n = len(self)
        while n and self[n - 1] == 0:
            n -= 1
        return Partition(self[:n])

    def pad_to(self, length):
        if length < len(self):
            raise DomainError(f"cannot pad {self} down to length {length}")
        return Partition(tuple(self) + (0,) * (length - len(self)))

    def normalized_eq(self, other):
        """Equality ignoring trailing zeros."""
        return self.stripped() == Partition(other).stripped()

    def conjugate(self):
        top = self.largest()
        return Partition(tuple(sum(1 for p in self if p > j) for j in range(top)))

    def contains(self, other):
        """Diagram containment, ``other`` inside ``self``."""
        other = Partition(other).stripped()
        me = self.stripped()
        if len(other) > len(me):
            return False
        return all(a >= b for a, b in zip(me, other))

    def complement(self, L):
        return complement(self, L)


@dataclass(frozen=True)
class BosonState:
    """Occupation numbers at sites 0, 1, 2, ... with an implicit zero tail."""

    occupations: tuple

    def __post_init__(self):
        occ = tuple(self.occupations)
        while occ and occ[-1] == 0:
            occ = occ[:-1]
        object.__setattr__(self, "occupations", occ)

    def __getitem__(self, k):
        return self.occupations[k] if 0 <= k < len(self.occupations) else 0

    def particles(self):
        return sum(self.occupations)

    def padded(self, sites):
        if len(self.occupations) > sites:
            raise DomainError(f"state {self.occupations} exceeds {sites} sites")
        return self.occupations + (0,) * (sites - len(self.occupations))


@dataclass(frozen=True)
class MayaState:
    """0/1 occupations at sites 0, 1, 2, ... with an implicit zero tail."""

    bits: tuple

    def __post_init__(self):
        bits = tuple(self.bits)
        if any(b not in (0, 1) for b in bits):
            raise DomainError(f"Maya bits must be 0/1: {bits}")
        while bits and bits[-1] == 0:
            bits = bits[:-1]
        object.__setattr__(self, "bits", bits)

    def __getitem__(self, k):
        return self.bits[k] if 0 <= k < len(self.bits) else 0

    def particles(self):
        return sum(self.bits)

    def occupied(self):
        return tuple(k for k, b in enumerate(self.bits) if b)

    def padded(self, sites):
        if len(self.bits) > sites:
            raise DomainError(f"state {self.bits} exceeds {sites} sites")
        return self.bits + (0,) * (sites - len(self.bits))


@dataclass(frozen=True)
class IndexSet:
    """Strictly increasing positive integers."""

    indices: tuple

    def __post_init__(self):
        idx = tuple(self.indices)
        if any(i < 1 for i in idx) or any(a >= b for a, b in zip(idx, idx[1:])):
            raise DomainError(f"not a strictly increasing positive set: {idx}")
        object.__setattr__(self, "indices", idx)

    def __contains__(self, i):
        return i in self.indices

    def __iter__(self):
        return iter(self.indices)

    def __len__(self):
        return len(self.indices)


def complement(p, L):
    """Parts ``L - p[l-i]`` in reversed order; same length as ``p``."""
    p = Partition(p)
    if p and p[0] > L:
        raise DomainError(f"largest part of {p} exceeds {L}")
    return Partition(tuple(L - x for x in reversed(p)))


def to_boson_state(p):
    p = Partition(p)
    if not p:
        return BosonState(())
    return BosonState(tuple(p.multiplicity(k) for k in range(p[0] + 1)))


def reverse_boson_state(p, L=None):
    """Occupation ``m_{L-k}`` at site k; ``L`` defaults to the largest part."""
    p = Partition(p)
    if L is None:
        L = p.largest()
    if p and p[0] > L:
        raise DomainError(f"largest part of {p} exceeds {L}")
    return BosonState(tuple(p.multiplicity(L - k) for k in range(L + 1)))


def from_boson_state(state):
    occ = state.occupations if isinstance(state, BosonState) else tuple(state)
    parts = []
    for k in range(len(occ) - 1, -1, -1):
        parts.extend([k] * occ[k])
    return Partition(parts)


def to_maya(p):
    p = Partition(p)
    ell = len(p)
    sites = {p[i] + ell - 1 - i for i in range(ell)}
    top = max(sites) + 1 if sites else 0
    return MayaState(tuple(1 if k in sites else 0 for k in range(top)))


def reverse_maya(p, L=None):
    """Bit k equals forward bit ``l+L-1-k``; ``L`` defaults to the largest part."""
    p = Partition(p)
    if L is None:
        L = p.largest()
    if p and p[0] > L:
        raise DomainError(f"largest part of {p} exceeds {L}")
    forward = to_maya(p)
    top = len(p) + L - 1
    return MayaState(tuple(forward[top - k] for k in range(top + 1)))


def from_maya(state, length=None):
    """Inverse of ``to_maya``; the number of particles fixes the length."""
    bits = state.bits if isinstance(state, MayaState) else tuple(state)
    sites = sorted((k for k, b in enumerate(bits) if b), reverse=True)
    ell = len(sites)
    if length is not None and length != ell:
        raise DomainError(f"Maya state has {ell} particles, expected {length}")
    return Partition(tuple(s - (ell - 1 - i) for i, s in enumerate(sites)))


def maya_word(p, sites, particle, hole):
    """Forward Maya diagram of ``p`` on ``sites`` sites as a list of symbols."""
    state = to_maya(p)
    if len(state.bits) > sites:
        raise DomainError(f"Maya diagram of {p} does not fit in {sites} sites")
    return [particle if state[k] else hole for k in range(sites)]


def is_horizontal_strip(outer, inner):
    """True iff ``inner`` interlaces ``outer``: o1 >= i1 >= o2 >= i2 >= ..."""
    o, i = Partition(outer).stripped(), Partition(inner).stripped()
    if len(i) > len(o):
        return False
    n = len(o)
    i = i.pad_to(n)
    return all(o[k] >= i[k] for k in range(n)) and all(i[k] >= o[k + 1] for k in range(n - 1))


def is_vertical_strip(outer, inner):
    o, i = Partition(outer).stripped(), Partition(inner).stripped()
    if len(i) > len(o):
        return False
    i = i.pad_to(len(o))
    return all(0 <= a - b <= 1 for a, b in zip(o, i))


def shifted_partial_sums(nu):
    """``k_i = i + nu_{n-i+1} + ... + nu_n`` for i = 1..n."""
    nu = Partition(nu)
    n = len(nu)
    return IndexSet(tuple(i + sum(nu[n - i:]) for i in range(1, n + 1)))


def kappa(lam, nu):
    """``kappa_i = i + L + 1 - nu_i`` with ``L`` the largest part of ``lam``."""
    lam, nu = Partition(lam), Partition(nu)
    if len(lam) != len(nu):
        raise DomainError(f"lengths differ: {lam} vs {nu}")
    L = lam.largest()
    if nu and nu[0] > L + 1:
        raise DomainError(f"largest part of {nu} exceeds {L + 1}")
    return IndexSet(tuple(i + L + 1 - nu[i - 1] for i in range(1, len(nu) + 1)))


@lru_cache(maxsize=None)
def partitions_of(n, max_part=None, max_length=None):
    """All partitions of ``n`` (no zero parts), in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if max_length is None:
        max_length = n
    if n == 0:
        return (Partition(()),)
    if max_length == 0:
        return ()
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first, max_length - 1):
            out.append(Partition((first,) + tuple(rest)))
    return tuple(out)


def partitions_in_box(length, max_part):
    """All partitions with exactly ``length`` parts (zeros allowed) bounded by ``max_part``."""
    def rec(remaining, bound):
        if remaining == 0:
            yield ()
            return
        for first in range(bound, -1, -1):
            for rest in rec(remaining - 1, first):
                yield (first,) + rest
    return [Partition(p) for p in rec(length, max_part)]


def horizontal_strips_below(outer, length=None):
    """Partitions ``inner`` of the given length with ``outer/inner`` a horizontal strip."""
    outer = Partition(outer)
    n = len(outer) if length is None else length
    o = outer.stripped().pad_to(max(n, len(outer.stripped())))
    if len(o) > n:
        return []
    ranges = []
    for k in range(n):
        low = o[k + 1] if k + 1 < n else 0
        ranges.append(range(o[k], low - 1, -1))
    out = []

    def rec(k, acc):
        if k == n:
            out.append(Partition(acc))
            return
        for v in ranges[k]:
            rec(k + 1, acc + (v,))
    rec(0, ())
    return out
