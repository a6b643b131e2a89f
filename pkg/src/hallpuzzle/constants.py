"""Structure constants by several independent routes, with cross-validation.

Callers pass the target triple ``(a, b, c)``; the frames used by the lattice
and puzzle routes are built internally from complements of ``a``, ``b``, ``c``.
"""

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum

from .lattice import (
    _block_rho, blockwise_sum, hall_frame, kostka_frame, normalize_hall, normalize_kostka,
    partition_function_C,
)
from .partitions import DomainError, Partition, complement, partitions_of
from .polyalg import ONE, ZERO, InconsistencyError, SeriesTruncation, UniPoly, ct_coefficient, \
    format_unipoly
from .puzzles import block_puzzle_sum, enumerate_rt_puzzles
from .symfunc import Basis, CoeffFns, expand_in_basis, hl_P, hl_skew_Q, schur_s, tschur_skew_S


class Kind(Enum):
    HALL = "hall"
    INV_KOSTKA = "inv-kostka"
    LR = "lr"


class Route(Enum):
    PUZZLE = "puzzle"
    CT = "ct"
    DIVDIFF = "divdiff"
    ORACLE = "oracle"


ALL_ROUTES = tuple(Route)
SERIES_BOUND_ENV = "HP_SERIES_BOUND"


@dataclass(frozen=True)
class StructureConstantRequest:
    a: Partition
    b: Partition
    c: Partition
    kind: Kind
    routes: tuple = ALL_ROUTES
    series_bound: int = None
    trace: bool = False

    def __post_init__(self):
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, Partition(getattr(self, name)))
        routes = tuple(Route(r) for r in self.routes)
        if not routes:
            raise DomainError("at least one route is required")
        object.__setattr__(self, "routes", routes)
        object.__setattr__(self, "kind", Kind(self.kind))


@dataclass
class StructureConstantResult:
    kind: Kind
    a: Partition
    b: Partition
    c: Partition
    values: dict
    ms: dict
    notes: list = field(default_factory=list)
    witnesses: list = field(default_factory=list)

    @property
    def agree(self):
        vals = list(self.values.values())
        return all(v == vals[0] for v in vals[1:])

    @property
    def value(self):
        """The common value; raises if routes disagree."""
        if not self.agree:
            raise InconsistencyError(f"routes disagree: {self.values}")
        return next(iter(self.values.values()))

    def to_json_dict(self):
        def show(v):
            return format_unipoly(v) if isinstance(v, UniPoly) else str(v)
        return {
            "kind": self.kind.value,
            "a": list(self.a), "b": list(self.b), "c": list(self.c),
            "routes": {r.value: show(v) for r, v in self.values.items()},
            "agree": self.agree,
            "ms": {r.value: round(v, 3) for r, v in self.ms.items()},
        }


def series_bound(c, override=None):
    """Truncation order of the kernel series: ``|c|`` unless overridden."""
    if override is not None:
        return int(override)
    env = os.environ.get(SERIES_BOUND_ENV)
    if env:
        return int(env)
    return sum(Partition(c))


# ---------------------------------------------------------------------------
# frames


def hall_frame_data(a, b, c):
    """``(lam, mu, nu)`` with the Hall coefficient of the complements equal to ``f^a_{bc}``."""
    a, b, c = Partition(a).stripped(), Partition(b).stripped(), Partition(c).stripped()
    m = max(len(a), len(b) + 1)
    M = max(a.largest(), b.largest(), c.largest())
    return complement(a.pad_to(m), M), complement(b.pad_to(m), M), complement(c, M)


def kostka_frame_data(a, b, c):
    a, b, c = Partition(a).stripped(), Partition(b).stripped(), Partition(c).stripped()
    m = max(len(a), len(b) + 1)
    M = max(a.largest(), b.largest())
    m = max(m, c.largest() - M + 1)
    return (complement(a.pad_to(m), M), complement(b.pad_to(m), M),
            complement(c, m + M - 1))


def lr_frame_data(a, b, c):
    a, b, c = Partition(a), Partition(b), Partition(c)
    ell = max(len(a.stripped()), len(b.stripped()), len(c.stripped()), 1)
    return (a.stripped().pad_to(ell), b.stripped().pad_to(ell), c.stripped().pad_to(ell))


# ---------------------------------------------------------------------------
# individual routes


def _oracle_vars(a):
    return max(len(Partition(a).stripped()), 1)


def hall_oracle(a, b, c):
    n = _oracle_vars(a)
    prod = hl_P(b, n) * hl_P(c, n)
    return expand_in_basis(prod, Basis.HL_P, stop_below=a).get(Partition(a).stripped(), ZERO)


def inv_kostka_oracle(a, b, c):
    n = _oracle_vars(a)
    prod = schur_s(b, n) * hl_P(c, n)
    return expand_in_basis(prod, Basis.SCHUR, stop_below=a).get(Partition(a).stripped(), ZERO)


def lr_oracle(a, b, c):
    n = _oracle_vars(a)
    prod = schur_s(b, n) * schur_s(c, n)
    val = expand_in_basis(prod, Basis.SCHUR, stop_below=a).get(Partition(a).stripped(), ZERO)
    return val(0)


def _ct(skew, c, bound):
    c = Partition(c)
    n = len(c)
    G = skew(n).poly
    raw = ct_coefficient(G, tuple(c), SeriesTruncation(series_bound(c, bound)))
    return raw.exact_divide(CoeffFns.b(c))


def hall_ct(a, b, c, bound=None):
    """Kernel constant term against ``Q_{a/b}`` in ``len(c)`` variables (zero parts of ``c`` count)."""
    return _ct(lambda n: hl_skew_Q(a, b, n), c, bound)


def inv_kostka_ct(a, b, c, bound=None):
    return _ct(lambda n: tschur_skew_S(a, b, n), c, bound)


def hall_divdiff(a, b, c):
    lam, mu, nu = hall_frame_data(a, b, c)
    return normalize_hall(blockwise_sum(hall_frame(lam, mu, nu), _block_rho), lam, mu, nu)


def hall_puzzle(a, b, c):
    lam, mu, nu = hall_frame_data(a, b, c)
    return normalize_hall(blockwise_sum(hall_frame(lam, mu, nu), block_puzzle_sum), lam, mu, nu)


def inv_kostka_divdiff(a, b, c):
    lam, mu, nu = kostka_frame_data(a, b, c)
    return normalize_kostka(blockwise_sum(kostka_frame(lam, mu, nu), _block_rho), lam, mu, nu)


def inv_kostka_puzzle(a, b, c):
    lam, mu, nu = kostka_frame_data(a, b, c)
    return normalize_kostka(blockwise_sum(kostka_frame(lam, mu, nu), block_puzzle_sum), lam, mu, nu)


def _lr_applicable(a, b, c):
    lam, mu, nu = lr_frame_data(a, b, c)
    L = lam.largest()
    return (lam, mu, nu) if nu.largest() <= L + 1 and mu.largest() <= L else None


def lr_puzzle(a, b, c):
    frame = _lr_applicable(a, b, c)
    return 0 if frame is None else len(enumerate_rt_puzzles(*frame))


def lr_lattice(a, b, c):
    frame = _lr_applicable(a, b, c)
    return 0 if frame is None else partition_function_C(*frame)[0]


def lr_hall_t0(a, b, c, bound=None):
    return hall_ct(a, b, c, bound)(0)


_ROUTES = {
    Kind.HALL: {Route.PUZZLE: hall_puzzle, Route.CT: hall_ct,
                Route.DIVDIFF: hall_divdiff, Route.ORACLE: hall_oracle},
    Kind.INV_KOSTKA: {Route.PUZZLE: inv_kostka_puzzle, Route.CT: inv_kostka_ct,
                      Route.DIVDIFF: inv_kostka_divdiff, Route.ORACLE: inv_kostka_oracle},
    # for LR the DIVDIFF slot holds the zero-temperature lattice coefficient
    # and the CT slot the Hall constant term at t = 0
    Kind.LR: {Route.PUZZLE: lr_puzzle, Route.CT: lr_hall_t0,
              Route.DIVDIFF: lr_lattice, Route.ORACLE: lr_oracle},
}


# ---------------------------------------------------------------------------
# public entry points


def compute(request):
    a, b, c = request.a, request.b, request.c
    zero = 0 if request.kind is Kind.LR else ZERO
    values, ms, notes = {}, {}, []
    balanced = sum(a) == sum(b) + sum(c)
    if not balanced:
        notes.append("weights do not balance; every route returns zero")
    for route in request.routes:
        start = time.perf_counter()
        if not balanced:
            val = zero
        else:
            fn = _ROUTES[request.kind][route]
            try:
                val = fn(a, b, c, request.series_bound) if route is Route.CT else fn(a, b, c)
            except DomainError as exc:
                notes.append(f"{route.value}: frame not applicable ({exc})")
                continue
        values[route] = val
        ms[route] = (time.perf_counter() - start) * 1000
    if not values:
        raise DomainError("no requested route applies to this triple")
    result = StructureConstantResult(request.kind, a, b, c, values, ms, notes)
    if request.trace and request.kind is Kind.LR and balanced:
        frame = _lr_applicable(a, b, c)
        if frame is not None:
            result.witnesses = enumerate_rt_puzzles(*frame)
    return result


def hall(a, b, c, routes=ALL_ROUTES, series_bound=None):
    """Hall polynomial ``f^a_{bc}(t)``."""
    return compute(StructureConstantRequest(a, b, c, Kind.HALL, tuple(routes), series_bound))


def inv_kostka(a, b, c, routes=ALL_ROUTES, series_bound=None):
    """Coefficient of ``s_a`` in ``s_b P_c(t)``."""
    return compute(StructureConstantRequest(a, b, c, Kind.INV_KOSTKA, tuple(routes), series_bound))


def lr(a, b, c, routes=ALL_ROUTES, series_bound=None, trace=False):
    """Littlewood-Richardson coefficient ``c^a_{bc}``."""
    return compute(StructureConstantRequest(a, b, c, Kind.LR, tuple(routes), series_bound, trace))


# ---------------------------------------------------------------------------
# sweeps


def triples(max_weight):
    """All ``(a, b, c)`` with ``|a| <= max_weight`` and ``|a| = |b| + |c|``, empty parts allowed."""
    out = []
    for w in range(max_weight + 1):
        for a in partitions_of(w):
            for k in range(w + 1):
                for b in partitions_of(k):
                    for c in partitions_of(w - k):
                        out.append((a, b, c))
    return out


_KIND_FN = {Kind.HALL: hall, Kind.INV_KOSTKA: inv_kostka, Kind.LR: lr}


def _run_one(args):
    kind, a, b, c, routes, bound = args
    return _KIND_FN[kind](a, b, c, routes, bound)


@dataclass
class ValidationReport:
    max_weight: int
    results: dict
    checks: dict

    @property
    def disagreements(self):
        return [r for rs in self.results.values() for r in rs if not r.agree]

    @property
    def ok(self):
        return not self.disagreements and all(not bad for bad in self.checks.values())

    def summary_lines(self):
        lines = []
        for kind, rs in sorted(self.results.items(), key=lambda kv: kv[0].value):
            bad = sum(1 for r in rs if not r.agree)
            total_ms = {}
            for r in rs:
                for route, v in r.ms.items():
                    total_ms[route.value] = total_ms.get(route.value, 0.0) + v
            timing = ", ".join(f"{k} {v / 1000:.2f}s" for k, v in sorted(total_ms.items()))
            lines.append(f"{kind.value}: {len(rs)} triples, {bad} disagreements ({timing})")
        for name, bad in sorted(self.checks.items()):
            lines.append(f"{name}: {'ok' if not bad else f'{len(bad)} failures'}")
        return lines


def run_sweep(kind, max_weight, routes=ALL_ROUTES, series_bound=None, jobs=1):
    """Results for every triple up to ``max_weight``, sorted by triple."""
    tasks = [(kind, a, b, c, tuple(routes), series_bound) for a, b, c in triples(max_weight)]
    if jobs and jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_one, tasks, chunksize=16))
    else:
        results = [_run_one(t) for t in tasks]
    return sorted(results, key=lambda r: (tuple(r.a), tuple(r.b), tuple(r.c)))


def symmetry_failures(results):
    """Triples with ``f^a_{bc} != f^a_{cb}``."""
    table = {(r.a, r.b, r.c): r.value for r in results}
    return [k for k, v in table.items() if table.get((k[0], k[2], k[1]), v) != v]


def quasi_symmetry_failures(results):
    """Triples violating ``f^a_{bc} B_{b'} = f^{b'}_{a'c} B_{a'}`` with complements by ``a_1``."""
    bad = []
    for r in results:
        a, b, c = r.a, r.b, r.c
        if not a.contains(b):
            continue
        m = len(a)
        a_bar = complement(a.pad_to(m), a.largest())
        b_bar = complement(b.pad_to(m), a.largest())
        other = hall(b_bar, a_bar, c, (Route.ORACLE,)).value if sum(b_bar) <= 6 else \
            hall(b_bar, a_bar, c, (Route.DIVDIFF,)).value
        if r.value * CoeffFns.B(b_bar) != other * CoeffFns.B(a_bar):
            bad.append((a, b, c))
    return bad


def t0_failures(results):
    """Triples whose value at t = 0 is not the LR coefficient."""
    return [(r.a, r.b, r.c) for r in results
            if r.value(0) != lr(r.a, r.b, r.c, (Route.ORACLE,)).value]


def pieri_failures(max_weight):
    """Horizontal strips ``lam/mu`` with ``f^lam_{mu,(N)} != phi_{lam/mu} / (1 - t)``."""
    from .partitions import is_horizontal_strip
    bad = []
    for w in range(1, max_weight + 1):
        for lam in partitions_of(w):
            for k in range(w):
                for mu in partitions_of(k):
                    if not is_horizontal_strip(lam, mu):
                        continue
                    want = CoeffFns.phi(lam, mu).exact_divide(UniPoly.one_minus_t_pow(1))
                    if hall(lam, mu, (w - k,), (Route.DIVDIFF,)).value != want:
                        bad.append((lam, mu))
    return bad


def cross_validate(max_weight, kinds=(Kind.HALL,), jobs=1, series_bound=None):
    """Run every route on every triple and the structural checks on the Hall values."""
    results, checks = {}, {}
    for kind in kinds:
        kind = Kind(kind)
        results[kind] = run_sweep(kind, max_weight, ALL_ROUTES, series_bound, jobs)
        good = [r for r in results[kind] if r.agree]
        if kind is Kind.HALL:
            checks["symmetry"] = symmetry_failures(good)
            checks["quasi-symmetry"] = quasi_symmetry_failures(good)
            checks["hall at t=0"] = t0_failures(good)
            checks["pieri"] = pieri_failures(max_weight)
        elif kind is Kind.INV_KOSTKA:
            checks["inverse kostka at t=0"] = t0_failures(good)
    return ValidationReport(max_weight, results, checks)
