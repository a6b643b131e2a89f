"""Acceptance checks, one per criterion.

Run under pytest, or directly with ``python tests/test_acceptance.py`` for a
plain pass/fail listing.  Every comparison is exact.
"""

import functools
import sys
import time

import pytest

from hallpuzzle import constants, lattice, puzzles, symfunc
from hallpuzzle.constants import ALL_ROUTES, Kind, Route
from hallpuzzle.partitions import Partition, partitions_of
from hallpuzzle.polyalg import MultiPoly, UniPoly

t = UniPoly((0, 1))
ONE_MINUS_T = 1 - t


def _poly(n, terms):
    out = MultiPoly(n)
    for exps, coeff in terms:
        out = out + MultiPoly.monomial(exps, UniPoly.coerce(coeff))
    return out


@functools.lru_cache(maxsize=None)
def hall_sweep():
    return constants.run_sweep(Kind.HALL, 6)


@functools.lru_cache(maxsize=None)
def kostka_sweep():
    return constants.run_sweep(Kind.INV_KOSTKA, 5)


def _all_routes_equal(result, want):
    return len(result.values) == len(ALL_ROUTES) and all(v == want for v in result.values.values())


HALL_1 = ((4, 1, 1, 1), (3, 1, 1, 0), (2,))
HALL_2 = ((3, 2, 1), (2, 1, 0), (2, 1))
KOSTKA_3 = ((1, 1, 1), (0, 0, 0), (2, 1))
LR_4 = ((4, 4, 2, 1), (3, 3, 1, 0), (2, 1, 1, 0))


def criterion_1():
    return _all_routes_equal(constants.hall(*HALL_1), 1 - t ** 3)


def criterion_2():
    ok = _all_routes_equal(constants.hall(*HALL_2), 2 + t - t ** 2)
    lam, mu, nu = constants.hall_frame_data(*HALL_2)
    found = puzzles.enumerate_hall_puzzles(mu, lam, nu)
    want = t ** 12 * (2 - t) * (1 - t) * (1 - t ** 2)
    return ok and len(found) == 28 and puzzles.signed_weight_sum(found) == want


def criterion_3():
    ok = _all_routes_equal(constants.inv_kostka(*KOSTKA_3), -t - t ** 2)
    lam, mu, nu = constants.kostka_frame_data(*KOSTKA_3)
    found = puzzles.enumerate_kostka_puzzles(mu, lam, nu)
    want = -(t ** 13) * (1 - t) ** 2 * (1 + t)
    return ok and len(found) == 12 and puzzles.signed_weight_sum(found) == want


SEVEN_TILES = {"up+", "up-", "down+", "down-", "rh-V", "rh-H", "rh-D"}


def criterion_4():
    if not _all_routes_equal(constants.lr(*LR_4), 2):
        return False
    frame = constants.lr_frame_data(*LR_4)
    coeff, exps = lattice.partition_function_C(*frame)
    if coeff != 2 or sum(exps) != 14:
        return False
    rts = puzzles.enumerate_rt_puzzles(*frame)
    if len(rts) != 2:
        return False
    kts = [puzzles.rt_to_kt(p) for p in rts]
    return len(kts) == 2 and all({kind for kind, _ in kt.pieces} <= SEVEN_TILES for kt in kts)


def criterion_5():
    a = 1 - t
    want_p = _poly(3, [((3, 1, 1), 1), ((2, 2, 1), a), ((1, 3, 1), 1),
                       ((1, 2, 2), a), ((1, 1, 3), 1), ((2, 1, 2), a)])
    if symfunc.hl_P((3, 1, 1), 3).poly != want_p:
        return False
    want_s = _poly(2, [((3, 0), -t * a), ((2, 1), a ** 3), ((1, 2), a ** 3), ((0, 3), -t * a)])
    if symfunc.tschur_S((2, 1), 2).poly != want_s:
        return False
    for p in range(1, 5):
        for m in range(4):
            hook = (p,) + (1,) * m
            want = _poly(1, [((p + m,), a * (-t) ** m)])
            if symfunc.tschur_skew_S(hook, (), 1).poly != want:
                return False
    return True


def criterion_6():
    hall = hall_sweep()
    kostka = kostka_sweep()
    return (len(hall) == 1110 and len(kostka) == 395
            and all(r.agree and len(r.values) == 4 for r in hall + kostka))


def criterion_7():
    good = hall_sweep()
    return not (constants.symmetry_failures(good)
                or constants.quasi_symmetry_failures(good)
                or constants.t0_failures(good)
                or constants.t0_failures(kostka_sweep())
                or constants.pieri_failures(6))


def _frames(results, build):
    return {build(r.a, r.b, r.c) for r in results}


def criterion_8():
    for model, cutoff in ((lattice.Model.TBOSON, 3), (lattice.Model.BB, 2), (lattice.Model.FB, 2)):
        if not lattice.check_intertwining(model, cutoff)[0]:
            return False
    for model in (lattice.Model.BB, lattice.Model.FB):
        if not lattice.check_commutation(model)[0]:
            return False
    if lattice.check_trivial_actions():
        return False
    for lam, mu, nu in _frames(hall_sweep(), constants.hall_frame_data):
        degs = lattice.configuration_degrees(lattice.hall_frame(lam, mu, nu))
        if not degs <= {len(nu) + sum(nu)}:
            return False
    for lam, mu, nu in _frames(kostka_sweep(), constants.kostka_frame_data):
        degs = lattice.configuration_degrees(lattice.kostka_frame(lam, mu, nu))
        if not degs <= {len(nu) + 2 * sum(nu)}:
            return False
    return True


def criterion_9():
    def doubled(fn, a, b, c):
        return fn(a, b, c, (Route.CT,), 2 * sum(c)).value

    if doubled(constants.hall, *HALL_1) != 1 - t ** 3:
        return False
    if doubled(constants.hall, *HALL_2) != 2 + t - t ** 2:
        return False
    if doubled(constants.inv_kostka, *KOSTKA_3) != -t - t ** 2:
        return False
    for fn, results in ((constants.hall, hall_sweep()), (constants.inv_kostka, kostka_sweep())):
        for r in results:
            if doubled(fn, r.a, r.b, r.c) != r.value:
                return False
    return True


def criterion_10():
    for n, m in ((1, 1), (2, 1)):
        for w in range(5):
            for lam in partitions_of(w):
                if not symfunc.branching_check(lam, n, m):
                    return False
    return symfunc.cauchy_check(1, 1, 3) and symfunc.cauchy_check(2, 1, 3)


CRITERIA = [
    (1, "hall((4,1,1,1),(3,1,1,0),(2)) = 1 - t^3 on all routes", criterion_1),
    (2, "hall((3,2,1),(2,1,0),(2,1)) = 2 + t - t^2, 28 puzzles", criterion_2),
    (3, "inv_kostka((1,1,1),(0,0,0),(2,1)) = -t - t^2, 12 puzzles", criterion_3),
    (4, "lr((4,4,2,1),(3,3,1,0),(2,1,1,0)) = 2, lattice, RT and KT", criterion_4),
    (5, "symmetric function fixtures and hook formula", criterion_5),
    (6, "route agreement on the full sweeps", criterion_6),
    (7, "symmetry, quasi-symmetry, t = 0 and Pieri", criterion_7),
    (8, "model identities and partition function degrees", criterion_8),
    (9, "doubled series bound leaves values unchanged", criterion_9),
    (10, "branching and Cauchy identities", criterion_10),
]


def _report(number, label, fn):
    start = time.perf_counter()
    try:
        ok = bool(fn())
    except Exception as exc:  # a crash counts as a failure
        ok, label = False, f"{label} ({type(exc).__name__}: {exc})"
    elapsed = time.perf_counter() - start
    return ok, f"criterion {number}: {'PASS' if ok else 'FAIL'}  {label}  [{elapsed:.1f}s]"


@pytest.mark.parametrize("number,label,fn", CRITERIA, ids=[f"criterion_{n}" for n, _, _ in CRITERIA])
def test_criterion(number, label, fn, capsys):
    ok, line = _report(number, label, fn)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


def main():
    start = time.perf_counter()
    results = [_report(*c) for c in CRITERIA]
    for _, line in results:
        print(line)
    print(f"total {time.perf_counter() - start:.1f}s")
    return 0 if all(ok for ok, _ in results) else 1


if __name__ == "__main__":
    sys.exit(main())
