import pytest

from hallpuzzle import constants
from hallpuzzle.constants import (
    ALL_ROUTES, Kind, Route, StructureConstantRequest, cross_validate, hall, inv_kostka, lr,
    run_sweep, series_bound, triples,
)
from hallpuzzle.partitions import DomainError, Partition, partitions_of
from hallpuzzle.polyalg import MultiPoly, UniPoly
from hallpuzzle.symfunc import hl_Q, hl_skew_Q, tschur_skew_S

t = UniPoly((0, 1))


def _expand(a, b, fn, n):
    total = MultiPoly(n)
    for c in partitions_of(sum(a) - sum(b), None, n):
        coeff = fn(a, b, c, (Route.DIVDIFF,)).value
        if coeff:
            total = total + hl_Q(c, n).poly * MultiPoly.constant(n, coeff)
    return total


def _pairs(max_weight):
    return [(a, b) for w in range(max_weight + 1) for a in partitions_of(w)
            for k in range(w + 1) for b in partitions_of(k)]


def test_coproduct_consistency():
    for a, b in _pairs(5):
        assert hl_skew_Q(a, b, 2).poly == _expand(a, b, hall, 2), (a, b)


def test_skew_t_schur_consistency():
    for a, b in _pairs(4):
        assert tschur_skew_S(a, b, 2).poly == _expand(a, b, inv_kostka, 2), (a, b)


@pytest.mark.parametrize("a,b,c", [((3, 2, 1), (2, 1), (2, 1)), ((2, 1, 1), (1,), (2, 1)),
                                   ((1, 1, 1), (), (2, 1))])
def test_constant_term_ignores_appended_zero_parts(a, b, c):
    base = constants.hall_ct(a, b, c)
    for k in (1, 2):
        assert constants.hall_ct(a, b, c + (0,) * k) == base
    base = constants.inv_kostka_ct(a, b, c)
    assert constants.inv_kostka_ct(a, b, c + (0,)) == base


def test_series_bound_override(monkeypatch):
    assert series_bound((2, 1)) == 3
    assert series_bound((2, 1), 7) == 7
    monkeypatch.setenv(constants.SERIES_BOUND_ENV, "5")
    assert series_bound((2, 1)) == 5
    assert hall((3, 2, 1), (2, 1, 0), (2, 1), (Route.CT,)).value == 2 + t - t ** 2


def test_too_small_bound_is_visible():
    assert hall((3, 2, 1), (2, 1, 0), (2, 1), (Route.CT,), 0).value != 2 + t - t ** 2


def test_unbalanced_weights_give_zero_with_note():
    r = hall((2,), (1,), (3,))
    assert r.value == 0
    assert r.notes
    assert lr((2,), (1,), (3,)).value == 0


def test_request_validation():
    with pytest.raises(DomainError):
        StructureConstantRequest((1,), (), (1,), Kind.HALL, ())
    with pytest.raises(DomainError):
        hall((1, 2), (), (3,))
    with pytest.raises(ValueError):
        StructureConstantRequest((1,), (), (1,), "nope")


def test_frame_data():
    assert constants.hall_frame_data((4, 1, 1, 1), (3, 1, 1, 0), (2,)) == \
        ((3, 3, 3, 0), (4, 3, 3, 1), (2,))
    lam, mu, nu = constants.kostka_frame_data((1, 1, 1), (), (2, 1))
    assert len(lam) == len(mu)
    assert constants.lr_frame_data((2, 1), (1,), (1, 1)) == ((2, 1), (1, 0), (1, 1))


def test_known_values():
    assert hall((2, 1), (1,), (1, 1)).value == 1
    assert hall((1, 1, 1), (1,), (1, 1)).value == 1 + t + t ** 2
    assert hall((1, 1), (1,), (1,)).value == 1 + t
    assert hall((2,), (1,), (1,)).value == 1
    assert inv_kostka((1, 1), (), (2,)).value == -t
    assert lr((3, 2, 1), (2, 1), (2, 1)).value == 2


def test_result_json():
    data = hall((1, 1), (1,), (1,)).to_json_dict()
    assert data["agree"] is True
    assert set(data["routes"]) == {r.value for r in ALL_ROUTES}
    assert data["routes"]["oracle"] == "1 + t"


def test_sweep_sizes():
    assert len(triples(6)) == 1110
    assert len(triples(5)) == 395


def test_parallel_sweep_matches_serial():
    serial = run_sweep(Kind.HALL, 3)
    parallel = run_sweep(Kind.HALL, 3, jobs=2)
    assert [r.values for r in serial] == [r.values for r in parallel]


def test_cross_validate_small():
    report = cross_validate(4, [Kind.HALL, Kind.INV_KOSTKA, Kind.LR])
    assert report.ok
    lines = report.summary_lines()
    assert any(line.startswith("hall:") for line in lines)
    assert not report.disagreements
