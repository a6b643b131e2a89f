import random

import pytest

from hallpuzzle import constants
from hallpuzzle.lattice import (
    LatticeState, Model, RowColor, StateVector, _block_rho, _block_rho_expanded, apply_row,
    check_commutation, check_intertwining, check_trivial_actions, configuration_degrees,
    divdiff_hall, divdiff_hall_direct, divdiff_kostka, divdiff_kostka_direct,
    enumerate_configurations, expectation, graded_partition_function, hall_frame, kostka_frame,
    lr_frame, partition_function_C, partition_function_F, partition_function_K,
    render_configuration, rho_block, row_colors, site_moves,
)
from hallpuzzle.partitions import DomainError, partitions_of
from hallpuzzle.polyalg import MultiPoly, UniPoly

t = UniPoly((0, 1))


def _rows(a, b, c):
    nu = constants.kostka_frame_data(a, b, c)[2]
    return len(nu) + sum(nu)


def random_triples(seed, count, max_weight, max_rows=9):
    """Random nonempty triples whose frames stay small enough for whole-lattice expansion."""
    rng = random.Random(seed)
    pool = [tr for tr in constants.triples(max_weight)
            if sum(tr[0]) > 0 and _rows(*tr) <= max_rows]
    return rng.sample(pool, count)


def test_row_colors():
    assert [c.name for c in row_colors((2, 1))] == ["B", "E", "B", "B", "E"]
    assert row_colors(()) == ()


def test_tile_weights_are_polynomials():
    for model in (Model.BB, Model.FB):
        for aux in (0, 1, 2):
            for site in ((0, 0), (1, 0), (0, 1), (2, 1)):
                for _b, _new, w, dx in site_moves(model, aux, site):
                    assert isinstance(w, UniPoly)
                    assert dx in (0, 1)


def test_frames_validate_their_input():
    with pytest.raises(DomainError):
        hall_frame((1,), (2, 1), (1,))
    with pytest.raises(DomainError):
        hall_frame((3, 0), (2, 0), (1,))
    with pytest.raises(DomainError):
        lr_frame((2, 1), (1,), (1, 0))


def _config_polynomial(frame):
    r = len(frame.colors)
    total = MultiPoly(r)
    for config in enumerate_configurations(frame.model, frame.colors, frame.top, frame.bottom):
        exps = [0] * r
        for j, dx in enumerate(config.xpows):
            exps[r - 1 - j] += dx
        total = total + MultiPoly.monomial(tuple(exps), config.weight())
    return total


@pytest.mark.parametrize("a,b,c", random_triples(1, 20, 4))
def test_configurations_sum_to_expectation(a, b, c):
    for frame in (hall_frame(*constants.hall_frame_data(a, b, c)),
                  kostka_frame(*constants.kostka_frame_data(a, b, c))):
        want = expectation(frame.model, frame.colors, frame.top, frame.bottom)
        assert _config_polynomial(frame) == want


@pytest.mark.parametrize("a,b,c", random_triples(2, 15, 4))
def test_homogeneity(a, b, c):
    lam, mu, nu = constants.hall_frame_data(a, b, c)
    F = partition_function_F(lam, mu, nu)
    n = len(nu) + sum(nu)
    assert F.is_zero() or F.is_homogeneous(n)
    assert configuration_degrees(hall_frame(lam, mu, nu)) <= {n}
    lam, mu, nu = constants.kostka_frame_data(a, b, c)
    K = partition_function_K(lam, mu, nu)
    assert K.is_zero() or K.is_homogeneous(len(nu) + 2 * sum(nu))
    graded = graded_partition_function("K", lam, mu, nu)
    assert set(graded) <= {len(nu) + 2 * sum(nu)}


@pytest.mark.parametrize("a,b,c", random_triples(3, 12, 4))
def test_blockwise_matches_whole_lattice(a, b, c):
    frame = constants.hall_frame_data(a, b, c)
    assert divdiff_hall(*frame) == divdiff_hall_direct(*frame)
    frame = constants.kostka_frame_data(a, b, c)
    assert divdiff_kostka(*frame) == divdiff_kostka_direct(*frame)


def test_streamed_block_matches_expanded_block():
    for model in (Model.BB, Model.FB):
        for green in ((0, 1, 1), (1, 0, 1), (2, 0, 0), (0, 0, 1)):
            for N in (1, 2, 3):
                top = LatticeState(green, (0, 0, N), 3)
                assert _block_rho(model, top, N) == _block_rho_expanded(model, top, N)


def test_rho_block_routes_agree():
    assert rho_block((2, 1), (2, 2), (2, 2), (), 2, horizon=3, route="both") is not None
    assert rho_block((1,), (1,), (2,), (), 1, horizon=3, route="both") is not None


def test_lr_partition_function():
    coeff, exps = partition_function_C((2, 1), (1, 0), (1, 1))
    assert coeff == 1
    assert coeff == constants.lr((2, 1), (1, 0), (1, 1)).value
    assert partition_function_C((2, 1), (1, 0), (1, 0))[0] == 0


@pytest.mark.parametrize("model,cutoff", [(Model.TBOSON, 2), (Model.BB, 1), (Model.FB, 1)])
def test_intertwining(model, cutoff):
    ok, msg = check_intertwining(model, cutoff)
    assert ok, msg


@pytest.mark.parametrize("model", [Model.BB, Model.FB])
def test_commutation(model):
    ok, msg = check_commutation(model, max_particles=2, horizon=3)
    assert ok, msg


def test_trivial_actions():
    assert check_trivial_actions(max_length=2, max_part=2, max_rows=2) == []


def test_apply_row_and_rendering():
    frame = hall_frame((1, 0), (1, 1), (1,))
    v = StateVector.basis(frame.top, 2)
    for i in (2, 1):
        v = apply_row(frame.model, frame.colors[i - 1], i, v)
    assert v.get(frame.bottom) == expectation(frame.model, frame.colors, frame.top, frame.bottom)
    configs = enumerate_configurations(frame.model, frame.colors, frame.top, frame.bottom)
    assert configs
    text = render_configuration(configs[0])
    assert text.splitlines()[0].startswith(RowColor.E.name)


def _skew_pairs(max_length=3, max_part=3):
    from hallpuzzle.partitions import partitions_in_box
    for ell in range(1, max_length + 1):
        for lam in partitions_in_box(ell, max_part):
            for mu in partitions_in_box(ell, max_part):
                if lam.contains(mu):
                    yield lam, mu


def test_t_boson_expectation_is_skew_hall_littlewood():
    from hallpuzzle.lattice import expectation_A
    from hallpuzzle.symfunc import hl_skew_P
    for lam, mu in _skew_pairs():
        for n in (1, 2):
            raw, (num, den) = expectation_A(mu, lam, n)
            P = hl_skew_P(lam, mu, n).poly
            assert raw * MultiPoly.constant(n, num) == P * MultiPoly.constant(n, den)


def test_rotated_expectation():
    from hallpuzzle.lattice import expectation_A, expectation_A_reversed
    from hallpuzzle.symfunc import CoeffFns
    for lam, mu in _skew_pairs():
        for n in (1, 2, 3):
            raw, _ = expectation_A(mu, lam, n)
            rotated = expectation_A_reversed(lam, mu, n, lam.largest())
            assert rotated * MultiPoly.constant(n, CoeffFns.B(mu)) == \
                raw * MultiPoly.constant(n, CoeffFns.B(lam))
