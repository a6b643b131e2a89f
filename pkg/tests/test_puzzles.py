import dataclasses
import json
import random
from pathlib import Path

import jsonschema
import pytest

from hallpuzzle import constants
from hallpuzzle.lattice import Model, _block_rho, blockwise_sum, hall_frame, kostka_frame
from hallpuzzle.partitions import partitions_in_box
from hallpuzzle.polyalg import UniPoly
from hallpuzzle.puzzles import (
    PUZZLE_SCHEMA, PuzzleError, arrangements, block_puzzle_sum, enumerate_hall_puzzles,
    enumerate_kostka_puzzles, enumerate_rt_puzzles, lattice_to_rt, lr_configurations,
    parse_puzzle, render, rt_to_kt, signed_weight_sum, to_json_dict, validate_dipole_puzzle,
)

GOLDEN = Path(__file__).parent / "golden"
t = UniPoly((0, 1))


def _rows(a, b, c):
    nu = constants.kostka_frame_data(a, b, c)[2]
    return len(nu) + sum(nu)


def small_triples(seed, count, max_weight=4):
    rng = random.Random(seed)
    pool = [tr for tr in constants.triples(max_weight) if _rows(*tr) <= 9]
    return rng.sample(pool, count)


@pytest.fixture(scope="module")
def worked_example():
    lam, mu, nu = constants.hall_frame_data((4, 1, 1, 1), (3, 1, 1, 0), (2,))
    return enumerate_hall_puzzles(mu, lam, nu)


def test_worked_example(worked_example):
    assert len(worked_example) == 4
    assert signed_weight_sum(worked_example) == t ** 10 * (1 - t) ** 2
    assert [p.length for p in worked_example] == [0, 1, 1, 2]


def test_golden_ascii(worked_example):
    (first,) = [p for p in worked_example if p.puzzle.row_r == (3, 0, 0)]
    assert render(first) + "\n" == (GOLDEN / "hall_4111_first_puzzle.txt").read_text()


def test_arrangements():
    assert arrangements([0, 0, 0]) == 1
    assert arrangements([2, 1, 0]) == 2
    assert arrangements([1, 1, 0]) == 1
    assert arrangements([3, 2, 1]) == 6


def test_empty_block_sequence_gives_one_empty_puzzle_exactly_when_boundaries_match():
    for lam in partitions_in_box(2, 2):
        for mu in partitions_in_box(2, 2):
            if mu.largest() < lam.largest():
                continue
            found = enumerate_hall_puzzles(mu, lam, ())
            assert len(found) == (1 if lam == mu else 0)
            if found:
                assert found[0].puzzle.rows == ()
                assert signed_weight_sum(found) == 1
            found = enumerate_kostka_puzzles(mu, lam, ())
            assert len(found) == (1 if lam == mu else 0)


@pytest.mark.parametrize("a,b,c", small_triples(4, 20))
def test_puzzle_sums_match_lattice(a, b, c):
    for fd, fr, enum in ((constants.hall_frame_data, hall_frame, enumerate_hall_puzzles),
                         (constants.kostka_frame_data, kostka_frame, enumerate_kostka_puzzles)):
        lam, mu, nu = fd(a, b, c)
        frame = fr(lam, mu, nu)
        want = blockwise_sum(frame, _block_rho)
        assert blockwise_sum(frame, block_puzzle_sum) == want
        assert signed_weight_sum(enum(mu, lam, nu)) == want


def test_block_sums_match_divided_differences():
    frame = hall_frame((3, 3, 0), (3, 3, 1), (2, 1))
    for N in (1, 2, 3):
        for model in (Model.BB, Model.FB):
            assert block_puzzle_sum(model, frame.top, N) == _block_rho(model, frame.top, N)


def test_literal_weighting_misses_rearrangements():
    lam, mu, nu = constants.hall_frame_data((4,), (3,), (1,))
    frame = hall_frame(lam, mu, nu)
    want = blockwise_sum(frame, _block_rho)
    literal = blockwise_sum(frame, lambda m, s, N: block_puzzle_sum(m, s, N, "literal"))
    assert blockwise_sum(frame, block_puzzle_sum) == want
    assert literal != want
    found = enumerate_hall_puzzles(mu, lam, nu)
    assert any(p.multiplicity > 1 for p in found)
    assert signed_weight_sum(found) == want
    assert signed_weight_sum(enumerate_hall_puzzles(mu, lam, nu, "literal")) == literal
    heavy = next(p for p in found if p.multiplicity > 1)
    assert f"multiplicity {heavy.multiplicity}" in render(heavy)


def test_validation_rejects_tampering(worked_example):
    p = worked_example[0].puzzle
    with pytest.raises(PuzzleError):
        validate_dipole_puzzle(dataclasses.replace(p, row_r=(2, 1, 0)))
    with pytest.raises(PuzzleError):
        validate_dipole_puzzle(dataclasses.replace(p, mu=p.lam))


@pytest.mark.parametrize("a,b,c", small_triples(5, 8) + [((3, 2, 1), (2, 1, 0), (2, 1))])
def test_json_schema_and_round_trip(a, b, c):
    lam, mu, nu = constants.hall_frame_data(a, b, c)
    found = enumerate_hall_puzzles(mu, lam, nu)
    lam, mu, nu = constants.kostka_frame_data(a, b, c)
    found += enumerate_kostka_puzzles(mu, lam, nu)
    for p in found:
        data = json.loads(render(p, "json"))
        jsonschema.validate(data, PUZZLE_SCHEMA)
        back = parse_puzzle(data)
        assert back == p
        validate_dipole_puzzle(back.puzzle)


def test_rt_and_kt_json_validate():
    frame = constants.lr_frame_data((4, 4, 2, 1), (3, 3, 1, 0), (2, 1, 1, 0))
    for p in enumerate_rt_puzzles(*frame):
        jsonschema.validate(to_json_dict(p), PUZZLE_SCHEMA)
        jsonschema.validate(to_json_dict(rt_to_kt(p)), PUZZLE_SCHEMA)


def lr_frames(max_weight):
    frames = set()
    for a, b, c in constants.triples(max_weight):
        frame = constants._lr_applicable(a, b, c)
        if frame is not None:
            frames.add(frame)
    return sorted(frames)


def test_rt_count_equals_lattice_coefficient():
    for lam, mu, nu in lr_frames(6):
        assert len(enumerate_rt_puzzles(lam, mu, nu)) == constants.lr_lattice(lam, mu, nu)


def test_lattice_to_rt_is_a_bijection():
    for frame in lr_frames(5):
        rts = enumerate_rt_puzzles(*frame)
        images = [lattice_to_rt(cfg, *frame) for cfg in lr_configurations(*frame)]
        assert len(set(images)) == len(images) == len(rts)
        assert set(images) == set(rts)
        for p in rts:
            kt = rt_to_kt(p)
            assert kt.n == len(p.tiles) - 1


def test_rt_ascii():
    frame = constants.lr_frame_data((2, 1), (1, 0), (1, 1))
    (p,) = enumerate_rt_puzzles(*frame)
    rows = p.ascii().splitlines()
    assert len(rows) == len(p.tiles)
    assert render(p).startswith(rows[0]) or rows[0] in render(p)
