import pytest

from hallpuzzle.partitions import Partition, partitions_of
from hallpuzzle.polyalg import MultiPoly, UniPoly
from hallpuzzle.symfunc import (
    Basis, CoeffFns, branching_check, cauchy_check, complete_h, expand_in_basis, hl_P, hl_Q,
    hl_skew_P, monomial_m, one_variable_skew_S, q_gen, schur_s, tschur_S, tschur_skew_S,
)

t = UniPoly((0, 1))
x1, x2 = MultiPoly.variable(1, 2), MultiPoly.variable(2, 2)


def small(max_weight, max_length=3):
    return [p for w in range(max_weight + 1) for p in partitions_of(w, None, max_length)]


def test_two_variable_hall_littlewood():
    assert hl_P((2,), 2).poly == x1 ** 2 + x2 ** 2 + MultiPoly.constant(2, 1 - t) * x1 * x2
    assert hl_P((1, 1), 2).poly == x1 * x2
    assert hl_P((1, 1, 1), 2).poly.is_zero()


@pytest.mark.parametrize("lam", small(4))
def test_specialisations(lam):
    n = 3
    P = hl_P(lam, n)
    assert P.is_symmetric()
    assert P.substitute_t(0) == schur_s(lam, n)
    assert P.substitute_t(1) == monomial_m(lam, n)
    assert tschur_S(lam, n).substitute_t(0) == schur_s(lam, n)
    assert hl_Q(lam, n).poly == P.poly * MultiPoly.constant(n, CoeffFns.b(lam))


def test_generators():
    assert q_gen(1, 2).poly == MultiPoly.constant(2, 1 - t) * (x1 + x2)
    assert complete_h(2, 2) == x1 ** 2 + x1 * x2 + x2 ** 2
    assert q_gen(0, 3).poly == MultiPoly.constant(3)


def test_coefficient_functions():
    assert CoeffFns.b((2, 1, 1)) == (1 - t) ** 2 * (1 - t ** 2)
    assert CoeffFns.B((1, 0)) == (1 - t) ** 2
    assert CoeffFns.psi((2, 1), (1, 1)) == 1 - t ** 2
    assert CoeffFns.phi((2,), (1,)) == 1 - t
    assert not CoeffFns.phi((2, 2), (1,))


def test_skew_of_empty_inner_is_straight():
    for lam in small(4):
        assert hl_skew_P(lam, (), 3) == hl_P(lam, 3)
        assert tschur_skew_S(lam, (), 2) == tschur_S(lam, 2)


def test_one_variable_skew():
    assert one_variable_skew_S((1,), ()) == 1 - t
    assert one_variable_skew_S((2, 1), ()) == -t * (1 - t)


@pytest.mark.parametrize("basis,fn", [(Basis.SCHUR, schur_s), (Basis.HL_P, hl_P)])
def test_expansion_recovers_basis_elements(basis, fn):
    for lam in small(4):
        got = expand_in_basis(fn(lam, 3), basis)
        assert got == {Partition(lam).stripped(): UniPoly((1,))}


def test_schur_in_hall_littlewood_at_t_zero():
    f = schur_s((2, 1), 3)
    coeffs = expand_in_basis(f, Basis.HL_P)
    assert coeffs[Partition((2, 1))] == 1
    assert coeffs[Partition((1, 1, 1))] == t + t ** 2


def test_branching_and_cauchy():
    assert branching_check((2, 1), 1, 1)
    assert branching_check((2, 1, 1), 2, 1)
    assert cauchy_check(1, 1, 2)
