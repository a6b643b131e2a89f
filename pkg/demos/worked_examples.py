"""Walk through three small structure constants and the puzzles behind them.

Run with ``python demos/worked_examples.py`` after installing the package.
"""

from hallpuzzle import constants, lattice, puzzles
from hallpuzzle.polyalg import format_unipoly


def show_dipole(kind, a, b, c):
    fn = constants.hall if kind == "hall" else constants.inv_kostka
    result = fn(a, b, c)
    print(f"{kind}{a, b, c}")
    for route, value in result.values.items():
        print(f"  {route.value:8} {format_unipoly(value)}")
    if kind == "hall":
        lam, mu, nu = constants.hall_frame_data(a, b, c)
        found = puzzles.enumerate_hall_puzzles(mu, lam, nu)
    else:
        lam, mu, nu = constants.kostka_frame_data(a, b, c)
        found = puzzles.enumerate_kostka_puzzles(mu, lam, nu)
    total = format_unipoly(puzzles.signed_weight_sum(found))
    print(f"  frame lambda={lam} mu={mu} nu={nu}: {len(found)} puzzles, signed sum {total}")
    for p in found[:2]:
        print("\n".join("    " + line for line in puzzles.render(p).splitlines()))
    print()


def show_lr(a, b, c):
    result = constants.lr(a, b, c)
    print(f"lr{a, b, c} = {result.value}")
    frame = constants.lr_frame_data(a, b, c)
    coeff, exps = lattice.partition_function_C(*frame)
    print(f"  lattice monomial {coeff} * x^{exps}")
    for i, rt in enumerate(puzzles.enumerate_rt_puzzles(*frame), 1):
        kt = puzzles.rt_to_kt(rt)
        print(f"  right-triangle puzzle {i}:")
        print("\n".join("    " + line for line in rt.ascii().splitlines()))
        print(f"  as a triangle puzzle ({puzzles.kt_tile_count(kt)} tile shapes used):")
        print("\n".join("    " + line for line in kt.ascii().splitlines()))
    print()


if __name__ == "__main__":
    show_dipole("hall", (4, 1, 1, 1), (3, 1, 1, 0), (2,))
    show_dipole("hall", (3, 2, 1), (2, 1, 0), (2, 1))
    show_dipole("inv_kostka", (1, 1, 1), (0, 0, 0), (2, 1))
    show_lr((4, 4, 2, 1), (3, 3, 1, 0), (2, 1, 1, 0))
