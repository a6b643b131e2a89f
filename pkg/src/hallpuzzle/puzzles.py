"""Dipole puzzles for Hall and inverse Kostka coefficients, and triangular puzzles
for Littlewood-Richardson coefficients.

A dipole puzzle is a lattice configuration of one block (an E row on top of N
B rows) together with a frozen left column.  Row ``i`` of a block carries the
integer ``r_i``, the number of tiles in that row that would carry a spectral
parameter.  A configuration counts as a puzzle when ``(r_1, ..., r_N)`` is a
partition and the ``r_i`` have the prescribed total; it is then weighted by
``(-1)^length`` times the product of its tile weights, times the number of
distinct rearrangements of its nonzero row excesses (see ``block_puzzle_sum``).
"""

import json
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from math import factorial

from .lattice import (
    _TILES, EMPTY, GLYPHS, LatticeState, Model, RowColor, _row_transitions, enumerate_configurations,
    hall_frame, kostka_frame, lr_frame, row_configurations, site_moves,
)
from .partitions import DomainError, Partition, maya_word
from .polyalg import ONE, ZERO, UniPoly, format_unipoly, parse_unipoly


class PuzzleError(ValueError):
    """A puzzle violates a tiling rule or its frame."""


class ConversionError(ValueError):
    """A lattice configuration does not correspond to exactly one puzzle."""


# ---------------------------------------------------------------------------
# block rule


def _rule(model):
    """Return ``(r0_offset, length_threshold, total(N))`` for the dipole rule of ``model``."""
    if model is Model.BB:
        return 0, 0, lambda N: N + 1
    if model is Model.FB:
        return 1, 1, lambda N: 2 * N + 2
    raise DomainError(f"no dipole puzzle rule for {model}")


def arrangements(values):
    """Distinct orderings of the nonzero entries of ``values``."""
    nonzero = [v for v in values if v]
    out = factorial(len(nonzero))
    for count in Counter(nonzero).values():
        out //= factorial(count)
    return out


def _excess(model, rs):
    """Row values with the per-row offset of ``model`` removed (B rows only)."""
    threshold = _rule(model)[1]
    return [r - threshold for r in rs]


@lru_cache(maxsize=100000)
def _block_puzzle_sum(model, top, N, weighting):
    offset, threshold, total_of = _rule(model)
    total = total_of(N)
    # key: (sites, B-row values so far, running total) -> weight
    layer = {}
    for (sites, xpow), w in _row_transitions(model, RowColor.E.value, top.sites()):
        r0 = xpow + offset
        if r0 <= total:
            key = (sites, (), r0)
            layer[key] = layer.get(key, ZERO) + w
    for _ in range(N):
        nxt = {}
        for (sites, rs, acc), w in layer.items():
            for (new, r), w2 in _row_transitions(model, RowColor.B.value, sites):
                if rs and r > rs[-1]:
                    continue
                if acc + r > total:
                    continue
                key = (new, rs + (r,), acc + r)
                nxt[key] = nxt.get(key, ZERO) + w * w2
        layer = nxt
    out = {}
    for (sites, rs, acc), w in layer.items():
        if acc != total or not w:
            continue
        length = sum(1 for r in rs if r > threshold)
        factor = (-1) ** length
        if weighting == "orbit":
            factor *= arrangements(_excess(model, rs))
        state = LatticeState.from_sites(sites)
        out[state] = out.get(state, ZERO) + w * factor
    return {s: v for s, v in out.items() if v}


def block_puzzle_sum(model, top_state, N, weighting="orbit"):
    """Signed puzzle weights of one block, grouped by the bottom boundary.

    Only the rows' ``r`` values and tile weights enter, so the sum is
    computed row by row without listing puzzles. With ``weighting="orbit"``
    each puzzle also counts the distinct rearrangements of its nonzero row
    excesses (``r_i`` for Hall blocks, ``r_i - 1`` for Kostka blocks); the
    block rows commute, so every rearranged configuration carries the same
    weight and the puzzle stands in for all of them. ``weighting="literal"``
    drops that factor, which is exact only while the nonzero excesses of
    each block are all equal.
    """
    if weighting not in ("orbit", "literal"):
        raise ValueError(f"unknown weighting {weighting!r}")
    return _block_puzzle_sum(model, top_state, N, weighting)


# ---------------------------------------------------------------------------
# explicit dipole puzzles


_LIGHT_PLUS = {"plusg", "plusr"}
_LIGHT_MINUS = {"ming", "minr"}


@dataclass(frozen=True)
class DipolePuzzle:
    """Tiles of one puzzle, one tuple of tile names per row from the top.

    Column 0 is the frozen column; site ``k`` occupies columns ``2k+1``
    (light) and ``2k+2`` (dark).
    """

    variant: str
    lam: Partition
    mu: Partition
    nu: Partition
    rows: tuple
    row_r: tuple

    @property
    def light(self):
        return "G" if self.variant == "hall" else "R"

    def dipoles(self):
        out = []
        for y, row in enumerate(self.rows):
            open_ = None
            for x, name in enumerate(row):
                if name in _LIGHT_PLUS or name == "plusb":
                    open_ = (self.light if name in _LIGHT_PLUS else "B", x)
                if name in _LIGHT_MINUS or name == "minb":
                    color = self.light if name in _LIGHT_MINUS else "B"
                    if open_ is None or open_[0] != color:
                        raise PuzzleError(f"unmatched {name} at row {y}, column {x}")
                    out.append({"color": color, "row": y, "start": open_[1], "end": x})
                    open_ = None
            if open_ is not None:
                raise PuzzleError(f"dipole left open in row {y}")
        return out

    def block_rows(self):
        """Rows grouped by block, each group starting with its E row."""
        groups, y = [], 0
        for N in self.nu:
            groups.append(tuple(range(y, y + N + 1)))
            y += N + 1
        return groups

    def length(self):
        _offset, threshold, _ = _rule(_model_of(self.variant))
        return sum(1 for group in self.block_rows() for y in group[1:] if self.row_r[y] > threshold)

    def multiplicity(self):
        """Product over blocks of the rearrangement counts of the row excesses."""
        model = _model_of(self.variant)
        out = 1
        for group in self.block_rows():
            out *= arrangements(_excess(model, [self.row_r[y] for y in group[1:]]))
        return out


@dataclass(frozen=True)
class WeightedPuzzle:
    puzzle: DipolePuzzle
    weight: UniPoly
    length: int = 0
    multiplicity: int = 1

    @property
    def signed_weight(self):
        w = self.weight * self.multiplicity
        return -w if self.length % 2 else w


def _model_of(variant):
    return {"hall": Model.BB, "kostka": Model.FB}[variant]


def _frame_of(variant, lam, mu, nu):
    return hall_frame(lam, mu, nu) if variant == "hall" else kostka_frame(lam, mu, nu)


def _frozen_column(nu):
    col = []
    for N in nu:
        col.append("bdark")
        col.extend(["plusb"] * N)
    return col


def _is_puzzle(model, nu, xpows):
    offset, threshold, total_of = _rule(model)
    y = 0
    for N in nu:
        rs = [xpows[y] + offset] + list(xpows[y + 1:y + N + 1])
        if sum(rs) != total_of(N):
            return False
        if any(a < b for a, b in zip(rs[1:], rs[2:])):
            return False
        y += N + 1
    return True


def _enumerate(variant, lam, mu, nu, weighting):
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    frame = _frame_of(variant, lam, mu, nu)
    model = frame.model
    offset = _rule(model)[0]
    frozen = _frozen_column(nu)
    out = []
    for config in enumerate_configurations(model, frame.colors, frame.top, frame.bottom):
        if not _is_puzzle(model, nu, config.xpows):
            continue
        rows, rs, y = [], [], 0
        for N in nu:
            for i in range(N + 1):
                tiles = [frozen[y]]
                for light, dark in config.rows[y]:
                    tiles.extend((light, dark))
                rows.append(tuple(tiles))
                rs.append(config.xpows[y] + (offset if i == 0 else 0))
                y += 1
        puzzle = DipolePuzzle(variant, lam, mu, nu, tuple(rows), tuple(rs))
        validate_dipole_puzzle(puzzle)
        mult = puzzle.multiplicity() if weighting == "orbit" else 1
        out.append(WeightedPuzzle(puzzle, config.weight(), puzzle.length(), mult))
    return out


def enumerate_hall_puzzles(mu, lam, nu, weighting="orbit"):
    """All Hall dipole puzzles with bottom ``mu``, top ``lam`` and block sizes ``nu``."""
    return _enumerate("hall", lam, mu, nu, weighting)


def enumerate_kostka_puzzles(mu, lam, nu, weighting="orbit"):
    return _enumerate("kostka", lam, mu, nu, weighting)


def column_charges(puzzle):
    """Net charge of each column: +1 per dipole start, -1 per dipole end."""
    charges = [0] * len(puzzle.rows[0])
    for d in puzzle.dipoles():
        charges[d["start"]] += 1
        charges[d["end"]] -= 1
    return charges


@lru_cache(maxsize=None)
def _tile_xpow(model):
    """Map each (light, dark) tile pair to the x-power it contributes."""
    out = {}
    for a in (0, 1, 2):
        for site in ((0, 1), (1, 1)):
            for b, _new, _w, dx in site_moves(model, a, site):
                out[_TILES[model][(a, b)]] = dx
    return out


def _row_xpow(model, row):
    table = _tile_xpow(model)
    try:
        return sum(table[(row[x], row[x + 1])] for x in range(1, len(row), 2))
    except KeyError as exc:
        raise PuzzleError(f"unknown tile pair {exc.args[0]}") from None


def validate_dipole_puzzle(puzzle):
    """Check frozen column, row rule and column charges against the frame."""
    model = _model_of(puzzle.variant)
    if not puzzle.rows:
        if puzzle.lam != puzzle.mu:
            raise PuzzleError("an empty puzzle needs equal boundaries")
        return True
    if [row[0] for row in puzzle.rows] != _frozen_column(puzzle.nu):
        raise PuzzleError("frozen column does not match the block structure")
    offset, threshold, total_of = _rule(model)
    for group, N in zip(puzzle.block_rows(), puzzle.nu):
        for i, y in enumerate(group):
            want = _row_xpow(model, puzzle.rows[y]) + (offset if i == 0 else 0)
            if puzzle.row_r[y] != want:
                raise PuzzleError(f"row {y} records r={puzzle.row_r[y]} but its tiles give {want}")
        rs = [puzzle.row_r[y] for y in group]
        if sum(rs) != total_of(N) or any(a < b for a, b in zip(rs[1:], rs[2:])):
            raise PuzzleError(f"row values {rs} break the block rule")
    frame = _frame_of(puzzle.variant, puzzle.lam, puzzle.mu, puzzle.nu)
    charges = column_charges(puzzle)
    light = charges[1::2]
    want = [b - a for a, b in zip(frame.top.green, frame.bottom.green)]
    if light != want:
        raise PuzzleError(f"light column charges {light} differ from {want}")
    dark = charges[0::2]
    weight = sum(puzzle.nu)
    if dark[0] != weight or dark[-1] != -weight or any(dark[1:-1]):
        raise PuzzleError(f"dark column charges {dark} are not ({weight}, 0, ..., -{weight})")
    return True


def signed_weight_sum(puzzles):
    total = ZERO
    for p in puzzles:
        total = total + p.signed_weight
    return total


# ---------------------------------------------------------------------------
# rendering


def _schema():
    text = resources.files(__package__).joinpath("puzzle_schema.json").read_text()
    return json.loads(text)


PUZZLE_SCHEMA = _schema()


def _frame_dict(lam, mu, nu):
    return {"lambda": list(lam), "mu": list(mu), "nu": list(nu)}


def render_ascii(puzzle):
    """Multi-line glyph picture; ``|`` separates the frozen column from the sites."""
    if isinstance(puzzle, WeightedPuzzle):
        inner = puzzle.puzzle
        head = f"weight {format_unipoly(puzzle.weight)}  length {puzzle.length}"
        if puzzle.multiplicity != 1:
            head += f"  multiplicity {puzzle.multiplicity}"
    else:
        inner, head = puzzle, None
    if isinstance(inner, (RightTrianglePuzzle, KTPuzzle)):
        body = inner.ascii()
    else:
        lines = []
        for y, row in enumerate(inner.rows):
            lines.append(f"{GLYPHS[row[0]]}|" + "".join(GLYPHS[n] for n in row[1:])
                         + f"   r={inner.row_r[y]}")
        body = "\n".join(lines)
    return body if head is None else head + "\n" + body


def to_json_dict(puzzle):
    if isinstance(puzzle, WeightedPuzzle):
        inner, weight, length = puzzle.puzzle, format_unipoly(puzzle.weight), puzzle.length
        mult = puzzle.multiplicity
    else:
        inner, weight, length, mult = puzzle, None, None, None
    if isinstance(inner, RightTrianglePuzzle):
        return {"variant": "rt", "frame": _frame_dict(inner.lam, inner.mu, inner.nu),
                "rows": len(inner.tiles), "cols": len(inner.tiles[0]), "dipoles": [],
                "weight": "1", "length": 0, "tiles": [list(r) for r in inner.tiles]}
    if isinstance(inner, KTPuzzle):
        return {"variant": "kt", "frame": _frame_dict(inner.lam, inner.mu, inner.nu),
                "rows": inner.n, "cols": inner.n, "dipoles": [], "weight": "1", "length": 0,
                "tiles": [{"kind": k, "cells": [list(c) for c in cells]} for k, cells in inner.pieces]}
    if weight is None:
        weight = "1"
        length = inner.length()
        mult = inner.multiplicity()
    return {"variant": inner.variant, "frame": _frame_dict(inner.lam, inner.mu, inner.nu),
            "rows": len(inner.rows), "cols": len(inner.rows[0]) if inner.rows else 0,
            "dipoles": inner.dipoles(), "weight": weight, "length": length,
            "multiplicity": mult, "r": list(inner.row_r)}


def render(puzzle, fmt="ascii"):
    if fmt == "ascii":
        return render_ascii(puzzle)
    if fmt == "json":
        return json.dumps(to_json_dict(puzzle), sort_keys=True)
    raise ValueError(f"unknown format {fmt!r}")


def _tile_at(x, color, role):
    if x == 0 or x % 2 == 0:
        table = {"plus": "plusb", "minus": "minb", "flat": "flatb"} if color == "B" else \
            {"flat": "flatG" if color == "G" else "flatR"}
    else:
        light = "g" if color == "G" else "r"
        table = {"flat": "flatB"} if color == "B" else \
            {"plus": "plus" + light, "minus": "min" + light, "flat": "flat" + light}
    if role not in table:
        raise PuzzleError(f"a {color} dipole cannot have its {role} end at column {x}")
    return table[role]


def parse_puzzle(data):
    """Rebuild a dipole puzzle (with its weight) from ``to_json_dict`` output."""
    if isinstance(data, str):
        data = json.loads(data)
    variant = data["variant"]
    if variant not in ("hall", "kostka"):
        raise PuzzleError("only dipole puzzles can be parsed")
    lam, mu, nu = (Partition(data["frame"][k]) for k in ("lambda", "mu", "nu"))
    rows, cols = data["rows"], data["cols"]
    grid = [["bdark"] + ["blight" if x % 2 else "bdark" for x in range(1, cols)] for _ in range(rows)]
    for d in data["dipoles"]:
        y, s, e, c = d["row"], d["start"], d["end"], d["color"]
        grid[y][s] = _tile_at(s, c, "plus")
        grid[y][e] = _tile_at(e, c, "minus")
        for x in range(s + 1, e):
            grid[y][x] = _tile_at(x, c, "flat")
    puzzle = DipolePuzzle(variant, lam, mu, nu, tuple(tuple(r) for r in grid), tuple(data["r"]))
    return WeightedPuzzle(puzzle, parse_unipoly(data["weight"]), int(data["length"]),
                          int(data.get("multiplicity", 1)))


# ---------------------------------------------------------------------------
# right-triangle puzzles


# (left, top, right, bottom)
RT_TILES = {
    "rp": ("E", "E", "R", "R"),
    "rmin": ("R", "R", "E", "E"),
    "rver": ("E", "R", "E", "R"),
    "rhor": ("R", "E", "R", "E"),
    "rb": ("R", "B", "R", "B"),
    "bver": ("E", "B", "E", "B"),
    "bhor": ("B", "E", "B", "E"),
    "bp": ("E", "E", "B", "B"),
    "bmin": ("B", "B", "E", "E"),
}
RT_GLYPHS = {"rp": "R", "rmin": "r", "rver": "|", "rhor": "=", "rb": "+",
             "bver": "!", "bhor": "-", "bp": "K", "bmin": "k"}
_RED_TILES = {"rp", "rmin", "rver", "rhor"}
_FROZEN = {"rver", "bver"}
_BY_LEFT_TOP = {}
for _name, (_l, _t, _r, _b) in RT_TILES.items():
    _BY_LEFT_TOP.setdefault((_l, _t), []).append(_name)


def _lr_data(lam, mu, nu):
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    ell = max(len(lam), len(mu), len(nu), 1)
    lam, mu, nu = lam.pad_to(ell), mu.pad_to(ell), nu.pad_to(ell)
    return lam, mu, nu, ell, lam.largest()


@dataclass(frozen=True)
class RightTrianglePuzzle:
    """Square grid of tiles, rows from the top; cells right of the diagonal are frozen."""

    lam: Partition
    mu: Partition
    nu: Partition
    tiles: tuple

    def ascii(self):
        return "\n".join("".join(RT_GLYPHS[t] for t in row) for row in self.tiles)


def rt_boundaries(lam, mu, nu):
    lam, mu, nu, ell, L = _lr_data(lam, mu, nu)
    n = ell + L
    top = ["R"] + maya_word(lam, n, "B", "R")
    bottom = ["E"] + maya_word(mu, n, "B", "E")
    left = maya_word(nu, n + 1, "E", "R")
    return top, bottom, left, n


def _rt_rows(top_word, left_label, n_cols, row_index):
    """Every tiling of one row with given top edges and left boundary label."""
    out = []

    def rec(c, left, tiles, bottoms):
        if c == n_cols:
            if left == "E":
                out.append((tuple(tiles), tuple(bottoms)))
            return
        for name in _BY_LEFT_TOP.get((left, top_word[c]), ()):
            if c > row_index and name not in _FROZEN:
                continue
            rec(c + 1, RT_TILES[name][2], tiles + [name], bottoms + [RT_TILES[name][3]])

    rec(0, left_label, [], [])
    return out


def enumerate_rt_puzzles(lam, mu, nu, cut_words=None):
    """All right-triangle puzzles of the frame; ``cut_words`` optionally pins the
    red/black content of each horizontal cut below row r (E labels removed)."""
    lam_p, mu_p, nu_p, _ell, _L = _lr_data(lam, mu, nu)
    top, bottom, left, n = rt_boundaries(lam, mu, nu)
    out = []

    def rec(r, word, acc):
        if r == n + 1:
            if list(word) == bottom:
                out.append(RightTrianglePuzzle(lam_p, mu_p, nu_p, tuple(acc)))
            return
        for tiles, bottoms in _rt_rows(word, left[r], n + 1, r):
            if cut_words is not None and "".join(b for b in bottoms if b != "E") != cut_words[r]:
                continue
            rec(r + 1, bottoms, acc + [tiles])

    rec(0, tuple(top), [])
    return out


def lattice_cut_words(config):
    """Red/black content of each lattice cut below the top: ``R`` then ``B`` per black particle."""
    words = []
    for sites in config.cuts[1:]:
        words.append("".join(("R" if g else "") + "B" * k for g, k in sites))
    return words


def lattice_to_rt(config, lam, mu, nu):
    """The unique right-triangle puzzle sharing every cut of ``config``."""
    found = enumerate_rt_puzzles(lam, mu, nu, cut_words=lattice_cut_words(config))
    if len(found) != 1:
        raise ConversionError(f"expected one matching puzzle, found {len(found)}")
    return found[0]


def lr_configurations(lam, mu, nu):
    lam, mu, nu, _ell, _L = _lr_data(lam, mu, nu)
    frame = lr_frame(lam, mu, nu)
    return enumerate_configurations(frame.model, frame.colors, frame.top, frame.bottom)


# ---------------------------------------------------------------------------
# KT puzzles


_V_LABEL = {"E": "+", "R": "-", "B": "0"}
_H_LABEL = {"E": "-", "R": "0", "B": "+"}


@dataclass(frozen=True)
class KTPuzzle:
    """Triangles of the sheared grid and their grouping into the seven tile shapes.

    Cells ``(r, c)`` with ``1 <= c <= r <= n`` are kept.  Triangle ``A`` has the
    cell's left, bottom and diagonal edges; triangle ``B`` its top, right and
    diagonal edges and exists only off the diagonal.
    """

    lam: Partition
    mu: Partition
    nu: Partition
    n: int
    triangles: tuple
    pieces: tuple

    def ascii(self):
        kinds = {}
        for kind, cells in self.pieces:
            for cell in cells:
                kinds[cell] = kind
        glyph = {"up+": "+", "up-": "-", "down+": "+", "down-": "-",
                 "rh-V": "v", "rh-H": "h", "rh-D": "d"}
        lines = []
        for r in range(1, self.n + 1):
            line = []
            for c in range(1, r + 1):
                a = glyph[kinds[(r, c, "A")]]
                b = glyph[kinds[(r, c, "B")]] if c < r else ""
                line.append(a + b)
            lines.append(" ".join(line))
        return "\n".join(lines)


def rt_to_kt(rt):
    """Shear a right-triangle puzzle into a KT puzzle and check the seven-tile rule."""
    tiles = rt.tiles
    n = len(tiles) - 1
    tri = {}
    for r in range(1, n + 1):
        for c in range(1, r + 1):
            name = tiles[r][c]
            left, top, right, bottom = RT_TILES[name]
            diag = "-" if name in _RED_TILES else ("0" if name == "rb" else "+")
            tri[(r, c, "A")] = {"V": _V_LABEL[left], "H": _H_LABEL[bottom], "D": diag}
            if c < r:
                tri[(r, c, "B")] = {"V": _V_LABEL[right], "H": _H_LABEL[top], "D": diag}
    pieces, used = [], set()
    for key in sorted(tri):
        if key in used:
            continue
        labels = tri[key]
        zeros = [e for e, v in labels.items() if v == "0"]
        r, c, side = key
        if not zeros:
            if len(set(labels.values())) != 1:
                raise PuzzleError(f"triangle {key} has mixed labels {labels}")
            pieces.append((("up" if side == "A" else "down") + labels["V"], (key,)))
            used.add(key)
            continue
        if len(zeros) > 1:
            raise PuzzleError(f"triangle {key} has two zero edges")
        edge = zeros[0]
        if edge == "D":
            partner = (r, c, "B" if side == "A" else "A")
        elif edge == "V":
            partner = (r, c - 1, "B") if side == "A" else (r, c + 1, "A")
        else:
            partner = (r + 1, c, "B") if side == "A" else (r - 1, c, "A")
        if partner not in tri or partner in used:
            raise PuzzleError(f"zero edge of {key} lies on the boundary")
        other = tri[partner]
        if other[edge] != "0":
            raise PuzzleError(f"zero edge of {key} mismatched")
        want = {"V": {"H": "-", "D": "+"}, "H": {"D": "-", "V": "+"}, "D": {"H": "+", "V": "-"}}[edge]
        for t in (labels, other):
            for e, v in want.items():
                if t[e] != v:
                    raise PuzzleError(f"rhombus at {key} has label {t[e]} on its {e} edge")
        pieces.append(("rh-" + edge, tuple(sorted((key, partner)))))
        used.update((key, partner))
    kt = KTPuzzle(rt.lam, rt.mu, rt.nu, n, tuple(sorted((k, tuple(sorted(v.items()))) for k, v in tri.items())),
                  tuple(pieces))
    _check_kt_boundary(kt, tri)
    return kt


def _check_kt_boundary(kt, tri):
    n = kt.n
    sign = {"B": "+", "R": "-"}
    left = [sign[s] for s in maya_word(kt.nu, n + 1, "B", "R")[:n]]
    bottom = [sign[s] for s in maya_word(kt.mu, n, "B", "R")]
    diag = [sign[s] for s in maya_word(kt.lam, n, "B", "R")]
    got_left = [tri[(r, 1, "A")]["V"] for r in range(1, n + 1)]
    got_bottom = [tri[(n, c, "A")]["H"] for c in range(1, n + 1)]
    got_diag = [tri[(r, r, "A")]["D"] for r in range(1, n + 1)]
    for name, want, got in (("left", left, got_left), ("bottom", bottom, got_bottom),
                            ("diagonal", diag, got_diag)):
        if want != got:
            raise PuzzleError(f"{name} boundary {''.join(got)} differs from {''.join(want)}")


def kt_tile_count(kt):
    return len({kind for kind, _ in kt.pieces})
