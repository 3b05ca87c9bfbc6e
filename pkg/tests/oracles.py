"""Reference implementations the package code is checked against.

Each oracle is written independently of the code under test: no monads,
no shared helpers.
"""

from fractions import Fraction
from itertools import product


def insertion_permutations(xs):
    """All distinct permutations, built by inserting the head at every position."""
    if not xs:
        return {()}
    head, rest = xs[0], xs[1:]
    out = set()
    for p in insertion_permutations(rest):
        for k in range(len(p) + 1):
            out.add(p[:k] + (head,) + p[k:])
    return out


def all_lists(max_len, alphabet):
    for n in range(max_len + 1):
        yield from product(range(alphabet), repeat=n)


def is_interleaving(left, right, whole):
    """Does ``whole`` merge ``left`` and ``right`` preserving both orders?"""
    if not whole:
        return not left and not right
    x = whole[0]
    return bool(
        (left and left[0] == x and is_interleaving(left[1:], right, whole[1:]))
        or (right and right[0] == x and is_interleaving(left, right[1:], whole[1:]))
    )


def expand_choice(p, a, b):
    """``a <|p|> b`` on plain dicts."""
    out = {}
    for x, w in a.items():
        out[x] = out.get(x, 0) + Fraction(p) * w
    for x, w in b.items():
        out[x] = out.get(x, 0) + (1 - Fraction(p)) * w
    return {x: w for x, w in out.items() if w}


def expand_bind(pmf, g):
    out = {}
    for a, pa in pmf.items():
        for b, w in g(a).items():
            out[b] = out.get(b, 0) + pa * w
    return {x: w for x, w in out.items() if w}


def run_quicksort_cells(cells, i, xs):
    """Reference result of writing ``xs`` at ``i`` then sorting that segment."""
    cells = dict(cells)
    for k, x in enumerate(sorted(xs)):
        cells[i + k] = x
    return cells
