"""Array monads and in-place quicksort.

An :class:`ArrayStore` is a total map from natural indices to values: unwritten
cells read as ``default``.  :class:`ArrayModel` puts ``aget``/``aput`` on top
of :class:`~effectlaws.transformers.StateT`; over the identity base it is the
plain array monad, over the powerset base it is the plus-array monad in which
``fail`` discards the store (backtracking).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as cartesian
from typing import Any, Iterable, Mapping, Optional, Sequence

from .core import IDENTITY, TT, Monad, render
from .errors import FuelExhausted, SizeCertificateViolation
from .nondet import POWERSET, RefinementResult, dassert, qperm, refines, slowsort
from .transformers import StateT

__all__ = [
    "ArrayStore",
    "ArrayModel",
    "plus_array",
    "aswap",
    "write_list",
    "ipartl",
    "PartitionSizes",
    "dipartl",
    "iqsort",
    "REFINEMENT_STORES",
    "check_iqsort_refines_slowsort",
    "check_swap_rcons_refinement",
    "check_swap_rcons_suite",
]


@dataclass(frozen=True)
class ArrayStore:
    """Persistent total array.  Cells holding ``default`` are not stored, so
    structural equality is extensional equality."""

    cells: tuple = ()
    default: Any = 0
    _map: dict = field(default=None, init=False, repr=False, compare=False, hash=False)
    _hash: int = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        m = {i: v for i, v in dict(self.cells).items() if v != self.default}
        object.__setattr__(self, "cells", tuple(sorted(m.items())))
        object.__setattr__(self, "_map", m)

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.cells, self.default)))
        return self._hash

    @classmethod
    def of(cls, values: Sequence, offset: int = 0, default: Any = 0) -> "ArrayStore":
        return cls(tuple((offset + k, v) for k, v in enumerate(values)), default)

    @classmethod
    def from_mapping(cls, cells: Mapping[int, Any], default: Any = 0) -> "ArrayStore":
        return cls(tuple(cells.items()), default)

    def __getitem__(self, i: int):
        return self._map.get(i, self.default)

    def set(self, i: int, v) -> "ArrayStore":
        if self._map.get(i, self.default) == v:
            return self
        m = dict(self._map)
        if v == self.default:
            del m[i]
        else:
            m[i] = v
        # m is already canonical, so skip __post_init__
        new = object.__new__(ArrayStore)
        object.__setattr__(new, "cells", tuple(sorted(m.items())))
        object.__setattr__(new, "default", self.default)
        object.__setattr__(new, "_map", m)
        object.__setattr__(new, "_hash", None)
        return new

    def segment(self, i: int, n: int) -> tuple:
        return tuple(self[k] for k in range(i, i + n))

    def sort_key(self):
        return (self.cells, repr(self.default))

    def __repr__(self) -> str:
        body = ", ".join(f"{i}:{render(v)}" for i, v in self.cells)
        return f"[{body} | {render(self.default)}]"


class ArrayModel(StateT):
    """``StateT`` over a base monad, with indexed cells as the state."""

    def __init__(self, base: Monad, states: Iterable[ArrayStore], name: Optional[str] = None):
        super().__init__(base, states, name or f"array[{base.name}]")

    def aget(self, i: int):
        base = self.base
        return lambda s: base.ret((s[i], s))

    def aput(self, i: int, v):
        base = self.base
        return lambda s: base.ret((TT, s.set(i, v)))


def plus_array(states: Iterable[ArrayStore] = (ArrayStore(),), name: str = "plus-array") -> ArrayModel:
    return ArrayModel(POWERSET, states, name)


def aswap(i: int, j: int, M: ArrayModel):
    return M.bind(
        M.aget(i),
        lambda x: M.bind(M.aget(j), lambda y: M.then(M.aput(i, y), M.aput(j, x))),
    )


def write_list(i: int, s: Sequence, M: ArrayModel):
    if not s:
        return M.skip()
    return M.then(M.aput(i, s[0]), write_list(i + 1, s[1:], M))


def ipartl(p, i: int, ny: int, nz: int, nx: int, M: ArrayModel):
    """Partition the ``nx`` unread cells after ``i + ny + nz`` around pivot ``p``.

    Returns the sizes of the ``<= p`` and ``> p`` partitions.
    """
    if nx == 0:
        return M.ret((ny, nz))

    def step(x):
        if x <= p:
            return M.then(aswap(i + ny, i + ny + nz, M), ipartl(p, i, ny + 1, nz, nx - 1, M))
        return ipartl(p, i, ny, nz + 1, nx - 1, M)

    return M.bind(M.aget(i + ny + nz), step)


@dataclass(frozen=True)
class PartitionSizes:
    ny: int
    nz: int
    bound: int

    def __post_init__(self):
        if self.ny > self.bound or self.nz > self.bound:
            raise SizeCertificateViolation(
                f"partition sizes ({self.ny}, {self.nz}) exceed {self.bound}"
            )

    def __repr__(self) -> str:
        return f"({self.ny}, {self.nz})<={self.bound}"


def dipartl(p, i: int, y: int, z: int, x: int, M: ArrayModel, partition=ipartl):
    """:func:`ipartl` whose result is certified to stay within ``x + y + z``."""
    bound = x + y + z

    def within(n):
        return n[0] <= bound and n[1] <= bound

    within.__name__ = f"sizes<={bound}"
    return M.bind(
        partition(p, i, y, z, x, M),
        lambda n: M.fmap(lambda certified: PartitionSizes(n[0], n[1], bound), dassert(within, n, M)),
    )


def iqsort(i: int, n: int, M: ArrayModel, partition=ipartl):
    """Sort cells ``i .. i+n-1`` in place.

    Recursion is on the segment size, which must strictly decrease; the
    partition certificate is what guarantees it.
    """
    if n == 0:
        return M.skip()

    def after_partition(sizes: PartitionSizes):
        ny, nz = sizes.ny, sizes.nz
        if ny >= n or nz >= n:
            raise FuelExhausted(f"segment ({i}, {n}) does not shrink: ({ny}, {nz})")
        return M.seq(
            aswap(i, i + ny, M),
            iqsort(i, ny, M, partition),
            iqsort(i + ny + 1, nz, M, partition),
        )

    return M.bind(
        M.aget(i), lambda p: M.bind(dipartl(p, i + 1, 0, 0, n - 1, M, partition), after_partition)
    )


# -- refinement statements ---------------------------------------------------------

REFINEMENT_STORES = (
    ArrayStore(),
    ArrayStore.of((3, 1, 2, 0, 3, 1, 2, 0, 3, 1)),
)


def _lists(max_len: int, alphabet: int):
    for n in range(max_len + 1):
        yield from cartesian(range(alphabet), repeat=n)


def check_iqsort_refines_slowsort(
    max_len: int = 4,
    alphabet: int = 3,
    offsets: Iterable[int] = (0, 1, 2),
    stores: Iterable[ArrayStore] = REFINEMENT_STORES,
) -> RefinementResult:
    """``writeList i xs >> iqsort (i, |xs|)`` refines ``slowsort xs >>= writeList i``.

    Checked for every list up to ``max_len`` over ``range(alphabet)``, every
    offset, from every initial store.  The witness on failure is
    ``(xs, i, store, outcome)``.
    """
    M = plus_array(stores)
    count = 0
    for xs in _lists(max_len, alphabet):
        for i in offsets:
            lhs = M.then(write_list(i, xs, M), iqsort(i, len(xs), M))
            rhs = M.bind(slowsort(xs, M), lambda ys, i=i: write_list(i, ys, M))
            r = refines(lhs, rhs, M)
            count += len(M.states)
            if not r.holds:
                return RefinementResult(False, (xs, i) + tuple(r.witness), count)
    return RefinementResult(True, None, count)


def check_swap_rcons_refinement(
    i: int, x, ys: Sequence, zs: Sequence, M: Optional[ArrayModel] = None
) -> RefinementResult:
    """Swapping the last cell into place refines writing a permutation of ``zs``.

    ``writeList i (ys ++ zs ++ [x]) >> aswap (i+|ys|) (i+|ys++zs|)`` against
    ``qperm zs >>= fun zs' => writeList i (ys ++ x :: zs')``.
    """
    M = M or plus_array(REFINEMENT_STORES)
    ys, zs = tuple(ys), tuple(zs)
    lhs = M.then(
        write_list(i, ys + zs + (x,), M), aswap(i + len(ys), i + len(ys + zs), M)
    )
    rhs = M.bind(qperm(zs, M), lambda zs2: write_list(i, ys + (x,) + zs2, M))
    r = refines(lhs, rhs, M)
    return RefinementResult(r.holds, r.witness, len(M.states))


def check_swap_rcons_suite(
    max_len: int = 3,
    alphabet: int = 3,
    offsets: Iterable[int] = (0, 1, 2),
    stores: Iterable[ArrayStore] = REFINEMENT_STORES,
) -> RefinementResult:
    """:func:`check_swap_rcons_refinement` over all ``ys``, ``zs`` up to ``max_len``
    and every ``x`` in the alphabet.  Witness: ``(i, x, ys, zs, store, outcome)``."""
    M = plus_array(stores)
    count = 0
    for ys in _lists(max_len, alphabet):
        for zs in _lists(max_len, alphabet):
            for x in range(alphabet):
                for i in offsets:
                    r = check_swap_rcons_refinement(i, x, ys, zs, M)
                    count += r.instances
                    if not r.holds:
                        return RefinementResult(False, (i, x, ys, zs) + tuple(r.witness), count)
    return RefinementResult(True, None, count)
