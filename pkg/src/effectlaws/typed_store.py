"""A typed store for a first-order ML fragment with references.

The store is a sequence of type-tagged bindings; a location is a type tag plus
a position.  Reads and writes coerce dynamically and fail (``None`` in the
option base) when the position is out of range or the tag does not match.
Function types are deliberately absent from the type universe, so nothing in
the store can itself access the store.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterable, Optional, Sequence

from .core import NONE, OPTION, TT, Some, render
from .transformers import StateT

__all__ = [
    "MlType",
    "ML_BOOL",
    "ML_NAT",
    "ml_ref",
    "ml_rlist",
    "Loc",
    "Nil",
    "Cons",
    "Descriptor",
    "interpret",
    "Binding",
    "coerce",
    "TypedStore",
    "TypedStoreModel",
    "TYPED_STORE",
    "cycle",
    "rtl",
    "rtl_times",
    "cycle_n",
    "check_rtl_tl_self",
    "check_cycle_n",
]


@dataclass(frozen=True)
class MlType:
    con: str
    arg: Optional["MlType"] = None

    def __post_init__(self):
        if self.con not in ("bool", "nat", "ref", "rlist"):
            raise ValueError(f"unknown type constructor {self.con!r}")
        if (self.arg is None) != (self.con in ("bool", "nat")):
            raise ValueError(f"bad arity for {self.con!r}")

    def __repr__(self) -> str:
        if self.arg is None:
            return f"ml_{self.con}"
        inner = repr(self.arg)
        if self.arg.arg is not None:
            inner = f"({inner})"
        return f"ml_{self.con} {inner}"

    def sort_key(self):
        return repr(self)


ML_BOOL = MlType("bool")
ML_NAT = MlType("nat")


def ml_ref(t: MlType) -> MlType:
    return MlType("ref", t)


def ml_rlist(t: MlType) -> MlType:
    return MlType("rlist", t)


@dataclass(frozen=True)
class Loc:
    tag: MlType
    id: int

    def __repr__(self) -> str:
        return f"loc<{self.tag!r}>#{self.id}"

    def sort_key(self):
        return (self.id, repr(self.tag))


@dataclass(frozen=True)
class Nil:
    elem: MlType

    def __repr__(self) -> str:
        return "Nil"

    def sort_key(self):
        return (0, repr(self.elem))


@dataclass(frozen=True)
class Cons:
    elem: MlType
    head: Any
    tail: Loc

    def __repr__(self) -> str:
        return f"Cons({render(self.head)}, {self.tail!r})"

    def sort_key(self):
        return (1, repr(self.elem), repr(self.head), self.tail.sort_key())


@dataclass(frozen=True)
class Descriptor:
    """Runtime shape of the values of an ML type."""

    ml_type: MlType

    def __contains__(self, v) -> bool:
        t = self.ml_type
        if t.con == "bool":
            return type(v) is bool
        if t.con == "nat":
            return type(v) is int and v >= 0
        if t.con == "ref":
            return isinstance(v, Loc) and v.tag == t.arg
        if isinstance(v, Nil):
            return v.elem == t.arg
        return (
            isinstance(v, Cons)
            and v.elem == t.arg
            and v.head in interpret(t.arg)
            and isinstance(v.tail, Loc)
            and v.tail.tag == t
        )

    def __repr__(self) -> str:
        t = self.ml_type
        if t.con in ("bool", "nat"):
            return t.con
        name = "loc" if t.con == "ref" else "rlist"
        return f"{name} {interpret(t.arg)!r}" if t.arg.arg is None else f"{name} ({interpret(t.arg)!r})"


def interpret(t: MlType) -> Descriptor:
    return Descriptor(t)


@dataclass(frozen=True)
class Binding:
    bind_type: MlType
    bind_val: Any

    def __post_init__(self):
        if self.bind_val not in interpret(self.bind_type):
            raise TypeError(f"{render(self.bind_val)} is not a value of {self.bind_type!r}")

    def __repr__(self) -> str:
        return f"{render(self.bind_val)} : {self.bind_type!r}"


def coerce(expected: MlType, b: Binding):
    return Some(b.bind_val) if b.bind_type == expected else NONE


@dataclass(frozen=True)
class TypedStore:
    bindings: tuple = ()

    def __len__(self) -> int:
        return len(self.bindings)

    def nth(self, i: int) -> Optional[Binding]:
        return self.bindings[i] if 0 <= i < len(self.bindings) else None

    def append(self, b: Binding) -> "TypedStore":
        return TypedStore(self.bindings + (b,))

    def replace(self, i: int, b: Binding) -> "TypedStore":
        return TypedStore(self.bindings[:i] + (b,) + self.bindings[i + 1 :])

    def sort_key(self):
        return repr(self)

    def __repr__(self) -> str:
        return "[" + "; ".join(repr(b) for b in self.bindings) + "]"

    def table(self) -> str:
        rows = [(str(k), repr(b.bind_type), render(b.bind_val)) for k, b in enumerate(self.bindings)]
        w1 = max([3] + [len(r[1]) for r in rows])
        lines = [f"loc  {'type'.ljust(w1)}  value"]
        lines += [f"{r[0].ljust(3)}  {r[1].ljust(w1)}  {r[2]}" for r in rows]
        return "\n".join(lines)


class TypedStoreModel(StateT):
    """``StateT`` over the option monad with a :class:`TypedStore` as state."""

    def __init__(self, states: Iterable[TypedStore] = (TypedStore(),), name: str = "typed-store"):
        super().__init__(OPTION, states, name)

    def cnew(self, t: MlType, v):
        if v not in interpret(t):
            raise TypeError(f"{render(v)} is not a value of {t!r}")
        b = Binding(t, v)
        return lambda st: Some((Loc(t, len(st)), st.append(b)))

    def cget(self, r: Loc):
        def run(st):
            b = st.nth(r.id)
            if b is None:
                return NONE
            u = coerce(r.tag, b)
            return NONE if u is NONE else Some((u.value, st))

        return run

    def cput(self, r: Loc, v):
        if v not in interpret(r.tag):
            raise TypeError(f"{render(v)} is not a value of {r.tag!r}")
        new = Binding(r.tag, v)

        def run(st):
            b = st.nth(r.id)
            if b is None or b.bind_type != r.tag:
                return NONE
            return Some((TT, st.replace(r.id, new)))

        return run

    def cchk(self, r: Loc):
        """``cget r >> skip``"""
        return self.then(self.cget(r), self.skip())


TYPED_STORE = TypedStoreModel()


def cycle(t: MlType, a, b, M: TypedStoreModel = TYPED_STORE):
    """Build the two-node cyclic list ``a -> b -> a``; returns the first node."""
    T = ml_rlist(t)
    return M.bind(
        M.cnew(T, Nil(t)),
        lambda r: M.bind(
            M.bind(M.cnew(T, Cons(t, b, r)), lambda v: M.ret(Cons(t, a, v))),
            lambda l: M.then(M.cput(r, l), M.ret(r)),
        ),
    )


def rtl(r: Loc, M: TypedStoreModel = TYPED_STORE):
    """Location of the tail, or ``r`` itself on ``Nil``."""
    return M.bind(M.cget(r), lambda v: M.ret(r) if isinstance(v, Nil) else M.ret(v.tail))


def cycle_n(t: MlType, values: Sequence, M: TypedStoreModel = TYPED_STORE):
    """Cyclic list through ``values`` in order, built back to front like :func:`cycle`."""
    if not values:
        raise ValueError("a cycle needs at least one node")
    T = ml_rlist(t)

    def build(r):
        tail = M.ret(r)
        for v in reversed(values[1:]):
            tail = M.bind(tail, lambda nxt, v=v: M.cnew(T, Cons(t, v, nxt)))
        return M.bind(
            tail, lambda nxt: M.then(M.cput(r, Cons(t, values[0], nxt)), M.ret(r))
        )

    return M.bind(M.cnew(T, Nil(t)), build)


def rtl_times(n: int, M: TypedStoreModel = TYPED_STORE):
    """Kleisli arrow following the tail ``n`` times."""

    def go(l):
        out = M.ret(l)
        for _ in range(n):
            out = M.bind(out, lambda x: rtl(x, M))
        return out

    return go


def check_rtl_tl_self(t: MlType, a, b, stores: Iterable[TypedStore] = (TypedStore(),)) -> bool:
    """``cycle t a b >>= rtl >>= rtl`` equals ``cycle t a b`` from every store given."""
    M = TYPED_STORE.with_states(stores)
    c = cycle(t, a, b, M)
    return M.denote(M.bind(c, rtl_times(2, M))) == M.denote(c)


def check_cycle_n(t: MlType, values: Sequence, stores: Iterable[TypedStore] = (TypedStore(),)) -> bool:
    """Following the tail ``len(values)`` times returns to the start."""
    M = TYPED_STORE.with_states(stores)
    c = cycle_n(t, values, M)
    return M.denote(M.bind(c, rtl_times(len(values), M))) == M.denote(c)
