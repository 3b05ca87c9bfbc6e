"""Monad base classes, the identity and option monads, and rendering helpers.

Every concrete model implements :meth:`Monad.ret` and :meth:`Monad.bind` and
optionally a subset of the effect operations (``fail``, ``alt``, ``catch``,
``get``/``put``, ``aget``/``aput``, ``choice``, ``cnew``/``cget``/``cput``).
Laws ask a model whether it :meth:`~Functor.supports` an operation before
they are instantiated against it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Iterable

__all__ = [
    "Fn",
    "Functor",
    "Monad",
    "Identity",
    "IDENTITY",
    "Some",
    "Nothing",
    "NONE",
    "OptionMonad",
    "OPTION",
    "ListFunctor",
    "LIST",
    "canonical_key",
    "render",
    "TT",
]


class Unit:
    """The unit value ``tt``; distinct from the empty tuple (the empty list)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "tt"

    def __reduce__(self):
        return (Unit, ())

    def sort_key(self):
        return ()


TT = Unit()


def canonical_key(x: Any) -> tuple:
    """Total ordering key used to print sets and maps deterministically."""
    if isinstance(x, bool):
        return (0, int(x))
    if isinstance(x, (int, Fraction)):
        return (1, x)
    if isinstance(x, str):
        return (2, x)
    if isinstance(x, tuple):
        return (3, len(x), tuple(canonical_key(e) for e in x))
    key = getattr(x, "sort_key", None)
    if key is not None:
        return (4, type(x).__name__, key())
    return (9, repr(x))


def render(x: Any) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, tuple):
        return "(" + ", ".join(render(e) for e in x) + ("," if len(x) == 1 else "") + ")"
    return repr(x)


class Fn:
    """A named callable; the name is what shows up in counterexamples."""

    __slots__ = ("label", "fn", "__dict__")

    def __init__(self, label: str, fn: Callable):
        self.label = label
        self.fn = fn

    def __call__(self, *args):
        return self.fn(*args)

    def __repr__(self) -> str:
        return self.label


class Functor:
    """A type constructor with an action on morphisms."""

    name = "functor"

    def fmap(self, f: Callable, m: Any) -> Any:
        raise NotImplementedError

    def denote(self, m: Any) -> Any:
        """Canonical, hashable meaning of ``m``; laws compare these."""
        return m

    def explain(self, lhs: Any, rhs: Any) -> tuple[str, str]:
        return render(lhs), render(rhs)

    def supports(self, op: str) -> bool:
        return callable(getattr(self, op, None))

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.name}>"


class Monad(Functor):
    name = "monad"

    def ret(self, a: Any) -> Any:
        raise NotImplementedError

    def bind(self, m: Any, f: Callable[[Any], Any]) -> Any:
        raise NotImplementedError

    def fmap(self, f, m):
        return self.bind(m, lambda a: self.ret(f(a)))

    def join(self, mm):
        return self.bind(mm, lambda m: m)

    def then(self, m, n):
        """``m >> n``"""
        return self.bind(m, lambda _: n)

    def skip(self):
        return self.ret(TT)

    def kleisli(self, f: Callable, g: Callable) -> Callable:
        """``f >=> g``"""
        return lambda a: self.bind(f(a), g)

    def seq(self, *ms):
        """``m1 >> m2 >> ... >> mk``"""
        out = ms[-1]
        for m in reversed(ms[:-1]):
            out = self.then(m, out)
        return out


class Identity(Monad):
    name = "identity"

    def ret(self, a):
        return a

    def bind(self, m, f):
        return f(m)

    def fmap(self, f, m):
        return f(m)


IDENTITY = Identity()


@dataclass(frozen=True)
class Some:
    value: Any

    def __repr__(self) -> str:
        return f"Some {render(self.value)}"

    def sort_key(self):
        return (1, canonical_key(self.value))


class Nothing:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "None"

    def __reduce__(self):
        return (Nothing, ())

    def sort_key(self):
        return (0,)


NONE = Nothing()


class OptionMonad(Monad):
    """Option monad; with ``catch`` it is also the single-exception model."""

    name = "option"

    def ret(self, a):
        return Some(a)

    def bind(self, m, f):
        if m is NONE:
            return NONE
        return f(m.value)

    def fail(self):
        return NONE

    def catch(self, m, h):
        return h if m is NONE else m


OPTION = OptionMonad()


class ListFunctor(Functor):
    """Finite sequences (tuples) with element-wise map."""

    name = "list"

    def fmap(self, f, m):
        return tuple(f(x) for x in m)


LIST = ListFunctor()


def sorted_canonically(xs: Iterable) -> list:
    return sorted(xs, key=canonical_key)
