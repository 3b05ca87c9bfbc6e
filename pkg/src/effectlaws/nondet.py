"""Finite outcome-set semantics for nondeterminism, plus the programs built on it.

The powerset model interprets ``fail`` as the empty set and ``alt`` as union,
which is what makes choice idempotent and commutative.  The generic programs
in this module (``splits``, ``qperm``, ``slowsort`` ...) take the monad as a
keyword argument so the same definitions run in the plain powerset model, in
the deep-embedded syntax, and in the stateful plus-array model.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Iterable, Optional

from .core import Fn, Monad, TT, canonical_key, render
from .errors import FuelExhausted, SizeCertificateViolation, WitnessMismatch

__all__ = [
    "OutcomeSet",
    "Powerset",
    "POWERSET",
    "Ret",
    "Bind",
    "Fail",
    "Alt",
    "Syntax",
    "SYNTAX",
    "sem",
    "guard",
    "assert_",
    "dassert",
    "Proof",
    "Bounded",
    "splits",
    "splits_bounded",
    "liftM2",
    "qperm",
    "is_sorted",
    "slowsort",
    "check_commute",
    "witnessed",
    "plus_is_nondet",
    "RefinementResult",
    "refines",
]


class OutcomeSet:
    """Immutable, duplicate-free set of outcomes."""

    __slots__ = ("_elems", "_hash")

    def __init__(self, elems: Iterable = ()):
        self._elems = frozenset(elems)
        self._hash = None

    @classmethod
    def of(cls, *elems) -> "OutcomeSet":
        return cls(elems)

    def __iter__(self):
        return iter(self._elems)

    def __len__(self) -> int:
        return len(self._elems)

    def __contains__(self, x) -> bool:
        return x in self._elems

    def __eq__(self, other) -> bool:
        if isinstance(other, OutcomeSet):
            return self._elems == other._elems
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._elems)
        return self._hash

    def __or__(self, other: "OutcomeSet") -> "OutcomeSet":
        return OutcomeSet(self._elems | other._elems)

    def __le__(self, other: "OutcomeSet") -> bool:
        return self._elems <= other._elems

    def __sub__(self, other: "OutcomeSet") -> "OutcomeSet":
        return OutcomeSet(self._elems - other._elems)

    def sorted(self) -> list:
        return sorted(self._elems, key=canonical_key)

    def sort_key(self):
        return tuple(canonical_key(x) for x in self.sorted())

    def __repr__(self) -> str:
        return "{" + ", ".join(render(x) for x in self.sorted()) + "}"


class Powerset(Monad):
    name = "powerset"

    def ret(self, a):
        return OutcomeSet((a,))

    def bind(self, m, f):
        elems = m._elems
        if len(elems) == 1:
            for a in elems:
                return f(a)
        out: set = set()
        for a in elems:
            out.update(f(a)._elems)
        return OutcomeSet(out)

    def fmap(self, f, m):
        return OutcomeSet(f(a) for a in m)

    def fail(self):
        return OutcomeSet()

    def alt(self, m, n):
        return m | n


POWERSET = Powerset()


# -- deep embedding of the nondeterminism fragment -------------------------------


@dataclass(frozen=True)
class Ret:
    value: Any

    def __repr__(self) -> str:
        return f"Ret {render(self.value)}"


@dataclass(frozen=True)
class Bind:
    term: Any
    cont: Callable[[Any], Any]

    def __repr__(self) -> str:
        return f"Bind ({self.term!r}) {self.cont!r}"


@dataclass(frozen=True)
class Fail:
    def __repr__(self) -> str:
        return "Fail"


@dataclass(frozen=True)
class Alt:
    left: Any
    right: Any

    def __repr__(self) -> str:
        return f"Alt ({self.left!r}) ({self.right!r})"


def sem(t, M: Monad = POWERSET):
    """Interpret a syntax tree homomorphically into the nondeterminism monad ``M``."""
    if isinstance(t, Ret):
        return M.ret(t.value)
    if isinstance(t, Bind):
        return M.bind(sem(t.term, M), lambda b: sem(t.cont(b), M))
    if isinstance(t, Fail):
        return M.fail()
    if isinstance(t, Alt):
        return M.alt(sem(t.left, M), sem(t.right, M))
    raise TypeError(f"not a nondeterminism term: {t!r}")


class Syntax(Monad):
    """Programs written against this monad produce their own syntax tree."""

    name = "syntax"

    def ret(self, a):
        return Ret(a)

    def bind(self, m, f):
        return Bind(m, f)

    def fail(self):
        return Fail()

    def alt(self, m, n):
        return Alt(m, n)

    def denote(self, m):
        return sem(m, POWERSET)


SYNTAX = Syntax()


# -- assertions -------------------------------------------------------------------


def guard(b: bool, M: Monad = POWERSET):
    return M.skip() if b else M.fail()


def assert_(p: Callable[[Any], bool], a, M: Monad = POWERSET):
    return M.then(guard(p(a), M), M.ret(a))


@dataclass(frozen=True)
class Proof:
    """Token recording that a named predicate held when the value was built."""

    predicate: str
    holds: bool

    def __post_init__(self):
        if self.holds is not True:
            raise ValueError(f"refusing to certify {self.predicate!r}: it does not hold")

    def __repr__(self) -> str:
        return f"<{self.predicate}>"


def dassert(p: Callable[[Any], bool], a, M: Monad = POWERSET, name: Optional[str] = None):
    """Like :func:`assert_` but pairs the value with a :class:`Proof` token."""
    if p(a):
        return M.ret((a, Proof(name or getattr(p, "__name__", repr(p)), True)))
    return M.fail()


# -- permutations -------------------------------------------------------------------


@dataclass(frozen=True)
class Bounded:
    """A tuple carrying a checked upper bound on its length."""

    items: tuple
    bound: int

    def __post_init__(self):
        if len(self.items) > self.bound:
            raise SizeCertificateViolation(
                f"{render(self.items)} has length {len(self.items)} > bound {self.bound}"
            )

    def widen(self, bound: int) -> "Bounded":
        if bound < self.bound:
            raise SizeCertificateViolation(f"cannot narrow bound {self.bound} to {bound}")
        return Bounded(self.items, bound)


def splits(s: tuple, M: Monad = POWERSET):
    if not s:
        return M.ret(((), ()))
    h, t = s[0], tuple(s[1:])
    return M.bind(
        splits(t, M),
        lambda xy: M.alt(M.ret(((h,) + xy[0], xy[1])), M.ret((xy[0], (h,) + xy[1]))),
    )


def splits_bounded(s: tuple, M: Monad = POWERSET):
    """:func:`splits` whose parts are :class:`Bounded` by ``len(s)``."""
    n = len(s)
    if not s:
        return M.ret((Bounded((), 0), Bounded((), 0)))
    h, t = s[0], tuple(s[1:])

    def extend(xy):
        x, y = xy
        return M.alt(
            M.ret((Bounded((h,) + x.items, n), y.widen(n))),
            M.ret((x.widen(n), Bounded((h,) + y.items, n))),
        )

    return M.bind(splits_bounded(t, M), extend)


def liftM2(h: Callable[[Any, Any], Any], m, n, M: Monad = POWERSET):
    return M.bind(m, lambda a: M.bind(n, lambda b: M.ret(h(a, b))))


def qperm(s: tuple, M: Monad = POWERSET, fuel: Optional[int] = None):
    """Nondeterministic permutations, recursing on the parts of a split.

    Termination is enforced at runtime: each part is certified shorter than
    ``s`` and the fuel (initially ``len(s)``) drops by one per level.
    """
    s = tuple(s)
    if fuel is None:
        fuel = len(s)
    if not s:
        return M.ret(())
    if fuel <= 0:
        raise FuelExhausted(f"qperm out of fuel on {render(s)}")
    x, xs = s[0], s[1:]

    def step(yz):
        ys, zs = yz
        if ys.bound >= len(s) or zs.bound >= len(s):
            raise FuelExhausted("split parts are not smaller than the input")
        return liftM2(
            lambda a, b: a + (x,) + b,
            qperm(ys.items, M, fuel - 1),
            qperm(zs.items, M, fuel - 1),
            M,
        )

    return M.bind(splits_bounded(xs, M), step)


def is_sorted(xs) -> bool:
    return all(a <= b for a, b in zip(xs, xs[1:]))


def slowsort(s: tuple, M: Monad = POWERSET):
    """``qperm >=> assert sorted``"""
    return M.kleisli(lambda xs: qperm(xs, M), lambda p: assert_(is_sorted, p, M))(tuple(s))


# -- commutation, syntactic witnesses, refinement --------------------------------------


def check_commute(m, n, f: Callable[[Any, Any], Any], M: Monad = POWERSET) -> bool:
    lhs = M.bind(m, lambda x: M.bind(n, lambda y: f(x, y)))
    rhs = M.bind(n, lambda y: M.bind(m, lambda x: f(x, y)))
    return M.denote(lhs) == M.denote(rhs)


def witnessed(term, M: Monad):
    """Interpret ``term`` in ``M`` and register the term as its nondeterminism witness."""
    comp = sem(term, M)
    if callable(comp):
        wrapped = Fn(f"sem ({term!r})", comp)
        wrapped.witness = term
        return wrapped
    return comp


def plus_is_nondet(m, M: Monad):
    """Return the registered syntax witness of ``m`` (checked), or ``None``."""
    term = getattr(m, "witness", None)
    if term is None:
        return None
    if M.denote(sem(term, M)) != M.denote(m):
        raise WitnessMismatch(f"witness {term!r} does not denote the computation")
    return term


@dataclass(frozen=True)
class RefinementResult:
    holds: bool
    witness: Any = None
    instances: int = 1

    def __post_init__(self):
        if self.holds and self.witness is not None:
            raise ValueError("a holding refinement has no witness")

    def __bool__(self) -> bool:
        return self.holds


def _first_missing(d1, d2):
    if isinstance(d1, OutcomeSet):
        missing = (d1 - d2).sorted()
        return (missing[0],) if missing else None
    if isinstance(d1, tuple):
        for (s, r1), (_, r2) in zip(d1, d2):
            w = _first_missing(r1, r2)
            if w is not None:
                return (s,) + w
        return None
    raise TypeError(f"cannot compare outcomes of {type(d1).__name__}")


def refines(m1, m2, M: Monad = POWERSET) -> RefinementResult:
    """``m1 [~] m2 = m2``: every outcome of ``m1`` is an outcome of ``m2``.

    For stateful models the comparison runs from each of ``M``'s enumerated
    initial states; the witness is then ``(state, outcome)``.
    """
    d2 = M.denote(m2)
    if M.denote(M.alt(m1, m2)) == d2:
        return RefinementResult(True)
    w = _first_missing(M.denote(m1), d2)
    return RefinementResult(False, w[0] if len(w) == 1 else w)
