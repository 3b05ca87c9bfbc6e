"""The state monad transformer, monad morphisms, and the exception model.

``StateT(base, states)`` builds ``S -> base (A * S)`` over any base monad.
Functional extensionality is decided on the finite tuple ``states``: two
computations are equal when they agree, through the base monad's denotation,
from every enumerated initial state.
"""

from __future__ import annotations

import math
from typing import Any, Callable, Iterable, Sequence

from .core import IDENTITY, OPTION, Monad, Some, TT, render

__all__ = [
    "StateT",
    "STATE",
    "MonadMorphism",
    "lift_s",
    "identity_morphism",
    "check_monad_morphism",
    "EXCEPT",
    "catch",
    "product",
    "work",
    "fastprod",
    "check_fastprod",
]


class StateT(Monad):
    def __init__(self, base: Monad, states: Iterable, name: str | None = None):
        self.base = base
        self.states = tuple(states)
        self.name = name or f"state[{base.name}]"

    def with_states(self, states: Iterable) -> "StateT":
        clone = object.__new__(type(self))
        clone.__dict__.update(self.__dict__)
        clone.states = tuple(states)
        return clone

    def supports(self, op: str) -> bool:
        if op in ("fail", "alt"):
            return self.base.supports(op)
        return super().supports(op)

    # retS / bindS
    def ret(self, a):
        base = self.base
        return lambda s: base.ret((a, s))

    def bind(self, m, f):
        base = self.base
        return lambda s: base.bind(m(s), lambda p: f(p[0])(p[1]))

    def lift(self, m):
        """``liftS``: run a base computation without touching the state."""
        base = self.base
        return lambda s: base.bind(m, lambda x: base.ret((x, s)))

    def get(self):
        base = self.base
        return lambda s: base.ret((s, s))

    def put(self, t):
        base = self.base
        return lambda s: base.ret((TT, t))

    def fail(self):
        base = self.base
        return lambda s: base.fail()

    def alt(self, m, n):
        base = self.base
        return lambda s: base.alt(m(s), n(s))

    def run(self, m, s):
        return m(s)

    def denote(self, m):
        d = self.base.denote
        return tuple((s, d(m(s))) for s in self.states)

    def explain(self, lhs, rhs):
        for (s, l), (_, r) in zip(lhs, rhs):
            if l != r:
                tag = f"from {render(s)}: "
                return tag + render(l), tag + render(r)
        return render(lhs), render(rhs)


STATE = StateT(IDENTITY, range(3), name="state")


class MonadMorphism:
    """A family of maps ``source A -> target A``; equality is decided in the target."""

    def __init__(self, source: Monad, target: Monad, component: Callable, name: str):
        self.source = source
        self.target = target
        self.component = component
        self.name = name

    def apply(self, m):
        return self.component(m)

    def denote(self, m):
        return self.target.denote(m)

    def explain(self, lhs, rhs):
        return self.target.explain(lhs, rhs)

    def supports(self, op: str) -> bool:
        return op == "apply"

    def __repr__(self) -> str:
        return f"<MonadMorphism {self.name}>"


def lift_s(T: StateT) -> MonadMorphism:
    return MonadMorphism(T.base, T, T.lift, f"liftS[{T.base.name}]")


def identity_morphism(M: Monad) -> MonadMorphism:
    return MonadMorphism(M, M, lambda m: m, f"id[{M.name}]")


def check_monad_morphism(e: MonadMorphism, cfg=None, domains: dict | None = None):
    """Check both morphism laws and naturality of ``e``; returns law reports.

    ``domains`` defaults to the stock generators for ``e.source``.
    """
    from .laws import CheckConfig, check_law_suite
    from .models import morphism_model

    return check_law_suite(
        ["morphism.ret", "morphism.bind", "morphism.naturality"],
        morphism_model(e, domains),
        cfg or CheckConfig(),
    )


# -- exceptions -----------------------------------------------------------------

EXCEPT = OPTION


def catch(m, h, M: Monad = EXCEPT):
    return M.catch(m, h)


def product(s: Sequence[int]) -> int:
    return math.prod(s)


def work(s: Sequence[int], M: Monad = EXCEPT):
    return M.fail() if 0 in s else M.ret(product(s))


def fastprod(s: Sequence[int], M: Monad = EXCEPT):
    return M.catch(work(s, M), M.ret(0))


def check_fastprod(max_len: int = 6, alphabet: int = 4) -> tuple[int, list]:
    """Compare ``fastprod s`` with ``Ret (product s)`` on every list up to ``max_len``.

    Returns the number of lists checked and the offending lists.
    """
    from itertools import product as cartesian

    checked, bad = 0, []
    for n in range(max_len + 1):
        for s in cartesian(range(alphabet), repeat=n):
            checked += 1
            if fastprod(s) != Some(product(s)):
                bad.append(s)
    return checked, bad

