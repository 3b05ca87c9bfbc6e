"""Finitely-supported distributions with exact rational weights.

Every :class:`Dist` is validated on construction (strictly positive weights
summing to exactly one) and stored in canonical form, so equality of
distributions is plain structural equality.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Callable, Iterable, Mapping

from .core import Monad, canonical_key, render

__all__ = [
    "Prob",
    "Dist",
    "DistMonad",
    "DIST",
    "dirac",
    "uniform",
    "dbind",
    "choice",
    "s_of",
    "r_of",
    "check_choiceA",
    "check_prob_bindDl",
]


class Prob(Fraction):
    """A rational number in ``[0, 1]``."""

    def __new__(cls, numerator: Any = 0, denominator: Any = None):
        self = super().__new__(cls, numerator, denominator)
        if not 0 <= self <= 1:
            raise ValueError(f"{Fraction(self)} is not a probability")
        return self

    @property
    def complement(self) -> "Prob":
        return Prob(1 - self)

    def __repr__(self) -> str:
        return str(Fraction(self))


class Dist:
    __slots__ = ("pmf", "_hash")

    # number of distributions built so far; each one passed validation
    constructed = 0

    def __init__(self, weights: Mapping[Any, Any]):
        pmf = {}
        for x, w in weights.items():
            w = Fraction(w)
            if w < 0:
                raise ValueError(f"negative weight {w} on {render(x)}")
            if w:
                pmf[x] = w
        total = sum(pmf.values(), Fraction(0))
        if total != 1:
            raise ValueError(f"weights sum to {total}, not 1")
        self.pmf = tuple(sorted(pmf.items(), key=lambda kv: canonical_key(kv[0])))
        self._hash = None
        Dist.constructed += 1

    def support(self) -> tuple:
        return tuple(x for x, _ in self.pmf)

    def __getitem__(self, x) -> Fraction:
        for y, w in self.pmf:
            if y == x:
                return w
        return Fraction(0)

    def items(self):
        return iter(self.pmf)

    def __eq__(self, other) -> bool:
        if isinstance(other, Dist):
            return self.pmf == other.pmf
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.pmf)
        return self._hash

    def sort_key(self):
        return tuple((canonical_key(x), w) for x, w in self.pmf)

    def __repr__(self) -> str:
        return "{" + ", ".join(f"{render(x)}: {w}" for x, w in self.pmf) + "}"

    def table(self) -> str:
        """Two-column support/weight table."""
        rows = [(render(x), str(w)) for x, w in self.pmf]
        width = max([len("value")] + [len(r[0]) for r in rows])
        lines = [f"{'value'.ljust(width)}  weight"]
        lines += [f"{v.ljust(width)}  {w}" for v, w in rows]
        return "\n".join(lines)


def dirac(a) -> Dist:
    return Dist({a: 1})


def uniform(values: Iterable) -> Dist:
    values = list(values)
    acc: dict = {}
    for v in values:
        acc[v] = acc.get(v, 0) + Fraction(1, len(values))
    return Dist(acc)


def dbind(p: Dist, g: Callable[[Any], Dist]) -> Dist:
    """Weighted sum: ``b -> sum over a in supp p of p(a) * g(a)(b)``."""
    acc: dict = {}
    for a, pa in p.pmf:
        for b, w in g(a).pmf:
            acc[b] = acc.get(b, 0) + pa * w
    return Dist(acc)


def choice(p, a: Dist, b: Dist) -> Dist:
    """``a <|p|> b``: weight ``p`` on ``a``, ``1 - p`` on ``b``."""
    p = Prob(p)
    acc: dict = {}
    for x, w in a.pmf:
        acc[x] = acc.get(x, 0) + p * w
    for x, w in b.pmf:
        acc[x] = acc.get(x, 0) + (1 - p) * w
    return Dist(acc)


def s_of(p, q) -> Prob:
    return Prob(1 - (1 - Fraction(p)) * (1 - Fraction(q)))


def r_of(p, q) -> Prob:
    s = s_of(p, q)
    if s == 0:
        # p = q = 0; both sides of quasi-associativity are then just c
        return Prob(0)
    return Prob(Fraction(p) / s)


class DistMonad(Monad):
    name = "dist"

    def ret(self, a):
        return dirac(a)

    def bind(self, m, f):
        return dbind(m, f)

    def choice(self, p, a, b):
        return choice(p, a, b)


DIST = DistMonad()


def check_choiceA(cfg=None):
    from .laws import CheckConfig, check_law
    from .models import dist_model

    return check_law("convex.choiceA", dist_model(), cfg or CheckConfig())


def check_prob_bindDl(cfg=None):
    from .laws import CheckConfig, check_law
    from .models import dist_model

    return check_law("prob.bindDl", dist_model(), cfg or CheckConfig())
