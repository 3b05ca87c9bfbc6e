"""Stock models with parameter generators for law checking.

Quantification over functions is replaced by closed template families:
constants, ``ret`` of the input, one effect then ``ret``, and (from the
random generators) two-step compositions of those.  Every generated function
is an :class:`~effectlaws.core.Fn` so counterexamples print readably.
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache
from itertools import product as cartesian
from typing import Callable, Sequence

from .array import ArrayModel, ArrayStore, aswap, plus_array
from .core import IDENTITY, LIST, NONE, OPTION, TT, Fn, Monad, Some, render
from .laws.harness import Domain, Model
from .nondet import POWERSET, OutcomeSet
from .probability import DIST, Dist, Prob, choice, dirac, uniform
from .transformers import MonadMorphism, StateT, lift_s
from .typed_store import (
    ML_BOOL,
    ML_NAT,
    Binding,
    Cons,
    Loc,
    Nil,
    TypedStore,
    TypedStoreModel,
    ml_ref,
    ml_rlist,
)

__all__ = [
    "identity_model",
    "list_model",
    "powerset_model",
    "exception_model",
    "state_model",
    "array_model",
    "plus_array_model",
    "dist_model",
    "typed_store_model",
    "morphism_model",
    "KontPair",
    "ARRAY_STORES",
    "TYPED_STORES",
]


def funs(n: int) -> list:
    return [
        Fn("λx. x", lambda x: x),
        Fn(f"λx. x+1 mod {n}", lambda x: (x + 1) % n),
        Fn(f"λx. 2x mod {n}", lambda x: (2 * x) % n),
        Fn(f"λx. {n - 1}-x", lambda x: n - 1 - x),
        Fn("λ_. 0", lambda x: 0),
    ]


def composed(M: Monad, comps: Sequence, konts: Sequence) -> Callable:
    """Sampler for ``c >>= k`` with ``c``, ``k`` drawn from the template lists."""

    def sample(rng):
        c = comps[rng.randrange(len(comps))]
        k = konts[rng.randrange(len(konts))]
        return Fn(f"({c!r}) >>= {k!r}", M.bind(c, k))

    return sample


def composed_kont(M: Monad, konts: Sequence) -> Callable:
    def sample(rng):
        k1 = konts[rng.randrange(len(konts))]
        k2 = konts[rng.randrange(len(konts))]
        return Fn(f"λx. ({k1!r}) x >>= {k2!r}", lambda x: M.bind(k1(x), k2))

    return sample


def table_kont(values: Sequence, draw: Callable) -> Callable:
    """Sampler for a kont given by an explicit random table ``value -> computation``."""

    def sample(rng):
        table = {v: draw(rng) for v in values}
        label = "λx. table{" + ", ".join(f"{render(v)}: {table[v]!r}" for v in values) + "}[x]"
        return Fn(label, table.__getitem__)

    return sample


# -- functors and simple monads -------------------------------------------------------


def identity_model() -> Model:
    vals = list(range(4))
    return Model(
        "identity",
        IDENTITY,
        {
            "value": Domain(vals),
            "comp": Domain(vals),
            "kont": Domain(funs(4)),
            "fun": Domain(funs(4)),
        },
    )


def list_model() -> Model:
    def sample(rng):
        return tuple(rng.randrange(4) for _ in range(rng.randrange(5)))

    return Model(
        "list",
        LIST,
        {"comp": Domain([(), (0,), (1, 2), (3, 0, 1), (2, 2)], sample), "fun": Domain(funs(4))},
    )


def _subsets(values) -> list:
    out = [OutcomeSet(c) for r in range(len(values) + 1) for c in _combinations(values, r)]
    return out


def _combinations(values, r):
    from itertools import combinations

    return combinations(values, r)


def powerset_model() -> Model:
    M = POWERSET
    vals = list(range(4))
    head = [OutcomeSet(), OutcomeSet({0}), OutcomeSet({1, 2}), OutcomeSet(vals)]
    comps = head + [s for s in _subsets(vals) if s not in head]

    def random_set(rng):
        return OutcomeSet(v for v in vals if rng.random() < 0.5)

    konts = [
        Fn("λx. ret x", M.ret),
        Fn("λx. ret (x+1 mod 4)", lambda x: M.ret((x + 1) % 4)),
        Fn("λx. ret x [~] ret (x+2 mod 4)", lambda x: M.alt(M.ret(x), M.ret((x + 2) % 4))),
        Fn("λx. if even x then ret x else fail", lambda x: M.ret(x) if x % 2 == 0 else M.fail()),
        Fn("λ_. fail", lambda x: M.fail()),
        Fn("λ_. {1, 3}", lambda x: OutcomeSet({1, 3})),
        Fn(
            "λx. (ret x [~] ret (x+1 mod 4)) >>= λy. if y > 1 then ret y else fail",
            lambda x: M.bind(
                M.alt(M.ret(x), M.ret((x + 1) % 4)), lambda y: M.ret(y) if y > 1 else M.fail()
            ),
        ),
    ]
    kont2 = [
        Fn("λx y. ret x", lambda x, y: M.ret(x)),
        Fn("λx y. ret (x+y mod 4)", lambda x, y: M.ret((x + y) % 4)),
        Fn("λx y. ret x [~] ret y", lambda x, y: M.alt(M.ret(x), M.ret(y))),
        Fn("λx y. if x < y then ret x else fail", lambda x, y: M.ret(x) if x < y else M.fail()),
    ]
    return Model(
        "powerset",
        M,
        {
            "value": Domain(vals),
            "comp": Domain(comps, random_set),
            "kont": Domain(konts, table_kont(vals, random_set)),
            "kont2": Domain(kont2),
            "fun": Domain(funs(4)),
        },
    )


def exception_model() -> Model:
    M = OPTION
    vals = list(range(4))

    def random_opt(rng):
        return NONE if rng.random() < 0.3 else Some(rng.randrange(4))

    konts = [
        Fn("λx. ret x", M.ret),
        Fn("λx. ret (x+1 mod 4)", lambda x: M.ret((x + 1) % 4)),
        Fn("λx. if odd x then fail else ret x", lambda x: M.fail() if x % 2 else M.ret(x)),
        Fn("λ_. fail", lambda x: M.fail()),
        Fn("λ_. ret 2", lambda x: M.ret(2)),
    ]
    return Model(
        "exception",
        M,
        {
            "value": Domain(vals),
            "comp": Domain([NONE, Some(0), Some(1), Some(3), Some(2)], random_opt),
            "kont": Domain(konts, table_kont(vals, random_opt)),
            "fun": Domain(funs(4)),
        },
    )


# -- state --------------------------------------------------------------------------


def state_model(base: Monad = IDENTITY, name: str | None = None) -> Model:
    """``StateT`` over ``base`` with states and values in ``range(3)``."""
    M = StateT(base, range(3), name or ("state" if base is IDENTITY else f"state[{base.name}]"))
    n = 3
    comps = [
        Fn("ret 0", M.ret(0)),
        Fn("get", M.get()),
        Fn("put 1 >> ret 2", M.then(M.put(1), M.ret(2))),
        Fn(
            "get >>= λs. put (s+1 mod 3) >> ret s",
            M.bind(M.get(), lambda s: M.then(M.put((s + 1) % n), M.ret(s))),
        ),
        Fn("put 0 >> get", M.then(M.put(0), M.get())),
    ]
    konts = [
        Fn("λx. ret x", M.ret),
        Fn("λx. ret (x+1 mod 3)", lambda x: M.ret((x + 1) % n)),
        Fn("λx. put x >> ret x", lambda x: M.then(M.put(x), M.ret(x))),
        Fn("λx. get >>= λs. ret (s+x mod 3)", lambda x: M.bind(M.get(), lambda s: M.ret((s + x) % n))),
        Fn("λ_. get", lambda x: M.get()),
    ]
    kont2 = [
        Fn("λs t. ret s", lambda s, t: M.ret(s)),
        Fn("λs t. put t >> ret s", lambda s, t: M.then(M.put(t), M.ret(s))),
        Fn("λs t. put (s+t mod 3) >> get", lambda s, t: M.then(M.put((s + t) % n), M.get())),
        Fn("λs t. ret (s*t mod 3)", lambda s, t: M.ret((s * t) % n)),
    ]
    if M.supports("fail"):
        comps.insert(3, Fn("fail", M.fail()))
        konts.insert(3, Fn("λx. if x = 0 then fail else ret x", lambda x: M.fail() if x == 0 else M.ret(x)))
        kont2.append(Fn("λs t. if s = t then fail else ret s", lambda s, t: M.fail() if s == t else M.ret(s)))
    if M.supports("alt"):
        comps.insert(2, Fn("ret 0 [~] (put 2 >> ret 1)", M.alt(M.ret(0), M.then(M.put(2), M.ret(1)))))
        konts.insert(2, Fn("λx. ret x [~] (put x >> ret 0)", lambda x: M.alt(M.ret(x), M.then(M.put(x), M.ret(0)))))
        kont2.append(Fn("λs t. ret s [~] ret t", lambda s, t: M.alt(M.ret(s), M.ret(t))))
    return Model(
        M.name,
        M,
        {
            "value": Domain(range(n)),
            "state": Domain(range(n)),
            "comp": Domain(comps, composed(M, comps, konts)),
            "kont": Domain(konts, composed_kont(M, konts)),
            "kont2": Domain(kont2),
            "fun": Domain(funs(n)),
        },
    )


# -- arrays -----------------------------------------------------------------------

ARRAY_STORES = tuple(
    ArrayStore.of(vs) for vs in cartesian(range(4), repeat=3)
) + (
    ArrayStore.from_mapping({3: 1, 4: 2}, default=3),
    ArrayStore.from_mapping({0: 1, 3: 2}, default=3),
    ArrayStore(default=2),
    ArrayStore.from_mapping({4: 0}, default=1),
)


def _array_fixture(M: ArrayModel) -> Model:
    comps = [
        Fn("ret 0", M.ret(0)),
        Fn("aget 0", M.aget(0)),
        Fn("aput 1 2 >> ret 3", M.then(M.aput(1, 2), M.ret(3))),
        Fn("aget 2 >>= λv. aput 0 v >> ret v", M.bind(M.aget(2), lambda v: M.then(M.aput(0, v), M.ret(v)))),
        Fn("aswap 0 1 >> aget 0", M.then(aswap(0, 1, M), M.aget(0))),
    ]
    konts = [
        Fn("λx. ret x", M.ret),
        Fn("λx. ret (x+1 mod 4)", lambda x: M.ret((x + 1) % 4)),
        Fn("λx. aput x x >> ret x", lambda x: M.then(M.aput(x, x), M.ret(x))),
        Fn("λx. aget x", lambda x: M.aget(x)),
        Fn("λx. aget 1 >>= λv. ret (v+x mod 4)", lambda x: M.bind(M.aget(1), lambda v: M.ret((v + x) % 4))),
        Fn("λx. aput 0 (x+1 mod 4) >> aget 0", lambda x: M.then(M.aput(0, (x + 1) % 4), M.aget(0))),
    ]
    kont2 = [
        Fn("λu v. ret u", lambda u, v: M.ret(u)),
        Fn("λu v. ret (u+v mod 4)", lambda u, v: M.ret((u + v) % 4)),
        Fn("λu v. aput 0 u >> ret v", lambda u, v: M.then(M.aput(0, u), M.ret(v))),
        Fn("λu v. aput 1 v >> aget 0", lambda u, v: M.then(M.aput(1, v), M.aget(0))),
    ]
    if M.supports("fail"):
        comps.insert(2, Fn("fail", M.fail()))
        konts.insert(3, Fn("λx. if x = 3 then fail else ret x", lambda x: M.fail() if x == 3 else M.ret(x)))
        kont2.append(Fn("λu v. if u = v then fail else ret u", lambda u, v: M.fail() if u == v else M.ret(u)))
    if M.supports("alt"):
        comps.insert(3, Fn("aget 0 [~] (aput 0 3 >> ret 1)", M.alt(M.aget(0), M.then(M.aput(0, 3), M.ret(1)))))
        konts.insert(2, Fn("λx. ret x [~] aget 4", lambda x: M.alt(M.ret(x), M.aget(4))))
        kont2.append(Fn("λu v. ret u [~] ret v", lambda u, v: M.alt(M.ret(u), M.ret(v))))
    return Model(
        M.name,
        M,
        {
            "value": Domain(range(4)),
            "index": Domain(range(5)),
            "comp": Domain(comps, composed(M, comps, konts)),
            "kont": Domain(konts, composed_kont(M, konts)),
            "kont2": Domain(kont2),
            "fun": Domain(funs(4)),
        },
    )


def array_model() -> Model:
    return _array_fixture(ArrayModel(IDENTITY, ARRAY_STORES, "array"))


def plus_array_model() -> Model:
    return _array_fixture(plus_array(ARRAY_STORES))


# -- probability -------------------------------------------------------------------

POINTS = tuple(range(6))


def random_dist(rng: random.Random) -> Dist:
    support = rng.sample(POINTS, 3)
    weights = [rng.randint(1, 9) for _ in support]
    total = sum(weights)
    return Dist({x: Fraction(w, total) for x, w in zip(support, weights)})


def random_prob(rng: random.Random) -> Prob:
    d = rng.randint(1, 12)
    return Prob(rng.randint(0, d), d)


def dist_model() -> Model:
    M = DIST
    half = Prob(1, 2)
    dists = [
        dirac(0),
        uniform([0, 1]),
        Dist({0: Fraction(1, 2), 1: Fraction(1, 3), 2: Fraction(1, 6)}),
        Dist({3: Fraction(1, 4), 4: Fraction(3, 4)}),
        dirac(5),
    ]
    konts = [
        Fn("λx. dirac (x+1 mod 6)", lambda x: dirac((x + 1) % 6)),
        Fn("λx. uniform {x, x+2 mod 6}", lambda x: uniform([x, (x + 2) % 6])),
        Fn("λx. dirac x <|1/3|> dirac 0", lambda x: choice(Prob(1, 3), dirac(x), dirac(0))),
        Fn("λ_. uniform {1, 2}", lambda x: uniform([1, 2])),
        Fn("λx. dirac x", dirac),
    ]
    return Model(
        "dist",
        M,
        {
            "value": Domain(POINTS),
            "comp": Domain(dists, random_dist),
            "kont": Domain(konts, table_kont(POINTS, random_dist)),
            "prob": Domain([Prob(0), Prob(1), half, Prob(1, 3), Prob(2, 3), Prob(1, 4)], random_prob),
            "fun": Domain(funs(6)),
        },
    )


# -- typed store ---------------------------------------------------------------------

RL_NAT = ml_rlist(ML_NAT)
REF_NAT = ml_ref(ML_NAT)
STORE_TAGS = (ML_NAT, ML_BOOL, RL_NAT, REF_NAT)
TAG_VALUES = {
    ML_NAT: (0, 1, 3),
    ML_BOOL: (True, False),
    RL_NAT: (Nil(ML_NAT), Cons(ML_NAT, 1, Loc(RL_NAT, 0))),
    REF_NAT: (Loc(ML_NAT, 0), Loc(ML_NAT, 2)),
}
_PALETTE = (
    Binding(ML_NAT, 0),
    Binding(ML_NAT, 2),
    Binding(ML_BOOL, True),
    Binding(RL_NAT, Nil(ML_NAT)),
    Binding(REF_NAT, Loc(ML_NAT, 0)),
)


def _typed_stores() -> tuple:
    stores = [TypedStore(bs) for n in range(3) for bs in cartesian(_PALETTE, repeat=n)]
    rng = random.Random("typed-stores")
    wide = _PALETTE + (Binding(RL_NAT, Cons(ML_NAT, 1, Loc(RL_NAT, 0))), Binding(ML_BOOL, False))
    for _ in range(16):
        stores.append(TypedStore(tuple(rng.choice(wide) for _ in range(rng.randint(3, 4)))))
    return tuple(stores)


TYPED_STORES = _typed_stores()


def _random_tag(rng):
    return STORE_TAGS[rng.randrange(len(STORE_TAGS))]


def _random_value(rng, t):
    vals = TAG_VALUES[t]
    return vals[rng.randrange(len(vals))]


class KontPair:
    """Two continuations over a fresh location that may differ only at ``loc_id == special``."""

    def __init__(self, label: str, k1: Callable, k2: Callable):
        self.label, self.k1, self.k2 = label, k1, k2

    def __repr__(self) -> str:
        return self.label


def _kont_pairs(M: TypedStoreModel) -> list:
    def ret_or_tt(j):
        return KontPair(
            f"(λr. ret r, λr. if id r = {j} then ret tt else ret r)",
            lambda r: M.ret(r),
            lambda r: M.ret(TT) if r.id == j else M.ret(r),
        )

    def chk_then_get(j):
        body = lambda r: M.then(M.cchk(r), M.cget(Loc(ML_NAT, j)))  # noqa: E731
        return KontPair(
            f"(λr. cchk r >> cget loc<ml_nat>#{j}, same but ret 7 when id r = {j})",
            body,
            lambda r: M.ret(7) if r.id == j else body(r),
        )

    def get_pair(j):
        return KontPair(
            f"(λr. cget loc<ml_nat>#{j} >>= λv. ret (r, v), same but ret (r, 0) when id r = {j})",
            lambda r: M.bind(M.cget(Loc(ML_NAT, j)), lambda v: M.ret((r, v))),
            lambda r: M.ret((r, 0)) if r.id == j else M.bind(M.cget(Loc(ML_NAT, j)), lambda v: M.ret((r, v))),
        )

    same = KontPair("(λr. cget r, λr. cget r)", lambda r: M.cget(r), lambda r: M.cget(r))
    out = [same]
    for j in range(5):
        out += [ret_or_tt(j), chk_then_get(j), get_pair(j)]
    return out


def typed_store_model(M: TypedStoreModel | None = None) -> Model:
    M = M or TypedStoreModel(TYPED_STORES)
    L = Loc
    locs = [
        L(ML_NAT, 0),
        L(ML_BOOL, 2),
        L(RL_NAT, 3),
        L(ML_NAT, 4),
        L(ML_BOOL, 0),
        L(ML_NAT, 1),
        L(REF_NAT, 0),
        L(RL_NAT, 0),
    ]
    cells = [(L(ML_NAT, 0), 1), (L(ML_BOOL, 2), False), (L(RL_NAT, 3), Nil(ML_NAT)), (L(ML_NAT, 1), 3), (L(ML_BOOL, 0), True)]
    cell2 = [(r, v, w) for r, v in cells for w in TAG_VALUES[r.tag][:1]]
    newvals = [(ML_NAT, 1), (ML_BOOL, False), (RL_NAT, Nil(ML_NAT)), (REF_NAT, L(ML_NAT, 0))]
    newval2 = [(t, v, TAG_VALUES[t][-1]) for t, v in newvals]

    def is_loc(x):
        return isinstance(x, Loc)

    konts = [
        Fn("λx. ret x", M.ret),
        Fn("λ_. ret tt", lambda x: M.skip()),
        Fn("λx. cnew ml_nat 1 >> ret x", lambda x: M.then(M.cnew(ML_NAT, 1), M.ret(x))),
        Fn("λx. if x is a location then cget x else ret x", lambda x: M.cget(x) if is_loc(x) else M.ret(x)),
        Fn("λx. cget loc<ml_nat>#0 >>= λv. ret (x, v)", lambda x: M.bind(M.cget(L(ML_NAT, 0)), lambda v: M.ret((x, v)))),
        Fn("λx. cput loc<ml_nat>#1 2 >> ret x", lambda x: M.then(M.cput(L(ML_NAT, 1), 2), M.ret(x))),
        Fn("λx. cchk loc<ml_bool>#2 >> ret x", lambda x: M.then(M.cchk(L(ML_BOOL, 2)), M.ret(x))),
    ]
    kont2 = [
        Fn("λx y. ret (x, y)", lambda x, y: M.ret((x, y))),
        Fn("λx y. cput loc<ml_nat>#0 3 >> ret y", lambda x, y: M.then(M.cput(L(ML_NAT, 0), 3), M.ret(y))),
        Fn("λ_ _. cget loc<ml_bool>#1", lambda x, y: M.cget(L(ML_BOOL, 1))),
        Fn("λx y. cnew ml_bool true >>= λr. ret (x, r)", lambda x, y: M.bind(M.cnew(ML_BOOL, True), lambda r: M.ret((x, r)))),
        Fn(
            "λx y. (if x is a location then cchk x else skip) >> ret y",
            lambda x, y: M.then(M.cchk(x) if is_loc(x) else M.skip(), M.ret(y)),
        ),
    ]
    comps = [
        Fn("ret 0", M.ret(0)),
        Fn("cnew ml_nat 1", M.cnew(ML_NAT, 1)),
        Fn("cget loc<ml_nat>#0", M.cget(L(ML_NAT, 0))),
        Fn("cput loc<ml_nat>#1 2 >> ret 1", M.then(M.cput(L(ML_NAT, 1), 2), M.ret(1))),
        Fn("cget loc<ml_bool>#2", M.cget(L(ML_BOOL, 2))),
    ]

    def rand_loc(rng):
        return L(_random_tag(rng), rng.randrange(5))

    def rand_cell(rng):
        r = rand_loc(rng)
        return (r, _random_value(rng, r.tag))

    def rand_cell2(rng):
        r = rand_loc(rng)
        return (r, _random_value(rng, r.tag), _random_value(rng, r.tag))

    def rand_new(rng):
        t = _random_tag(rng)
        return (t, _random_value(rng, t))

    def rand_new2(rng):
        t = _random_tag(rng)
        return (t, _random_value(rng, t), _random_value(rng, t))

    pairs = _kont_pairs(M)
    return Model(
        M.name,
        M,
        {
            "value": Domain([0, True, Nil(ML_NAT), L(ML_NAT, 1)]),
            "comp": Domain(comps, composed(M, comps, konts)),
            "fun": Domain([Fn("λx. x", lambda x: x), Fn("λx. (x, x)", lambda x: (x, x)), Fn("λ_. 0", lambda x: 0)]),
            "loc": Domain(locs, rand_loc),
            "cell": Domain(cells, rand_cell),
            "cell2": Domain(cell2, rand_cell2),
            "newval": Domain(newvals, rand_new),
            "newval2": Domain(newval2, rand_new2),
            "kont": Domain(konts, composed_kont(M, konts)),
            "kont2": Domain(kont2),
            "kont_pair": Domain(pairs),
        },
    )


# -- morphisms -------------------------------------------------------------------------

_BASE_FIXTURES = {
    "identity": identity_model,
    "option": exception_model,
    "powerset": powerset_model,
}


def morphism_model(e: MonadMorphism, domains: dict | None = None) -> Model:
    """Fixture for checking ``e``; generators come from ``e.source``'s stock model."""
    if domains is None:
        src = _BASE_FIXTURES[e.source.name]().domains
        domains = {
            "value": src["value"],
            "source_comp": src["comp"],
            "source_kont": src["kont"],
            "fun": src["fun"],
        }
    return Model(e.name, e, domains)


def lift_model(base: Monad) -> Model:
    return morphism_model(lift_s(StateT(base, range(3))))
