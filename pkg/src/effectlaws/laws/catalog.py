"""Every registered law, grouped by the interface that introduces it.

Each body returns the two sides of the equation; the source string is the
equation itself, in the notation used throughout the package (``>>=`` for
bind, ``>>`` for sequencing, ``[~]`` for binary choice, ``<|p|>`` for
probabilistic choice).
"""

from __future__ import annotations

from ..probability import Prob, r_of, s_of
from .harness import law

# -- functor -------------------------------------------------------------------------


@law("functor.id", "fmap id = id", requires=("fmap",), m="comp")
def _(M, m):
    return M.fmap(lambda x: x, m), m


@law("functor.comp", "fmap (g . h) = fmap g . fmap h", requires=("fmap",), m="comp", g="fun", h="fun")
def _(M, m, g, h):
    return M.fmap(lambda x: g(h(x)), m), M.fmap(g, M.fmap(h, m))


# -- monad ---------------------------------------------------------------------------


@law("bind.left_neutral", "ret a >>= f = f a", requires=("ret", "bind"), a="value", f="kont")
def _(M, a, f):
    return M.bind(M.ret(a), f), f(a)


@law("bind.right_neutral", "m >>= ret = m", requires=("ret", "bind"), m="comp")
def _(M, m):
    return M.bind(m, M.ret), m


@law(
    "bind.assoc",
    "(m >>= f) >>= g = m >>= (λx. f x >>= g)",
    requires=("ret", "bind"),
    m="comp",
    f="kont",
    g="kont",
)
def _(M, m, f, g):
    return M.bind(M.bind(m, f), g), M.bind(m, lambda x: M.bind(f(x), g))


@law("bind.join", "m >>= f = join (fmap f m)", requires=("ret", "bind"), m="comp", f="kont")
def _(M, m, f):
    return M.bind(m, f), M.join(M.fmap(f, m))


@law("join.left_unit", "join (ret m) = m", requires=("ret", "bind"), m="comp")
def _(M, m):
    return M.join(M.ret(m)), m


@law("join.right_unit", "join (fmap ret m) = m", requires=("ret", "bind"), m="comp")
def _(M, m):
    return M.join(M.fmap(M.ret, m)), m


@law(
    "join.assoc",
    "join (fmap join mmm) = join (join mmm)",
    requires=("ret", "bind"),
    m="comp",
    f="kont",
    g="kont",
)
def _(M, m, f, g):
    # a three-layer computation built from ordinary generators
    mmm = M.fmap(lambda x: M.fmap(g, f(x)), m)
    return M.join(M.fmap(M.join, mmm)), M.join(M.join(mmm))


# -- failure and choice --------------------------------------------------------------


@law("fail.left_zero", "fail >>= f = fail", requires=("fail",), f="kont")
def _(M, f):
    return M.bind(M.fail(), f), M.fail()


@law("fail.right_zero", "m >> fail = fail", requires=("fail",), m="comp")
def _(M, m):
    return M.then(m, M.fail()), M.fail()


@law("alt.assoc", "m [~] (n [~] o) = (m [~] n) [~] o", requires=("alt",), m="comp", n="comp", o="comp")
def _(M, m, n, o):
    return M.alt(m, M.alt(n, o)), M.alt(M.alt(m, n), o)


@law("alt.bindDl", "(m [~] n) >>= f = (m >>= f) [~] (n >>= f)", requires=("alt",), m="comp", n="comp", f="kont")
def _(M, m, n, f):
    return M.bind(M.alt(m, n), f), M.alt(M.bind(m, f), M.bind(n, f))


@law("alt.bindDr", "m >>= (λx. f x [~] g x) = (m >>= f) [~] (m >>= g)", requires=("alt",), m="comp", f="kont", g="kont")
def _(M, m, f, g):
    return M.bind(m, lambda x: M.alt(f(x), g(x))), M.alt(M.bind(m, f), M.bind(m, g))


@law("nondet.altfailm", "fail [~] m = m", requires=("fail", "alt"), m="comp")
def _(M, m):
    return M.alt(M.fail(), m), m


@law("nondet.altmfail", "m [~] fail = m", requires=("fail", "alt"), m="comp")
def _(M, m):
    return M.alt(m, M.fail()), m


@law("altci.idempotent", "m [~] m = m", requires=("alt",), m="comp")
def _(M, m):
    return M.alt(m, m), m


@law("altci.comm", "m [~] n = n [~] m", requires=("alt",), m="comp", n="comp")
def _(M, m, n):
    return M.alt(m, n), M.alt(n, m)


# -- exceptions ----------------------------------------------------------------------


@law("except.catchmfail", "catch m fail = m", requires=("catch", "fail"), m="comp")
def _(M, m):
    return M.catch(m, M.fail()), m


@law("except.catchfailm", "catch fail m = m", requires=("catch", "fail"), m="comp")
def _(M, m):
    return M.catch(M.fail(), m), m


@law(
    "except.catchA",
    "catch m (catch n o) = catch (catch m n) o",
    requires=("catch",),
    m="comp",
    n="comp",
    o="comp",
)
def _(M, m, n, o):
    return M.catch(m, M.catch(n, o)), M.catch(M.catch(m, n), o)


@law("except.catchret", "catch (ret x) m = ret x", requires=("catch",), x="value", m="comp")
def _(M, x, m):
    return M.catch(M.ret(x), m), M.ret(x)


# -- state ---------------------------------------------------------------------------


@law("state.putput", "put s >> put s' = put s'", requires=("get", "put"), s="state", t="state")
def _(M, s, t):
    return M.then(M.put(s), M.put(t)), M.put(t)


@law("state.putget", "put s >> get = put s >> ret s", requires=("get", "put"), s="state")
def _(M, s):
    return M.then(M.put(s), M.get()), M.then(M.put(s), M.ret(s))


@law("state.getputskip", "get >>= put = skip", requires=("get", "put"))
def _(M):
    return M.bind(M.get(), M.put), M.skip()


@law(
    "state.getget",
    "get >>= (λs. get >>= k s) = get >>= (λs. k s s)",
    requires=("get", "put"),
    k="kont2",
)
def _(M, k):
    return (
        M.bind(M.get(), lambda s: M.bind(M.get(), lambda t: k(s, t))),
        M.bind(M.get(), lambda s: k(s, s)),
    )


# -- arrays --------------------------------------------------------------------------


@law("array.aputput", "aput i u >> aput i v = aput i v", requires=("aget", "aput"), i="index", u="value", v="value")
def _(M, i, u, v):
    return M.then(M.aput(i, u), M.aput(i, v)), M.aput(i, v)


@law(
    "array.aputget",
    "aput i v >> aget i >>= k = aput i v >> k v",
    requires=("aget", "aput"),
    i="index",
    v="value",
    k="kont",
)
def _(M, i, v, k):
    return M.then(M.aput(i, v), M.bind(M.aget(i), k)), M.then(M.aput(i, v), k(v))


@law("array.agetputskip", "aget i >>= aput i = skip", requires=("aget", "aput"), i="index")
def _(M, i):
    return M.bind(M.aget(i), lambda v: M.aput(i, v)), M.skip()


@law(
    "array.agetget",
    "aget i >>= (λu. aget i >>= k u) = aget i >>= (λu. k u u)",
    requires=("aget", "aput"),
    i="index",
    k="kont2",
)
def _(M, i, k):
    return (
        M.bind(M.aget(i), lambda u: M.bind(M.aget(i), lambda v: k(u, v))),
        M.bind(M.aget(i), lambda u: k(u, u)),
    )


@law(
    "array.agetC",
    "aget i >>= (λu. aget j >>= k u) = aget j >>= (λv. aget i >>= λu. k u v)",
    requires=("aget", "aput"),
    i="index",
    j="index",
    k="kont2",
)
def _(M, i, j, k):
    return (
        M.bind(M.aget(i), lambda u: M.bind(M.aget(j), lambda v: k(u, v))),
        M.bind(M.aget(j), lambda v: M.bind(M.aget(i), lambda u: k(u, v))),
    )


@law(
    "array.aputC",
    "aput i u >> aput j v = aput j v >> aput i u  if i != j or u = v",
    requires=("aget", "aput"),
    condition=lambda M, i, j, u, v: i != j or u == v,
    i="index",
    j="index",
    u="value",
    v="value",
)
def _(M, i, j, u, v):
    return M.then(M.aput(i, u), M.aput(j, v)), M.then(M.aput(j, v), M.aput(i, u))


@law(
    "array.aputgetC",
    "aput i u >> aget j >>= k = aget j >>= (λv. aput i u >> k v)  if i != j",
    requires=("aget", "aput"),
    condition=lambda M, i, j, u, k: i != j,
    i="index",
    j="index",
    u="value",
    k="kont",
)
def _(M, i, j, u, k):
    return M.then(M.aput(i, u), M.bind(M.aget(j), k)), M.bind(M.aget(j), lambda v: M.then(M.aput(i, u), k(v)))


# -- monad morphisms -----------------------------------------------------------------


@law("morphism.ret", "e (ret a) = ret a", requires=("apply",), a="value")
def _(E, a):
    return E.apply(E.source.ret(a)), E.target.ret(a)


@law(
    "morphism.bind",
    "e (m >>= f) = e m >>= (e . f)",
    requires=("apply",),
    m="source_comp",
    f="source_kont",
)
def _(E, m, f):
    return E.apply(E.source.bind(m, f)), E.target.bind(E.apply(m), lambda x: E.apply(f(x)))


@law("morphism.naturality", "e (fmap h m) = fmap h (e m)", requires=("apply",), m="source_comp", h="fun")
def _(E, m, h):
    return E.apply(E.source.fmap(h, m)), E.target.fmap(h, E.apply(m))


# -- probabilistic choice ------------------------------------------------------------


@law("convex.choice1", "a <|1|> b = a", requires=("choice",), a="comp", b="comp")
def _(M, a, b):
    return M.choice(Prob(1), a, b), a


@law("convex.choiceC", "a <|p|> b = b <|1-p|> a", requires=("choice",), p="prob", a="comp", b="comp")
def _(M, p, a, b):
    return M.choice(p, a, b), M.choice(Prob(p).complement, b, a)


@law("convex.choicemm", "a <|p|> a = a", requires=("choice",), p="prob", a="comp")
def _(M, p, a):
    return M.choice(p, a, a), a


@law(
    "convex.choiceA",
    "a <|p|> (b <|q|> c) = (a <|r|> b) <|s|> c  where s = 1-(1-p)(1-q), r = p/s",
    requires=("choice",),
    p="prob",
    q="prob",
    a="comp",
    b="comp",
    c="comp",
)
def _(M, p, q, a, b, c):
    return M.choice(p, a, M.choice(q, b, c)), M.choice(s_of(p, q), M.choice(r_of(p, q), a, b), c)


@law(
    "prob.bindDl",
    "(a <|p|> b) >>= f = (a >>= f) <|p|> (b >>= f)",
    requires=("choice",),
    p="prob",
    a="comp",
    b="comp",
    f="kont",
)
def _(M, p, a, b, f):
    return M.bind(M.choice(p, a, b), f), M.choice(p, M.bind(a, f), M.bind(b, f))


# -- typed store ---------------------------------------------------------------------

STORE_OPS = ("cnew", "cget", "cput", "cchk")


@law("store.cputput", "cput r s >> cput r s' = cput r s'", requires=STORE_OPS, c="cell2")
def _(M, c):
    r, s, t = c
    return M.then(M.cput(r, s), M.cput(r, t)), M.cput(r, t)


@law("store.cputget", "cput r s >> cget r >>= k = cput r s >> k s", requires=STORE_OPS, c="cell", k="kont")
def _(M, c, k):
    r, s = c
    return M.then(M.cput(r, s), M.bind(M.cget(r), k)), M.then(M.cput(r, s), k(s))


@law(
    "store.cgetget",
    "cget r >>= (λu. cget r >>= k u) = cget r >>= (λu. k u u)",
    requires=STORE_OPS,
    r="loc",
    k="kont2",
)
def _(M, r, k):
    return (
        M.bind(M.cget(r), lambda u: M.bind(M.cget(r), lambda v: k(u, v))),
        M.bind(M.cget(r), lambda u: k(u, u)),
    )


@law(
    "store.cgetC",
    "cget r1 >>= (λu. cget r2 >>= k u) = cget r2 >>= (λv. cget r1 >>= λu. k u v)",
    requires=STORE_OPS,
    r1="loc",
    r2="loc",
    k="kont2",
)
def _(M, r1, r2, k):
    return (
        M.bind(M.cget(r1), lambda u: M.bind(M.cget(r2), lambda v: k(u, v))),
        M.bind(M.cget(r2), lambda v: M.bind(M.cget(r1), lambda u: k(u, v))),
    )


@law("store.cgetputskip", "cget r >>= cput r = cget r >> skip", requires=STORE_OPS, r="loc")
def _(M, r):
    return M.bind(M.cget(r), lambda v: M.cput(r, v)), M.then(M.cget(r), M.skip())


def _same_cell(c1, c2) -> bool:
    # heterogeneous equality: values of different types are never equal
    (r1, s1), (r2, s2) = c1, c2
    return r1.tag == r2.tag and s1 == s2


@law(
    "store.cputC",
    "cput r1 s1 >> cput r2 s2 = cput r2 s2 >> cput r1 s1  if id r1 != id r2 or (r1, s1) ~ (r2, s2)",
    requires=STORE_OPS,
    condition=lambda M, c1, c2: c1[0].id != c2[0].id or _same_cell(c1, c2),
    c1="cell",
    c2="cell",
)
def _(M, c1, c2):
    (r1, s1), (r2, s2) = c1, c2
    return M.then(M.cput(r1, s1), M.cput(r2, s2)), M.then(M.cput(r2, s2), M.cput(r1, s1))


@law(
    "store.cputgetC",
    "cput r1 s >> cget r2 >>= k = cget r2 >>= (λv. cput r1 s >> k v)  if id r1 != id r2",
    requires=STORE_OPS,
    condition=lambda M, c1, r2, k: c1[0].id != r2.id,
    c1="cell",
    r2="loc",
    k="kont",
)
def _(M, c1, r2, k):
    r1, s = c1
    return M.then(M.cput(r1, s), M.bind(M.cget(r2), k)), M.bind(M.cget(r2), lambda v: M.then(M.cput(r1, s), k(v)))


@law(
    "store.cgetputC",
    "cget r1 >> cput r2 s = cput r2 s >> cget r1 >> skip",
    requires=STORE_OPS,
    r1="loc",
    c2="cell",
)
def _(M, r1, c2):
    r2, s = c2
    return M.then(M.cget(r1), M.cput(r2, s)), M.then(M.cput(r2, s), M.then(M.cget(r1), M.skip()))


@law(
    "store.cnewget",
    "cnew s >>= (λr. cget r >>= k r) = cnew s >>= (λr. k r s)",
    requires=STORE_OPS,
    n="newval",
    k="kont2",
)
def _(M, n, k):
    t, s = n
    return (
        M.bind(M.cnew(t, s), lambda r: M.bind(M.cget(r), lambda v: k(r, v))),
        M.bind(M.cnew(t, s), lambda r: k(r, s)),
    )


@law(
    "store.cnewput",
    "cnew s >>= (λr. cput r s' >> k r) = cnew s' >>= k",
    requires=STORE_OPS,
    n="newval2",
    k="kont",
)
def _(M, n, k):
    t, s, s2 = n
    return M.bind(M.cnew(t, s), lambda r: M.then(M.cput(r, s2), k(r))), M.bind(M.cnew(t, s2), k)


@law(
    "store.cnewchk",
    "cnew s >>= (λr. cchk r >> k r) = cnew s >>= k",
    requires=STORE_OPS,
    n="newval",
    k="kont",
)
def _(M, n, k):
    t, s = n
    return M.bind(M.cnew(t, s), lambda r: M.then(M.cchk(r), k(r))), M.bind(M.cnew(t, s), k)


@law(
    "store.cchknewC",
    "cchk r1 >> cnew s >>= (λr2. cchk r1 >> k r2) = cchk r1 >> cnew s >>= k",
    requires=STORE_OPS,
    r1="loc",
    n="newval",
    k="kont",
)
def _(M, r1, n, k):
    t, s = n
    return (
        M.then(M.cchk(r1), M.bind(M.cnew(t, s), lambda r2: M.then(M.cchk(r1), k(r2)))),
        M.then(M.cchk(r1), M.bind(M.cnew(t, s), k)),
    )


PREMISE_IDS = range(7)


def _agree_away_from(M, r1, n, kk) -> bool:
    """``k1 r2 = k2 r2`` for every candidate ``r2`` of the new cell's type with ``id r2 != id r1``.

    Candidates cover every position a fresh location can take from the model's
    stores, so the finite check stands in for the universal premise.
    """
    from ..typed_store import Loc

    t = n[0]
    return all(
        M.denote(kk.k1(Loc(t, j))) == M.denote(kk.k2(Loc(t, j))) for j in PREMISE_IDS if j != r1.id
    )


@law(
    "store.cchknewE",
    "cchk r1 >> cnew s >>= k1 = cchk r1 >> cnew s >>= k2  if k1 r2 = k2 r2 for all r2 with id r1 != id r2",
    requires=STORE_OPS,
    condition=_agree_away_from,
    r1="loc",
    n="newval",
    kk="kont_pair",
)
def _(M, r1, n, kk):
    t, s = n
    return M.then(M.cchk(r1), M.bind(M.cnew(t, s), kk.k1)), M.then(M.cchk(r1), M.bind(M.cnew(t, s), kk.k2))


@law(
    "store.cchkputC",
    "cchk r1 >> cput r2 s = cput r2 s >> cchk r1",
    requires=STORE_OPS,
    r1="loc",
    c2="cell",
)
def _(M, r1, c2):
    r2, s = c2
    return M.then(M.cchk(r1), M.cput(r2, s)), M.then(M.cput(r2, s), M.cchk(r1))


@law("store.cgetputchk", "cget r >>= cput r = cchk r", requires=STORE_OPS, r="loc")
def _(M, r):
    return M.bind(M.cget(r), lambda v: M.cput(r, v)), M.cchk(r)
