import pytest
from hypothesis import given
from hypothesis import strategies as st

from effectlaws import models
from effectlaws.array import ArrayStore, plus_array
from effectlaws.core import TT, Fn
from effectlaws.errors import FuelExhausted, SizeCertificateViolation, WitnessMismatch
from effectlaws.nondet import (
    POWERSET,
    SYNTAX,
    Alt,
    Bind,
    Bounded,
    Fail,
    OutcomeSet,
    Proof,
    Ret,
    assert_,
    check_commute,
    dassert,
    guard,
    is_sorted,
    liftM2,
    plus_is_nondet,
    qperm,
    refines,
    sem,
    slowsort,
    splits,
    splits_bounded,
    witnessed,
)
from effectlaws.suites import run_suite

from oracles import insertion_permutations, is_interleaving

P = POWERSET
S = OutcomeSet
small_sets = st.frozensets(st.integers(0, 4), max_size=4).map(S)
lists = st.lists(st.integers(0, 3), max_size=5).map(tuple)


def even(n):
    return n % 2 == 0


def test_ret():
    assert P.ret(5) == S({5})
    assert P.ret(()) == S({()})
    assert P.ret(TT) == S({TT})
    assert repr(P.ret(TT)) == "{tt}" and repr(P.ret(())) == "{()}"


def test_bind():
    assert P.bind(S(), lambda x: S({x})) == S()
    assert P.bind(S({1, 2}), lambda x: S({x, x + 10})) == S({1, 11, 2, 12})
    assert P.bind(S({1, 2}), lambda x: S()) == S()


def test_alt():
    assert P.alt(S({1}), S({2})) == S({1, 2})
    m = S({3, 4})
    assert P.alt(m, m) == m
    assert P.alt(P.fail(), m) == m


def test_guard_and_assert():
    assert guard(True) == S({TT})
    assert guard(False) == S()
    assert P.then(guard(3 <= 5), P.ret(9)) == S({9})
    assert assert_(even, 4) == S({4})
    assert assert_(even, 3) == S()
    assert assert_(is_sorted, (1, 2)) == S({(1, 2)})


def test_dassert_tokens():
    assert dassert(even, 4) == S({(4, Proof("even", True))})
    assert dassert(even, 3) == S()
    ((v, token),) = dassert(lambda n: n <= 10, 10, name="at most 10")
    assert v == 10 and token.predicate == "at most 10"
    with pytest.raises(ValueError):
        Proof("even", False)


def test_splits_small_cases():
    assert splits(()) == S({((), ())})
    assert splits((7,)) == S({((7,), ()), ((), (7,))})


@given(st.lists(st.integers(0, 3), max_size=6).map(tuple))
def test_splits_cardinality_and_interleaving(s):
    out = splits(s)
    # with distinct values every subset of positions is a different split
    if len(set(s)) == len(s):
        assert len(out) == 2 ** len(s)
    for left, right in out:
        assert is_interleaving(left, right, s)


def test_splits_cardinality_with_distinct_values():
    for n in range(7):
        assert len(splits(tuple(range(n)))) == 2**n


def test_splits_bounded_matches_splits():
    certified = splits_bounded((1, 2))
    assert S((a.items, b.items) for a, b in certified) == splits((1, 2))
    assert all(a.bound == 2 and b.bound == 2 for a, b in certified)


def test_size_certificates():
    Bounded((1, 2, 3), 3)
    with pytest.raises(SizeCertificateViolation):
        Bounded((1, 2, 3, 4), 3)
    with pytest.raises(SizeCertificateViolation):
        Bounded((1,), 3).widen(2)


def test_qperm_examples():
    assert qperm(()) == S({()})
    assert qperm((1, 2)) == S({(1, 2), (2, 1)})


@given(lists)
def test_qperm_matches_insertion_oracle(s):
    assert set(qperm(s)) == insertion_permutations(s)


def test_qperm_refuses_to_run_without_fuel():
    with pytest.raises(FuelExhausted):
        qperm((1, 2, 3), fuel=0)


def test_liftM2():
    assert liftM2(lambda a, b: a + b, S({1}), S({2})) == S({3})
    assert liftM2(lambda a, b: (a, b), S({1, 2}), S({3})) == S({(1, 3), (2, 3)})
    assert liftM2(lambda a, b: (a, b), S(), S({3})) == S()


def test_slowsort_examples():
    assert slowsort(()) == S({()})
    assert slowsort((2, 1, 3)) == S({(1, 2, 3)})
    assert slowsort((1, 1)) == S({(1, 1)})


@given(lists)
def test_slowsort_is_the_sorted_list(s):
    assert slowsort(s) == S({tuple(sorted(s))})


def test_sem():
    assert sem(Alt(Ret(1), Fail())) == S({1})
    assert sem(Bind(Ret(2), lambda x: Ret(x * x))) == S({4})
    assert sem(Fail()) == S()


def test_syntax_monad_builds_terms():
    term = qperm((1, 2), SYNTAX)
    assert isinstance(term, Bind)
    assert sem(term) == qperm((1, 2))


@given(small_sets, small_sets, small_sets)
def test_alt_is_associative_commutative_idempotent(m, n, o):
    assert P.alt(m, P.alt(n, o)) == P.alt(P.alt(m, n), o)
    assert P.alt(m, n) == P.alt(n, m)
    assert P.alt(m, m) == m


@given(small_sets, small_sets)
def test_bind_distributes_and_fail_is_a_zero(m, n):
    f = lambda x: S({x, (x + 1) % 5})  # noqa: E731
    g = lambda x: S({x * 2})  # noqa: E731
    assert P.bind(P.alt(m, n), f) == P.alt(P.bind(m, f), P.bind(n, f))
    assert P.bind(m, lambda x: P.alt(f(x), g(x))) == P.alt(P.bind(m, f), P.bind(m, g))
    assert P.bind(P.fail(), f) == P.fail()
    assert P.then(m, P.fail()) == P.fail()


def test_plus_suite_passes():
    reports = run_suite("plus")
    assert len(reports) == 9 and all(r.passed for r in reports)


def test_commute_examples():
    assert check_commute(qperm((1, 2)), P.ret(5), lambda x, y: P.ret((x, y)))
    assert check_commute(S({1, 2}), S({3, 4}), lambda x, y: P.ret((x, y)))
    M = plus_array([ArrayStore.of((v,)) for v in range(3)])
    assert not check_commute(M.aput(0, 1), M.aget(0), lambda _, v: M.ret(v), M)


def test_witness_registration():
    M = plus_array([ArrayStore.of((v, w)) for v in range(3) for w in range(2)])
    qp = witnessed(qperm((1, 2), SYNTAX), M)
    term = plus_is_nondet(qp, M)
    assert term is not None
    assert all(out == S({((1, 2), s), ((2, 1), s)}) for s, out in M.denote(qp))
    zero = witnessed(Ret(0), M)
    assert plus_is_nondet(zero, M) == Ret(0)
    assert plus_is_nondet(M.aget(0), M) is None


def test_wrong_witness_is_rejected():
    M = plus_array([ArrayStore()])
    fake = Fn("aget 0", M.aget(0))
    fake.witness = Ret(1)
    with pytest.raises(WitnessMismatch):
        plus_is_nondet(fake, M)


_PA = models.plus_array_model()
_pa_comps = st.sampled_from(_PA.domain("comp").items)
_pa_kont2 = st.sampled_from(_PA.domain("kont2").items)
_head = Fn("λp. Ret (head p)", lambda p: Ret(p[0]))
_pure_terms = st.sampled_from(
    [Ret(0), Alt(Ret(1), Ret(2)), Fail(), Bind(qperm((0, 1), SYNTAX), _head), Bind(qperm((2, 3, 1), SYNTAX), _head)]
)


@given(_pure_terms, _pa_comps, _pa_kont2)
def test_witnessed_computations_commute(term, n, f):
    M = _PA.monad
    m = witnessed(term, M)
    assert plus_is_nondet(m, M) is not None
    assert check_commute(m, n, f, M)


def test_refines_examples():
    assert refines(S({1}), S({1, 2}))
    r = refines(S({3}), S({1, 2}))
    assert not r and r.witness == 3


@given(lists)
def test_sorted_list_refines_slowsort(s):
    assert refines(P.ret(tuple(sorted(s))), slowsort(s))


@given(small_sets, small_sets, small_sets)
def test_refinement_is_a_partial_order(a, b, c):
    assert refines(a, a)
    if refines(a, b) and refines(b, c):
        assert refines(a, c)
    if refines(a, b) and refines(b, a):
        assert a == b
