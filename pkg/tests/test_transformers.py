from hypothesis import given
from hypothesis import strategies as st

from effectlaws import models
from effectlaws.core import IDENTITY, NONE, OPTION, Some
from effectlaws.laws import check_law_suite, reproduce
from effectlaws.nondet import POWERSET, OutcomeSet
from effectlaws.suites import MONAD, STATE, run_suite
from effectlaws.transformers import (
    EXCEPT,
    MonadMorphism,
    StateT,
    catch,
    check_fastprod,
    check_monad_morphism,
    fastprod,
    identity_morphism,
    lift_s,
    product,
    work,
)

MS = StateT(OPTION, range(3))


def test_ret_and_bind_over_option():
    assert MS.run(MS.ret(3), 1) == Some((3, 1))
    f = lambda x: MS.then(MS.put(x % 3), MS.ret(x + 1))  # noqa: E731
    assert MS.denote(MS.bind(MS.ret(3), f)) == MS.denote(f(3))
    m = MS.then(MS.put(2), MS.get())
    assert MS.denote(MS.bind(m, MS.ret)) == MS.denote(m)


def test_lift():
    assert MS.run(MS.lift(Some(4)), 2) == Some((4, 2))
    assert MS.run(MS.lift(NONE), 2) is NONE


def test_get_put_over_option():
    assert MS.denote(MS.bind(MS.get(), MS.put)) == MS.denote(MS.skip())
    assert all(MS.run(MS.then(MS.put(1), MS.get()), s) == Some((1, 1)) for s in range(3))
    k = lambda s, t: MS.ret((s, t))  # noqa: E731
    lhs = MS.bind(MS.get(), lambda s: MS.bind(MS.get(), lambda t: k(s, t)))
    assert MS.denote(lhs) == MS.denote(MS.bind(MS.get(), lambda s: k(s, s)))


def test_transformed_option_satisfies_monad_and_state_laws():
    reports = check_law_suite(MONAD + STATE, models.state_model(OPTION))
    assert all(r.passed for r in reports)


def test_lift_is_a_monad_morphism_over_every_base():
    for base in (IDENTITY, OPTION, POWERSET):
        reports = check_monad_morphism(lift_s(StateT(base, range(3))))
        assert [r.status for r in reports] == ["pass"] * 3, base.name
        assert all(r.instances_checked > 0 for r in reports)


def test_identity_morphism_passes():
    assert all(r.passed for r in check_monad_morphism(identity_morphism(OPTION)))


def test_constant_morphism_breaks_the_ret_law():
    T = StateT(OPTION, range(3))
    const = MonadMorphism(OPTION, T, lambda m: T.ret(0), "const-ret-0")
    model = models.morphism_model(const)
    ret_law, bind_law, _ = check_monad_morphism(const)
    assert ret_law.status == "fail"
    lhs, rhs = reproduce(ret_law, model)
    assert lhs != rhs
    # mapping everything to one pure value happens to preserve bind
    assert bind_law.passed


def test_min_selecting_morphism_breaks_the_bind_law():
    T = StateT(POWERSET, range(3))

    def keep_min(m):
        return T.lift(OutcomeSet({min(m)}) if len(m) else m)

    e = MonadMorphism(POWERSET, T, keep_min, "keep-min")
    ret_law, bind_law, _ = check_monad_morphism(e)
    assert ret_law.passed
    assert bind_law.status == "fail"
    lhs, rhs = reproduce(bind_law, models.morphism_model(e))
    assert lhs != rhs


def test_morphism_suite():
    reports = run_suite("morphism")
    assert len(reports) == 9 and all(r.passed for r in reports)


def test_catch_laws_by_example():
    m = Some(2)
    assert catch(EXCEPT.fail(), m) == m
    assert catch(Some(1), m) == Some(1)
    assert catch(m, EXCEPT.fail()) == m
    assert catch(NONE, NONE) is NONE


def test_except_suite():
    assert all(r.passed for r in run_suite("except"))


def test_fastprod_examples():
    assert fastprod((2, 3)) == Some(6)
    assert fastprod((4, 0, 5)) == Some(0)
    assert fastprod(()) == Some(1)
    assert work((4, 0, 5)) is NONE


@given(st.lists(st.integers(0, 9), max_size=8))
def test_fastprod_is_product(s):
    assert fastprod(s) == Some(product(s))


def test_check_fastprod_counts_lists():
    checked, bad = check_fastprod(3, 3)
    assert checked == 1 + 3 + 9 + 27 and bad == []


def test_state_names():
    assert StateT(OPTION, range(2)).name == "state[option]"
    assert repr(lift_s(MS)) == "<MonadMorphism liftS[option]>"
