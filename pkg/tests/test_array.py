import pytest
from hypothesis import given
from hypothesis import strategies as st

from effectlaws.array import (
    REFINEMENT_STORES,
    ArrayModel,
    ArrayStore,
    PartitionSizes,
    aswap,
    check_iqsort_refines_slowsort,
    check_swap_rcons_refinement,
    check_swap_rcons_suite,
    dipartl,
    ipartl,
    iqsort,
    plus_array,
    write_list,
)
from effectlaws.core import IDENTITY, TT
from effectlaws.errors import SizeCertificateViolation
from effectlaws.nondet import OutcomeSet, refines, slowsort
from effectlaws.suites import run_suite
from effectlaws.transformers import STATE

from oracles import all_lists, run_quicksort_cells

EMPTY = ArrayStore()
A = ArrayModel(IDENTITY, [EMPTY])
PA = plus_array([EMPTY])


def run(m, store=EMPTY, M=A):
    return M.run(m, store)


def only(outcomes: OutcomeSet):
    (x,) = outcomes
    return x


# -- plain state -----------------------------------------------------------------------


def test_state_examples():
    M = STATE
    assert M.run(M.then(M.put(2), M.get()), 0) == (2, 2)
    for s in range(3):
        assert M.run(M.bind(M.get(), M.put), s) == (TT, s)
    assert M.run(M.then(M.put(1), M.put(2)), 0) == (TT, 2)


def test_state_suite_passes_on_all_three_bases():
    reports = run_suite("state")
    assert {r.model for r in reports} == {"state", "state[option]", "state[powerset]"}
    assert all(r.passed for r in reports)


# -- stores and array operations -------------------------------------------------------


def test_store_is_total_and_canonical():
    assert EMPTY[5] == 0
    assert ArrayStore.of((0, 0)) == EMPTY
    assert EMPTY.set(1, 4).set(1, 0) == EMPTY
    assert repr(ArrayStore.of((1, 2))) == "[0:1, 1:2 | 0]"


@given(st.dictionaries(st.integers(0, 5), st.integers(0, 3)), st.integers(0, 5), st.integers(0, 3))
def test_store_set_then_get(cells, i, v):
    s = ArrayStore.from_mapping(cells)
    t = s.set(i, v)
    assert t[i] == v
    assert all(t[k] == s[k] for k in range(7) if k != i)
    assert hash(t) == hash(ArrayStore.from_mapping({**cells, i: v}))


def test_aput_aget():
    assert run(A.then(A.aput(0, 7), A.aget(0)))[0] == 7
    assert run(A.aget(5)) == (0, EMPTY)
    assert run(A.aget(5), ArrayStore(default=3))[0] == 3
    both = A.seq(A.aput(0, 1), A.aput(1, 2), A.aput(0, 1))
    swapped = A.seq(A.aput(1, 2), A.aput(0, 1))
    assert run(both) == run(swapped)


def test_aswap():
    ab = ArrayStore.of(("a", "b"))
    assert run(aswap(0, 1, A), ab)[1] == ArrayStore.of(("b", "a"))
    assert run(aswap(1, 1, A), ab)[1] == ab
    x = ArrayStore.from_mapping({0: "x"}, default="d")
    assert run(aswap(0, 2, A), x)[1] == ArrayStore.from_mapping({0: "d", 2: "x"}, default="d")


def test_write_list():
    assert run(write_list(0, (), A)) == (TT, EMPTY)
    assert run(write_list(2, (9, 8), A))[1] == ArrayStore.from_mapping({2: 9, 3: 8})


@given(st.lists(st.integers(0, 3), max_size=4), st.integers(0, 3))
def test_write_list_is_idempotent(xs, i):
    M = ArrayModel(IDENTITY, REFINEMENT_STORES)
    w = write_list(i, xs, M)
    assert M.denote(M.then(w, w)) == M.denote(w)


def test_array_suite():
    assert all(r.passed for r in run_suite("array"))


# -- partitioning and sorting ----------------------------------------------------------


def test_ipartl_base_case():
    s = ArrayStore.of((5, 6))
    assert run(ipartl(3, 0, 1, 1, 0, A), s) == ((1, 1), s)


def test_ipartl_example():
    s = ArrayStore.of((3, 1, 2))
    (sizes, out) = run(ipartl(3, 1, 0, 0, 2, A), s)
    assert sizes == (2, 0)
    assert out.segment(1, 2) == (1, 2)


def test_ipartl_permutes_segment_and_counts():
    base = ArrayStore.of((9,) * 8)
    i = 1
    for xs in all_lists(5, 4):
        if not xs:
            continue
        p = xs[0]
        start = run(write_list(i, xs, A), base)[1]
        (ny, nz), out = run(ipartl(p, i, 0, 0, len(xs), A), start)
        seg = out.segment(i, len(xs))
        assert sorted(seg) == sorted(xs)
        assert ny + nz == len(xs)
        assert all(v <= p for v in seg[:ny]) and all(v > p for v in seg[ny:])
        assert all(out[k] == start[k] for k in range(12) if not i <= k < i + len(xs))


def test_dipartl_certificates():
    out = run(dipartl(2, 0, 0, 0, 0, PA), EMPTY, PA)
    ((sizes, _),) = out
    assert (sizes.ny, sizes.nz) == (0, 0)
    for xs in all_lists(5, 3):
        if xs:
            M = plus_array([ArrayStore.of(xs)])
            assert len(M.denote(dipartl(xs[0], 1, 0, 0, len(xs) - 1, M))[0][1]) == 1


def test_faulty_partition_is_filtered_out():
    def faulty(p, i, y, z, x, M):
        return M.ret((x + y + z + 1, 0))

    assert run(dipartl(1, 0, 0, 0, 2, PA, partition=faulty), EMPTY, PA) == OutcomeSet()
    with pytest.raises(SizeCertificateViolation):
        PartitionSizes(4, 0, 3)


def test_iqsort_examples():
    assert run(iqsort(0, 0, A)) == (TT, EMPTY)
    out = run(A.then(write_list(0, (3, 1, 2), A), iqsort(0, 3, A)))[1]
    assert out.segment(0, 3) == (1, 2, 3)


@given(st.lists(st.integers(0, 3), max_size=6), st.integers(0, 2))
def test_iqsort_matches_sorted(xs, i):
    background = REFINEMENT_STORES[1]
    prog = PA.then(write_list(i, xs, PA), iqsort(i, len(xs), PA))
    _, store = only(run(prog, background, PA))
    expected = run_quicksort_cells(dict(background.cells), i, xs)
    assert all(store[k] == expected.get(k, 0) for k in range(12))


def test_iqsort_refinement_small():
    assert check_iqsort_refines_slowsort(0).holds
    r = check_iqsort_refines_slowsort(3, 3)
    assert r.holds and r.instances == sum(3**n for n in range(4)) * 3 * len(REFINEMENT_STORES)


def test_refinement_instance_two_one():
    M = plus_array([EMPTY])
    lhs = M.then(write_list(0, (2, 1), M), iqsort(0, 2, M))
    ((_, final),) = run(lhs, EMPTY, M)
    assert final == ArrayStore.of((1, 2))
    rhs = M.bind(slowsort((2, 1), M), lambda ys: write_list(0, ys, M))
    assert (TT, final) in run(rhs, EMPTY, M)


def test_swap_rcons_examples():
    assert check_swap_rcons_refinement(0, 5, (1,), ()).holds
    M = plus_array([EMPTY])
    r = check_swap_rcons_refinement(0, 2, (), (1,), M)
    assert r.holds
    lhs = M.then(write_list(0, (1, 2), M), aswap(0, 1, M))
    assert run(lhs, EMPTY, M) == OutcomeSet({(TT, ArrayStore.of((2, 1)))})


def test_swap_rcons_suite_small():
    assert check_swap_rcons_suite(2, 2).holds


def test_descending_sort_has_a_witness():
    M = plus_array([EMPTY])
    lhs = M.seq(write_list(0, (1, 2), M), iqsort(0, 2, M), aswap(0, 1, M))
    rhs = M.bind(slowsort((1, 2), M), lambda ys: write_list(0, ys, M))
    r = refines(lhs, rhs, M)
    assert not r.holds
    assert r.witness == (EMPTY, (TT, ArrayStore.of((2, 1))))
