import pytest
from hypothesis import given, settings

from classprod import constructions as c
from classprod import structure as st_
from classprod.errors import NotNormal, NotSolvable, NotSolvableModN
from classprod.group import ElementSet, Subgroup, closure
from oracles import Naive

from strategies import groups_and_elements, small_groups


def el(G, name):
    return G.names.index(name)


def sub(G, *names):
    return closure(G, [el(G, n) for n in names])


def as_set(H):
    return frozenset(int(x) for x in H.indices)


# -- centralizers and centers -------------------------------------------------

def test_centralizer_examples():
    S3 = c.symmetric(3)
    assert st_.centralizer_of_set(S3, ElementSet.from_indices(S3, [0])).order == 6
    T = ElementSet.from_indices(S3, [el(S3, "(01)"), el(S3, "(02)"), el(S3, "(12)")])
    assert st_.centralizer_of_set(S3, T).order == 1
    Q = c.quaternion8()
    C = st_.centralizer_of_set(Q, ElementSet.from_indices(Q, [el(Q, "i"), el(Q, "-i")]))
    assert C == sub(Q, "i") and C.order == 4


def test_centers():
    for G in (c.cyclic(12), c.direct_product(c.cyclic(2), c.cyclic(6))):
        assert st_.center(G).order == G.order == st_.second_center(G).order
    He = c.extraspecial_p3(3)
    assert st_.center(He).order == 3 and st_.second_center(He).order == 27
    S3 = c.symmetric(3)
    assert st_.center(S3).order == 1 and st_.second_center(S3).order == 1


@given(small_groups())
def test_centers_match_naive(G):
    N = Naive(G)
    assert as_set(st_.center(G)) == N.center()
    assert as_set(st_.second_center(G)) == N.second_center()


@given(groups_and_elements(2))
def test_centralizer_matches_naive(data):
    G, (a, b) = data
    X = ElementSet.from_indices(G, {a, b})
    assert as_set(st_.centralizer_of_set(G, X)) == Naive(G).centralizer({a, b})


# -- normality and cores -------------------------------------------------------

def test_normal_closure_examples():
    S3 = c.symmetric(3)
    assert st_.normal_closure(S3, [el(S3, "(012)")]).order == 3
    assert st_.normal_closure(S3, [0]).order == 1
    S4 = c.symmetric(4)
    C4 = closure(S4, [el(S4, "(0123)")])
    assert not st_.is_normal(S4, C4)
    assert st_.core(S4, C4).order == 1


def test_core_examples():
    S4 = c.symmetric(4)
    assert st_.core(S4, S4.whole()) == S4.whole()
    A4 = closure(S4, [el(S4, "(012)"), el(S4, "(123)")])
    assert A4.order == 12 and st_.core(S4, A4) == A4


@given(groups_and_elements(2))
def test_core_and_closure_match_naive(data):
    G, (a, b) = data
    N = Naive(G)
    H = closure(G, [a, b])
    assert as_set(st_.core(G, H)) == N.core(as_set(H))
    assert as_set(st_.normal_closure(G, [a, b])) == N.normal_closure({a, b})
    assert st_.is_normal(G, H) == N.is_normal(as_set(H))


@given(groups_and_elements(3))
def test_relative_core_matches_naive(data):
    G, (a, b, x) = data
    N = Naive(G)
    within = closure(G, [a, b])
    K = closure(G, [x])
    assert as_set(st_.core(G, K, within=within)) == N.core(as_set(K), as_set(within))


# -- derived series --------------------------------------------------------------

def test_derived_length_examples():
    assert st_.derived_length(c.cyclic(7)) == 1
    assert st_.derived_length(c.cyclic(1)) == 0
    assert st_.derived_length(c.symmetric(3)) == 2
    assert st_.derived_length(c.symmetric(4)) == 3
    series = st_.derived_series(c.symmetric(4))
    assert [t.order for t in series.terms] == [24, 12, 4, 1]


def test_nonsolvable_raises_with_series():
    with pytest.raises(NotSolvable) as info:
        st_.derived_length(c.symmetric(5))
    assert [t.order for t in info.value.series.terms] == [120, 60]
    assert not st_.is_solvable(c.symmetric(5))


def test_relative_derived_length_examples():
    S4 = c.symmetric(4)
    V = st_.derived_subgroup(S4, st_.derived_subgroup(S4))
    assert V.order == 4
    assert st_.relative_derived_length(S4, V) == 2
    assert st_.relative_derived_length(S4, S4.whole()) == 0
    C = c.cyclic(6)
    assert st_.relative_derived_length(C, C.trivial_subgroup()) == 1


def test_relative_derived_length_errors():
    S4 = c.symmetric(4)
    with pytest.raises(NotNormal):
        st_.relative_derived_length(S4, closure(S4, [el(S4, "(0123)")]))
    S5 = c.symmetric(5)
    with pytest.raises(NotSolvableModN):
        st_.relative_derived_length(S5, S5.trivial_subgroup())


@given(small_groups())
@settings(max_examples=25)
def test_relative_dl_equals_quotient_dl(G):
    N = Naive(G)
    for M in N.normal_subgroups():
        H = Subgroup(G, ElementSet.from_indices(G, M))
        expected = N.derived_length_mod(M)
        try:
            got = st_.relative_derived_length(G, H)
        except NotSolvable:
            got = None
        assert got == expected
        Q = st_.quotient(G, H).group
        assert (st_.derived_length(Q) if st_.is_solvable(Q) else None) == expected


# -- quotients ------------------------------------------------------------------

def test_quotient_examples():
    S3 = c.symmetric(3)
    Q, proj = st_.quotient(S3, S3.trivial_subgroup())
    assert Q.order == 6 and sorted(proj.tolist()) == list(range(6))
    A3 = sub(S3, "(012)")
    Q, _ = st_.quotient(S3, A3)
    assert Q.order == 2
    He = c.extraspecial_p3(3)
    Q, _ = st_.quotient(He, st_.center(He))
    assert Q.order == 9 and Q.is_abelian and (Q.element_orders[1:] == 3).all()


@given(groups_and_elements(1))
def test_quotient_projection_is_homomorphism(data):
    G, (x,) = data
    H = st_.normal_closure(G, [x])
    Q, proj = st_.quotient(G, H)
    assert Q.order * H.order == G.order
    assert (proj[G.mult] == Q.mult[proj[:, None], proj[None, :]]).all()


# -- C_N(a) ----------------------------------------------------------------------

def test_cn_examples():
    He = c.extraspecial_p3(3)
    a = el(He, "(0,1,0)")
    assert st_.cn_subgroup(He, a, He.whole()) == He.whole()
    assert st_.cn_subgroup(He, a, He.trivial_subgroup()) == st_.element_centralizer(He, a)
    assert st_.cn_subgroup(He, a, st_.center(He)) == He.whole()


@given(groups_and_elements(2))
def test_cn_matches_definition(data):
    G, (a, x) = data
    N = Naive(G)
    M = N.normal_closure({x})
    expected = frozenset(g for g in range(G.order) if N.comm(a, g) in M)
    H = Subgroup(G, ElementSet.from_indices(G, M))
    assert as_set(st_.cn_subgroup(G, a, H)) == expected


# -- chief series and supersolvability --------------------------------------------

def test_chief_series_examples():
    assert sorted(st_.chief_series(c.cyclic(6)).factor_orders) == [2, 3]
    assert st_.chief_series(c.symmetric(4)).factor_orders == [4, 3, 2]
    trivial = st_.chief_series(c.cyclic(1))
    assert trivial.factor_orders == [] and trivial.length == 0


def test_supersolvable_examples():
    for G in (c.cyclic(12), c.dihedral(7), c.extraspecial_p3(3), c.extraspecial_p3(5), c.quaternion8()):
        assert st_.is_supersolvable(G)
    S4 = c.symmetric(4)
    assert st_.is_solvable(S4) and not st_.is_supersolvable(S4)
    assert not st_.is_solvable(c.symmetric(5))


@given(small_groups())
@settings(max_examples=30)
def test_supersolvable_matches_naive(G):
    assert st_.is_supersolvable(G) == Naive(G).is_supersolvable()


@given(small_groups())
@settings(max_examples=30)
def test_chief_series_terms_normal_and_minimal(G):
    N = Naive(G)
    normals = N.normal_subgroups()
    terms = [as_set(t) for t in st_.chief_series(G).terms]
    assert terms[0] == frozenset({N.e}) or len(terms) == 1
    for lo, hi in zip(terms, terms[1:]):
        assert lo < hi and lo in normals and hi in normals
        # nothing normal strictly between consecutive terms
        assert not any(lo < M < hi for M in normals)


@given(small_groups())
@settings(max_examples=25)
def test_minimal_normal_subgroups_match_naive(G):
    N = Naive(G)
    normals = [M for M in N.normal_subgroups() if len(M) > 1]
    minimal = {M for M in normals if not any(K < M for K in normals)}
    assert {as_set(M) for M in st_.minimal_normal_subgroups(G)} == minimal


@given(small_groups())
@settings(max_examples=20)
def test_normal_subgroups_exhaustive_matches_naive(G):
    assert {as_set(M) for M in st_.normal_subgroups_exhaustive(G)} == set(Naive(G).normal_subgroups())


def test_all_subgroups_counts():
    # S4 has 30 subgroups, D8 has 10, Q8 has 6
    assert len(st_.all_subgroups(c.symmetric(4))) == 30
    assert len(st_.all_subgroups(c.dihedral(4))) == 10
    assert len(st_.all_subgroups(c.quaternion8())) == 6
