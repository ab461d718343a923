import pytest
from hypothesis import given, settings

from classprod import checks as ch
from classprod import constructions as c
from classprod import structure as st_
from classprod.classes import all_classes
from oracles import Naive

from strategies import groups_and_elements, small_groups


def el(G, name):
    return G.names.index(name)


def run(name, G):
    return ch.CHECKS[name](G)


# -- report invariants over random groups ---------------------------------

@given(small_groups())
@settings(max_examples=20)
def test_every_check_passes_or_skips_with_reason(G):
    for name, check in ch.CHECKS.items():
        r = check(G)
        assert r.status in ("pass", "skipped"), (name, G.label, r.failures[:3])
        if r.cases_checked == 0:
            assert r.status == "skipped" and r.reason
        assert all(case.get("reason") for case in r.skipped_cases)
        j = r.to_json()
        assert {"check_name", "group", "status", "cases", "witnesses", "elapsed_ms"} <= set(j)


def test_fail_status_requires_witness():
    r = ch._Run("demo", "G")
    r.case(False, {"x": 1})
    rep = r.finish()
    assert rep.status == "fail" and rep.failures == [{"x": 1, "ok": False}]
    assert ch._Run("demo", "G").finish().status == "skipped"


# -- theorem_A ---------------------------------------------------------------

def test_theorem_a_examples():
    r = run("theorem_A", c.cyclic(10))
    assert r.status == "pass" and r.cases_checked == 100
    r = run("theorem_A", c.extraspecial_p3(3))
    assert r.status == "pass" and r.cases_checked == 27 ** 2
    r = run("theorem_A", c.symmetric(3))
    assert r.status == "skipped"


@given(small_groups())
@settings(max_examples=20)
def test_theorem_a_against_naive(G):
    N = Naive(G)
    Z2 = N.second_center()
    D = N.derived(N.G)
    for a in Z2:
        C = N.centralizer(N.cls(a))
        assert D <= C
        assert N.derived_length_mod(C) <= 1
    assert run("theorem_A", G).status in ("pass", "skipped")


# -- theorem_B -----------------------------------------------------------------

def test_theorem_b_examples():
    r = run("theorem_B", c.cyclic(9))
    assert r.status == "pass"
    assert all(w["eta"] == 1 and w["dl"] == 0 and w["bound"] == 1 for w in r.witnesses)
    S3 = c.symmetric(3)
    r = run("theorem_B", S3)
    t = next(w for w in r.witnesses if w["class_size"] == 3)
    assert (t["eta"], t["dl"], t["bound"]) == (2, 2, 3)
    r = run("theorem_B", c.symmetric(4))
    assert r.status == "skipped" and r.reason == "not supersolvable"


@given(small_groups())
@settings(max_examples=20)
def test_theorem_b_witnesses_match_naive(G):
    r = run("theorem_B", G)
    if not Naive(G).is_supersolvable():
        assert r.status == "skipped"
        return
    N = Naive(G)
    for w in r.witnesses:
        A = N.cls(w["rep"])
        assert w["eta"] == N.eta(N.prod(A, N.inverse(A)))
        assert w["dl"] == N.derived_length_mod(N.centralizer(A))
        assert w["dl"] <= 2 * w["eta"] - 1


def test_theorem_b_failure_must_survive_naive_recheck(monkeypatch):
    G = c.dihedral(5)
    monkeypatch.setattr(st_, "relative_derived_length", lambda *a, **k: 99)
    with pytest.raises(RuntimeError, match="disagree"):
        run("theorem_B", G)


# -- corollary_C and the translation identity ------------------------------------

def test_corollary_c_examples():
    Q = c.quaternion8()
    r = run("corollary_C", Q)
    assert r.status == "pass"
    i, j = el(Q, "i"), el(Q, "j")
    skipped = {(s["a"], s["b"]) for s in r.skipped_cases}
    reps = {k.representative for k in all_classes(Q)}
    assert i in reps and j in reps
    assert (i, j) in skipped and (i, i) not in skipped
    # dl(Q8 / <i>) = 1 <= 2*2 - 1
    assert st_.relative_derived_length(Q, st_.element_centralizer(Q, i)) == 1
    D8 = c.dihedral(4)
    r = run("corollary_C", D8)
    assert r.status == "pass" and r.cases_checked + len(r.skipped_cases) == 25


def test_lemma_5_1_examples():
    Q = c.quaternion8()
    r = run("lemma_5_1", Q)
    assert r.status == "pass"
    assert any(s["a"] == el(Q, "i") and s["b"] == el(Q, "j") for s in r.skipped_cases)
    r = run("lemma_5_1", c.cyclic(12))
    assert r.status == "pass" and r.cases_checked == 144 and not r.skipped_cases


@given(groups_and_elements(2))
def test_translation_identity_naive(data):
    G, (a, b) = data
    N = Naive(G)
    A, B = N.cls(a), N.cls(b)
    AB = N.prod(A, B)
    Z = N.center()
    if AB & Z:
        z = min(AB & Z)
        assert AB == N.prod(N.prod(A, N.inverse(A)), {z})


# -- lemma_3_1 -------------------------------------------------------------

def test_lemma_3_1_d8_center_all_pairs():
    G = c.dihedral(4)
    N = Naive(G)
    Z = N.center()
    for a in range(8):
        for b in range(8):
            aN = {N.conj(a, n) for n in Z}
            bN = {N.conj(b, n) for n in Z}
            lhs = N.prod(aN, bN)
            caN = {N.comm(a, n) for n in Z}
            cbN = {N.comm(b, n) for n in Z}
            rhs = N.prod(N.prod({N.mul(a, b)}, {N.conj(x, b) for x in caN}), cbN)
            assert lhs == rhs == {N.mul(a, b)}
    r = run("lemma_3_1", G)
    assert r.status == "pass" and r.cases_checked % 64 == 0


@given(groups_and_elements(3, groups=small_groups(max_degree=4)))
def test_lemma_3_1_naive(data):
    G, (x, a, b) = data
    N = Naive(G)
    M = N.normal_closure({x})
    lhs = N.prod({N.conj(a, n) for n in M}, {N.conj(b, n) for n in M})
    rhs = N.prod(N.prod({N.mul(a, b)}, {N.conj(N.comm(a, n), b) for n in M}),
                 {N.comm(b, n) for n in M})
    assert lhs == rhs


def test_lemma_3_1_limits():
    r = ch.check_lemma_3_1(c.cyclic(70))
    assert r.status == "skipped" and "limit" in r.reason
    r = ch.check_lemma_3_1(c.extraspecial_p3(3))
    assert r.status == "pass" and r.cases_checked % 27 == 0


# -- lemma_3_2 ---------------------------------------------------------------

def test_lemma_3_2_examples():
    assert run("lemma_3_2", c.cyclic(8)).status == "pass"
    He = c.extraspecial_p3(3)
    r = run("lemma_3_2", He)
    assert r.status == "pass" and r.cases_checked > 0


def test_lemma_3_2_naive_extraspecial_whole():
    G = c.extraspecial_p3(3)
    N = Naive(G)
    ZN = N.center()
    D = N.derived(N.G)
    for a in ZN:
        for b in ZN:
            A, B = N.cls(a), N.cls(b)
            assert N.prod(A, B) <= N.prod({N.mul(a, b)}, ZN)
            assert D <= N.centralizer(A) & N.centralizer(B)
            assert N.derived_length_mod(N.centralizer(A)) <= 1


# -- lemma_4_2 --------------------------------------------------------------------

def test_lemma_4_2_extraspecial_center():
    G = c.extraspecial_p3(3)
    N = Naive(G)
    a = el(G, "(0,1,0)")
    Z = N.center()
    CN = frozenset(g for g in N.G if N.comm(a, g) in Z)
    assert CN == N.G
    table, proj = N.quotient_table(Z)
    Q = Naive(table)
    abar = proj[a]
    Ab = Q.cls(abar)
    eta_bar = Q.eta(Q.prod(Ab, Q.inverse(Ab)))
    twisted = {N.mul(N.conj(a, g), N.inv[a]) for g in CN}
    eta_mid = sum(1 for k in N.classes() if k & twisted)
    A = N.cls(a)
    eta_full = N.eta(N.prod(A, N.inverse(A)))
    assert (eta_bar, eta_mid, eta_full) == (1, 3, 3)
    assert eta_bar + eta_mid - 1 <= eta_full
    assert run("lemma_4_2", G).status == "pass"


def test_lemma_4_2_degenerate_normals():
    for G in (c.symmetric(3), c.dihedral(5), c.quaternion8()):
        r = run("lemma_4_2", G)
        assert r.status == "pass"


# -- lemma_4_3 -----------------------------------------------------------------------

def test_lemma_4_3_s4_d8_c4():
    G = c.symmetric(4)
    N = Naive(G)
    r4 = el(G, "(0123)")
    t = el(G, "(02)")
    H = N.generate({r4, t})
    K = N.generate({r4})
    assert len(H) == 8 and len(K) == 4
    lhs = N.derived_length_mod(N.core(K), N.core(H))
    rhs = N.derived_length_mod(N.core(K, H), H)
    assert lhs <= rhs
    assert N.derived_length_mod(K, K) == 0
    assert run("lemma_4_3", G).status == "pass"


def test_lemma_4_3_policy_text():
    small = run("lemma_4_3", c.symmetric(4))
    assert small.policy == "all nested subgroup pairs"
    big = run("lemma_4_3", c.direct_product(c.dihedral(6), c.cyclic(3)))
    assert big.policy and big.status == "pass"


# -- lemma_4_4 -------------------------------------------------------------------------

def test_lemma_4_4_examples():
    r = run("lemma_4_4", c.dihedral(4))
    assert r.status == "pass" and r.cases_checked > 0 and not r.witnesses
    S4 = c.symmetric(4)
    r = run("lemma_4_4", S4)
    assert r.status == "pass"
    assert any(s["reason"] == "N is not abelian" for s in r.skipped_cases)


def test_lemma_4_4_naive_d8_rotations():
    G = c.dihedral(4)
    N = Naive(G)
    R = N.generate({el(G, "r1")})
    CGN = N.centralizer(R)
    for a in range(8):
        C = N.centralizer({a})
        CN = frozenset(g for g in N.G if N.comm(a, g) in R)
        lhs = N.derived_length_mod(N.core(C, CN), CN)
        rhs = N.derived_length_mod(CN & CGN, CN)
        assert lhs <= rhs + 1 and lhs <= 2


# -- lemma_4_5 ----------------------------------------------------------------------------

def test_lemma_4_5_s3_skip():
    G = c.symmetric(3)
    r = run("lemma_4_5", G)
    a = el(G, "(012)")
    skip = next(s for s in r.skipped_cases if s["a"] == a and s["N_order"] == 3)
    assert (skip["eta_bar"], skip["eta"]) == (1, 2)


def test_lemma_4_5_extraspecial():
    G = c.extraspecial_p3(3)
    r = run("lemma_4_5", G)
    # Z(G) is the only minimal normal subgroup; G/Z is abelian, so only the
    # three central classes keep eta, the eight noncentral ones are skipped
    assert r.status == "pass"
    assert r.cases_checked == 3 and len(r.skipped_cases) == 8


# -- worked examples -----------------------------------------------------------------------

def test_examples_reproduced():
    r = ch.verify_examples()
    assert r.status == "pass" and r.cases_checked == 4
    got = {(w["example"], w["p"]): (w["eta_H"], w["eta_G"]) for w in r.witnesses}
    assert got[("extraspecial", 3)] == (1, 3)
    assert got[("extraspecial", 5)] == (1, 5)
    assert got[("wreath", 3)] == (3, 2)
    assert got[("wreath", 2)] == (2, 2)


def test_normal_iteration_policy_small_is_exhaustive():
    for G in (c.symmetric(4), c.dihedral(6), c.quaternion8(), c.direct_product(c.cyclic(2), c.cyclic(4))):
        got, policy = ch.normal_subgroups_for_checks(G)
        assert {frozenset(h.indices.tolist()) for h in got} == set(Naive(G).normal_subgroups())
        assert "size <= 2" in policy
