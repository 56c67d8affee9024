"""Tests for the sum/intersection dimension sequences and fingerprints."""

import pytest
from hypothesis import given, strategies as st

import rankinv.codes as cd
import rankinv.invariants as inv
import rankinv.linalg as la
from rankinv.gf import FullAut, GaloisAut
from rankinv.rng import DetRNG

# Frozen dimension rows for the [8,3] pair over F_{2^15} (see conftest).
# Each row is s_1..s_last with the first repeated value included.
GOLDEN_GAB_ROWS = {
    1: (4, 5, 6, 7, 8, 8),
    2: (5, 7, 8, 8),
    7: (6, 7, 8, 8),
}
GOLDEN_TW_ROWS = {
    1: (5, 6, 7, 8, 8),
    14: (5, 6, 7, 8, 8),
}


def _random_code(field, family, n, k, rng, theta_exp=1, **kw):
    g = la.random_full_rank_vector(field, n, rng)
    if family == "Twisted" and "eta" not in kw:
        kw["eta"] = field.alpha_pow(rng.randbelow(field.Qm1))
    spec = cd.make_spec(family, n, k, theta_exp=theta_exp, g=g, **kw)
    return cd.build(field, spec)


def _sigma_powers(field, r, i):
    sigma = GaloisAut(field, r)
    return [sigma.power(j) for j in range(i + 1)]


# --------------------------------------------------------------------------
# golden rows and sequence conventions
# --------------------------------------------------------------------------


def test_worked_example_golden_rows(worked_example_codes):
    gab, tw = worked_example_codes
    for r, row in GOLDEN_GAB_ROWS.items():
        seq = inv.s_sequence(gab, r)
        assert seq[0] == gab.k
        assert tuple(seq[1:]) == row
    for r, row in GOLDEN_TW_ROWS.items():
        seq = inv.s_sequence(tw, r)
        assert seq[0] == tw.k
        assert tuple(seq[1:]) == row


def test_default_length_stops_at_first_repeat(worked_example_codes):
    gab, _ = worked_example_codes
    for r in range(1, gab.field.m):
        seq = inv.s_sequence(gab, r)
        assert seq[-1] == seq[-2]
        # strictly increasing up to the single trailing repeat
        for a, b in zip(seq[:-2], seq[1:-1]):
            assert a < b


def test_i_max_gives_fixed_length(worked_example_codes):
    gab, _ = worked_example_codes
    default = inv.s_sequence(gab, 2)
    fixed = inv.s_sequence(gab, 2, i_max=7)
    assert len(fixed) == 8
    assert fixed[: len(default)] == default
    # constant after stabilization
    assert len(set(fixed[len(default) - 1:])) == 1


def test_unknown_method_rejected(f16):
    rng = DetRNG(3, "inv-method")
    code = _random_code(f16, "Gabidulin", 3, 2, rng)
    with pytest.raises(ValueError):
        inv.s_sequence(code, 1, method="magic")
    with pytest.raises(ValueError):
        inv.t_sequence(code, 1, method="magic")


@pytest.mark.parametrize("family,n,k", [("Gabidulin", 6, 2), ("Twisted", 5, 3)])
def test_s_methods_agree(f2_8, family, n, k):
    rng = DetRNG(11, f"inv-fastnaive/{family}")
    for trial in range(4):
        code = _random_code(f2_8, family, n, k, rng.spawn(str(trial)))
        for r in (1, 3, 5):
            assert inv.s_sequence(code, r, method="fast") == \
                inv.s_sequence(code, r, method="naive")
            assert inv.s_sequence(code, r, i_max=4, method="fast") == \
                inv.s_sequence(code, r, i_max=4, method="naive")


@pytest.mark.parametrize("family,n,k", [("Gabidulin", 6, 3), ("Twisted", 6, 2)])
def test_t_methods_agree(f2_8, family, n, k):
    rng = DetRNG(12, f"inv-tmethods/{family}")
    for trial in range(4):
        code = _random_code(f2_8, family, n, k, rng.spawn(str(trial)))
        for r in (1, 3, 7):
            assert inv.t_sequence(code, r, method="dual") == \
                inv.t_sequence(code, r, method="direct")
            assert inv.t_sequence(code, r, i_max=4, method="dual") == \
                inv.t_sequence(code, r, i_max=4, method="direct")


# --------------------------------------------------------------------------
# structural identities
# --------------------------------------------------------------------------


@given(seed=st.integers(min_value=0, max_value=10**6))
def test_t1_equals_2k_minus_s1(f3_5, seed):
    rng = DetRNG(seed, "inv-t1")
    code = _random_code(f3_5, "Gabidulin", 4, 2, rng)
    for r in range(f3_5.m):
        s = inv.s_sequence(code, r, i_max=1)
        t = inv.t_sequence(code, r, i_max=1)
        assert t[1] == 2 * code.k - s[1]


@given(seed=st.integers(min_value=0, max_value=10**6))
def test_duality_ties_t_to_dual_s(f2_8, seed):
    rng = DetRNG(seed, "inv-duality")
    family = rng.choice(["Gabidulin", "Twisted"])
    code = _random_code(f2_8, family, 6, 3, rng)
    dual = cd.dual(code)
    for r in (1, 3, 5):
        p = inv.invariant_profile(code, r)
        pd = inv.invariant_profile(dual, r)
        # t_i(C) = n - s_i(C_perp)  and  Lambda_i(C) = Delta_i(C_perp)
        assert all(p.t[i] == code.n - pd.s[i] for i in range(len(p.t)))
        assert p.lam == pd.delta


def test_intersection_is_dual_of_dual_sum(f2_8):
    rng = DetRNG(5, "inv-dual-code-level")
    code = _random_code(f2_8, "Gabidulin", 6, 3, rng)
    auts = _sigma_powers(f2_8, 3, 2)
    lhs = inv.intersect_code(code, auts)
    rhs = cd.dual(inv.sum_code(cd.dual(code), auts))
    assert cd.code_equal(lhs, rhs)


@given(seed=st.integers(min_value=0, max_value=10**6))
def test_profile_increments_monotone(f2_8, seed):
    rng = DetRNG(seed, "inv-increments")
    family = rng.choice(["Gabidulin", "Twisted"])
    code = _random_code(f2_8, family, 6, 2, rng)
    for r in range(f2_8.m):
        p = inv.invariant_profile(code, r)
        assert all(a >= b for a, b in zip(p.delta, p.delta[1:]))
        assert all(a >= b for a, b in zip(p.lam, p.lam[1:]))
        assert p.delta[0] == p.lam[0] == p.s[1] - code.k
        assert p.delta[0] <= code.k
        assert p.delta[-1] == 0 and p.lam[-1] == 0


def test_stabilization_indices(f2_8, f3_5):
    cases = [
        (f2_8, "Gabidulin", 6, 2),
        (f2_8, "Twisted", 5, 3),
        (f3_5, "Gabidulin", 5, 2),
    ]
    for field, family, n, k in cases:
        rng = DetRNG(17, f"inv-stab/{family}/{field.q}")
        code = _random_code(field, family, n, k, rng)
        for r in (1, 2, 3):
            s = inv.s_sequence(code, r, i_max=n - k + 2)
            assert s[n - k] == s[n - k + 1] == s[n - k + 2]
            t = inv.t_sequence(code, r, i_max=k + 2)
            assert t[k] == t[k + 1] == t[k + 2]


def test_sum_and_intersection_match_sequences(f2_8):
    rng = DetRNG(23, "inv-match-seq")
    code = _random_code(f2_8, "Twisted", 6, 2, rng)
    s = inv.s_sequence(code, 3, i_max=3)
    t = inv.t_sequence(code, 3, i_max=3)
    for i in range(4):
        auts = _sigma_powers(f2_8, 3, i)
        assert inv.sum_code(code, auts).k == s[i]
        assert inv.intersect_code(code, auts).k == t[i]


def test_sum_composition(f2_8):
    # applying the i-step sum to the j-step sum gives the (i+j)-step sum
    rng = DetRNG(29, "inv-compose")
    code = _random_code(f2_8, "Gabidulin", 6, 2, rng)
    for r in (1, 5):
        for i, j in [(1, 1), (1, 2), (2, 1)]:
            inner = inv.sum_code(code, _sigma_powers(f2_8, r, j))
            outer = inv.sum_code(inner, _sigma_powers(f2_8, r, i))
            direct = inv.sum_code(code, _sigma_powers(f2_8, r, i + j))
            assert cd.code_equal(outer, direct)


# --------------------------------------------------------------------------
# plateau => basis over the ground field (generator sigma only)
# --------------------------------------------------------------------------


def _deficient_row_code(field, n, k, w, rng):
    """k Frobenius-power rows of a vector whose coordinates span only a
    w-dimensional F_q-space, so every sigma-sum stays below dimension n."""
    base = la.random_full_rank_vector(field, w, rng)
    g = list(base)
    i = 0
    while len(g) < n:
        g.append(field.add(base[i % w], base[(i + 1) % w]))
        i += 1
    assert la.rank_q(field, g) == w
    rows = la.moore_matrix(field, tuple(g), k, GaloisAut(field, 1))
    return cd.LinearCode.from_rows(field, rows, n)


@pytest.mark.parametrize("make_args", [("f2_8", 6, 2, 4), ("f3_5", 4, 2, 3)])
def test_plateau_value_has_subfield_basis(request, make_args):
    fixture, n, k, w = make_args
    field = request.getfixturevalue(fixture)
    rng = DetRNG(31, f"inv-plateau/{field.q}/{field.m}")
    code = _deficient_row_code(field, n, k, w, rng)
    from rankinv.gf import galois_generators

    for r in galois_generators(field.m):
        seq = inv.s_sequence(code, r)
        plateau = len(seq) - 1  # index of the first repeated value
        stable = inv.sum_code(code, _sigma_powers(field, r, plateau))
        assert stable.k == seq[-1] < n  # below full length: non-vacuous
        dim_sub, rows = cd.subfield_subcode(stable)
        assert dim_sub == stable.k
        assert all(field.in_subfield_q(a) for row in rows for a in row)


# --------------------------------------------------------------------------
# profiles and fingerprints
# --------------------------------------------------------------------------


def test_invariant_profile_shape(f2_8):
    rng = DetRNG(37, "inv-profile-shape")
    code = _random_code(f2_8, "Gabidulin", 6, 2, rng)
    p = inv.invariant_profile(code, 11)
    assert p.sigma == 11 % f2_8.m
    assert len(p.s) == code.n - code.k + 1 and p.s[0] == code.k
    assert len(p.t) == code.k + 1 and p.t[0] == code.k
    assert sum(p.delta) == p.s[-1] - code.k
    assert sum(p.lam) == code.k - p.t[-1]
    assert p.key == (p.s[1:], p.t[1:])


def test_fingerprints_invariant_under_equivalence(worked_example_codes):
    gab, tw = worked_example_codes
    field = gab.field
    rng = DetRNG(41, "inv-fp-semilinear")
    smap = cd.SemilinearMap(
        lam=field.alpha_pow(rng.randbelow(field.Qm1)),
        A=la.random_invertible_matrix_q(field, gab.n, rng),
        tau=FullAut(field, rng.randbelow(field.d)),
    )
    image = cd.apply_semilinear(gab, smap)
    assert inv.fingerprint_consecutive(gab) == inv.fingerprint_consecutive(image)
    assert inv.fingerprint_random_triples(gab, trials=15, seed=7) == \
        inv.fingerprint_random_triples(image, trials=15, seed=7)
    # and the pair the example was built to separate stays separated
    assert inv.fingerprint_consecutive(gab) != inv.fingerprint_consecutive(tw)


def test_fingerprint_equality_semantics(f16):
    rng = DetRNG(43, "inv-fp-sem")
    code = _random_code(f16, "Gabidulin", 4, 2, rng)
    fp1 = inv.fingerprint(code, "consecutive")
    fp2 = inv.fingerprint_consecutive(code)
    assert fp1 == fp2 and hash(fp1) == hash(fp2)
    fp3 = inv.fingerprint(code, "random_triples", trials=10, seed=1)
    assert fp1 != fp3  # different modes never compare equal
    assert fp3 == inv.fingerprint_random_triples(code, trials=10, seed=1)
    with pytest.raises(ValueError):
        inv.fingerprint(code, "sideways")


def test_random_triples_deterministic():
    a = inv.random_triples(15, 20, 9)
    b = inv.random_triples(15, 20, 9)
    assert a == b and len(a) == 20
    for triple in a:
        assert len(set(triple)) == 3
        assert all(0 <= r < 15 for r in triple)
    assert inv.random_triples(15, 20, 10) != a
    with pytest.raises(ValueError):
        inv.random_triples(2, 5, 0)
