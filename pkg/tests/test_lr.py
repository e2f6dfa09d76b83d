import json

import pytest
from hypothesis import given, settings, strategies as st

from lrq.ktableaux import enumerate_tableaux
from lrq.laurent import ONE, ZERO, LaurentPoly, gaussian_binomial
from lrq.lr import (
    CoeffCache,
    CoeffKey,
    CoeffRecord,
    coeff_normalized,
    coeff_oracle,
    coeff_tableau,
    compute_record,
    cross_validate,
    iter_keys,
    normalize,
    sweep_symmetry_unimodality,
)
from lrq.partitions import SkewShape, classical_lr, partitions_of, partitions_up_to, subpartitions

WORKED = CoeffKey.of(2, (1,), (3, 2), (1,), (3, 2))
WORKED_C = LaurentPoly({0: 2, 1: 5, 2: 7, 3: 5, 4: 2})


def test_worked_example_both_routes():
    assert coeff_tableau(WORKED) == WORKED_C
    assert coeff_oracle(WORKED) == WORKED_C
    assert WORKED_C.eval_at_one() == 21


def test_trivial_keys():
    for k in (1, 2, 3):
        key = CoeffKey.of(k, (2, 1), (3, 1), (3, 1), (2, 1))
        assert coeff_tableau(key) == ONE
        assert coeff_oracle(key) == ONE
    unbalanced = CoeffKey.of(2, (), (2,), (1,), (2,))
    assert coeff_tableau(unbalanced) == ZERO
    assert coeff_oracle(unbalanced) == ZERO


def test_containment_failure_is_zero():
    key = CoeffKey.of(2, (), (2,), (1, 1), (0,))
    assert coeff_tableau(key) == ZERO and coeff_oracle(key) == ZERO


def test_malformed_partition_is_error():
    with pytest.raises(ValueError):
        CoeffKey.of(2, (), (1, 2), (), ())
    with pytest.raises(ValueError):
        CoeffKey.of(0, (), (), (), ())


def test_k1_oracle_is_classical():
    for lam in partitions_up_to(5):
        for mu in subpartitions(lam):
            for nu in partitions_of(sum(lam) - sum(mu)):
                key = CoeffKey(1, (), lam, mu, nu)
                assert coeff_oracle(key) == classical_lr(lam, mu, nu)


def series_quotient(num, den):
    n = [num.coeff(i) for i in range(num.max_exponent() + 1)]
    d = [den.coeff(i) for i in range(den.max_exponent() + 1)]
    q = [0] * (len(n) - len(d) + 1)
    for i in range(len(q) - 1, -1, -1):
        q[i] = n[i + len(d) - 1] // d[-1]
        for j, dj in enumerate(d):
            n[i + j] -= q[i] * dj
    assert not any(n)
    return LaurentPoly(dict(enumerate(q)))


def test_oracle_horizontal_strip_k3_l2():
    t = LaurentPoly.monomial(1)
    expected = series_quotient((1 - t ** 4) * (1 - t ** 3), (1 - t) * (1 - t ** 2))
    assert expected == LaurentPoly({0: 1, 1: 1, 2: 2, 3: 1, 4: 1})
    for n in range(2, 6):
        for m in range(2, 6):
            key = CoeffKey.of(3, (n - 2,), (m,), (m - 2,), (n,))
            assert coeff_oracle(key) == expected


def test_normalized_examples():
    assert coeff_normalized(WORKED) == LaurentPoly({-4: 2, -2: 5, 0: 7, 2: 5, 4: 2})
    key = CoeffKey.of(1, (), (2, 1), (1,), (1, 1))
    assert coeff_normalized(key) == coeff_tableau(key).substitute_t_squared()
    assert coeff_normalized(CoeffKey.of(2, (), (2,), (1,), (2,))) == ZERO


def test_record_invariant_and_json():
    record = compute_record(WORKED, "both")
    assert record.is_consistent()
    data = json.loads(json.dumps(record.to_json()))
    assert data["c"] == {"0": "2", "1": "5", "2": "7", "3": "5", "4": "2"}
    assert data["C"] == {"-4": "2", "-2": "5", "0": "7", "2": "5", "4": "2"}
    assert CoeffRecord.from_json(data) == record
    bad = CoeffRecord(WORKED, WORKED_C, WORKED_C, "tableau")
    assert not bad.is_consistent()


def test_cache_reuses_records():
    cache = CoeffCache()
    first = compute_record(WORKED, "tableau", cache)
    assert len(cache) == 1
    assert compute_record(WORKED, "tableau", cache) is first


def test_both_detects_nothing_on_valid_keys():
    for key in list(iter_keys(3, 2))[:200]:
        compute_record(key, "both", cache=None)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_tableau_polynomial_shape(k):
    for key in iter_keys(4, k):
        c = coeff_tableau(key)
        assert all(isinstance(v, int) and v > 0 for v in c.terms.values())
        if c:
            assert c.min_exponent() >= 0
            assert c.max_exponent() <= (k - 1) * key.skew_size
        count = len(enumerate_tableaux(SkewShape(key.lam, key.mu), key.nu, key.kappa, k, lattice=True))
        assert c.eval_at_one() == count


def test_oracle_symmetric_under_swap():
    for k in (1, 2, 3):
        for key in iter_keys(5, k):
            swapped = CoeffKey(k, key.mu, key.nu, key.kappa, key.lam)
            assert coeff_oracle(key) == coeff_oracle(swapped)


def test_single_row_nu_matches_h_pairing():
    from lrq.symfunc import h, macdonald_inner, skew_schur_in_p

    for k in (1, 2, 3):
        for lam in partitions_up_to(5):
            for mu in subpartitions(lam):
                d = sum(lam) - sum(mu)
                key = CoeffKey(k, (), lam, mu, (d,) if d else ())
                expected = macdonald_inner(skew_schur_in_p(SkewShape(lam, mu)), h(d), k)
                assert coeff_tableau(key) == expected


def test_single_rows_are_gaussian_binomials():
    for k in (1, 2, 3):
        for l in range(4):
            key = CoeffKey.of(k, (4 - l,), (5,), (5 - l,), (4,))
            assert coeff_tableau(key) == gaussian_binomial(k + l - 1, l)


def test_sweeps_small():
    assert sweep_symmetry_unimodality(0, 1).ok
    assert sweep_symmetry_unimodality(3, 2).ok
    report = cross_validate(3, 3)
    assert report.ok and report.checked > 0


def test_iter_keys_deterministic_and_admissible():
    keys = list(iter_keys(3, 2))
    assert keys == list(iter_keys(3, 2))
    assert len(set(keys)) == len(keys)
    assert all(key.is_admissible() for key in keys)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(list(iter_keys(4, 3))))
def test_normalize_is_bar_invariant(key):
    big = normalize(coeff_tableau(key), key)
    assert big == big.bar()
