import pytest

from ppshift.errors import (
    BadExponentError,
    DegenerateParametersError,
    NotConstructibleError,
    NotRootOfUnityError,
    OutOfRangeError,
)
from ppshift.fp2 import (
    build_pair,
    census,
    check_conditions,
    constructible_pairs,
    derive_params,
    family_b_values,
    family_poly,
    lemma_suite,
    shape_parameters,
)
from ppshift.poly import compose, eval_table, poly_scale
from ppshift.pp import compositional_inverse, is_permutation


def test_family_b_values(field):
    f9 = field(3, 2)
    assert family_b_values(f9) == [1, 2, 3, 6]
    with pytest.raises(OutOfRangeError):
        family_b_values(field(5, 1))


def test_derive_params_worked_instance(field):
    f9 = field(3, 2)
    # m=2, b=1, alpha=t, beta=1+2t
    inst = derive_params(f9, 2, 1, 3, 7)
    assert inst.d == 1
    assert inst.gamma == 6  # 2t
    assert inst.epsilon == 4  # 1+t
    assert inst.delta == 2  # -1


def test_derive_params_trivial_instance(field):
    f9 = field(3, 2)
    inst = derive_params(f9, 2, 1, 0, 1)
    assert (inst.gamma, inst.epsilon, inst.d) == (0, 1, 1)
    assert inst.delta == f9.neg(1)


def test_derive_params_identities(field):
    f9 = field(3, 2)
    for alpha in range(9):
        for beta in range(9):
            if f9.pow(alpha, 4) == f9.pow(beta, 4):
                continue
            inst = derive_params(f9, 2, 1, alpha, beta)
            lhs = f9.add(f9.mul(inst.gamma, f9.pow(beta, 3)), f9.mul(alpha, inst.epsilon))
            rhs = f9.add(f9.mul(inst.gamma, f9.pow(alpha, 3)), f9.mul(beta, inst.epsilon))
            assert lhs == 0 and rhs == 1
            assert f9.add(f9.mul(alpha, f9.pow(inst.epsilon, 3)), f9.mul(beta, inst.gamma)) == 0


def test_derive_params_preconditions(field):
    f9 = field(3, 2)
    with pytest.raises(DegenerateParametersError):
        derive_params(f9, 2, 1, 1, 1)
    with pytest.raises(BadExponentError):
        derive_params(f9, 1, 1, 3, 7)
    with pytest.raises(NotRootOfUnityError):
        derive_params(f9, 2, 4, 3, 7)
    with pytest.raises(OutOfRangeError):
        derive_params(field(5, 1), 2, 1, 1, 2)


def test_check_conditions_examples(field):
    f9 = field(3, 2)
    v = check_conditions(f9, 2, 1, 3, 7)
    assert v.cond1 and v.cond2 and v.constructible
    v = check_conditions(f9, 2, 1, 1, 1)
    assert not v.cond1
    # beta + b*alpha = 0 forces the second condition false
    v = check_conditions(f9, 2, 1, 1, f9.neg(1))
    assert not v.cond2


def test_conditioned_count_f25(field):
    f25 = field(5, 2)
    b = family_b_values(f25)[0]
    assert len(constructible_pairs(f25, 2, b)) == 80  # p(p-1)^2


def test_build_pair_frozen_f9(field):
    f9 = field(3, 2)
    inst = derive_params(f9, 2, 1, 3, 7)
    f, h = build_pair(inst)
    assert f == [0, 7, 1, 3, 1, 0, 1]  # (x^3-x)^2 + t x^3 + (1+2t) x
    assert h == [0, 4, 2, 6, 2, 0, 2]  # 2(x^3-x)^2 + 2t x^3 + (1+t) x
    assert is_permutation(f9, f).is_ppr
    assert compose(f9, h, f) == [0, 1]
    assert compose(f9, f, h) == [0, 1]
    assert h == compositional_inverse(f9, f)


def test_build_pair_rejects_unconstructible(field):
    f9 = field(3, 2)
    inst = derive_params(f9, 2, 1, 0, 4)  # cond2 fails: (1+t)^2 = 2t != 1
    assert not check_conditions(f9, 2, 1, 0, 4).cond2
    with pytest.raises(NotConstructibleError):
        build_pair(inst)


@pytest.mark.parametrize("p", [3, 5])
def test_family_sweep_inverse_exact(field, p):
    ctx = field(p, 2)
    for m in range(2, p):
        for b in family_b_values(ctx):
            for alpha, beta in constructible_pairs(ctx, m, b):
                inst = derive_params(ctx, m, b, alpha, beta)
                f, h = build_pair(inst)
                assert f[-1] == 1 and f[0] == 0 and len(f) - 1 == m * p
                assert h == compositional_inverse(ctx, f)


def test_census_counts(field):
    f9 = field(3, 2)
    for b in family_b_values(f9):
        rep = census(f9, 2, b, "full")
        assert rep.conditioned == 12 and rep.full == 12 and rep.excess == 0
    f25 = field(5, 2)
    rep = census(f25, 3, 1, "full")
    assert rep.conditioned == 80
    assert rep.full == 180  # p(p-1)(2p-1)
    assert rep.excess == 100  # p^2(p-1)
    rep = census(f25, 2, 1, "conditioned")
    assert rep.full is None and rep.excess is None and rep.conditioned == 80


def test_census_invariant_under_b(field):
    f25 = field(5, 2)
    counts = {census(f25, 3, b, "full").full for b in family_b_values(f25)}
    assert counts == {180}


def test_lemma_suite_passes(field):
    for p in (3, 5):
        report = lemma_suite(field(p, 2))
        assert report.passed
        by_name = {c.name: c for c in report.checks}
        assert by_name["lemma22"].skipped > 0  # beta + b*alpha = 0 rows skipped
        assert by_name["lemma21"].checked + by_name["lemma21"].skipped == p**4


def test_inverse_instance_stays_constructible(field):
    f9 = field(3, 2)
    for b in family_b_values(f9):
        for alpha, beta in constructible_pairs(f9, 2, b):
            inst = derive_params(f9, 2, b, alpha, beta)
            f, h = build_pair(inst)
            alpha2 = f9.div(inst.gamma, inst.delta)
            beta2 = f9.div(inst.epsilon, inst.delta)
            assert check_conditions(f9, 2, inst.d, alpha2, beta2).constructible
            assert poly_scale(f9, f9.inv(inst.delta), h) == family_poly(
                f9, 2, inst.d, alpha2, beta2
            )


def test_shape_parameters_roundtrip(field):
    f25 = field(5, 2)
    for b in family_b_values(f25)[:2]:
        for alpha, beta in ((0, 1), (3, 17), (24, 0)):
            f = family_poly(f25, 3, b, alpha, beta)
            assert shape_parameters(f25, f) == (3, b, alpha, beta)
    assert shape_parameters(f25, [0, 1]) is None


def test_extra_pprs_close_under_inversion_f25(field):
    f25 = field(5, 2)
    checked = 0
    for b in family_b_values(f25):
        for alpha in range(25):
            for beta in range(25):
                if check_conditions(f25, 3, b, alpha, beta).constructible:
                    continue
                f = family_poly(f25, 3, b, alpha, beta)
                if not is_permutation(f25, f).is_pp:
                    continue
                checked += 1
                h = compositional_inverse(f25, f)
                ppr = poly_scale(f25, f25.inv(h[-1]), h)
                back = shape_parameters(f25, ppr)
                assert back is not None and back[0] == 3
    assert checked == 6 * 100  # p^2(p-1) extras per b
