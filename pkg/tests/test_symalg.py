import random

import pytest

from conftest import gauss, gauss_assignment
from elemsym import esp, symalg
from elemsym.scalar import ExactComplex
from elemsym.symalg import (
    GenPoly,
    VarSet,
    alpha_gen,
    eval_extended,
    eval_genpoly,
    format_genpoly,
    generator_partition,
    gp_add,
    gp_mul,
    merge_varsets,
    parse_genpoly,
    phi,
    shift_U,
    split_by_top_generator,
)


def rand_monomial(rng, n, max_degree):
    deg = rng.randint(0, max_degree)
    return tuple(sorted(rng.randint(1, n) for _ in range(deg)))


def rand_genpoly(rng, n, max_degree=3, max_terms=4, coeff_bound=5):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        mono = rand_monomial(rng, n, max_degree)
        terms[mono] = terms.get(mono, ExactComplex(0)) + gauss(rng, coeff_bound)
    return GenPoly(n, terms)


# --- ring operations ---------------------------------------------------


def test_add_collects_like_terms():
    e1 = GenPoly.gen(3, 1)
    assert gp_add(e1, e1) == GenPoly(3, {(1,): 2})


def test_add_cancellation_drops_term():
    p = GenPoly(3, {(1,): 1, (2,): 1})
    q = GenPoly(3, {(2,): -1})
    assert gp_add(p, q) == GenPoly.gen(3, 1)


def test_add_constant_and_square():
    p = GenPoly.const(3, 3)
    q = GenPoly.monomial(3, (2, 2))
    assert gp_add(p, q) == GenPoly(3, {(): 3, (2, 2): 1})


def test_mul_monomials_merge_multisets():
    assert gp_mul(GenPoly.gen(3, 1), GenPoly.gen(3, 2)) == GenPoly.monomial(3, (1, 2))


def test_mul_difference_of_squares():
    one_plus = GenPoly(2, {(): 1, (1,): 1})
    one_minus = GenPoly(2, {(): 1, (1,): -1})
    assert one_plus * one_minus == GenPoly(2, {(): 1, (1, 1): -1})


def test_mul_matches_pointwise_evaluation():
    rng = random.Random(41)
    for _ in range(30):
        n = rng.randint(1, 5)
        p = rand_genpoly(rng, n)
        q = rand_genpoly(rng, n)
        xs = gauss_assignment(rng, n, bound=4)
        assert eval_genpoly(p * q, xs) == eval_genpoly(p, xs) * eval_genpoly(q, xs)


def test_ambient_mismatch_raises():
    with pytest.raises(ValueError):
        GenPoly.gen(2, 1) + GenPoly.gen(3, 1)
    with pytest.raises(ValueError):
        GenPoly.gen(2, 1) * GenPoly.gen(3, 1)


def test_genpoly_validation():
    with pytest.raises(ValueError):
        GenPoly(2, {(3,): 1})
    with pytest.raises(ValueError):
        GenPoly.gen(2, 0)
    # duplicate spellings of one monomial accumulate
    assert GenPoly(3, {(1, 2): 1, (2, 1): 1}) == GenPoly(3, {(1, 2): 2})


# --- shift -------------------------------------------------------------


def test_shift_first_generator_becomes_identity():
    assert shift_U(GenPoly.gen(3, 1)) == GenPoly.const(3, 1)


def test_shift_kills_constants():
    assert shift_U(GenPoly.const(3, 7)) == GenPoly.zero(3)


def test_shift_product_rule():
    p = GenPoly(3, {(2, 3): 1, (): 5})
    assert shift_U(p) == GenPoly.monomial(3, (1, 2))


def test_shift_steps_generators_down():
    for n in range(2, 7):
        for k in range(2, n + 1):
            assert shift_U(GenPoly.gen(n, k)) == GenPoly.gen(n, k - 1)


def test_shift_random_monomials():
    rng = random.Random(42)
    for _ in range(100):
        n = rng.randint(1, 6)
        mono = rand_monomial(rng, n, 4)
        c = gauss(rng, 5)
        got = shift_U(GenPoly.monomial(n, mono, c))
        if not mono:
            assert got == GenPoly.zero(n)
        else:
            expect = tuple(sorted(j - 1 for j in mono if j > 1))
            assert got == GenPoly.monomial(n, expect, c)


def test_shift_is_linear():
    rng = random.Random(43)
    for _ in range(30):
        n = rng.randint(1, 5)
        p = rand_genpoly(rng, n)
        q = rand_genpoly(rng, n)
        assert shift_U(p + q) == shift_U(p) + shift_U(q)


def test_shift_multiplicative_on_nonconstant_monomials():
    rng = random.Random(44)
    for _ in range(50):
        n = rng.randint(1, 6)
        m1 = rand_monomial(rng, n, 3)
        m2 = rand_monomial(rng, n, 3)
        if not m1 or not m2:
            continue
        p, q = GenPoly.monomial(n, m1), GenPoly.monomial(n, m2)
        assert shift_U(p * q) == shift_U(p) * shift_U(q)


# --- one-variable extension --------------------------------------------


def test_alpha_small_cases():
    assert alpha_gen(1, 3) == GenPoly(4, {(1,): 1, (4,): 1})
    assert alpha_gen(2, 3) == GenPoly(4, {(2,): 1, (1, 4): 1})
    assert alpha_gen(3, 3) == GenPoly(4, {(3,): 1, (2, 4): 1})


def test_alpha_range_check():
    with pytest.raises(ValueError):
        alpha_gen(0, 3)
    with pytest.raises(ValueError):
        alpha_gen(4, 3)


def test_alpha_images_pairwise_distinct():
    for n in range(1, 9):
        images = [alpha_gen(k, n) for k in range(1, n + 1)]
        for a in range(len(images)):
            for b in range(a + 1, len(images)):
                assert images[a] != images[b]


def test_alpha_evaluates_to_extended_values():
    rng = random.Random(45)
    for n in range(1, 8):
        for _ in range(5):
            ext = gauss_assignment(rng, n + 1)
            for k in range(1, n + 1):
                assert eval_extended(alpha_gen(k, n), ext) == esp.direct_eps(ext, k)


def test_phi_fixes_constants():
    assert phi(GenPoly.const(2, 1)) == GenPoly.const(3, 1)
    assert phi(GenPoly.zero(4)) == GenPoly.zero(5)


def test_phi_squares_the_image():
    got = phi(GenPoly.monomial(2, (1, 1)))
    img = alpha_gen(1, 2)
    assert got == img * img


def test_phi_is_homomorphism():
    rng = random.Random(46)
    for _ in range(50):
        n = rng.randint(1, 4)
        p = rand_genpoly(rng, n)
        q = rand_genpoly(rng, n)
        assert phi(p + q) == phi(p) + phi(q)
        assert phi(p * q) == phi(p) * phi(q)


def _monomials_up_to(n, max_degree):
    out = [()]
    level = [()]
    for _ in range(max_degree):
        nxt = []
        for mono in level:
            lo = mono[-1] if mono else 1
            for j in range(lo, n + 1):
                nxt.append(mono + (j,))
        out.extend(nxt)
        level = nxt
    return out


def test_phi_injective_on_small_monomials():
    for n in range(1, 5):
        seen = {}
        for mono in _monomials_up_to(n, 3):
            img = phi(GenPoly.monomial(n, mono))
            key = tuple(sorted(img.terms.items()))
            assert key not in seen, f"{mono} collides with {seen[key]}"
            seen[key] = mono


def test_phi_numeric_consistency():
    # extension output evaluated with split semantics equals the original
    # polynomial read against the symmetric values of the extended set
    rng = random.Random(47)
    for _ in range(30):
        n = rng.randint(1, 5)
        p = rand_genpoly(rng, n)
        ext = gauss_assignment(rng, n + 1, bound=4)
        eps_vals = esp.build_table(ext).last_row()
        total = None
        for mono, c in p.terms.items():
            acc = ExactComplex(c.re, c.im)
            for j in mono:
                acc = acc * eps_vals[j - 1]
            total = acc if total is None else total + acc
        total = total if total is not None else ExactComplex(0)
        assert eval_extended(phi(p), ext) == total


# --- partition and split -----------------------------------------------


def test_partition_two_variable_case():
    image, complement = generator_partition(1)
    assert image == [GenPoly(2, {(1,): 1, (2,): 1})]
    assert complement == GenPoly.monomial(2, (1, 2))
    xs = esp.Assignment([ExactComplex(3, 1), ExactComplex(-2, 4)])
    assert eval_extended(image[0], xs) == ExactComplex(3, 1) + ExactComplex(-2, 4)
    assert eval_extended(complement, xs) == ExactComplex(3, 1) * ExactComplex(-2, 4)


def test_partition_complement_is_full_product():
    rng = random.Random(48)
    _, complement = generator_partition(3)
    for _ in range(10):
        ext = gauss_assignment(rng, 4)
        prod = ext.values[0]
        for v in ext.values[1:]:
            prod = prod * v
        assert eval_extended(complement, ext) == prod


def test_partition_matches_direct_values():
    rng = random.Random(49)
    for n in range(1, 7):
        image, complement = generator_partition(n)
        for _ in range(5):
            ext = gauss_assignment(rng, n + 1)
            for k, gp in enumerate(image, start=1):
                assert eval_extended(gp, ext) == esp.direct_eps(ext, k)
            assert eval_extended(complement, ext) == esp.direct_eps(ext, n + 1)


def test_partition_invariant_under_omitted_index():
    rng = random.Random(50)
    for n in range(1, 7):
        image, complement = generator_partition(n)
        for _ in range(3):
            full = gauss_assignment(rng, n + 1)
            for j in range(1, n + 2):
                ext = esp.Assignment(full.omit(j) + (full.values[j - 1],))
                for k, gp in enumerate(image, start=1):
                    assert eval_extended(gp, ext) == esp.direct_eps(full, k)
                assert eval_extended(complement, ext) == esp.direct_eps(full, n + 1)


def test_split_simple_cases():
    p = GenPoly(2, {(1,): 1, (2,): 1})
    assert split_by_top_generator(p) == (GenPoly.gen(2, 1), GenPoly.gen(2, 2))
    assert split_by_top_generator(GenPoly.const(3, 3)) == (GenPoly.const(3, 3), GenPoly.zero(3))


def test_split_alpha_times_top_is_all_top():
    p = alpha_gen(2, 3) * GenPoly.gen(4, 4)
    p0, p1 = split_by_top_generator(p)
    assert p0 == GenPoly.zero(4)
    assert p1 == p


def test_split_soundness_random():
    rng = random.Random(51)
    for _ in range(50):
        n = rng.randint(2, 6)
        p = rand_genpoly(rng, n, max_degree=4, max_terms=6)
        p0, p1 = split_by_top_generator(p)
        assert p0 + p1 == p
        assert all(n not in m for m in p0.terms)
        assert all(n in m for m in p1.terms)


# --- variable sets ------------------------------------------------------


def test_merge_disjoint():
    assert merge_varsets(VarSet(["x1", "x2"]), VarSet(["y"])) == VarSet(["x1", "x2", "y"])


def test_merge_shared_names_counted_once():
    assert merge_varsets(VarSet(["x1", "x2"]), VarSet(["x2", "y"])) == VarSet(["x1", "x2", "y"])


def test_merge_full_overlap():
    assert merge_varsets(VarSet(["x"]), VarSet(["x"])) == VarSet(["x"])


def test_varset_rejects_duplicates():
    with pytest.raises(ValueError):
        VarSet(["x", "x"])


# --- evaluation ---------------------------------------------------------


def test_eval_first_generator():
    xs = esp.Assignment([ExactComplex(1), ExactComplex(2), ExactComplex(3)])
    assert eval_genpoly(GenPoly.gen(3, 1), xs) == ExactComplex(6)


def test_eval_hand_combination():
    xs = esp.Assignment([ExactComplex(1)] * 3)
    p = GenPoly(3, {(1, 2): 1, (3,): -1})
    assert eval_genpoly(p, xs) == ExactComplex(8)


def test_eval_constant():
    xs = gauss_assignment(random.Random(52), 4)
    assert eval_genpoly(GenPoly.const(4, 1), xs) == ExactComplex(1)


def test_eval_length_mismatch():
    xs = esp.Assignment([ExactComplex(1)] * 2)
    with pytest.raises(ValueError):
        eval_genpoly(GenPoly.gen(3, 1), xs)
    with pytest.raises(ValueError):
        eval_extended(GenPoly.gen(3, 1), xs)


# --- text form ----------------------------------------------------------


def test_format_sample():
    p = GenPoly(3, {(): 3, (1, 2): 2, (3, 3): -1})
    assert format_genpoly(p) == "3 + 2*e1*e2 - e3^2"


def test_format_mixed_and_imaginary_coefficients():
    p = GenPoly(2, {(1,): ExactComplex(-2, 1), (2,): ExactComplex(0, -3), (): ExactComplex(0, 1)})
    assert format_genpoly(p) == "i + (-2+i)*e1 - 3i*e2"
    assert format_genpoly(GenPoly(2, {(1,): ExactComplex(2, 5)})) == "(2+5i)*e1"


def test_format_zero():
    assert format_genpoly(GenPoly.zero(3)) == "0"


def test_parse_round_trip_fixed():
    for text in ["3 + 2*e1*e2 - e3^2", "e1 + e4", "0", "-e1 + 5", "(1-2i)*e2^3 - i*e1"]:
        p = parse_genpoly(text)
        assert parse_genpoly(format_genpoly(p), p.n) == p


def test_parse_round_trip_random():
    rng = random.Random(53)
    for _ in range(100):
        n = rng.randint(1, 5)
        p = rand_genpoly(rng, n, max_degree=4, max_terms=5)
        assert parse_genpoly(format_genpoly(p), n) == p


def test_parse_validation():
    with pytest.raises(ValueError):
        parse_genpoly("e1 +")
    with pytest.raises(ValueError):
        parse_genpoly("e0")
    with pytest.raises(ValueError):
        parse_genpoly("e5", n=3)
    with pytest.raises(ValueError):
        parse_genpoly("2 ** e1")
