"""Closed product forms for the partition functions.

The first type-A product and two of the type-B products hold only in the
corrected shapes checked here; the acceptance suite keeps the original shapes.
"""

from functools import reduce

import pytest

from staircase import ansatz, tableau_a, tableau_b, verify
from staircase.poly import ALPHA, BETA, DELTA, GAMMA, ONE, Q, U, Z, q_bracket

SUM = ALPHA + BETA + GAMMA + DELTA


def paired_product(n):
    return reduce(lambda acc, i: acc * (SUM + i * (ALPHA + GAMMA) * (BETA + DELTA)), range(n), ONE)


@pytest.mark.parametrize("n", range(1, 6))
def test_type_a_all_labels(n):
    assert tableau_a.partition_fn(n).subs(q=1, u=1) == paired_product(n)


@pytest.mark.parametrize("n", range(1, 6))
def test_type_a_two_label_products(n):
    assert tableau_a.partition_fn(n, "ad") == verify.product_ad(n)
    assert tableau_a.partition_fn(n, "bg") == verify.product_bg(n)


def test_type_a_original_shape_misses_a_monomial():
    # alpha^2 delta appears in the size-2 sum but not in the (alpha + delta)(beta + gamma) shape
    lhs = tableau_a.partition_fn(2).subs(q=1, u=1)
    alpha2_delta = (2, 0, 0, 1, 0, 0, 0)
    assert lhs.terms[alpha2_delta] == 1
    assert alpha2_delta not in ansatz.product_formula(2).terms


def bg_product(n):
    return (Z * Q * BETA + U * GAMMA) ** n * reduce(
        lambda acc, k: acc * (Q**k * U**k + U**k * q_bracket(k) * BETA), range(n), ONE
    )


def ad_product(n):
    return (Z * Q * ALPHA + U * DELTA) ** n * reduce(
        lambda acc, k: acc * (Q**k * U**k + Q**k * q_bracket(k) * DELTA), range(n), ONE
    )


@pytest.mark.parametrize("n", range(1, 5))
def test_type_b_products(n):
    assert tableau_b.partition_fn_b(n).subs(q=1, u=1) == verify.product_b_all(n)
    assert tableau_b.partition_fn_b(n, "bg") == bg_product(n)
    assert tableau_b.partition_fn_b(n, "ad") == ad_product(n)


def test_type_b_size_two_beta_gamma():
    # the k = 1 factor is qu + u beta, not qu + q beta
    total = tableau_b.partition_fn_b(2, "bg")
    assert total == (Z * Q * BETA + U * GAMMA) ** 2 * (Q * U + U * BETA)
    assert total != verify.product_b_bg(2)
