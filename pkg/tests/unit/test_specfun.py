import math

import numpy as np
import pytest
from scipy import special

from src.core.errors import DomainError, NumericOverflowError
from src.services.specfun import beta, binomial, laguerre, laguerre_all, laguerre_columns, log_beta, log_gamma


def test_log_gamma_matches_scipy():
    for x in (0.5, 1.0, 2.5, 17.3, 250.0):
        assert log_gamma(x) == pytest.approx(special.gammaln(x), rel=1e-14)


def test_log_gamma_rejects_non_positive():
    with pytest.raises(DomainError):
        log_gamma(0.0)
    with pytest.raises(DomainError):
        log_gamma(-1.5)


def test_beta_is_symmetric_and_matches_scipy():
    assert beta(2.5, 4.0) == beta(4.0, 2.5)
    assert beta(2.5, 4.0) == pytest.approx(special.beta(2.5, 4.0), rel=1e-13)
    assert log_beta(3.0, 7.5) == pytest.approx(math.log(special.beta(3.0, 7.5)), rel=1e-13)


def test_beta_rejects_non_positive_arguments():
    with pytest.raises(DomainError):
        beta(-1.0, 3.0)


def test_binomial():
    assert binomial(5, 2) == math.comb(5, 2) == 10
    assert binomial(4, 0) == 1
    with pytest.raises(DomainError):
        binomial(3, 4)


@pytest.mark.parametrize("alpha", [0.0, 1.5, 3.0])
@pytest.mark.parametrize("x", [-12.5, -0.3, 0.0, 0.7, 9.0])
def test_laguerre_table_matches_scipy(alpha, x):
    table = laguerre_all(12, alpha, x)
    expected = [special.eval_genlaguerre(n, alpha, x) for n in range(13)]
    np.testing.assert_allclose(table.values, expected, rtol=1e-11, atol=1e-9)


def test_laguerre_explicit_series():
    # L_2^a(x) = (a+1)(a+2)/2 - (a+2) x + x^2/2
    a, x = 1.5, np.array([0.3, 2.0, -4.0])
    expected = (a + 1) * (a + 2) / 2 - (a + 2) * x + x**2 / 2
    np.testing.assert_allclose(laguerre(2, a, x), expected, rtol=1e-14)


def test_laguerre_negative_degree_is_zero():
    np.testing.assert_array_equal(laguerre(-1, 2.0, np.array([0.5, 1.0])), [0.0, 0.0])


def test_laguerre_columns_shape():
    x = np.linspace(0.0, 3.0, 7)
    assert laguerre_columns(4, 0.5, x).shape == (5, 7)


def test_laguerre_overflow_is_reported():
    with pytest.raises(NumericOverflowError):
        laguerre_columns(300, 0.5, np.array([-1e300]))


@pytest.mark.parametrize("alpha", [0.5, 1.0, 2.5, 5.0, 10.0])
def test_laguerre_recurrence_residual_sweep(alpha):
    for x in np.linspace(-50.0, 0.0, 11):
        assert laguerre_all(50, alpha, x).recurrence_residual() <= 1e-12
    # oscillatory side: measured against the recurrence terms
    for x in np.linspace(0.5, 50.0, 12):
        assert laguerre_all(50, alpha, x).recurrence_residual(relative_to="terms") <= 1e-12


def test_recurrence_residual_sees_a_corrupted_entry():
    table = laguerre_all(10, 1.5, -3.0)
    values = table.values.copy()
    values[6] *= 1 + 1e-6
    corrupted = type(table)(alpha=table.alpha, n_max=table.n_max, x=table.x, values=values)
    assert corrupted.recurrence_residual() > 1e-8
    with pytest.raises(ValueError):
        table.recurrence_residual(relative_to="norm")
