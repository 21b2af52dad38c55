import numpy as np
import pytest

from modframe.algebra import AlgebraElement, Spectrum, leq
from modframe.errors import DimensionError, OrderError, PositivityError


def elem(*values):
    return AlgebraElement(np.array(values, dtype=complex))


class TestArithmetic:
    def test_add_pointwise(self):
        assert np.array_equal((elem(1, 2) + elem(3, 4)).values, [4, 6])

    def test_add_zero_identity(self):
        a = elem(1 + 2j, -0.5)
        zero = AlgebraElement.zero(a.spectrum)
        assert (a + zero) == a

    def test_add_cancellation(self):
        assert np.array_equal((elem(1j) + elem(-1j)).values, [0])

    def test_add_spectrum_mismatch(self):
        with pytest.raises(DimensionError):
            elem(1, 2) + elem(1)

    def test_mul_pointwise(self):
        assert np.array_equal((elem(2, 3) * elem(5, 7)).values, [10, 21])

    def test_mul_unit_identity(self):
        a = elem(2 - 1j, 0.25)
        assert (a * AlgebraElement.unit(a.spectrum)) == a

    def test_mul_i_squared(self):
        assert np.array_equal((elem(1j, 1) * elem(1j, 1)).values, [-1, 1])

    def test_mul_commutes_bit_identical(self, rng):
        for _ in range(30):
            a = AlgebraElement(rng.normal(size=4) + 1j * rng.normal(size=4))
            b = AlgebraElement(rng.normal(size=4) + 1j * rng.normal(size=4))
            assert (a * b) == (b * a)

    def test_scalar_ops(self):
        a = elem(1, 2)
        assert np.array_equal((2 * a).values, [2, 4])
        assert np.array_equal((a / 2).values, [0.5, 1])
        assert np.array_equal((a - 1).values, [0, 1])


class TestInvolutionAndNorm:
    def test_conj_pointwise(self):
        assert np.array_equal(elem(1 + 2j).conj().values, [1 - 2j])

    def test_conj_fixes_real(self):
        a = elem(3, -2)
        assert a.conj() == a

    def test_conj_swaps_i(self):
        assert np.array_equal(elem(1j, -1j).conj().values, [-1j, 1j])

    def test_conj_involutive_exactly(self, rng):
        a = AlgebraElement(rng.normal(size=5) + 1j * rng.normal(size=5))
        assert a.conj().conj() == a

    def test_norm_examples(self):
        assert elem(3 + 4j, 1).norm() == 5
        s = Spectrum(3)
        assert AlgebraElement.unit(s).norm() == 1
        assert AlgebraElement.zero(s).norm() == 0

    def test_cstar_identity(self, rng):
        for _ in range(50):
            a = AlgebraElement(rng.normal(size=6) + 1j * rng.normal(size=6))
            lhs = (a * a.conj()).norm()
            assert lhs == pytest.approx(a.norm() ** 2, rel=1e-12)

    def test_norm_submultiplicative(self, rng):
        for _ in range(50):
            a = AlgebraElement(rng.normal(size=6) + 1j * rng.normal(size=6))
            b = AlgebraElement(rng.normal(size=6) + 1j * rng.normal(size=6))
            assert (a * b).norm() <= a.norm() * b.norm() + 1e-12

    def test_conj_isometric_exactly(self, rng):
        a = AlgebraElement(rng.normal(size=6) + 1j * rng.normal(size=6))
        assert a.conj().norm() == a.norm()


class TestOrder:
    def test_positive_examples(self):
        assert elem(0.5, 0.0).is_positive(1e-10).ok
        check = elem(-0.1).is_positive(1e-10)
        assert not check.ok and check.worst_point == 0
        assert elem(1e-12j).is_positive(1e-10).ok

    def test_positive_witness_is_worst_point(self):
        check = elem(1.0, -0.3, -0.7).is_positive(1e-10)
        assert not check.ok
        assert check.worst_point == 2
        assert check.worst_value == -0.7

    def test_leq_examples(self):
        assert leq(elem(1, 2), elem(2, 2))
        assert not leq(elem(1, 3), elem(2, 2))
        a = elem(0.4, -1.5)
        assert leq(a, a)

    def test_leq_rejects_non_self_adjoint(self):
        with pytest.raises(OrderError):
            leq(elem(1j), elem(1))

    def test_positive_implies_above_zero(self, rng):
        for _ in range(20):
            a = AlgebraElement(rng.random(size=4))
            assert leq(AlgebraElement.zero(a.spectrum), a)


class TestSqrtAndPowers:
    def test_sqrt_examples(self):
        assert np.array_equal(elem(4, 9).sqrt().values, [2, 3])
        unit = AlgebraElement.unit(Spectrum(2))
        assert unit.sqrt() == unit
        assert np.array_equal(elem(0.25).sqrt().values, [0.5])

    def test_sqrt_clamps_roundoff(self):
        a = elem(-1e-12)
        assert np.array_equal(a.sqrt().values, [0])

    def test_sqrt_rejects_negative_with_witness(self):
        with pytest.raises(PositivityError) as info:
            elem(1.0, -0.25).sqrt()
        assert info.value.point == 1

    def test_sqrt_squares_back(self, rng):
        for _ in range(30):
            a = AlgebraElement(rng.random(size=5) * 3)
            r = a.sqrt()
            assert r.is_positive().ok
            assert np.max(np.abs((r * r).values - a.values)) < 1e-10

    def test_int_power_examples(self):
        assert np.array_equal(elem(2).int_power(3).values, [8])
        unit = AlgebraElement.unit(Spectrum(2))
        assert unit.int_power(5) == unit
        assert np.array_equal((elem(1j) ** 2).values, [-1])

    def test_int_power_rejects_bad_exponent(self):
        with pytest.raises(ValueError):
            elem(2).int_power(0)
