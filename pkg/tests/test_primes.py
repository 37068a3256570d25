import pytest

from eisenstein.core import (
    BETA,
    EInt,
    ONE,
    Parity,
    Unit,
    canonical_associate,
    divides,
    is_associate,
    lattice_points,
    parity,
)
from eisenstein.primes import (
    EVEN_PRIME,
    FactorBoundError,
    NotPrimeError,
    PrimeCategory,
    categorize_prime,
    factor,
    is_prime,
    is_rational_prime,
    norm_trial_factor,
    split_rational_prime,
)


def rational_primes(limit):
    return [n for n in range(2, limit) if is_rational_prime(n)]


class TestTrialFactor:
    def test_examples(self):
        assert norm_trial_factor(19) == [(19, 1)]
        assert norm_trial_factor(5184) == [(2, 6), (3, 4)]
        assert norm_trial_factor(1) == []

    def test_recompose(self):
        for n in range(1, 2000):
            product = 1
            for p, e in norm_trial_factor(n):
                product *= p**e
            assert product == n

    def test_bound_failure_is_loud(self):
        with pytest.raises(FactorBoundError):
            norm_trial_factor(101 * 103, bound=10)

    def test_large_prime_cofactor_within_certificate_range(self):
        # cofactor 9973 > bound 100 but <= bound**2, so it is provably prime
        assert norm_trial_factor(2 * 9973, bound=100) == [(2, 1), (9973, 1)]

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            norm_trial_factor(0)


class TestIsPrime:
    def test_examples(self):
        assert is_prime(EInt(5, 2))
        assert is_prime(EInt(2, 0))
        assert not is_prime(EInt(4, 0))

    def test_units_zero_and_split_norms(self):
        assert not is_prime(ONE)
        assert not is_prime(EInt(0, 0))
        assert not is_prime(EInt(7, 0))  # 7 = psi * conj(psi)

    def test_matches_brute_force_divisor_search(self):
        pts = [x for x in lattice_points(500) if x.norm() >= 1]
        by_norm = {}
        for d in pts:
            by_norm.setdefault(d.norm(), []).append(d)
        for x in pts:
            n = x.norm()
            if n <= 1:
                assert not is_prime(x)
                continue
            has_proper_divisor = any(
                divides(d, x)
                for nd, ds in by_norm.items()
                if 1 < nd < n and n % nd == 0
                for d in ds
            )
            assert is_prime(x) == (not has_proper_divisor), x


class TestCategories:
    def test_examples(self):
        assert categorize_prime(BETA) is PrimeCategory.EVEN_PRIME
        assert categorize_prime(EInt(5, 0)) is PrimeCategory.RATIONAL_INERT
        assert categorize_prime(EInt(3, 1)) is PrimeCategory.SPLIT_FACTOR

    def test_rejects_composites(self):
        with pytest.raises(NotPrimeError):
            categorize_prime(EInt(4, 0))

    def test_every_prime_in_exactly_one_category(self):
        for x in lattice_points(300):
            if is_prime(x):
                categorize_prime(x)  # must not raise


class TestSplitRationalPrime:
    def test_small_examples(self):
        psi7, bar7 = split_rational_prime(7)
        assert psi7 == EInt(3, 1)
        assert psi7.norm() == bar7.norm() == 7
        psi19, _ = split_rational_prime(19)
        assert psi19 == EInt(5, 2)
        psi13, _ = split_rational_prime(13)
        assert psi13.norm() == 13
        assert psi13 == EInt(4, 1)  # first hit of the ascending search

    def test_rejects_bad_inputs(self):
        with pytest.raises(ValueError):
            split_rational_prime(5)  # 5 = 2 (mod 3)
        with pytest.raises(ValueError):
            split_rational_prime(9)

    def test_split_correctness_below_500(self):
        for q in rational_primes(500):
            if q % 3 != 1:
                continue
            psi, psi_bar = split_rational_prime(q)
            assert psi.norm() == q == psi_bar.norm()
            assert is_associate(psi * psi_bar, EInt(q, 0))
            assert not is_associate(psi, psi_bar)
            assert canonical_associate(psi)[1] == psi
            assert canonical_associate(psi_bar)[1] == psi_bar


class TestFactor:
    def test_worked_example(self):
        fact = factor(EInt(48, -72))
        assert fact.unit is Unit.RHO_SQUARED
        assert fact.factors == (
            (EInt(2, 1), 2),
            (EInt(2, 0), 3),
            (EInt(5, 2), 1),
        )
        assert fact.recompose() == EInt(48, -72)

    def test_unit_input(self):
        fact = factor(EInt(1, 1))
        assert fact.unit is Unit.MINUS_RHO_SQUARED
        assert fact.factors == ()

    def test_three_is_an_even_prime_square(self):
        fact = factor(EInt(3, 0))
        assert fact.factors == ((EVEN_PRIME, 2),)
        assert fact.recompose() == EInt(3, 0)

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            factor(EInt(0, 0))

    def test_factors_are_canonical_sorted_primes(self):
        for x in lattice_points(400):
            if x.is_zero():
                continue
            fact = factor(x)
            keys = [(p.norm(), p.a, p.b) for p, _ in fact.factors]
            assert keys == sorted(keys)
            assert len(set(keys)) == len(keys)
            for p, e in fact.factors:
                assert e >= 1
                assert is_prime(p)
                assert canonical_associate(p)[1] == p

    def test_round_trip_to_norm_10000(self):
        for x in lattice_points(10_000):
            if not x.is_zero():
                assert factor(x).recompose() == x

    def test_even_iff_beta_in_factorization(self):
        for x in lattice_points(200):
            if x.is_zero():
                continue
            has_even_prime = any(p == EVEN_PRIME for p, _ in factor(x).factors)
            assert has_even_prime == (parity(x) is Parity.EVEN)
