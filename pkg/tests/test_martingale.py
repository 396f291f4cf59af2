import math
from fractions import Fraction
from functools import lru_cache
from itertools import product

import pytest
from hypothesis import given, strategies as st

from fllball.analytic import expected_ball_size, f_mn, f_n
from fllball.errors import DomainTooSmall, IndexOutOfRange, NotBinary, PrefixLengthMismatch, SpaceTooLarge
from fllball.martingale import (
    azuma_bound,
    f_partition_binary,
    f_partition_mary_bounds,
    g_mn,
    increment_caps,
    martingale_trace,
    tail_bound,
    z_binary,
    z_bruteforce,
    z_increment_binary,
    z_mary_bounds,
)
from fllball.words import all_words, make_word, parse_word


def mean_f(n, m, length, binary=False):
    """Mean of f over every word of the given length, ambient length n."""
    words = list(all_words(length, m))
    f = (lambda w: f_n(w, n)) if binary else (lambda w: f_mn(w, n))
    return sum(f(w) for w in words) / len(words)


class TestBinaryClosedForm:
    def test_z0(self):
        assert z_binary(None, 0, 4) == Fraction(47, 8)
        assert z_binary((), 0, 4) == Fraction(4 * 4, 2) - 4 + 2 - Fraction(1, 8)

    def test_z0_is_mean(self):
        for n in range(1, 9):
            assert z_binary(None, 0, n) == mean_f(n, 2, n, binary=True)
            assert z_bruteforce(None, n, 2, "binary_f") == z_binary(None, 0, n)

    def test_zn_is_f(self):
        for w in all_words(7, 2):
            assert z_binary(w, 7, 7) == f_n(w, 7)

    def test_z1_equals_z0(self):
        for n in range(1, 12):
            for s in (0, 1):
                assert z_binary((s,), 1, n) == z_binary(None, 0, n)

    @pytest.mark.parametrize("n", range(1, 9))
    def test_equals_bruteforce(self, n):
        for i in range(n + 1):
            for prefix in product(range(2), repeat=i):
                assert z_binary(prefix, i, n) == z_bruteforce(prefix, n, 2, "binary_f")

    def test_prefix_length_mismatch(self):
        with pytest.raises(PrefixLengthMismatch):
            z_binary((0, 1), 3, 5)

    def test_not_binary(self):
        with pytest.raises(NotBinary):
            z_binary(parse_word("01", 3), 2, 4)


class TestBinaryIncrements:
    def test_bounded_by_half_n(self):
        n = 10
        for w in all_words(n, 2):
            for i in range(2, n + 1):
                assert abs(z_increment_binary(w, i)) <= Fraction(n, 2)

    def test_consistent_with_closed_form(self):
        for n in range(2, 9):
            for w in all_words(n, 2):
                for i in range(2, n + 1):
                    diff = z_binary(w.symbols[:i], i, n) - z_binary(w.symbols[: i - 1], i - 1, n)
                    assert z_increment_binary(w, i) == diff

    def test_all_zero_word(self):
        n = 9
        w = make_word([0] * n, 2)
        for i in range(2, n + 1):
            assert z_increment_binary(w, i) == -Fraction(n, 2) + (1 - Fraction(1, 2 ** (n - i + 1)))

    def test_index_range(self):
        with pytest.raises(IndexOutOfRange):
            z_increment_binary(parse_word("0101", 2), 1)


class TestBinaryPartition:
    def test_identity_exhaustive(self):
        for n_ambient in (3, 9, 20):
            for y in all_words(9, 2):
                for i in range(1, 9):
                    assert f_partition_binary(y, i, n_ambient) == f_n(y, n_ambient)

    def test_last_split_differences(self):
        n = 11
        for y in all_words(7, 2):
            diff = f_n(y, n) - f_n(y.segment(1, 6), n)
            if y[5] == y[6]:
                assert diff == Fraction(-1, 2)
            else:
                assert diff == n - Fraction(1, 2) - y.segment(1, 6).profile().t

    def test_two_symbols(self):
        n = 6
        assert f_n(parse_word("01", 2), n) == (n - Fraction(1, 2)) * 2 - 1


class TestMaryPartition:
    def test_sandwich_exhaustive(self):
        for n_ambient in (3, 7):
            for y in all_words(7, 3):
                f = f_mn(y, n_ambient)
                for i in range(1, 7):
                    lo, hi = f_partition_mary_bounds(y, i, n_ambient)
                    assert lo <= f <= hi
                    if y[i - 1] == y[i]:
                        assert lo == hi == f

    def test_unit_overlap_is_exact_at_lower_end(self):
        y = parse_word("012", 3)
        lo, hi = f_partition_mary_bounds(y, 1, 3)
        parts = f_mn(y.segment(1, 1), 3) + f_mn(y.segment(2, 3), 3)
        # straddling segment "01" splits into l = r = 1, so f = sum + 1 - 1
        assert f_mn(y, 3) == parts == hi
        assert lo == parts + 1 - 1 * 2

    def test_domain(self):
        with pytest.raises(DomainTooSmall):
            f_partition_mary_bounds(parse_word("010", 2), 1, 3)
        with pytest.raises(DomainTooSmall):
            f_partition_mary_bounds(parse_word("01", 3), 1, 3)


class TestG:
    @pytest.mark.parametrize("n", range(2, 9))
    def test_matches_exhaustive_suffix_mean(self, n):
        for i in range(n):
            assert g_mn(i, n, 3) == mean_f(n, 3, n - i)

    def test_binary_too(self):
        for n in range(2, 9):
            for i in range(n):
                assert g_mn(i, n, 2) == mean_f(n, 2, n - i)

    def test_z0_closed_form(self):
        for n in range(2, 12):
            for m in range(2, 7):
                z0 = (
                    n * n * (m + Fraction(1, m) - 2)
                    - Fraction(n, m)
                    - Fraction(1, m**n * (m - 1))
                    + Fraction(1, m - 1)
                    - Fraction(1, m**n)
                )
                assert g_mn(0, n, m) == z0
                assert z0 + 2 == expected_ball_size(n, m)

    def test_index_range(self):
        with pytest.raises(IndexOutOfRange):
            g_mn(5, 5, 3)


class TestMaryMartingale:
    @pytest.mark.parametrize("n,m", [(4, 3), (6, 3), (4, 4), (4, 5)])
    def test_martingale_property(self, n, m):
        @lru_cache(maxsize=None)
        def z(prefix):
            return z_bruteforce(prefix, n, m)

        for i in range(n):
            for prefix in product(range(m), repeat=i):
                children = [z(prefix + (s,)) for s in range(m)]
                assert sum(children) / m == z(prefix)

    def test_sandwich_and_caps(self):
        n, m = 6, 3
        cap = n * (m + Fraction(1, m))

        @lru_cache(maxsize=None)
        def z(prefix):
            return z_bruteforce(prefix, n, m)

        for w in all_words(n, m):
            x = w.symbols
            for i in range(1, n + 1):
                lo, hi = z_mary_bounds(x[:i], i, n, m)
                assert lo <= z(x[:i]) <= hi
                assert abs(z(x[:i]) - z(x[: i - 1])) <= cap

    def test_endpoints_exact(self):
        n, m = 5, 4
        for s in range(m):
            lo, hi = z_mary_bounds((s,), 1, n, m)
            assert lo == hi == z_bruteforce((s,), n, m) == z_bruteforce(None, n, m)
        w = parse_word("01230", 4)
        assert z_mary_bounds(w, 5, 5) == (f_mn(w, 5), f_mn(w, 5))

    def test_bruteforce_guard(self):
        with pytest.raises(SpaceTooLarge):
            z_bruteforce(None, 30, 3)

    def test_bruteforce_target(self):
        with pytest.raises(NotBinary):
            z_bruteforce(None, 3, 3, "binary_f")


class TestTrace:
    def test_binary(self):
        w = parse_word("0110", 2)
        tr = martingale_trace(w)
        assert len(tr.z_values) == 5
        assert tr.z_values[0] == Fraction(47, 8)
        assert tr.z_values[1] == tr.z_values[0]
        assert tr.z_values[-1] == f_n(w, 4)
        assert tr.increments[1:] == tuple(z_increment_binary(w, i) for i in range(2, 5))
        assert martingale_trace(w, "bruteforce") == tr

    def test_csv(self):
        lines = martingale_trace(parse_word("0110", 2)).to_csv().splitlines()
        assert lines[0] == "i,Z_i,increment"
        assert lines[1] == "0,47/8,"
        assert lines[2] == "1,47/8,0"

    def test_mary_needs_bruteforce(self):
        with pytest.raises(NotBinary):
            martingale_trace(parse_word("012", 3))
        tr = martingale_trace(parse_word("0121", 3), "bruteforce")
        assert tr.z_values[-1] == f_mn(parse_word("0121", 3), 4)


class TestAzuma:
    def test_binary_bound(self):
        for n in (4, 10, 100):
            for c in (0.3, 1.0, 2.0):
                caps = [0.0] + [n / 2] * (n - 1)
                assert azuma_bound(caps, c * n * math.sqrt(n - 1)) == pytest.approx(math.exp(-2 * c * c), rel=1e-12)

    def test_mary_bound(self):
        n, m, c = 50, 4, 1.5
        caps = increment_caps(n, m)
        lam = c * (m + 1 / m) * n * math.sqrt(n - 1)
        assert azuma_bound(caps, lam) == pytest.approx(math.exp(-c * c / 2), rel=1e-12)

    def test_zero_lambda(self):
        assert azuma_bound([1.0, 2.0], 0.0) == 1.0

    def test_zero_caps(self):
        assert azuma_bound([0.0, 0.0], 1.0) == 0.0

    @given(
        st.lists(st.floats(0, 100), min_size=1, max_size=20),
        st.floats(0, 1e4),
        st.floats(0, 1e4),
    )
    def test_monotone_and_in_range(self, caps, a, b):
        lo, hi = sorted((a, b))
        pa, pb = azuma_bound(caps, lo), azuma_bound(caps, hi)
        assert 0.0 <= pb <= pa <= 1.0


class TestTailBound:
    def test_binary(self):
        tb = tail_bound(100, 2, 1)
        assert tb.probability_bound == pytest.approx(0.1353352832, rel=1e-9)
        assert tb.lam == pytest.approx(100 * math.sqrt(99))
        assert tb.render() == "lambda=994.99 bound=0.13534"

    def test_ternary(self):
        tb = tail_bound(100, 3, 2)
        assert tb.probability_bound == pytest.approx(math.exp(-2))
        assert tb.lam == pytest.approx(2 * (10 / 3) * 100 * math.sqrt(99))

    def test_c_zero(self):
        assert tail_bound(10, 5, 0).probability_bound == 1.0

    def test_agrees_with_azuma(self):
        for m in (2, 3, 5):
            tb = tail_bound(40, m, 0.7)
            assert azuma_bound(increment_caps(40, m), tb.lam) == pytest.approx(tb.probability_bound, rel=1e-12)

    def test_domain(self):
        with pytest.raises(DomainTooSmall):
            tail_bound(3, 2, 1.0)
