import mpmath as mp
import pytest

from regfree.bounds import (
    DomainError,
    NEG_INF,
    frac_chain,
    parse_real,
    reg_chain,
    union_bounds,
)


LOG_N_40 = mp.exp(40)  # n = e^(e^40), the regime's reference point


class TestParseReal:
    def test_plain_number(self):
        assert parse_real("1000") == 1000

    def test_single_power(self):
        assert mp.almosteq(parse_real("2^10"), 1024)

    def test_tower(self):
        assert mp.almosteq(mp.log(mp.log(parse_real("e^e^40"))), 40)

    def test_parens_tolerated(self):
        assert mp.almosteq(parse_real("e^(e^2)"), mp.exp(mp.exp(2)))


class TestRegChain:
    def test_holds_in_regime(self):
        for i in (2, 3):
            for x in (1, 10, 100):
                rep = reg_chain(log_n=LOG_N_40, i=i, x=x)
                assert rep.all_hold, (i, x, rep.first_failure)
                assert len(rep.steps) == 6

    def test_identity_step_is_tight(self):
        rep = reg_chain(log_n=LOG_N_40, i=2, x=10)
        s = rep.steps[4]
        assert s.is_identity
        assert abs(s.left - s.right) <= abs(s.left) * mp.mpf(10) ** -40

    def test_neg_inf_when_count_vanishes(self):
        # x^2/2 < m makes the second binomial an empty count at tiny scales;
        # engineered via x = 1, m = 2: binom(1/2, 2) has factor <= 0
        rep = reg_chain(log_n=LOG_N_40, i=2, x=1)
        assert rep.steps[0].left == NEG_INF
        assert rep.steps[0].holds

    def test_below_regime_reports_failure_honestly(self):
        rep = reg_chain(log_n=mp.exp(10), i=2, x=100)
        assert not rep.all_hold
        assert rep.steps[rep.first_failure].label == "x_at_most_1000Bi"

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            reg_chain(log_n=LOG_N_40, i=1, x=10)  # i must be >= 2
        with pytest.raises(DomainError):
            reg_chain(log_n=LOG_N_40, i=7, x=10)  # i > C+1
        with pytest.raises(DomainError):
            reg_chain(log_n=LOG_N_40, i=2, x=0)
        with pytest.raises(DomainError):
            reg_chain(n=100, log_n=LOG_N_40, i=2, x=1)

    def test_monotone_along_the_chain(self):
        # the displayed quantities are a chain: each step's right side is the
        # next step's left side
        rep = reg_chain(log_n=LOG_N_40, i=3, x=10)
        for a, b in zip(rep.steps, rep.steps[1:]):
            assert a.right == b.left


class TestFracChain:
    def test_holds_in_regime(self):
        for i in (1, 2, 3, 4):
            for p_i in ("0.4", "0.7", "1"):
                rep = frac_chain(log_n=LOG_N_40, i=i, p_i=mp.mpf(p_i))
                assert rep.all_hold, (i, p_i, rep.first_failure)
                assert len(rep.steps) == 6

    def test_boundary_p_accepted(self):
        # C = 4 here, so the floor is (log 4)/4; a float sitting on it (or a
        # hair below, from rounding) must be accepted
        lo = mp.log(mp.mpf(4)) / 4
        rep = frac_chain(log_n=LOG_N_40, i=2, p_i=float(lo))
        assert rep.all_hold

    def test_p_below_floor_rejected(self):
        with pytest.raises(DomainError):
            frac_chain(log_n=LOG_N_40, i=1, p_i=mp.mpf("0.01"))

    def test_p_above_one_rejected(self):
        with pytest.raises(DomainError):
            frac_chain(log_n=LOG_N_40, i=1, p_i=mp.mpf("1.5"))

    def test_i_out_of_range(self):
        with pytest.raises(DomainError):
            frac_chain(log_n=LOG_N_40, i=5, p_i=mp.mpf("0.5"))

    def test_p_equal_one_uses_neg_inf(self):
        rep = frac_chain(log_n=LOG_N_40, i=1, p_i=mp.mpf(1))
        assert rep.steps[0].left == NEG_INF and rep.steps[0].holds


class TestUnionBounds:
    def test_closes_in_regime(self):
        rep = union_bounds(log_n=LOG_N_40)
        assert rep.all_hold
        with mp.workdps(50):
            expect = mp.exp(-mp.sqrt(LOG_N_40) / 2)
            assert mp.almosteq(rep.r, expect, rel_eps=mp.mpf(10) ** -40)
        assert len(rep.per_layer) == 4

    def test_geometric_partial_matches_closed_form(self):
        rep = union_bounds(log_n=mp.mpf(30_000))
        assert rep.partial_matches
        assert abs(rep.geometric_partial - rep.geometric_closed) <= abs(
            rep.geometric_closed
        ) * mp.mpf(10) ** -40

    def test_doubling(self):
        rep = union_bounds(log_n=mp.mpf(30_000))
        assert rep.geometric_closed <= rep.doubling_bound

    def test_small_n_rejected(self):
        with pytest.raises(DomainError):
            union_bounds(log_n=mp.mpf("1.5"))  # C <= 1


class TestPrecisionContract:
    def test_custom_dps_respected(self):
        rep = reg_chain(log_n=LOG_N_40, i=2, x=10, dps=30)
        assert rep.dps == 30

    def test_verdicts_stable_at_higher_dps(self):
        a = reg_chain(log_n=LOG_N_40, i=2, x=10, dps=30)
        b = reg_chain(log_n=LOG_N_40, i=2, x=10, dps=120)
        assert [s.holds for s in a.steps] == [s.holds for s in b.steps]
