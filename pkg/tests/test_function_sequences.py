import numpy as np
import pytest

from ifncheck.errors import DomainError, NoLimit, UnsupportedFamily
from ifncheck.function_sequences import (
    FunctionSequence,
    classical_uniform_probe,
    closed_form_index_power,
    pointwise_limit_estimate,
    sample_domain,
    sup_deviation_oracle,
    uniform_cauchy_check,
    uniform_index_search,
    uniform_limit_scenario,
)
from ifncheck.ifn_core import make_example_family
from ifncheck.sampling import Interval


@pytest.fixture(scope="module")
def spaces():
    sp = make_example_family("example-4.x")
    return (sp, sp)


def power_index_oracle(c, r, t, n_max=100000):
    """Direct scan: first n with c^n < r t / (1 - r) and all later n too
    (monotone, so the first passing n is the index)."""
    threshold = r * t / (1.0 - r)
    for n in range(1, n_max):
        if c ** n < threshold:
            return n
    return None


class TestPointwise:
    def test_power_limit_zero(self, spaces):
        seq = FunctionSequence("power", Interval(0.0, 1.0, open_lo=True, open_hi=True))
        limit, cert = pointwise_limit_estimate(spaces, seq, 0.5, 0.1, 0.1)
        assert limit == 0.0
        assert cert.certified and cert.n0 == 7

    def test_quotient_limit_one(self, spaces):
        seq = FunctionSequence("quotient", Interval(0.0, 10.0))
        limit, cert = pointwise_limit_estimate(spaces, seq, 1.0, 0.1, 0.5)
        assert limit == 1.0 and cert.certified

    def test_fixed_point_trivial(self, spaces):
        # x = 0 is a fixed point of every power map
        seq = FunctionSequence("power", Interval(0.0, 0.5))
        limit, cert = pointwise_limit_estimate(spaces, seq, 0.0, 0.3, 1.0)
        assert limit == 0.0 and cert.n0 == 1

    def test_custom_family_tail_mean(self, spaces):
        seq = FunctionSequence(
            "custom",
            Interval(0.0, 1.0),
            budget=2000,
            fn=lambda ns, xs: 2.0 + np.outer(0.5 ** ns, np.ones_like(xs)),
        )
        limit, cert = pointwise_limit_estimate(spaces, seq, 0.5, 0.2, 1.0)
        assert limit == pytest.approx(2.0, abs=1e-9)
        assert cert.certified

    def test_oscillating_custom_has_no_limit(self, spaces):
        seq = FunctionSequence(
            "custom",
            Interval(0.0, 1.0),
            budget=2000,
            fn=lambda ns, xs: np.outer((-1.0) ** ns, np.ones_like(xs)),
        )
        with pytest.raises(NoLimit):
            pointwise_limit_estimate(spaces, seq, 0.5, 0.2, 1.0)

    def test_outside_domain(self, spaces):
        seq = FunctionSequence("power", Interval(0.0, 0.5))
        with pytest.raises(DomainError):
            pointwise_limit_estimate(spaces, seq, 0.9, 0.1, 0.1)


class TestUniformIndexSearch:
    def test_power_closed_half(self, spaces):
        seq = FunctionSequence("power", Interval(0.0, 0.5))
        cert = uniform_index_search(spaces, seq, None, sample_domain(seq.domain, 17), 0.1, 0.1)
        assert cert.uniform and cert.n0 == 7

    def test_index_is_max_of_per_point(self, spaces):
        seq = FunctionSequence("power", Interval(0.0, 0.5))
        cert = uniform_index_search(spaces, seq, None, sample_domain(seq.domain, 17), 0.1, 0.1)
        per_point = dict(cert.per_point_index)
        assert cert.n0 == max(per_point.values())
        # uniform implies pointwise at every sampled x with index <= n0
        assert all(i is not None and i <= cert.n0 for i in per_point.values())

    def test_matches_brute_force_at_endpoint(self, spaces):
        for r, t in ((0.1, 0.1), (0.3, 0.5)):
            seq = FunctionSequence("power", Interval(0.0, 0.5))
            cert = uniform_index_search(
                spaces, seq, None, sample_domain(seq.domain, 17), r, t
            )
            assert cert.n0 == power_index_oracle(0.5, r, t)

    def test_open_unit_interval_not_uniform(self, spaces):
        seq = FunctionSequence("power", Interval(0.0, 1.0, open_lo=True, open_hi=True))
        sample = sample_domain(seq.domain, 17, refine_side="hi", refine_depth=10)
        cert = uniform_index_search(spaces, seq, None, sample, 0.1, 0.1)
        assert cert.verdict == "not-uniform-on-sample"
        ladder = [i for i in cert.ladder_indices if i is not None]
        assert all(b > a for a, b in zip(ladder, ladder[1:]))
        assert ladder[6] >= 2 * ladder[3]

    def test_scaled_family_boundary_strictness(self, spaces):
        # at x = 1 and (r, t) = (1/2, 1): |x/n| < 1 first holds strictly at n = 2
        seq = FunctionSequence("scaled", Interval(0.0, 1.0))
        cert = uniform_index_search(spaces, seq, None, sample_domain(seq.domain, 17), 0.5, 1.0)
        assert cert.n0 == 2

    def test_constant_family(self, spaces):
        seq = FunctionSequence("constant", Interval(0.0, 1.0), params=("identity",))
        cert = uniform_index_search(spaces, seq, None, sample_domain(seq.domain, 9), 0.5, 1.0)
        assert cert.n0 == 1 and cert.uniform

    def test_certificate_monotone_in_demand(self, spaces):
        seq = FunctionSequence("power", Interval(0.0, 0.9))
        sample = sample_domain(seq.domain, 9)
        n_tight = uniform_index_search(spaces, seq, None, sample, 0.05, 0.1).n0
        n_loose = uniform_index_search(spaces, seq, None, sample, 0.5, 0.1).n0
        assert n_loose <= n_tight
        n_small_t = uniform_index_search(spaces, seq, None, sample, 0.1, 0.1).n0
        n_big_t = uniform_index_search(spaces, seq, None, sample, 0.1, 1.0).n0
        assert n_big_t <= n_small_t


class TestClosedFormIndex:
    def test_reference_case(self):
        assert closed_form_index_power(0.5, 0.1, 0.1) == 7

    def test_clamped_when_bound_exceeds_one(self):
        assert closed_form_index_power(0.5, 0.5, 1.0) == 1

    def test_agrees_with_brute_force(self):
        for c in (0.3, 0.5, 0.7, 0.9, 0.99):
            for r, t in ((0.1, 0.1), (0.25, 0.5), (0.6, 0.05)):
                assert closed_form_index_power(c, r, t) == power_index_oracle(c, r, t)

    def test_diverges_toward_one(self):
        ks = [closed_form_index_power(c, 0.1, 0.1) for c in (0.5, 0.9, 0.99, 0.999)]
        assert all(b > a for a, b in zip(ks, ks[1:]))

    def test_dominates_per_point_indices(self, spaces):
        # the endpoint bound dominates every interior sampled point
        a, r, t = 0.8, 0.1, 0.1
        k = closed_form_index_power(a, r, t)
        for x in np.linspace(0.05, a, 9):
            assert power_index_oracle(float(x), r, t) <= k

    def test_domain_validation(self):
        with pytest.raises(DomainError):
            closed_form_index_power(1.2, 0.1, 0.1)
        with pytest.raises(DomainError):
            closed_form_index_power(0.5, 0.0, 0.1)


class TestCauchyCriterion:
    def test_power_closed_half_index(self, spaces):
        seq = FunctionSequence("power", Interval(0.0, 0.5))
        cert = uniform_cauchy_check(spaces, seq, sample_domain(seq.domain, 17), 0.1, 0.1)
        assert cert.uniform
        assert 7 <= cert.n0 <= 9

    def test_criterion_agrees_with_direct_on_catalog(self, spaces):
        from ifncheck.catalog import catalog_function_sequences

        for name, (seq, refine) in catalog_function_sequences().items():
            sample = sample_domain(seq.domain, 9, refine_side=refine, refine_depth=10)
            direct = uniform_index_search(spaces, seq, None, sample, 0.1, 0.1)
            criterion = uniform_cauchy_check(spaces, seq, sample, 0.1, 0.1)
            assert direct.verdict == criterion.verdict, name

    def test_constant_sequence_index_one(self, spaces):
        seq = FunctionSequence("constant", Interval(0.0, 1.0), params=("identity",))
        cert = uniform_cauchy_check(spaces, seq, sample_domain(seq.domain, 9), 0.5, 1.0)
        assert cert.n0 == 1


class TestSupOracle:
    def test_reference_value(self, spaces):
        seq = FunctionSequence("power", Interval(0.0, 0.5))
        sup = sup_deviation_oracle(seq, 0.5, 2, 4)
        assert sup == pytest.approx(0.1875, abs=1e-6)
        # attained at the right endpoint: the interior critical point
        # (m/n)^(1/(n-m)) ~ 0.707 lies beyond a = 0.5
        assert (2.0 / 4.0) ** (1.0 / 2.0) > 0.5

    def test_strictly_below_doubled_bound(self, spaces):
        seq = FunctionSequence("power", Interval(0.0, 0.5))
        for a, m, n in ((0.5, 2, 4), (0.9, 1, 100), (0.3, 3, 8)):
            sup = sup_deviation_oracle(seq, a, m, n)
            assert sup <= a ** m + 1e-12
            assert sup < 2.0 * a ** m

    def test_equal_orders_give_zero(self, spaces):
        seq = FunctionSequence("power", Interval(0.0, 0.5))
        assert sup_deviation_oracle(seq, 0.5, 3, 3) == 0.0

    def test_interior_critical_point_case(self, spaces):
        seq = FunctionSequence("power", Interval(0.0, 0.9))
        a, m, n = 0.9, 1, 100
        sup = sup_deviation_oracle(seq, a, m, n)
        x_star = (m / n) ** (1.0 / (n - m))
        expected = x_star ** m - x_star ** n if x_star < a else a ** m - a ** n
        assert sup == pytest.approx(expected, abs=1e-6)

    def test_family_guard(self, spaces):
        seq = FunctionSequence("quotient", Interval(0.0, 1.0))
        with pytest.raises(UnsupportedFamily):
            sup_deviation_oracle(seq, 0.5, 2, 4)


class TestUniformLimit:
    def test_uniform_case(self, spaces):
        seq = FunctionSequence("power", Interval(0.0, 0.5))
        rec = uniform_limit_scenario(
            spaces, seq, sample_domain(seq.domain, 9), 0.1, 0.1, 0.5, 0.25
        )
        assert rec.certificate.uniform
        assert rec.limit_continuous_everywhere
        assert all(v == "witnessed" for _, v in rec.member_witnesses)

    def test_converse_fails_case(self, spaces):
        seq = FunctionSequence("power", Interval(0.0, 1.0, open_lo=True, open_hi=True))
        sample = sample_domain(seq.domain, 9, refine_side="hi", refine_depth=10)
        rec = uniform_limit_scenario(spaces, seq, sample, 0.1, 0.1, 0.5, 0.25)
        assert rec.certificate.verdict == "not-uniform-on-sample"
        assert rec.limit_continuous_everywhere  # continuity of O survives

    def test_constant_sequence_limit_is_member_map(self, spaces):
        seq = FunctionSequence("constant", Interval(0.0, 1.0), params=("identity",))
        rec = uniform_limit_scenario(
            spaces, seq, sample_domain(seq.domain, 9), 0.5, 1.0, 0.5, 0.25
        )
        assert rec.certificate.uniform and rec.certificate.n0 == 1
        assert rec.limit_continuous_everywhere


class TestClassicalProbe:
    def test_power_closed_half(self, spaces):
        seq = FunctionSequence("power", Interval(0.0, 0.5))
        rec = classical_uniform_probe(spaces, seq, None, sample_domain(seq.domain, 9))
        assert rec.classical_uniform and rec.ifn_certificate.uniform and rec.agree

    def test_power_open_unit(self, spaces):
        seq = FunctionSequence("power", Interval(0.0, 1.0, open_lo=True, open_hi=True))
        sample = sample_domain(seq.domain, 9, refine_side="hi", refine_depth=10)
        rec = classical_uniform_probe(spaces, seq, None, sample)
        assert not rec.classical_uniform and not rec.ifn_certificate.uniform and rec.agree

    def test_quotient(self, spaces):
        seq = FunctionSequence("quotient", Interval(0.0, 10.0))
        rec = classical_uniform_probe(spaces, seq, None, sample_domain(seq.domain, 9))
        assert rec.agree and rec.classical_uniform
