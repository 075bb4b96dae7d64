import math

import pytest

from phiseries import ConvergenceError, DomainError, erf_series, FixedTerms, Grid, quad_erf
from phiseries.analysis import DEFAULT_N_VALUES, REL_FLOOR, erf_table, required_terms, sweep_erf


@pytest.fixture(scope="module")
def default_reports():
    return sweep_erf(Grid(-2.5, 2.5, 0.05), DEFAULT_N_VALUES)


class TestGrid:
    def test_default_count_and_endpoints(self):
        pts = Grid(-2.5, 2.5, 0.05).points()
        assert len(pts) == 101
        assert pts[0] == -2.5 and pts[-1] == 2.5
        assert pts[50] == 0.0 and pts[70] == 1.0

    def test_uneven_step(self):
        g = Grid(0.0, 1.0, 0.3)
        assert g.count == 4
        assert g.points() == pytest.approx([0.0, 0.3, 0.6, 0.9])

    def test_single_point(self):
        assert Grid(0.0, 0.5, 1.0).points() == [0.0]

    @pytest.mark.parametrize("lo,hi,step", [(1, 1, 0.1), (2, 1, 0.1), (0, 1, 0), (0, 1, -1), (0, math.inf, 1)])
    def test_invalid(self, lo, hi, step):
        with pytest.raises(DomainError):
            Grid(lo, hi, step)

    def test_ascending(self):
        pts = Grid(-6, 6, 0.1).points()
        assert pts == sorted(pts) and len(pts) == 121


class TestSweep:
    def test_one_report_per_n(self, default_reports):
        assert [r.n for r in default_reports] == list(range(2, 21, 2))

    def test_fourteen_terms_within_paper_bound(self, default_reports):
        r14 = default_reports[6]
        assert r14.n == 14
        assert r14.max_rel_error <= 0.0033

    def test_more_terms_help(self, default_reports):
        errs = [r.max_abs_error for r in default_reports]
        assert all(b <= a for a, b in zip(errs, errs[1:]))
        assert default_reports[-1].max_abs_error < default_reports[0].max_abs_error

    def test_abs_error_bound(self, default_reports):
        assert all(0 <= r.max_abs_error <= 2 for r in default_reports)

    def test_argmax_reproduces_recorded_error(self, default_reports):
        pts = Grid(-2.5, 2.5, 0.05).points()
        for r in default_reports:
            assert r.argmax_x in pts
            ref = quad_erf(r.argmax_x)
            approx = erf_series(r.argmax_x, FixedTerms(r.n)).value
            assert abs(approx - ref) / abs(ref) == r.max_rel_error

    def test_zero_only_grid(self):
        for r in sweep_erf(Grid(0.0, 0.5, 1.0), [1, 2, 20]):
            assert r.max_abs_error == 0.0 and r.max_rel_error == 0.0
            assert r.argmax_x == 0.0

    def test_rel_floor_excludes_zero_crossing(self):
        table = erf_table(Grid(-0.1, 0.1, 0.1), [3])
        assert 0.0 in table.xs
        assert abs(table.oracle[1]) < REL_FLOOR

    def test_empty_n_values(self):
        with pytest.raises(ValueError):
            sweep_erf(Grid(), [])

    def test_deterministic(self):
        assert sweep_erf(Grid(-1, 1, 0.25), [3, 7]) == sweep_erf(Grid(-1, 1, 0.25), [3, 7])


class TestRequiredTerms:
    def test_zero_needs_one_term(self):
        assert required_terms(0.0, 1e-3) == 1
        assert required_terms(0.0, 1e-15) == 1

    def test_practical_bound_at_edge(self):
        assert required_terms(2.5, 0.0033 * abs(math.erf(2.5))) <= 14

    def test_tight_tolerance_at_one(self):
        # 50-digit mpmath: truncation error at x = 1 is 1.17e-12 for n = 14, 7.5e-14 for n = 15
        assert required_terms(1.0, 1e-12) == 15

    def test_monotone_in_x(self):
        needed = [required_terms(x, 1e-10) for x in (0.5, 1.0, 1.5, 2.0, 2.5)]
        assert needed == sorted(needed)

    def test_bound_exceeded(self):
        with pytest.raises(ConvergenceError):
            required_terms(2.5, 1e-12, max_terms=10)

    def test_domain(self):
        with pytest.raises(DomainError):
            required_terms(41.0, 1e-6)
        with pytest.raises(DomainError):
            required_terms(1.0, 0.0)


def test_twenty_term_error_at_edge_matches_exact_arithmetic(default_reports):
    import mpmath

    mpmath.mp.dps = 50
    x = mpmath.mpf("2.5")
    u, s = x, mpmath.mpf(0)
    for i in range(1, 21):
        s += u
        u *= 2 * x * x / (2 * i + 1)
    exact = float(mpmath.erf(x) - 2 / mpmath.sqrt(mpmath.pi) * mpmath.exp(-x * x) * s)
    assert exact == pytest.approx(5.0434286873891e-06, rel=1e-12)
    assert default_reports[-1].max_abs_error == pytest.approx(exact, rel=1e-9)
