import io
import json
import math

import pytest

from bpbounds import (IterationLimits, NoisePair, NonMonotoneError,
                      channel_threshold, iterate_bound,
                      measure_threshold, regular_ensemble, region_sweep)


@pytest.fixture(scope="module")
def e36():
    return regular_ensemble(3, 6)


class TestMeasureThreshold:
    def test_ub_cb(self, e36):
        assert measure_threshold("ub-cb", e36) == pytest.approx(0.42944, abs=5e-4)

    def test_ub_sb(self, e36):
        # frozen from the recursion bisection oracle
        assert measure_threshold("ub-sb", e36) == pytest.approx(0.263465, abs=1e-4)

    def test_ub_sb_star_runs_de(self, e36):
        from bpbounds import DeConfig
        cfg = DeConfig(population_size=15_000, max_iter=250, seed=11)
        star = measure_threshold("ub-sb-star", e36, de_config=cfg)
        assert star == pytest.approx(0.3068, abs=0.02)   # small-population noise

    def test_unknown_kind(self, e36):
        with pytest.raises(ValueError):
            measure_threshold("ub-cbsb", e36)


class TestChannelThreshold:
    def test_bracket_validity(self, e36):
        res = channel_threshold("ub-cb", "bec", e36, tol=1e-4)
        assert res.hi - res.lo <= 1e-4 + 1e-12
        assert res.lo <= res.value <= res.hi
        # re-evaluating the verdicts at the brackets reproduces them
        lo_traj = iterate_bound("ub-cb", NoisePair(cb=res.lo), e36)
        hi_traj = iterate_bound("ub-cb", NoisePair(cb=res.hi), e36)
        assert lo_traj.verdict == "decodable"
        assert hi_traj.verdict == "not-decodable"

    def test_closed_form_cross_check_biawgn(self, e36):
        cb_star = measure_threshold("ub-cb", e36)
        res = channel_threshold("ub-cb", "biawgn", e36, tol=1e-4)
        assert math.exp(-1 / (2 * res.value ** 2)) == pytest.approx(cb_star, abs=1e-3)

    def test_closed_form_cross_check_rayleigh(self, e36):
        cb_star = measure_threshold("ub-cb", e36)
        res = channel_threshold("ub-cb", "rayleigh", e36, tol=1e-4)
        assert 1 / (1 + 1 / (2 * res.value ** 2)) == pytest.approx(cb_star, abs=1e-3)

    def test_z_channel_consistency(self, e36):
        cb_star = measure_threshold("ub-cb", e36)
        res = channel_threshold("ub-cb", "zchan", e36, tol=1e-4)
        # CB of the z-channel is sqrt(p10)
        assert math.sqrt(res.value) == pytest.approx(cb_star, abs=1e-3)

    def test_ub_sb_star_with_given_p_star(self, e36):
        res = channel_threshold("ub-sb-star", "bsc", e36, tol=1e-4, p_star=0.0837)
        assert res.value == pytest.approx(0.0837, abs=5e-4)

    @pytest.mark.parametrize("fam", ["bsc", "biawgn"])
    def test_ub_sb_below_ub_sb_star(self, e36, fam):
        # the SB-matched BSC set strictly contains the pe-matched set, so the
        # non-iterative bound dominates the iterative SB bound at threshold
        iterative = channel_threshold("ub-sb", fam, e36, tol=2e-4).value
        star = channel_threshold("ub-sb-star", fam, e36, tol=2e-4,
                                 p_star=0.0837).value
        assert iterative <= star + 1e-3

    def test_non_monotone_raises(self, e36):
        # a decode epsilon above 1 declares even the noisy bracket end
        # decodable; the bracket check must refuse to bisect that
        limits = IterationLimits(decode_eps=2.0)
        with pytest.raises(NonMonotoneError, match="entire bracket"):
            channel_threshold("ub-cbsb", "bec", e36, limits=limits)

    def test_sb_recursion_defeated_by_heavy_degree_two_mass(self):
        # lambda_2 rho'(1) = 0.3 * 4.6 > 1: the SB recursion contracts for no
        # channel at all (its slope at zero is lambda_2 rho'(1) regardless of
        # the channel), and the search reports that rather than bisecting
        from bpbounds import DegreeEnsemble
        e = DegreeEnsemble(((2, 0.3), (3, 0.7)), ((5, 0.4), (6, 0.6)))
        assert measure_threshold("ub-sb", e) < 1e-4
        with pytest.raises(NonMonotoneError, match="certifies nothing"):
            channel_threshold("ub-sb", "bsc", e)
        # the CB-only bound still works there
        res = channel_threshold("ub-cb", "bec", e, tol=1e-4)
        assert 0.3 < res.value < 0.5


class TestRegionSweep:
    def test_small_grid(self, e36):
        grid = region_sweep(e36, 6, 4, p_star=0.0837)
        # feasibility of every grid point
        for cb, sb, dec, it in grid.points:
            assert cb * cb - 1e-12 <= sb <= cb + 1e-12
        # corners
        assert any(cb == 0 and dec for cb, sb, dec, it in grid.points)
        assert any(cb == 1 and sb == 1 and not dec for cb, sb, dec, it in grid.points)
        # overlays present
        assert grid.overlays["ub_cb"] == pytest.approx(0.42944, abs=5e-4)
        assert grid.overlays["ub_sb"] == pytest.approx(0.26346, abs=5e-4)
        assert grid.overlays["ub_sb_star"] == pytest.approx(0.30678, abs=1e-4)

    def test_vertical_line_containment(self, e36):
        # every feasible point with cb below the ub-cb threshold is decodable
        grid = region_sweep(e36, 9, 3, p_star=0.0837)
        ub_cb = grid.overlays["ub_cb"]
        for cb, sb, dec, it in grid.points:
            if cb <= ub_cb - 1e-6:
                assert dec, (cb, sb)

    def test_bsc_curve_flip(self, e36):
        limits = IterationLimits()
        for p, expect in ((0.0695, True), (0.0725, False)):
            pair = NoisePair(2 * math.sqrt(p * (1 - p)), 4 * p * (1 - p))
            traj = iterate_bound("ub-cbsb", pair, e36, limits)
            assert (traj.verdict == "decodable") is expect

    def test_csv_format(self, e36):
        grid = region_sweep(e36, 3, 2, p_star=0.0837)
        buf = io.StringIO()
        grid.to_csv(buf)
        lines = buf.getvalue().strip().splitlines()
        assert lines[0] == "cb,sb,decodable,iterations"
        assert len(lines) == len(grid.points) + 1
        overlays = json.loads(grid.overlays_json())
        assert overlays["schema"] == "bpbounds.region-overlays/1"

    def test_jobs_parallel_equals_serial(self, e36):
        a = region_sweep(e36, 4, 3, p_star=0.0837)
        b = region_sweep(e36, 4, 3, p_star=0.0837, jobs=2)
        assert a.points == b.points


class TestThresholdResultJson:
    def test_schema(self, e36):
        res = channel_threshold("ub-cb", "bec", e36, tol=1e-3)
        d = res.to_dict()
        assert d["schema"] == "bpbounds.threshold/1"
        assert set(d) >= {"parameter", "lo", "hi", "value", "source", "iterations"}
