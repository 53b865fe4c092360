import json
import random
from fractions import Fraction as F

import mpmath
import pytest

from posroot.catalog import FunctionKind, FunctionSpec
from posroot.criterion import (
    AdversarialSpec,
    Defect,
    LambdaPolicy,
    RhoPolicy,
    SeriesSpec,
    ZeroB0,
    adversarial_power_sums,
    adversarial_run,
    b_closed_form_power_sum,
    b_recurrence_power_sums,
    certify_derivative,
    certify_moment,
    certify_shifted_even,
    draw_adversarial_spec,
    explicit_p_formulas,
    power_sums_from_moment_list,
    shifted_reduced_series,
)
from posroot.scalars import BigFloat, RationalFunction
from posroot.series import TruncatedSeries
from posroot.zeros import bessel_zeros

from test_symfun import direct_power_sums


class TestCertifyMoment:
    def test_sinc_symbolic(self):
        spec = FunctionSpec(FunctionKind.SINC, mode="ratfunc", precision=192)
        rep = certify_moment(spec, 8)
        assert rep.verdict == "BOUNDED-PASS"
        assert rep.lam == F(1)
        assert rep.counts()["NONNEGATIVE"] == 9 * 10 // 2

    def test_bessel_zero_table_lambda_stays_exact(self):
        spec = FunctionSpec(FunctionKind.BESSEL, params={"nu": F(0)},
                            mode="exact", precision=192)
        table = bessel_zeros(0, 1, 192)
        rep = certify_moment(spec, 8, LambdaPolicy(kind="zero-table", table=table))
        assert rep.verdict == "BOUNDED-PASS"
        assert isinstance(rep.lam, F)  # dyadic rational keeps the table exact
        assert all(isinstance(c.value, F) for c in rep.cells)

    def test_ramanujan_coefficient_bound(self):
        spec = FunctionSpec(FunctionKind.RAMANUJAN_AQ, params={"q": F(1, 2)},
                            mode="exact", precision=192)
        rep = certify_moment(spec, 10)
        assert rep.verdict == "BOUNDED-PASS"
        assert rep.lam == F(1)  # e_1 = q/(1-q) at q = 1/2

    def test_qbessel(self):
        spec = FunctionSpec(FunctionKind.QBESSEL, params={"q": F(1, 2), "nu": F(0)},
                            mode="exact", precision=192)
        rep = certify_moment(spec, 10)
        assert rep.verdict == "BOUNDED-PASS"
        assert rep.lam == F(1, 2)

    def test_negative_grid_rejected(self):
        spec = FunctionSpec(FunctionKind.SINC, mode="ratfunc")
        with pytest.raises(ValueError):
            certify_moment(spec, -1)


class TestCertifyDerivative:
    def test_explicit_two_roots(self):
        spec = SeriesSpec(TruncatedSeries([F(1), F(-5, 6), F(1, 6)]))
        rep = certify_derivative(
            spec, 10, RhoPolicy(kind="explicit", value=F(2) * F(1023, 1024)))
        assert rep.verdict == "BOUNDED-PASS"
        assert rep.metadata["route_equality_max_defect"] == "0"

    def test_planted_negative_root_fails(self):
        # f = (1+z/2)(1-z/3): sequence {-1/2, 1/3}; oracle from direct sums
        f = TruncatedSeries([F(1), -(F(-1, 2) + F(1, 3)), F(-1, 2) * F(1, 3)])
        spec = SeriesSpec(f)
        rep = certify_derivative(spec, 8, RhoPolicy(kind="explicit", value=F(2)))
        assert rep.verdict == "FAIL"
        # brute-force oracle: some difference cell of the scaled sums is negative
        p = direct_power_sums([F(-1, 2), F(1, 3)], 10)
        from posroot.hausdorff import derivative_cells_from_power_sums
        from posroot.symfun import PowerSumSequence
        cells = derivative_cells_from_power_sums(PowerSumSequence(p), F(2), 8)
        assert any(v > 0 for v in cells.values())

    def test_sinc_symbolic_derivative(self):
        spec = FunctionSpec(FunctionKind.SINC, mode="ratfunc", precision=192)
        rep = certify_derivative(spec, 6, RhoPolicy(kind="explicit",
                                                    value=F(1023, 1024)))
        assert rep.verdict == "BOUNDED-PASS"
        assert rep.metadata["route_equality_max_defect"] == "0"

    def test_riemann_derivative_route(self):
        from posroot.zeros import packaged_riemann_table
        table = packaged_riemann_table(limit=10, precision=256)
        spec = FunctionSpec(FunctionKind.RIEMANN_XI, mode="float", precision=256)
        rep = certify_derivative(spec, 6, RhoPolicy(kind="zero-table", table=table))
        assert rep.verdict == "BOUNDED-PASS"
        defect = rep.metadata["route_equality_max_defect"]
        from posroot.scalars import parse_bigfloat
        assert float(parse_bigfloat(defect)) < 2.0 ** -100


class TestShiftedEven:
    def test_zero_shift_matches_unshifted(self):
        spec = FunctionSpec(FunctionKind.SINC, mode="ratfunc", precision=192)
        from posroot.catalog import sinc_even_series
        G = sinc_even_series(40, 192)
        f0 = shifted_reduced_series(G, F(0), 192)
        direct = spec.series(20)
        binding = spec.bindings()
        with mpmath.workprec(200):
            for k in range(15):
                want = direct[k].evaluate(binding) if isinstance(direct[k], RationalFunction) else BigFloat(F(direct[k]), 192)
                got = f0[k]
                assert abs((got - want).value) < mpmath.mpf(2) ** -150

    def test_sinc_shift_one(self):
        spec = FunctionSpec(FunctionKind.SINC, mode="ratfunc", precision=224)
        rep = certify_shifted_even(spec, F(1), 6)
        assert rep.verdict == "BOUNDED-PASS"

    def test_besselk_shift_half(self):
        spec = FunctionSpec(FunctionKind.BESSEL_K, params={"a": F(1)},
                            mode="float", precision=224)
        rep = certify_shifted_even(spec, F(1, 2), 6)
        assert rep.verdict == "BOUNDED-PASS"


class TestExplicitFormulas:
    def test_doubling_moments(self):
        b = [F(1), F(2), F(4), F(8), F(16)]
        p = explicit_p_formulas(b, 4)
        assert [p[k] for k in range(1, 5)] == [F(1), F(2, 3), F(8, 15), F(136, 315)]

    def test_b2_zero(self):
        p = explicit_p_formulas([F(3), F(0), F(5), F(7), F(11)], 1)
        assert p[1] == 0

    def test_b0_zero_rejected(self):
        with pytest.raises(ZeroB0):
            explicit_p_formulas([F(0), F(1), F(1), F(1), F(1)], 2)

    def test_random_vectors_all_routes_agree(self):
        rng = random.Random(555)
        for _ in range(50):
            b = [F(rng.randint(1, 60), rng.randint(1, 9))] + \
                [F(rng.randint(-60, 60), rng.randint(1, 9)) for _ in range(4)]
            pe = explicit_p_formulas(b, 4)
            pg = power_sums_from_moment_list(b, 4)
            pr = b_recurrence_power_sums(b, 4)
            for k in range(1, 5):
                assert pe[k] == pg[k] == pr[k] == b_closed_form_power_sum(b, k)

    def test_symbolic_membership(self):
        # run with the moments as free symbols: the power sums stay inside
        # the rational-function field generated by them
        syms = ("b0", "b2", "b4", "b6", "b8")
        b = [RationalFunction.variable(syms, s) for s in syms]
        pe = explicit_p_formulas(b, 4)
        pg = power_sums_from_moment_list(b, 4)
        for k in range(1, 5):
            assert isinstance(pe[k], RationalFunction)
            assert pe[k] == pg[k]
        assert pe[1] == b[1] / (2 * b[0])


class TestAdversarial:
    def test_half_defect_detected(self):
        base = tuple(F(1, n * n) for n in range(1, 49))
        spec = AdversarialSpec(base=base, defects=(Defect(re=F(-1, 2)),), lam=F(1))
        rep, depth = adversarial_run(spec, 24)
        assert rep.verdict == "FAIL"
        assert depth is not None and depth <= 24

    def test_control_passes(self):
        base = tuple(F(1, n * n) for n in range(1, 49))
        spec = AdversarialSpec(base=base, defects=(Defect(re=F(-1, 2)),), lam=F(1))
        rep, depth = adversarial_run(spec, 24, include_defects=False)
        assert rep.verdict == "BOUNDED-PASS"
        assert depth is None

    def test_complex_pair_power_sums_exact(self):
        # (a+bi)^k + conj sums must match direct complex arithmetic
        spec = AdversarialSpec(base=(F(1, 4),),
                               defects=(Defect(re=F(3, 10), im=F(2, 5)),),
                               lam=F(1))
        p = adversarial_power_sums(spec, 6)
        for k in range(1, 7):
            z = complex(F(3, 10), F(2, 5)) ** k
            expected = float(F(1, 4) ** k) + 2 * z.real
            assert abs(float(p[k]) - expected) < 1e-12

    def test_complex_pair_run_records_depth(self):
        spec = AdversarialSpec(base=tuple(F(1, n * n) for n in range(1, 33)),
                               defects=(Defect(re=F(3, 10), im=F(2, 5)),),
                               lam=F(1))
        rep, depth = adversarial_run(spec, 24)
        assert depth is None or depth <= 24  # recorded either way

    def test_seeded_draws_deterministic(self):
        a = draw_adversarial_spec(random.Random(11))
        b = draw_adversarial_spec(random.Random(11))
        assert a == b
        assert abs(a.defects[0].re) >= F(1, 4)


class TestReport:
    def test_json_stability_and_shape(self):
        spec = FunctionSpec(FunctionKind.SINC, mode="ratfunc", precision=160)
        rep1 = certify_moment(spec, 4)
        rep2 = certify_moment(FunctionSpec(FunctionKind.SINC, mode="ratfunc",
                                           precision=160), 4)
        j1 = json.dumps(rep1.as_dict(), sort_keys=True, indent=2)
        j2 = json.dumps(rep2.as_dict(), sort_keys=True, indent=2)
        assert j1 == j2
        d = json.loads(j1)
        assert d["schema"] == 1
        assert d["verdict"] == "BOUNDED-PASS"
        assert "bounded certificate" in d["metadata"]["statement"]
        for key in ("function", "mode", "lambda", "rho", "grid_bound",
                    "precision_bits", "cells", "verdict", "failures", "metadata"):
            assert key in d

    def test_csv_shape(self):
        spec = FunctionSpec(FunctionKind.SINC, mode="ratfunc", precision=160)
        rep = certify_moment(spec, 4)
        lines = rep.to_csv().strip().split("\n")
        assert len(lines) == 6  # header + rows j = 0..4
        assert lines[0].startswith("j\\k,")
        assert lines[1].count(",") == 5

    def test_roundtrip_parse(self):
        spec = FunctionSpec(FunctionKind.RAMANUJAN_AQ, params={"q": F(1, 4)},
                            mode="exact", precision=160)
        rep = certify_moment(spec, 5)
        d = json.loads(json.dumps(rep.as_dict(), sort_keys=True))
        assert d["cells"] == rep.as_dict()["cells"]


class TestIndeterminateRetry:
    def test_float_boundary_sequence_retries_then_reports(self):
        # all-ones float sequence: difference cells are exactly 0.0, which a
        # float can never confidently call nonnegative, so the run doubles
        # its precision once and still reports INDETERMINATE honestly
        f = TruncatedSeries([BigFloat(1, 128), BigFloat(-1, 128)] +
                            [BigFloat(0, 128)] * 20)
        spec = SeriesSpec(f, precision=128, mode="float")
        rep = certify_moment(spec, 4)
        assert rep.verdict == "INDETERMINATE"
        assert rep.metadata.get("retried_at_bits") == 256
        counts = rep.counts()
        assert counts["NEGATIVE"] == 0
        assert counts["INDETERMINATE"] > 0

    def test_exact_boundary_sequence_decides(self):
        # the same sequence in exact arithmetic passes on the boundary
        f = TruncatedSeries([F(1), F(-1)] + [F(0)] * 20)
        rep = certify_moment(SeriesSpec(f), 4)
        assert rep.verdict == "BOUNDED-PASS"


class TestExitCodeMapping:
    def test_all_three_verdicts(self):
        from posroot.cli import _report_exit

        f_pass = TruncatedSeries([F(1), F(-1, 2)] + [F(0)] * 12)
        rep = certify_moment(SeriesSpec(f_pass), 4,
                             LambdaPolicy(kind="explicit", value=F(1)))
        assert rep.verdict == "BOUNDED-PASS" and _report_exit(rep) == 0

        f_bad = TruncatedSeries([F(1), F(1, 2)] + [F(0)] * 12)  # root -2
        rep = certify_moment(SeriesSpec(f_bad), 4,
                             LambdaPolicy(kind="explicit", value=F(1)))
        assert rep.verdict == "FAIL" and _report_exit(rep) == 2

        f_zero = TruncatedSeries([BigFloat(1, 128), BigFloat(-1, 128)] +
                                 [BigFloat(0, 128)] * 12)
        rep = certify_moment(SeriesSpec(f_zero, precision=128, mode="float"), 3)
        assert rep.verdict == "INDETERMINATE" and _report_exit(rep) == 3


class TestBindingErrors:
    def test_missing_symbol_binding_is_explained(self):
        from posroot.scalars import ScalarError
        from posroot.hausdorff import moment_criterion
        from posroot.symfun import PowerSumSequence

        nu = RationalFunction.variable(("nu",), "nu")
        p = PowerSumSequence([1 / (4 * (nu + 1)), 1 / (16 * (nu + 1) ** 2 * (nu + 2))])
        with pytest.raises(ScalarError, match="binding"):
            moment_criterion(p, F(1), J=1, bindings={})

    def test_sinc_exact_mode_rejected(self):
        from posroot.scalars import ScalarError

        with pytest.raises(ScalarError, match="ratfunc"):
            FunctionSpec(FunctionKind.SINC, mode="exact")
