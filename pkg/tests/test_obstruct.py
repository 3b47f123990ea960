import random

import pytest

from gordian.laurent import LaurentPoly, divmod_rational, is_multiple
from gordian.seifert import SeifertMatrix, h_form
from gordian.obstruct import (
    SearchBounds,
    TREFOIL_DELTA,
    build_report,
    cc_bar_witness_search,
    constant_residue,
    form_value,
    murakami_obstruction,
    parity_criterion,
    quadform_represents,
    signature_bound,
)
from gordian.verify import quadform_oracle_values

P = LaurentPoly.parse

DELTA_9_25 = P("-3t^2+12t-17+12t^-1-3t^-2")


class TestQuadform:
    def test_refuted_two(self):
        assert quadform_represents(1, 2).outcome == "refuted"

    def test_witness_three(self):
        v = quadform_represents(1, 3)
        assert v.outcome == "witness"
        assert form_value(1, v.x, v.y) == v.sign * 3

    def test_witness_h2(self):
        v = quadform_represents(2, 2)
        assert v.outcome == "witness"
        assert form_value(2, v.x, v.y) == v.sign * 2

    def test_rejects_zero_h(self):
        with pytest.raises(ValueError, match="h"):
            quadform_represents(0, 3)

    def test_rejects_zero_d(self):
        with pytest.raises(ValueError, match="d"):
            quadform_represents(1, 0)

    def test_indefinite_witness(self):
        # h = -1: x^2 - 3xy + y^2 = -1 at (1, 2)
        v = quadform_represents(-1, 1, bound=10)
        assert v.outcome == "witness"
        assert form_value(-1, v.x, v.y) == v.sign * 1

    def test_indefinite_inconclusive(self):
        # x^2 - 3xy + y^2 = +-3 has no solutions mod 5 analysis aside; the
        # procedure must not claim refuted for an indefinite form
        v = quadform_represents(-1, 3, bound=30)
        assert v.outcome in ("witness", "inconclusive")
        if v.outcome == "inconclusive":
            assert v.searched_bound == 30

    def test_oracle_agreement_sample(self):
        for h in (1, 2, 3):
            table = quadform_oracle_values(h)
            for d in range(-20, 21):
                if d == 0:
                    continue
                verdict = quadform_represents(h, d)
                expected = "witness" if abs(d) in table else "refuted"
                assert verdict.outcome == expected, (h, d)

    def test_parity_values_always_refuted(self):
        for m in range(-3, 13):
            d = 2 + 4 * m
            if d == 0:
                continue
            assert quadform_represents(1, d).outcome == "refuted", d


class TestParityCriterion:
    def test_bundled_pair(self):
        res = parity_criterion(DELTA_9_25)
        assert res.obstructs
        assert res.m == -1
        assert res.remainder == LaurentPoly.const(-2)

    def test_self_not_applicable(self):
        res = parity_criterion(TREFOIL_DELTA)
        assert not res.obstructs
        assert res.remainder == LaurentPoly.zero()

    def test_figure_eight_polynomial(self):
        delta = P("-t+3-t^-1")
        _, remainder = divmod_rational(delta, TREFOIL_DELTA)
        assert remainder == LaurentPoly.const(2)
        res = parity_criterion(delta)
        assert res.obstructs and res.m == 0
        # the parity verdict must agree with the exhaustive search
        assert quadform_represents(1, remainder.constant_value).outcome == "refuted"

    def test_obstructs_implies_quadform_refuted(self):
        rng = random.Random(11)
        seen = 0
        for _ in range(300):
            delta = LaurentPoly(
                {e: rng.randint(-6, 6) for e in range(-3, 4) if rng.random() < 0.5}
            )
            res = parity_criterion(delta)
            if res.obstructs:
                seen += 1
                d = res.remainder.constant_value
                assert d % 4 == 2
                assert quadform_represents(1, d).outcome == "refuted"
        assert seen > 0

    def test_constant_residue(self):
        assert constant_residue(DELTA_9_25, TREFOIL_DELTA) == -2
        assert constant_residue(TREFOIL_DELTA, TREFOIL_DELTA) is None


class TestCcBarSearch:
    def test_constant_three(self):
        witness = cc_bar_witness_search(TREFOIL_DELTA, LaurentPoly.const(3))
        assert witness is not None
        assert witness.c == P("t+1")
        assert witness.sign == 1
        assert is_multiple(
            witness.sign * LaurentPoly.const(3) - witness.c * witness.c.bar(),
            TREFOIL_DELTA,
        )

    def test_none_for_refuted_pair(self):
        # consistency with the exhaustive quadratic form refutation
        assert cc_bar_witness_search(TREFOIL_DELTA, DELTA_9_25, 2, 4) is None

    def test_multiple_of_modulus(self):
        witness = cc_bar_witness_search(TREFOIL_DELTA, TREFOIL_DELTA, 3, 4)
        assert witness is not None
        assert is_multiple(
            witness.sign * TREFOIL_DELTA - witness.c * witness.c.bar(), TREFOIL_DELTA
        )

    def test_witnesses_always_verify(self):
        rng = random.Random(21)
        for _ in range(40):
            delta = h_form(rng.choice((1, 2, 3)))
            target = LaurentPoly({0: rng.randint(-9, 9)})
            if target.is_zero:
                continue
            witness = cc_bar_witness_search(delta, target, 2, 3)
            if witness is not None:
                assert is_multiple(
                    witness.sign * target - witness.c * witness.c.bar(), delta
                )

    def test_zero_modulus_rejected(self):
        with pytest.raises(ZeroDivisionError):
            cc_bar_witness_search(LaurentPoly.zero(), TREFOIL_DELTA)


class TestMurakami:
    def test_bundled_pair(self):
        res = murakami_obstruction(3, 47)
        assert not res.obstructs
        assert res.witness == 1
        assert res.witness % 3 != 0

    def test_equal_determinants(self):
        res = murakami_obstruction(5, 5)
        assert not res.obstructs
        assert res.witness == 0

    def test_determinant_one_base(self):
        # brute force over d in {0, 1} decides the condition mod 2
        for other in (3, 7, 11):
            expected = any(
                (4 * d * d - (1 - other)) % 2 == 0 or (4 * d * d + (1 - other)) % 2 == 0
                for d in range(2)
            )
            res = murakami_obstruction(1, other)
            assert res.obstructs == (not expected)

    def test_agrees_with_fractional_statement(self):
        # the cleared form must match the mod 1 statement at the bundled pair
        from fractions import Fraction

        D, Dp = 3, 47
        witnesses = set()
        for d in range(2 * D):
            lhs = Fraction(2 * d * d, D)
            rhs = Fraction(D - Dp, 2 * D)
            if (lhs - rhs) % 1 == 0 or (lhs + rhs) % 1 == 0:
                witnesses.add(d)
        cleared = {
            d
            for d in range(2 * D)
            if (4 * d * d - (D - Dp)) % (2 * D) == 0
            or (4 * d * d + (D - Dp)) % (2 * D) == 0
        }
        assert witnesses == cleared
        assert murakami_obstruction(D, Dp).witness in witnesses

    def test_obstructing_pair_exists(self):
        # D = 9, D' = 3: 4d^2 = +-6 mod 18 forces 2d^2 = +-3 mod 9, impossible
        res = murakami_obstruction(9, 3)
        assert res.obstructs

    def test_rejects_even(self):
        with pytest.raises(ValueError, match="odd"):
            murakami_obstruction(4, 3)

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError, match="positive"):
            murakami_obstruction(-3, 3)


class TestSignatureBound:
    def test_values(self):
        assert signature_bound(-2, -2) == 0
        assert signature_bound(0, 0) == 0
        assert signature_bound(-2, 4) == 3

    def test_rejects_odd(self):
        with pytest.raises(ValueError, match="even"):
            signature_bound(1, 2)


class TestBuildReport:
    def test_bundled_pair_full_chain(self):
        report = build_report(TREFOIL_DELTA, DELTA_9_25, ua1=1, ua2=1)
        assert report.rho_lower == 2 and report.rho_upper == 2
        assert report.dga_lower == 2 and report.dga_upper == 2
        assert report.dg_lower == 2
        by_name = {c.name: c for c in report.criteria}
        assert by_name["parity"].verdict == "Obstructs"
        assert "remainder = -2 = 2 + 4*(-1)" in by_name["parity"].certificate
        assert by_name["quadratic-form"].verdict == "Obstructs"
        assert by_name["murakami"].verdict == "NoObstruction"

    def test_rho_two_without_ua_supplied(self):
        # h = 1 certifies every class with this polynomial
        report = build_report(TREFOIL_DELTA, DELTA_9_25)
        assert report.rho_lower == 2
        assert report.dga_lower == 2
        assert report.dga_upper is None

    def test_identical_inputs(self):
        report = build_report(TREFOIL_DELTA, TREFOIL_DELTA)
        assert report.rho_lower == 0 and report.rho_upper == 0
        assert report.dga_lower == 0 and report.dg_lower == 0

    def test_identical_matrices(self):
        V = SeifertMatrix([[-1, 1], [0, -1]])
        W = SeifertMatrix([[-1, 1], [0, -1]])
        report = build_report(V, W)
        assert report.dga_upper == 0
        assert report.dg_lower == 0

    def test_refuting_residue_route(self):
        # 3t-5+3t^-1 = 3(t-1+t^-1) - 2, so the residue -2 is refuted
        report = build_report(TREFOIL_DELTA, P("3t-5+3t^-1"))
        by_name = {c.name: c for c in report.criteria}
        assert by_name["quadratic-form"].applicable
        assert by_name["quadratic-form"].verdict == "Obstructs"
        assert report.rho_lower == 2

    def test_witness_residue_route(self):
        # -2t+5-2t^-1 = -2(t-1+t^-1) + 3 and 3 = q(1, 1) is represented
        report = build_report(TREFOIL_DELTA, P("-2t+5-2t^-1"))
        by_name = {c.name: c for c in report.criteria}
        assert by_name["quadratic-form"].verdict == "NoObstruction"
        assert by_name["cc-bar-witness"].verdict == "NoObstruction"
        assert report.rho_lower == 1

    def test_matrix_inputs_use_signature(self):
        V = SeifertMatrix([[-1, 1], [0, -1]])
        W = SeifertMatrix([[1, 1], [0, -1]])
        report = build_report(V, W)
        by_name = {c.name: c for c in report.criteria}
        assert by_name["signature"].applicable
        assert by_name["signature"].verdict == "Obstructs"
        assert report.dg_lower >= 1

    def test_chain_invariant(self):
        rng = random.Random(31)
        from gordian.verify import random_seifert

        small = SearchBounds(cc_max_breadth=2, cc_max_coeff=3)
        for i in range(30):
            V = random_seifert(rng, 2)
            W = random_seifert(rng, (2, 4)[i % 2])
            report = build_report(V, W, bounds=small)
            assert report.dg_lower >= report.dga_lower >= report.rho_lower
            assert 0 <= report.rho_lower <= report.rho_upper <= 2

    def test_contradictory_ua_rejected(self):
        with pytest.raises(ValueError, match="contradict"):
            build_report(TREFOIL_DELTA, DELTA_9_25, ua1=1, ua2=0)

    def test_constant_three_matches_quadform_oracle(self):
        report = build_report(TREFOIL_DELTA, LaurentPoly.const(3))
        by_name = {c.name: c for c in report.criteria}
        assert by_name["quadratic-form"].verdict == "NoObstruction"
        assert "x = 1, y = 1" in by_name["quadratic-form"].certificate
        assert by_name["cc-bar-witness"].verdict == "NoObstruction"
        assert report.rho_lower == 1

    def test_even_determinant_makes_murakami_inapplicable(self):
        report = build_report(TREFOIL_DELTA, P("t+t^-1"))
        by_name = {c.name: c for c in report.criteria}
        assert not by_name["murakami"].applicable

    def test_rejects_zero_polynomial(self):
        with pytest.raises(ValueError, match="nonzero"):
            build_report(LaurentPoly.zero(), TREFOIL_DELTA)

    def test_format_keys(self):
        report = build_report(TREFOIL_DELTA, DELTA_9_25, ua1=1, ua2=1)
        text = report.format()
        for key in (
            "criterion:",
            "applicable:",
            "verdict:",
            "certificate:",
            "rho_lower: 2",
            "rho_upper: 2",
            "dga_lower: 2",
            "dga_upper: 2",
            "dg_lower: 2",
        ):
            assert key in text

    def test_bounds_override(self):
        report = build_report(
            TREFOIL_DELTA,
            P("5t-9+5t^-1"),
            bounds=SearchBounds(cc_max_breadth=1, cc_max_coeff=2),
        )
        assert report.rho_lower >= 1
