from fractions import Fraction
from itertools import combinations

import pytest

from cyclocover.conemetrics import all_admissible, metric_from_angles
from cyclocover.covers import validate
from cyclocover.exactmath import Polynomial
from cyclocover.wronski import (
    BasisDependenceError,
    WeightIdentityError,
    default_basis,
    default_punctures,
    hyperelliptic_test,
    total_weight,
    weight_census,
    wronskian,
)
from helpers import covers_up_to

OCTA4 = validate(8, (1, 2, 5))
KLEIN = validate(7, (1, 2, 4))
OCTA8 = validate(12, (1, 4, 7))
MUCUBE6 = validate(6, (1, 3, 5, 3))
MUCUBE4 = validate(4, (1, 1, 3, 3))
FOURFOLD = validate(4, (1, 1, 1, 1))


def report_for(cover, punctures=None, metrics=None):
    basis = metrics if metrics is not None else default_basis(cover, punctures)
    return wronskian(cover, basis, punctures)


class TestOcta4:
    def test_exact_wronskian(self):
        report = report_for(OCTA4)
        third = Fraction(1, 3)
        assert report.w1 == Polynomial.from_roots([-third, -third])
        assert report.orders == (-2, -1, -2)
        assert report.weights == (2, 2, 2)
        assert report.infinity_weight == 0
        assert [(f.root, f.multiplicity) for f in report.extra_points] == [
            (-third, 2)
        ]

    def test_total_weight(self):
        report = report_for(OCTA4)
        assert total_weight(report, OCTA4, 3) == 24

    def test_not_hyperelliptic(self):
        report = report_for(OCTA4)
        assert not hyperelliptic_test(report, 3)
        assert weight_census(report) == {2: 12}


class TestKlein:
    def test_unit_weights(self):
        report = report_for(KLEIN)
        assert report.weights == (1, 1, 1)
        assert report.orders == (-2, -2, -2)

    def test_off_branch_cubic(self):
        report = report_for(KLEIN)
        assert sum(f.multiplicity * f.factor.degree for f in report.extra_points) == 3
        assert all(f.root is None for f in report.extra_points)
        assert total_weight(report, KLEIN, 3) == 24

    def test_cubic_regression_value(self):
        # 21 off-branch points of weight 1 above the roots of this cubic
        report = report_for(KLEIN)
        assert report.w1 == Polynomial(
            [Fraction(-1, 13), -1, Fraction(9, 13), 1]
        )
        assert report.w1_scale == Fraction(78, 343)


class TestOcta8:
    def test_cone_point_weights(self):
        report = report_for(OCTA8)
        assert report.weights == (4, 4, 4)

    def test_census(self):
        report = report_for(OCTA8)
        census = weight_census(report)
        # six cone points of weight 4 and 36 off-branch points of weight 1
        assert census == {4: 6, 1: 36}
        assert total_weight(report, OCTA8, 4) == 60
        assert not hyperelliptic_test(report, 4)


class TestMucube:
    def test_sixfold_description_is_hyperelliptic(self):
        report = report_for(MUCUBE6)
        assert report.weights == (3, 3, 3, 3)
        assert weight_census(report) == {3: 8}
        assert hyperelliptic_test(report, 3)

    def test_fourfold_description_agrees(self):
        report = report_for(MUCUBE4)
        assert hyperelliptic_test(report, 3)
        assert weight_census(report) == {3: 8}

    def test_fourfold_all_ones_is_not(self):
        report = report_for(FOURFOLD)
        assert report.weights == (2, 2, 2, 2)
        assert not hyperelliptic_test(report, 3)


class TestChartIndependence:
    @pytest.mark.parametrize("punctures", [(0, 2, 5), (-1, 3, Fraction(1, 2))])
    def test_octa4_weights_stable(self, punctures):
        base = report_for(OCTA4)
        moved = report_for(OCTA4, punctures=punctures)
        assert moved.weights == base.weights
        assert moved.orders == base.orders
        assert sorted(
            (f.factor.degree, f.multiplicity) for f in moved.extra_points
        ) == sorted((f.factor.degree, f.multiplicity) for f in base.extra_points)

    def test_mucube_census_stable(self):
        base = weight_census(report_for(MUCUBE6))
        moved = weight_census(report_for(MUCUBE6, punctures=(0, 3, -2, 7)))
        assert base == moved

    def test_octa8_census_stable(self):
        moved = weight_census(
            report_for(OCTA8, punctures=(Fraction(1, 2), -2, 3))
        )
        assert moved == {4: 6, 1: 36}


class TestBasisChoice:
    def test_every_valid_basis_gives_same_weights(self):
        metrics = all_admissible(FOURFOLD)
        censuses = []
        dependent = 0
        for subset in combinations(metrics, 3):
            try:
                report = wronskian(FOURFOLD, list(subset))
            except BasisDependenceError:
                dependent += 1
                continue
            censuses.append(weight_census(report))
        # the four lifted metrics span only two dimensions, so the four
        # subsets drawn entirely from them are dependent
        assert dependent == 4
        assert len(censuses) == 6
        assert all(c == censuses[0] for c in censuses)

    def test_default_basis_size(self):
        for cover, g in covers_up_to(4):
            assert len(default_basis(cover)) == g


class TestErrors:
    def test_wrong_basis_size(self):
        metrics = all_admissible(OCTA4)
        with pytest.raises(ValueError, match="exactly 3 metrics"):
            wronskian(OCTA4, metrics[:2])

    def test_duplicate_punctures(self):
        with pytest.raises(ValueError, match="distinct"):
            wronskian(OCTA4, all_admissible(OCTA4), punctures=(0, 1, 1))

    def test_foreign_metric(self):
        other = metric_from_angles(KLEIN, (1, 2, 4))
        metrics = all_admissible(OCTA4)[:2] + [other]
        with pytest.raises(ValueError, match="does not belong"):
            wronskian(OCTA4, metrics)

    def test_non_admissible_rejected_at_construction(self):
        with pytest.raises(ValueError):
            metric_from_angles(OCTA4, (4, 0, 4))

    def test_weight_identity_error_carries_numbers(self):
        report = report_for(OCTA4)
        with pytest.raises(WeightIdentityError) as err:
            total_weight(report, OCTA4, 4)  # wrong genus on purpose
        assert err.value.actual == 24
        assert err.value.expected == 60


class TestDefaultPunctures:
    def test_pattern(self):
        assert default_punctures(3) == (0, 1, -1)
        assert default_punctures(6) == (0, 1, -1, 2, -2, 3)

    def test_w1_never_vanishes_at_punctures(self):
        report = report_for(OCTA4)
        assert all(report.w1(p) != 0 for p in report.punctures)


class TestFullSweep:
    def test_total_weight_identity_up_to_genus_five(self):
        for cover, g in covers_up_to(5):
            report = report_for(cover)
            assert total_weight(report, cover, g) == (g - 1) * g * (g + 1)

    def test_weights_are_nonnegative_integers(self):
        for cover, _ in covers_up_to(4):
            report = report_for(cover)
            assert all(isinstance(w, int) and w >= 0 for w in report.weights)
