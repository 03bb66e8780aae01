import json
import math

import numpy as np
import pytest

from cyclocover.periods import (
    LatticeMatrix,
    PeriodMatrix,
    SingularSystemError,
    jacobian,
    lattice_from_json,
    octa4_fixture,
    octa4_expected_coefficients,
    period_matrix_from_json,
    solve_coefficients,
)

SQRT2 = math.sqrt(2.0)


def expected_jacobian():
    half = (1 + 1j) / 2
    return np.array(
        [[1j, half, half], [half, 1j, half], [half, half, 1j]]
    )


class TestJacobian:
    def test_octa4_values(self):
        pm, _ = octa4_fixture()
        jac, diag = jacobian(pm)
        assert abs(jac - expected_jacobian()).max() < 1e-12
        assert diag.max_asymmetry < 1e-12
        assert diag.min_imag_eigenvalue > 0.49

    def test_octa4_imag_spectrum(self):
        pm, _ = octa4_fixture()
        jac, _ = jacobian(pm)
        eigs = sorted(np.linalg.eigvalsh(jac.imag))
        assert abs(eigs[0] - 0.5) < 1e-12
        assert abs(eigs[1] - 0.5) < 1e-12
        assert abs(eigs[2] - 2.0) < 1e-12

    def test_identity_matrix(self):
        pm = PeriodMatrix(np.hstack([np.eye(3), 1j * np.eye(3)]))
        jac, diag = jacobian(pm)
        assert abs(jac - 1j * np.eye(3)).max() == 0
        assert diag.max_asymmetry == 0
        assert diag.min_imag_eigenvalue == pytest.approx(1.0)

    def test_singular_a_block_rejected(self):
        entries = np.hstack([np.zeros((3, 3)), np.eye(3)]).astype(complex)
        with pytest.raises(SingularSystemError):
            PeriodMatrix(entries)


class TestSolveCoefficients:
    def test_octa4_reproduces_closed_forms(self):
        pm, lat = octa4_fixture()
        coeffs, residual = solve_coefficients(pm, lat)
        assert abs(coeffs - octa4_expected_coefficients()).max() < 1e-9
        assert abs(coeffs[1, 1] - 1) < 1e-9
        assert abs(coeffs[1, 0]) < 1e-9 and abs(coeffs[1, 2]) < 1e-9
        assert residual < 1e-9

    def test_homogeneous_system(self):
        pm, _ = octa4_fixture()
        lat = LatticeMatrix(np.zeros((3, 6)))
        coeffs, residual = solve_coefficients(pm, lat)
        assert abs(coeffs).max() < 1e-12 and residual < 1e-12

    def test_linearity_in_lattice(self):
        pm, lat = octa4_fixture()
        coeffs, _ = solve_coefficients(pm, lat)
        scaled, _ = solve_coefficients(pm, LatticeMatrix(2.5 * lat.entries))
        assert abs(scaled - 2.5 * coeffs).max() < 1e-9

    def test_invariance_under_homology_basis_change(self):
        pm, lat = octa4_fixture()
        coeffs, _ = solve_coefficients(pm, lat)
        rng = np.random.default_rng(5)
        # random unimodular integer change of the 6 cycle columns
        change = np.eye(6, dtype=int)
        for _ in range(12):
            i, j = rng.integers(0, 6, size=2)
            if i != j:
                change[:, j] += int(rng.integers(-2, 3)) * change[:, i]
        assert round(abs(np.linalg.det(change))) == 1
        moved_pm = PeriodMatrix(pm.entries @ change)
        moved_lat = LatticeMatrix(lat.entries @ change)
        moved_coeffs, residual = solve_coefficients(moved_pm, moved_lat)
        assert abs(moved_coeffs - coeffs).max() < 1e-9
        assert residual < 1e-9

    def test_shape_mismatch(self):
        pm, _ = octa4_fixture()
        with pytest.raises(ValueError):
            solve_coefficients(pm, LatticeMatrix(np.zeros((3, 4))))


class TestJsonInterface:
    def test_round_trip(self, tmp_path):
        pm, lat = octa4_fixture()
        pi_path = tmp_path / "pi.json"
        p_path = tmp_path / "p.json"
        pi_path.write_text(
            json.dumps(
                [[[z.real, z.imag] for z in row] for row in pm.entries.tolist()]
            )
        )
        p_path.write_text(json.dumps(lat.entries.tolist()))
        pm2 = period_matrix_from_json(str(pi_path))
        lat2 = lattice_from_json(str(p_path))
        assert abs(pm2.entries - pm.entries).max() == 0
        assert abs(lat2.entries - lat.entries).max() == 0

    def test_bad_shape_rejected(self, tmp_path):
        path = tmp_path / "pi.json"
        path.write_text(json.dumps([[[1, 0], [0, 1], [1, 1]]]))  # 1 x 3
        with pytest.raises(ValueError):
            period_matrix_from_json(str(path))
