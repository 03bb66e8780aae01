"""Period-matrix checks and the harmonic-parametrization coefficient solve.

This module is deliberately numeric (binary64): period matrices contain
irrationals such as sqrt(2), and the final validation is a residual check
against explicit tolerances.  The g x 2g period matrix is split as (A | B)
into the two g x g cycle blocks; A^-1 B is the Jacobian, which must be
symmetric with positive definite imaginary part.  Solving Re(a . Pi) = P for
the 3 x g complex coefficient matrix `a` row by row reduces to three real
2g x 2g linear systems.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

COND_LIMIT = 1e12


class SingularSystemError(ValueError):
    """A or the real solve matrix is singular or numerically hopeless."""

    def __init__(self, what: str, cond: float):
        super().__init__(f"{what} is singular or ill-conditioned (cond ~ {cond:.3e})")
        self.cond = cond


@dataclass(frozen=True)
class PeriodMatrix:
    """g x 2g complex matrix of 1-form periods, columns split as (A | B)."""

    entries: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.entries, dtype=complex)
        if m.ndim != 2 or m.shape[1] != 2 * m.shape[0]:
            raise ValueError(f"period matrix must be g x 2g, got {m.shape}")
        object.__setattr__(self, "entries", m)
        cond = np.linalg.cond(self.a_block)
        if not math.isfinite(cond) or cond > COND_LIMIT:
            raise SingularSystemError("period matrix A-block", cond)

    @property
    def genus(self) -> int:
        return self.entries.shape[0]

    @property
    def a_block(self) -> np.ndarray:
        return self.entries[:, : self.genus]

    @property
    def b_block(self) -> np.ndarray:
        return self.entries[:, self.genus :]


@dataclass(frozen=True)
class LatticeMatrix:
    """3 x 2g real matrix whose columns span the translation lattice."""

    entries: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.entries, dtype=float)
        if m.ndim != 2 or m.shape[0] != 3:
            raise ValueError(f"lattice matrix must be 3 x 2g, got {m.shape}")
        object.__setattr__(self, "entries", m)


@dataclass(frozen=True)
class JacobianDiagnostics:
    max_asymmetry: float
    min_imag_eigenvalue: float


def jacobian(pm: PeriodMatrix) -> tuple[np.ndarray, JacobianDiagnostics]:
    """A^-1 B with symmetry and positivity diagnostics."""
    j = np.linalg.solve(pm.a_block, pm.b_block)
    diag = JacobianDiagnostics(
        max_asymmetry=float(abs(j - j.T).max()),
        min_imag_eigenvalue=float(np.linalg.eigvalsh(j.imag).min()),
    )
    return j, diag


def solve_coefficients(
    pm: PeriodMatrix, lat: LatticeMatrix
) -> tuple[np.ndarray, float]:
    """The 3 x g complex matrix a with Re(a . Pi) = P, plus the max residual.

    Row i contributes 2g real unknowns (real and imaginary parts of a_i*)
    and the 2g columns of Pi contribute 2g real equations, so each ambient
    dimension is an independent real solve.
    """
    g = pm.genus
    if lat.entries.shape[1] != 2 * g:
        raise ValueError(
            f"lattice has {lat.entries.shape[1]} columns, period matrix wants {2 * g}"
        )
    system = np.zeros((2 * g, 2 * g))
    for k in range(2 * g):
        for j in range(g):
            system[k, 2 * j] = pm.entries[j, k].real
            system[k, 2 * j + 1] = -pm.entries[j, k].imag
    cond = np.linalg.cond(system)
    if not math.isfinite(cond) or cond > COND_LIMIT:
        raise SingularSystemError("coefficient system", cond)
    coeffs = np.zeros((3, g), dtype=complex)
    for i in range(3):
        x = np.linalg.solve(system, lat.entries[i])
        coeffs[i] = x[0::2] + 1j * x[1::2]
    residual = float(abs((coeffs @ pm.entries).real - lat.entries).max())
    return coeffs, residual


def octa4_fixture() -> tuple[PeriodMatrix, LatticeMatrix]:
    """Period and lattice matrices of the Octa-4 harmonic parametrization,
    from the closed forms in sqrt(2), evaluated in binary64.

    Homology basis: alpha_k in three distinct anti-prisms, beta_k dual to
    them; only the beta periods are nonzero in space, with octahedron edge
    length normalized so they are +-2.
    """
    r = math.sqrt(2.0)
    i = 1j
    pi_rows = [
        [1 - i, (-1 - i) / (1 + r), (1 + i) / (1 + r), 1 + i, r, 2 - r],
        [-2 * i, 2 * i, 2 * i, 2 * i, -2, -2],
        [-1 - i, (1 + r) * (1 - i), (1 + r) * (-1 + i), 1 - i, r * i, -(2 + r) * i],
    ]
    lattice_rows = [
        [0, 0, 0, 2, 0, 2],
        [0, 0, 0, 0, -2, -2],
        [0, 0, 0, 2, 2, 0],
    ]
    return PeriodMatrix(np.array(pi_rows)), LatticeMatrix(np.array(lattice_rows))


def octa4_expected_coefficients() -> np.ndarray:
    """Closed-form coefficient matrix for the Octa-4 fixture."""
    r = math.sqrt(2.0)
    return np.array(
        [
            [(2 + r - (4 + 3 * r) * 1j) / (4 + 2 * r), 0, (1 - r + 1j) / 2],
            [0, 1, 0],
            [(1 + r - 1j) / 2, 0, (1 + (1 - r) * 1j) / 2],
        ]
    )


def period_matrix_from_json(path: str) -> PeriodMatrix:
    """Load a period matrix from JSON: an array of rows, each entry a
    [re, im] pair."""
    with open(path, encoding="utf-8") as fh:
        rows = json.load(fh)
    m = np.array([[complex(re, im) for re, im in row] for row in rows])
    return PeriodMatrix(m)


def lattice_from_json(path: str) -> LatticeMatrix:
    """Load a lattice matrix from JSON: an array of rows of reals."""
    with open(path, encoding="utf-8") as fh:
        rows = json.load(fh)
    return LatticeMatrix(np.array(rows, dtype=float))
