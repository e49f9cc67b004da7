//! 2-step nilpotent real Lie algebras presented by structure constants.
//!
//! A basis `B_1..B_beta, C_1..C_gamma` is fixed with the `C_j` spanning the
//! center and all brackets landing in that span: `[B_j, B_k] = sum_m
//! c^m_{jk} C_m`. Validation enforces antisymmetry of the table and that the
//! `C_j` really exhaust the center; 2-step nilpotency then holds by
//! construction.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::Error;
use crate::linalg;
use crate::ring::Rationals;
use crate::scalar::rat_int;
use crate::Result;

/// Validated 2-step nilpotent Lie algebra. Indices are 0-based throughout
/// the API; the text formats use 1-based names `B1, ..., C1, ...`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoStepLieAlgebra {
    beta: usize,
    gamma: usize,
    /// Flattened `c[j][k][m]`, length `beta * beta * gamma`.
    structure: Vec<BigRational>,
}

impl TwoStepLieAlgebra {
    /// Validates a raw structure-constant table.
    ///
    /// `table[j][k][m]` is the `C_m`-coefficient of `[B_j, B_k]`. Rejects
    /// tables that are not antisymmetric, and tables whose center is larger
    /// than the span of the `C_j` (returning a witness central combination
    /// of the `B_j` so the caller can rebase).
    pub fn validate(beta: usize, gamma: usize, table: Vec<Vec<Vec<BigRational>>>) -> Result<Arc<Self>> {
        if table.len() != beta {
            return Err(Error::DimensionMismatch { expected: beta, found: table.len() });
        }
        let mut structure = vec![BigRational::zero(); beta * beta * gamma];
        for (j, row) in table.iter().enumerate() {
            if row.len() != beta {
                return Err(Error::DimensionMismatch { expected: beta, found: row.len() });
            }
            for (k, cell) in row.iter().enumerate() {
                if cell.len() != gamma {
                    return Err(Error::DimensionMismatch { expected: gamma, found: cell.len() });
                }
                for (m, val) in cell.iter().enumerate() {
                    structure[(j * beta + k) * gamma + m] = val.clone();
                }
            }
        }
        let alg = TwoStepLieAlgebra { beta, gamma, structure };
        for j in 0..beta {
            for k in j..beta {
                for m in 0..gamma {
                    if alg.c(j, k, m) != &-alg.c(k, j, m).clone() {
                        return Err(Error::AntisymmetryViolation { j, k, m });
                    }
                }
            }
        }
        // Center check: a combination sum_j a_j B_j is central iff
        // sum_j a_j c^m_{jk} = 0 for all (k, m). The C_j span the center iff
        // that linear map has trivial kernel.
        if beta > 0 {
            let mut m: linalg::Matrix<Rationals> = Vec::with_capacity(beta * gamma.max(1));
            for k in 0..beta {
                for cm in 0..gamma {
                    let row: Vec<BigRational> = (0..beta).map(|j| alg.c(j, k, cm).clone()).collect();
                    m.push(row);
                }
            }
            if m.is_empty() {
                // gamma = 0 and beta > 0: every B_j is central.
                let mut witness = vec![BigRational::zero(); beta];
                witness[0] = rat_int(1);
                return Err(Error::CenterTooSmall { witness });
            }
            if let Some(witness) = linalg::kernel_vector(&Rationals, &m) {
                return Err(Error::CenterTooSmall { witness });
            }
        }
        Ok(Arc::new(alg))
    }

    /// The Heisenberg algebra: `beta = 2`, `gamma = 1`, `[B_1, B_2] = C_1`.
    pub fn heisenberg() -> Arc<Self> {
        Self::from_bracket_list(2, 1, &[(0, 1, vec![rat_int(1)])])
            .expect("heisenberg table is valid")
    }

    /// The 2-step nilpotent algebra freely generated by three elements:
    /// `[B_1,B_2] = C_3`, `[B_2,B_3] = C_1`, `[B_3,B_1] = C_2`.
    pub fn free_three() -> Arc<Self> {
        Self::from_bracket_list(
            3,
            3,
            &[
                (0, 1, vec![rat_int(0), rat_int(0), rat_int(1)]),
                (1, 2, vec![rat_int(1), rat_int(0), rat_int(0)]),
                (2, 0, vec![rat_int(0), rat_int(1), rat_int(0)]),
            ],
        )
        .expect("free 2-step table is valid")
    }

    /// Builds a table from bracket entries `(j, k, coefficients of [B_j,B_k])`,
    /// filling the antisymmetric counterparts; omitted pairs are zero.
    pub fn from_bracket_list(
        beta: usize,
        gamma: usize,
        entries: &[(usize, usize, Vec<BigRational>)],
    ) -> Result<Arc<Self>> {
        let mut table = vec![vec![vec![BigRational::zero(); gamma]; beta]; beta];
        let mut seen = vec![false; beta * beta];
        for (j, k, coeffs) in entries {
            let (j, k) = (*j, *k);
            if j >= beta || k >= beta {
                return Err(Error::DimensionMismatch { expected: beta, found: j.max(k) + 1 });
            }
            if coeffs.len() != gamma {
                return Err(Error::DimensionMismatch { expected: gamma, found: coeffs.len() });
            }
            if seen[j * beta + k] {
                return Err(Error::DuplicateBracket { j, k });
            }
            seen[j * beta + k] = true;
            if seen[k * beta + j] && j != k {
                // Both orientations given: accept only if consistent.
                for m in 0..gamma {
                    if table[k][j][m] != -coeffs[m].clone() {
                        return Err(Error::DuplicateBracket { j, k });
                    }
                }
            }
            for m in 0..gamma {
                table[j][k][m] = coeffs[m].clone();
                if j != k && !seen[k * beta + j] {
                    table[k][j][m] = -coeffs[m].clone();
                }
            }
        }
        Self::validate(beta, gamma, table)
    }

    pub fn beta(&self) -> usize {
        self.beta
    }

    pub fn gamma(&self) -> usize {
        self.gamma
    }

    /// Structure constant `c^m_{jk}`.
    pub fn c(&self, j: usize, k: usize, m: usize) -> &BigRational {
        &self.structure[(j * self.beta + k) * self.gamma + m]
    }

    /// `[B_j, B_k]` as a coefficient vector over the `C` basis.
    pub fn bracket_basis(&self, j: usize, k: usize) -> Vec<BigRational> {
        (0..self.gamma).map(|m| self.c(j, k, m).clone()).collect()
    }

    /// Bracket of two vectors over the `B` basis, expressed over the `C`
    /// basis: bilinear extension of the structure table.
    pub fn bracket_vec(&self, x: &[BigRational], y: &[BigRational]) -> Result<Vec<BigRational>> {
        if x.len() != self.beta {
            return Err(Error::DimensionMismatch { expected: self.beta, found: x.len() });
        }
        if y.len() != self.beta {
            return Err(Error::DimensionMismatch { expected: self.beta, found: y.len() });
        }
        let mut out = vec![BigRational::zero(); self.gamma];
        for (j, xj) in x.iter().enumerate() {
            if xj.is_zero() {
                continue;
            }
            for (k, yk) in y.iter().enumerate() {
                if yk.is_zero() {
                    continue;
                }
                let prod = xj * yk;
                for (m, o) in out.iter_mut().enumerate() {
                    *o += &prod * self.c(j, k, m);
                }
            }
        }
        Ok(out)
    }
}

/// Shared handle used by all element types.
pub type AlgebraRef = Arc<TwoStepLieAlgebra>;

/// Do two handles denote the same algebra? Pointer equality first, falling
/// back to structural comparison so reloaded algebras interoperate.
pub fn same_algebra(a: &AlgebraRef, b: &AlgebraRef) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}
