//! Exact rational linear algebra for small symmetric matrices: LDL^T
//! factorization with symmetric pivoting, positive-semidefiniteness with an
//! explicit witness on failure, rank, and kernel checks. No floating point.

use crate::rational::frac_string;
use num::{BigRational, Zero};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExactLinError {
    Asymmetric { row: usize, col: usize },
    DimensionMismatch { expected: usize, got: usize },
}

impl fmt::Display for ExactLinError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactLinError::Asymmetric { row, col } => {
                write!(f, "matrix entry ({row},{col}) differs from ({col},{row})")
            }
            ExactLinError::DimensionMismatch { expected, got } => {
                write!(f, "expected dimension {expected}, got {got}")
            }
        }
    }
}

impl std::error::Error for ExactLinError {}

/// Dense square matrix of exact rationals, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    dim: usize,
    entries: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn zeros(dim: usize) -> RationalMatrix {
        RationalMatrix {
            dim,
            entries: vec![BigRational::zero(); dim * dim],
        }
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> BigRational) -> RationalMatrix {
        let mut m = RationalMatrix::zeros(dim);
        for i in 0..dim {
            for j in 0..dim {
                *m.get_mut(i, j) = f(i, j);
            }
        }
        m
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> RationalMatrix {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim), "rows must be square");
        RationalMatrix::from_fn(dim, |i, j| BigRational::from_integer(rows[i][j].into()))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.dim + j]
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut BigRational {
        &mut self.entries[i * self.dim + j]
    }

    pub fn is_symmetric(&self) -> bool {
        self.asymmetry().is_none()
    }

    /// First index pair (i, j), i < j, where symmetry fails.
    pub fn asymmetry(&self) -> Option<(usize, usize)> {
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                if self.get(i, j) != self.get(j, i) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn matvec(&self, x: &[BigRational]) -> Result<Vec<BigRational>, ExactLinError> {
        if x.len() != self.dim {
            return Err(ExactLinError::DimensionMismatch {
                expected: self.dim,
                got: x.len(),
            });
        }
        Ok((0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.get(i, j) * &x[j]).sum())
            .collect())
    }

    pub fn quadratic_form(&self, x: &[BigRational]) -> Result<BigRational, ExactLinError> {
        let mx = self.matvec(x)?;
        Ok(x.iter().zip(&mx).map(|(a, b)| a * b).sum())
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.dim {
            let row: Vec<String> = (0..self.dim).map(|j| frac_string(self.get(i, j))).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Outcome of an LDL^T factorization with symmetric pivoting.
///
/// When `negative_witness` is `None` the factorization is complete and
/// exact: with P the permutation (position -> original index),
/// (P^T A P)[s][t] = A[perm[s]][perm[t]] equals (L D L^T)[s][t] entrywise.
/// Otherwise the input is not positive semidefinite and the witness `x`
/// (original coordinates) satisfies x^T A x < 0.
#[derive(Debug, Clone)]
pub struct LdltResult {
    pub permutation: Vec<usize>,
    pub lower: Vec<Vec<BigRational>>,
    pub diagonal: Vec<BigRational>,
    pub rank: usize,
    pub negative_witness: Option<Vec<BigRational>>,
}

impl LdltResult {
    pub fn is_complete(&self) -> bool {
        self.negative_witness.is_none()
    }

    /// Entrywise check of A[perm[s]][perm[t]] == (L D L^T)[s][t].
    pub fn reconstructs(&self, a: &RationalMatrix) -> bool {
        if !self.is_complete() {
            return false;
        }
        let n = a.dim();
        for s in 0..n {
            for t in 0..n {
                let mut sum = BigRational::zero();
                for k in 0..n {
                    sum += &self.lower[s][k] * &self.diagonal[k] * &self.lower[t][k];
                }
                if &sum != a.get(self.permutation[s], self.permutation[t]) {
                    return false;
                }
            }
        }
        true
    }
}

/// LDL^T with symmetric pivoting on the greatest remaining diagonal entry
/// (ties to the lowest index). Stops as soon as the matrix is revealed to
/// not be positive semidefinite, recording an exact witness direction.
pub fn ldlt(m: &RationalMatrix) -> Result<LdltResult, ExactLinError> {
    if let Some((row, col)) = m.asymmetry() {
        return Err(ExactLinError::Asymmetric { row, col });
    }
    let n = m.dim();
    let zero = BigRational::zero();
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|i| (0..n).map(|j| m.get(i, j).clone()).collect())
        .collect();
    let mut lower: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigRational::from_integer(1.into())
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect();
    let mut diagonal = vec![BigRational::zero(); n];
    let mut permutation: Vec<usize> = (0..n).collect();
    let mut rank = 0;
    let mut witness = None;

    for k in 0..n {
        let mut p = k;
        for i in k + 1..n {
            if a[i][i] > a[p][p] {
                p = i;
            }
        }
        if a[p][p] > zero {
            if p != k {
                a.swap(k, p);
                for row in a.iter_mut() {
                    row.swap(k, p);
                }
                permutation.swap(k, p);
                // only the already-computed columns of L carry data
                for j in 0..k {
                    let tmp = lower[k][j].clone();
                    lower[k][j] = lower[p][j].clone();
                    lower[p][j] = tmp;
                }
            }
            let d = a[k][k].clone();
            for i in k + 1..n {
                lower[i][k] = &a[i][k] / &d;
            }
            let pivot_row: Vec<BigRational> = a[k][k + 1..].to_vec();
            for i in k + 1..n {
                let f = lower[i][k].clone();
                for (off, akj) in pivot_row.iter().enumerate() {
                    let j = k + 1 + off;
                    let delta = &f * akj;
                    a[i][j] -= delta;
                }
            }
            diagonal[k] = d;
            rank += 1;
        } else {
            // greatest remaining diagonal is <= 0
            let neg = (k..n).find(|&i| a[i][i] < zero);
            let off = (k..n)
                .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
                .find(|&(i, j)| a[i][j] != zero);
            let mut y = vec![BigRational::zero(); n];
            match (neg, off) {
                (Some(i), _) => {
                    // e_i already exposes a negative value
                    y[i] = BigRational::from_integer(1.into());
                }
                (None, Some((i, j))) => {
                    // zero diagonal but coupled entries: e_i - sign(a_ij) e_j
                    // evaluates to exactly -2|a_ij| < 0
                    y[i] = BigRational::from_integer(1.into());
                    y[j] = if a[i][j] > zero {
                        BigRational::from_integer((-1).into())
                    } else {
                        BigRational::from_integer(1.into())
                    };
                }
                (None, None) => {
                    // remaining block is identically zero: done, PSD so far
                    break;
                }
            }
            witness = Some(lift_witness(&lower, &permutation, y));
            break;
        }
    }

    Ok(LdltResult {
        permutation,
        lower,
        diagonal,
        rank,
        negative_witness: witness,
    })
}

/// Solve L^T z = y by back-substitution and scatter through the
/// permutation, turning a bad direction of the current Schur complement
/// into a bad direction of the original matrix.
fn lift_witness(
    lower: &[Vec<BigRational>],
    permutation: &[usize],
    y: Vec<BigRational>,
) -> Vec<BigRational> {
    let n = y.len();
    let mut z = y;
    for i in (0..n).rev() {
        let mut s = z[i].clone();
        for j in i + 1..n {
            s -= &lower[j][i] * &z[j];
        }
        z[i] = s;
    }
    let mut out = vec![BigRational::zero(); n];
    for pos in 0..n {
        out[permutation[pos]] = z[pos].clone();
    }
    out
}

#[derive(Debug, Clone)]
pub enum PsdOutcome {
    Psd { rank: usize },
    NotPsd { witness: Vec<BigRational> },
}

impl PsdOutcome {
    pub fn is_psd(&self) -> bool {
        matches!(self, PsdOutcome::Psd { .. })
    }
}

pub fn is_psd(m: &RationalMatrix) -> Result<PsdOutcome, ExactLinError> {
    let f = ldlt(m)?;
    Ok(match f.negative_witness {
        None => PsdOutcome::Psd { rank: f.rank },
        Some(witness) => PsdOutcome::NotPsd { witness },
    })
}

/// True iff m * v = 0 exactly.
pub fn kernel_check(m: &RationalMatrix, v: &[BigRational]) -> Result<bool, ExactLinError> {
    let mv = m.matvec(v)?;
    Ok(mv.iter().all(|x| x.is_zero()))
}
