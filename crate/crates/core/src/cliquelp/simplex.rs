//! Dense exact-rational simplex for maximization, with Bland's anti-cycling
//! rule. The caller supplies a starting basis whose columns already form an
//! identity in the constraint matrix (slack or structural), so no phase-1
//! is ever needed here.

use num::{BigRational, Zero};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SimplexError {
    Shape(&'static str),
    NegativeRhs { row: usize },
    NotIdentityBasis { row: usize },
    Unbounded { column: usize },
    PivotLimit,
}

impl fmt::Display for SimplexError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SimplexError::Shape(what) => write!(f, "malformed program: {what}"),
            SimplexError::NegativeRhs { row } => write!(f, "negative right-hand side in row {row}"),
            SimplexError::NotIdentityBasis { row } => {
                write!(f, "starting basis column for row {row} is not a unit column")
            }
            SimplexError::Unbounded { column } => {
                write!(f, "objective unbounded along column {column}")
            }
            SimplexError::PivotLimit => write!(f, "pivot limit exceeded"),
        }
    }
}

impl std::error::Error for SimplexError {}

/// maximize objective . x subject to rows . x = rhs, x >= 0, starting from
/// the given basis.
pub struct Program {
    pub rows: Vec<Vec<BigRational>>,
    pub rhs: Vec<BigRational>,
    pub objective: Vec<BigRational>,
    pub basis: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct Optimum {
    pub value: BigRational,
    pub solution: Vec<BigRational>,
}

const PIVOT_LIMIT: usize = 200_000;

pub fn maximize(p: Program) -> Result<Optimum, SimplexError> {
    let m = p.rows.len();
    let cols = p.objective.len();
    if p.rhs.len() != m || p.basis.len() != m {
        return Err(SimplexError::Shape("row, rhs and basis counts differ"));
    }
    if p.rows.iter().any(|r| r.len() != cols) {
        return Err(SimplexError::Shape("row width differs from objective"));
    }
    let zero = BigRational::zero();
    let one = BigRational::from_integer(1.into());
    for (r, v) in p.rhs.iter().enumerate() {
        if v < &zero {
            return Err(SimplexError::NegativeRhs { row: r });
        }
    }
    for (r, &b) in p.basis.iter().enumerate() {
        if b >= cols {
            return Err(SimplexError::Shape("basis index out of range"));
        }
        for (s, row) in p.rows.iter().enumerate() {
            let want = if s == r { &one } else { &zero };
            if &row[b] != want {
                return Err(SimplexError::NotIdentityBasis { row: r });
            }
        }
    }

    let mut rows = p.rows;
    let mut rhs = p.rhs;
    let mut basis = p.basis;
    // reduced costs: c_j - c_B . A_j
    let mut red: Vec<BigRational> = (0..cols)
        .map(|j| {
            let mut v = p.objective[j].clone();
            for r in 0..m {
                v -= &p.objective[basis[r]] * &rows[r][j];
            }
            v
        })
        .collect();

    for _ in 0..PIVOT_LIMIT {
        // Bland: entering = lowest-index column with positive reduced cost
        let Some(enter) = (0..cols).find(|&j| red[j] > zero) else {
            let mut solution = vec![BigRational::zero(); cols];
            for r in 0..m {
                solution[basis[r]] = rhs[r].clone();
            }
            let value = (0..cols)
                .map(|j| &p.objective[j] * &solution[j])
                .sum();
            return Ok(Optimum { value, solution });
        };
        // leaving row: minimal ratio, ties by smallest basis variable
        let mut leave: Option<usize> = None;
        for r in 0..m {
            if rows[r][enter] > zero {
                let better = match leave {
                    None => true,
                    Some(l) => {
                        let cand = &rhs[r] / &rows[r][enter];
                        let best = &rhs[l] / &rows[l][enter];
                        cand < best || (cand == best && basis[r] < basis[l])
                    }
                };
                if better {
                    leave = Some(r);
                }
            }
        }
        let Some(leave) = leave else {
            return Err(SimplexError::Unbounded { column: enter });
        };
        // pivot on (leave, enter)
        let pivot = rows[leave][enter].clone();
        for v in rows[leave].iter_mut() {
            *v /= &pivot;
        }
        rhs[leave] /= &pivot;
        for r in 0..m {
            if r != leave && !rows[r][enter].is_zero() {
                let f = rows[r][enter].clone();
                let (pr, cr) = if r < leave {
                    let (a, b) = rows.split_at_mut(leave);
                    (&b[0], &mut a[r])
                } else {
                    let (a, b) = rows.split_at_mut(r);
                    (&a[leave], &mut b[0])
                };
                for (x, pv) in cr.iter_mut().zip(pr.iter()) {
                    *x -= &f * pv;
                }
                let delta = &f * &rhs[leave];
                rhs[r] -= delta;
            }
        }
        if !red[enter].is_zero() {
            let f = red[enter].clone();
            for (x, pv) in red.iter_mut().zip(rows[leave].iter()) {
                *x -= &f * pv;
            }
        }
        basis[leave] = enter;
    }
    Err(SimplexError::PivotLimit)
}
