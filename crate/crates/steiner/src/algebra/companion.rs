use num::Zero;
use serde_json::json;

use crate::algebra::linalg::{kernel_basis, rank_exact, rank_of_columns};
use crate::algebra::vector::{format_rational, rational_to_f64, DesignVector, Scalar};
use crate::design::OrientedSts;
use crate::error::{Error, Result};

/// The skew-symmetric matrix A_w of the left-multiplication map
/// L_w(v) = w x v in the point basis: A_w [v] = [w x v].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CompanionMatrix {
    n: usize,
    rows: Vec<Vec<Scalar>>,
}

pub fn companion_matrix(o: &OrientedSts, w: &DesignVector) -> Result<CompanionMatrix> {
    let n = o.n();
    if w.dim() != n {
        return Err(Error::DimensionMismatch {
            left: w.dim(),
            right: n,
        });
    }
    let f = o.orientation_function();
    let mut rows = vec![vec![Scalar::zero(); n]; n];
    // Entry (i,j) is the s_i coefficient of w x s_j, i.e. f(k,j) w_k for the
    // triple {i,j,k}.
    for i in 1..=n as u32 {
        for j in 1..=n as u32 {
            if i == j {
                continue;
            }
            let k = o.base().third_label(i, j);
            let sign = f.get(k, j);
            let wk = w.coord(k);
            rows[i as usize - 1][j as usize - 1] = if sign > 0 { wk.clone() } else { -wk.clone() };
        }
    }
    Ok(CompanionMatrix { n, rows })
}

impl CompanionMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> CompanionMatrix {
        CompanionMatrix {
            n: rows.len(),
            rows,
        }
    }

    pub fn apply(&self, v: &DesignVector) -> Result<DesignVector> {
        if v.dim() != self.n {
            return Err(Error::DimensionMismatch {
                left: v.dim(),
                right: self.n,
            });
        }
        let coords = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .zip(v.coords())
                    .map(|(a, b)| a * b)
                    .fold(Scalar::zero(), |acc, t| acc + t)
            })
            .collect();
        Ok(DesignVector::from_coords(coords))
    }

    pub fn is_skew_symmetric(&self) -> bool {
        (0..self.n).all(|i| {
            self.rows[i][i].is_zero()
                && (i + 1..self.n).all(|j| self.rows[i][j] == -self.rows[j][i].clone())
        })
    }

    pub fn transposed(&self) -> CompanionMatrix {
        let rows = (0..self.n)
            .map(|i| (0..self.n).map(|j| self.rows[j][i].clone()).collect())
            .collect();
        CompanionMatrix { n: self.n, rows }
    }

    pub fn rank(&self) -> usize {
        rank_exact(&self.rows)
    }

    pub fn kernel(&self) -> Vec<DesignVector> {
        kernel_basis(&self.rows)
    }

    pub fn to_f64(&self) -> Vec<Vec<f64>> {
        self.rows
            .iter()
            .map(|r| r.iter().map(rational_to_f64).collect())
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!(self
            .rows
            .iter()
            .map(|r| r.iter().map(format_rational).collect::<Vec<String>>())
            .collect::<Vec<_>>())
    }

    /// Aligned text grid, one row per line.
    pub fn to_grid(&self) -> String {
        let cells: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(format_rational).collect())
            .collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        let mut out = String::new();
        for row in &cells {
            let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }
}

/// The outcome of the zero-divisor test rank(A_w) < n-1.
#[derive(Clone, Debug)]
pub struct ZeroDivisorReport {
    pub is_zero_divisor: bool,
    pub rank: usize,
    /// A kernel vector independent of w, when one exists.
    pub witness: Option<DesignVector>,
}

pub fn is_zero_divisor(o: &OrientedSts, w: &DesignVector) -> Result<ZeroDivisorReport> {
    if w.is_zero() {
        return Err(Error::ZeroVector);
    }
    let a = companion_matrix(o, w)?;
    let rank = a.rank();
    let flag = rank < o.n() - 1;
    let witness = if flag {
        a.kernel()
            .into_iter()
            .find(|k| rank_of_columns(&[w.clone(), k.clone()]) == 2)
    } else {
        None
    };
    Ok(ZeroDivisorReport {
        is_zero_divisor: flag,
        rank,
        witness,
    })
}
