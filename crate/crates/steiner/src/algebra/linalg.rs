//! Exact rank and kernel of rational matrices.
#![allow(clippy::needless_range_loop)]
//!
//! Rank runs fraction-free (Bareiss) over integers after clearing row
//! denominators, so entries never leave Z and intermediate growth stays
//! polynomial. Kernels come from a rational Gauss-Jordan pass and are
//! normalized to primitive integer vectors.

use num::bigint::BigInt;
use num::{Integer, One, Signed, Zero};

use crate::algebra::vector::{DesignVector, Scalar};

fn clear_row(row: &[Scalar]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for x in row {
        lcm = lcm.lcm(x.denom());
    }
    row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
}

/// Exact rank by fraction-free elimination.
pub fn rank_exact(rows: &[Vec<Scalar>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let mut m: Vec<Vec<BigInt>> = rows.iter().map(|r| clear_row(r)).collect();
    let nrows = m.len();
    let ncols = m[0].len();
    let mut rank = 0usize;
    let mut prev = BigInt::one();
    for col in 0..ncols {
        let pivot = (rank..nrows).find(|&r| !m[r][col].is_zero());
        let Some(p) = pivot else { continue };
        m.swap(rank, p);
        for r in rank + 1..nrows {
            for c in col + 1..ncols {
                let val = (&m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c]) / &prev;
                m[r][c] = val;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rank
}

/// Rank of the matrix whose columns are the given vectors.
pub fn rank_of_columns(cols: &[DesignVector]) -> usize {
    // rank is transpose-invariant; treat each vector as a row
    let rows: Vec<Vec<Scalar>> = cols.iter().map(|v| v.coords().to_vec()).collect();
    rank_exact(&rows)
}

fn normalize_kernel_vector(coords: Vec<Scalar>) -> DesignVector {
    let mut lcm = BigInt::one();
    for x in &coords {
        lcm = lcm.lcm(x.denom());
    }
    let mut ints: Vec<BigInt> = coords
        .iter()
        .map(|x| x.numer() * (&lcm / x.denom()))
        .collect();
    let mut gcd = BigInt::zero();
    for x in &ints {
        gcd = gcd.gcd(x);
    }
    if !gcd.is_zero() {
        for x in ints.iter_mut() {
            *x = &*x / &gcd;
        }
    }
    if let Some(first) = ints.iter().find(|x| !x.is_zero()) {
        if first.is_negative() {
            for x in ints.iter_mut() {
                *x = -&*x;
            }
        }
    }
    DesignVector::from_coords(ints.into_iter().map(Scalar::from_integer).collect())
}

/// A basis of the null space {x : M x = 0}, one primitive integer vector per
/// free column, ordered by free-column index, first nonzero entry positive.
pub fn kernel_basis(rows: &[Vec<Scalar>]) -> Vec<DesignVector> {
    if rows.is_empty() {
        return vec![];
    }
    let ncols = rows[0].len();
    let mut m: Vec<Vec<Scalar>> = rows.to_vec();
    let nrows = m.len();
    let mut pivot_cols: Vec<usize> = vec![];
    let mut r = 0usize;
    for col in 0..ncols {
        let pivot = (r..nrows).find(|&i| !m[i][col].is_zero());
        let Some(p) = pivot else { continue };
        m.swap(r, p);
        let inv = m[r][col].clone();
        for c in col..ncols {
            m[r][c] = &m[r][c] / &inv;
        }
        for i in 0..nrows {
            if i != r && !m[i][col].is_zero() {
                let factor = m[i][col].clone();
                for c in col..ncols {
                    m[i][c] = &m[i][c] - &factor * &m[r][c];
                }
            }
        }
        pivot_cols.push(col);
        r += 1;
        if r == nrows {
            break;
        }
    }
    let mut basis = vec![];
    for free in 0..ncols {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut x = vec![Scalar::zero(); ncols];
        x[free] = Scalar::one();
        for (ri, &pc) in pivot_cols.iter().enumerate() {
            x[pc] = -m[ri][free].clone();
        }
        basis.push(normalize_kernel_vector(x));
    }
    basis
}

/// True when `v` lies in the span of `vecs` (exact).
pub fn in_span(vecs: &[DesignVector], v: &DesignVector) -> bool {
    let base = rank_of_columns(vecs);
    let mut all: Vec<DesignVector> = vecs.to_vec();
    all.push(v.clone());
    rank_of_columns(&all) == base
}

/// Exact span equality in both directions.
pub fn same_span(a: &[DesignVector], b: &[DesignVector]) -> bool {
    a.iter().all(|v| in_span(b, v)) && b.iter().all(|v| in_span(a, v))
}

/// Characteristic polynomial coefficients of an n x n rational matrix by the
/// Faddeev-LeVerrier recurrence: returns c_0..c_n with
/// det(xI - M) = sum c_k x^k, c_n = 1.
pub fn char_poly(m: &[Vec<Scalar>]) -> Vec<Scalar> {
    let n = m.len();
    let mut coeffs = vec![Scalar::zero(); n + 1];
    coeffs[n] = Scalar::one();
    let mut aux: Vec<Vec<Scalar>> = vec![vec![Scalar::zero(); n]; n]; // M_0 = 0
    let mut c = Scalar::one();
    for k in 1..=n {
        // M_k = M * M_{k-1} + c_{n-k+1} I
        let mut next = vec![vec![Scalar::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = Scalar::zero();
                for l in 0..n {
                    acc += &m[i][l] * &aux[l][j];
                }
                next[i][j] = acc;
            }
        }
        for i in 0..n {
            next[i][i] = &next[i][i] + &c;
        }
        // c_{n-k} = -tr(M * M_k)/k
        let mut tr = Scalar::zero();
        for i in 0..n {
            for l in 0..n {
                tr += &m[i][l] * &next[l][i];
            }
        }
        c = -tr / Scalar::from_integer(k.into());
        coeffs[n - k] = c.clone();
        aux = next;
    }
    coeffs
}

pub fn eval_poly(coeffs: &[Scalar], x: &Scalar) -> Scalar {
    let mut acc = Scalar::zero();
    for c in coeffs.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64) -> Scalar {
        Scalar::from_integer(n.into())
    }

    #[test]
    fn rank_of_zero_and_identity() {
        let zero = vec![vec![Scalar::zero(); 7]; 7];
        assert_eq!(rank_exact(&zero), 0);
        assert_eq!(kernel_basis(&zero).len(), 7);
        let mut id = vec![vec![Scalar::zero(); 4]; 4];
        for (i, row) in id.iter_mut().enumerate() {
            row[i] = Scalar::one();
        }
        assert_eq!(rank_exact(&id), 4);
        assert!(kernel_basis(&id).is_empty());
    }

    #[test]
    fn kernel_vectors_annihilate() {
        let rows = vec![
            vec![rat(1), rat(2), rat(3), rat(4)],
            vec![rat(2), rat(4), rat(6), rat(8)],
            vec![rat(0), rat(1), rat(1), rat(0)],
        ];
        assert_eq!(rank_exact(&rows), 2);
        let ker = kernel_basis(&rows);
        assert_eq!(ker.len(), 2);
        for k in &ker {
            for row in &rows {
                let dot = row
                    .iter()
                    .zip(k.coords())
                    .map(|(a, b)| a * b)
                    .fold(Scalar::zero(), |acc, t| acc + t);
                assert!(dot.is_zero());
            }
            let first = k.coords().iter().find(|x| !x.is_zero()).unwrap();
            assert!(first.numer() > &num::bigint::BigInt::zero());
        }
    }

    #[test]
    fn rational_entries_are_cleared_exactly() {
        // second row is 2/3 of the first: rank 1 exactly
        let rows = vec![
            vec![Scalar::new(1.into(), 2.into()), rat(1)],
            vec![
                Scalar::new(1.into(), 3.into()),
                Scalar::new(2.into(), 3.into()),
            ],
        ];
        assert_eq!(rank_exact(&rows), 1);
        let rows = vec![
            vec![Scalar::new(1.into(), 2.into()), rat(1)],
            vec![
                Scalar::new(1.into(), 3.into()),
                Scalar::new(1.into(), 5.into()),
            ],
        ];
        assert_eq!(rank_exact(&rows), 2);
    }

    #[test]
    fn span_membership() {
        let a = DesignVector::from_integers(&[1, 0, 1]);
        let b = DesignVector::from_integers(&[0, 1, 1]);
        let c = DesignVector::from_integers(&[1, 1, 2]);
        let d = DesignVector::from_integers(&[1, 1, 1]);
        assert!(in_span(&[a.clone(), b.clone()], &c));
        assert!(!in_span(&[a, b], &d));
    }

    #[test]
    fn char_poly_of_diagonal() {
        // diag(1,2): x^2 - 3x + 2
        let m = vec![vec![rat(1), rat(0)], vec![rat(0), rat(2)]];
        let c = char_poly(&m);
        assert_eq!(c, vec![rat(2), rat(-3), rat(1)]);
        assert!(eval_poly(&c, &rat(1)).is_zero());
        assert!(eval_poly(&c, &rat(2)).is_zero());
    }
}
