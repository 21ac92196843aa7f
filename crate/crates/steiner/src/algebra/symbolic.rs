//! Symbolic iterate matrices over the function field Q(v_1..v_n, w_1..w_n).
//!
//! The columns [v], A_w[v], A_w^2[v], ... are polynomials, so the generic
//! rank of the iterate matrix (the rank for indeterminate v, w) can be read
//! off minors: it is the largest r for which some r x r minor is a nonzero
//! polynomial. A vanishing set of (r+1)-minors is an identity, valid for
//! every real specialization.

use crate::algebra::poly::{det, Poly};
use crate::design::OrientedSts;

/// Symbolic columns [v, A_w v, ..., A_w^k v]; variables 0..n-1 are the
/// coordinates of v, n..2n-1 those of w.
pub fn symbolic_iterates(o: &OrientedSts, k: usize) -> Vec<Vec<Poly>> {
    let n = o.n();
    let nv = 2 * n;
    let f = o.orientation_function();
    // A[i][j] = f(t,j) w_t with {i,j,t} the triple through i,j
    let mut a = vec![vec![Poly::zero(nv); n]; n];
    for i in 1..=n as u32 {
        for j in 1..=n as u32 {
            if i == j {
                continue;
            }
            let t = o.base().third_label(i, j);
            let sign = crate::algebra::vector::Scalar::from_integer(f.get(t, j).into());
            a[i as usize - 1][j as usize - 1] = Poly::var(nv, n + t as usize - 1).scale(&sign);
        }
    }
    let mut cols: Vec<Vec<Poly>> = Vec::with_capacity(k + 1);
    cols.push((0..n).map(|i| Poly::var(nv, i)).collect());
    for _ in 0..k {
        let prev = cols.last().expect("nonempty");
        let next: Vec<Poly> = (0..n)
            .map(|i| {
                let mut acc = Poly::zero(nv);
                for j in 0..n {
                    if !a[i][j].is_zero() {
                        acc.add_assign(&a[i][j].mul(&prev[j]));
                    }
                }
                acc
            })
            .collect();
        cols.push(next);
    }
    cols
}

fn subsets(n: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = vec![];
    let mut cur = vec![];
    fn rec(start: usize, n: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, r, cur, out);
            cur.pop();
        }
    }
    rec(0, n, r, &mut cur, &mut out);
    out
}

/// The generic rank of the iterate matrix [v, A_w v, ..., A_w^k v].
pub fn generic_krylov_rank(o: &OrientedSts, k: usize) -> usize {
    let n = o.n();
    let cols = symbolic_iterates(o, k);
    let ncols = cols.len();
    let max_r = n.min(ncols);
    for r in (1..=max_r).rev() {
        for col_set in subsets(ncols, r) {
            for row_set in subsets(n, r) {
                let sub: Vec<Vec<Poly>> = row_set
                    .iter()
                    .map(|&i| col_set.iter().map(|&j| cols[j][i].clone()).collect())
                    .collect();
                if !det(&sub).is_zero() {
                    return r;
                }
            }
        }
    }
    0
}

/// True when every (r+1) x (r+1) minor of the iterate matrix vanishes
/// identically, i.e. the generic rank is at most r.
pub fn krylov_rank_at_most(o: &OrientedSts, k: usize, r: usize) -> bool {
    let n = o.n();
    let cols = symbolic_iterates(o, k);
    let ncols = cols.len();
    if r + 1 > n.min(ncols) {
        return true;
    }
    for col_set in subsets(ncols, r + 1) {
        for row_set in subsets(n, r + 1) {
            let sub: Vec<Vec<Poly>> = row_set
                .iter()
                .map(|&i| col_set.iter().map(|&j| cols[j][i].clone()).collect())
                .collect();
            if !det(&sub).is_zero() {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::companion::companion_matrix;
    use crate::design::builtin;
    use crate::sampling;

    #[test]
    fn symbolic_iterates_specialize_to_numeric_ones() {
        let o = builtin::oriented("zd7").unwrap();
        let cols = symbolic_iterates(&o, 2);
        let mut rng = sampling::rng(2, "symbolic");
        let v = sampling::random_vector(&mut rng, 7);
        let w = sampling::random_vector(&mut rng, 7);
        let mut values = v.coords().to_vec();
        values.extend_from_slice(w.coords());
        let a = companion_matrix(&o, &w).unwrap();
        let av = a.apply(&v).unwrap();
        let aav = a.apply(&av).unwrap();
        for (i, entry) in cols[1].iter().enumerate() {
            assert_eq!(entry.eval(&values), av.coords()[i]);
        }
        for (i, entry) in cols[2].iter().enumerate() {
            assert_eq!(entry.eval(&values), aav.coords()[i]);
        }
    }

    #[test]
    fn first_rank_growth_orientation_plateaus_at_three() {
        // all 4x4 minors of [v, Av, A^2 v, A^3 v] vanish identically and a
        // 3x3 minor survives
        let o = builtin::oriented("rg7a").unwrap();
        assert!(krylov_rank_at_most(&o, 3, 3));
        assert_eq!(generic_krylov_rank(&o, 3), 3);
    }

    #[test]
    fn second_orientation_exceeds_three_generically() {
        let o = builtin::oriented("rg7b").unwrap();
        assert!(!krylov_rank_at_most(&o, 3, 3));
    }
}
