use crate::algebra::linalg::rank_of_columns;
use crate::algebra::{companion_matrix, DesignVector};
use crate::design::OrientedSts;
use crate::dynamics::spectral::{matvec, norm};
use crate::dynamics::Tolerances;
use crate::error::{Error, Result};

/// The float companion matrix of w, built directly from the orientation.
pub fn float_companion(o: &OrientedSts, w: &[f64]) -> Result<Vec<Vec<f64>>> {
    let n = o.n();
    if w.len() != n {
        return Err(Error::DimensionMismatch {
            left: w.len(),
            right: n,
        });
    }
    let f = o.orientation_function();
    let mut a = vec![vec![0.0; n]; n];
    for i in 1..=n as u32 {
        for j in 1..=n as u32 {
            if i == j {
                continue;
            }
            let k = o.base().third_label(i, j);
            a[i as usize - 1][j as usize - 1] = f.get(k, j) as f64 * w[k as usize - 1];
        }
    }
    Ok(a)
}

/// The orbit v, L_w(v), ..., L_w^k(v) with per-step normalizations
/// (left undefined where an iterate vanishes).
#[derive(Clone, Debug)]
pub struct IterationTrace {
    pub w: Vec<f64>,
    pub v: Vec<f64>,
    pub iterates: Vec<Vec<f64>>,
    pub normalized: Vec<Option<Vec<f64>>>,
}

pub fn iterate_l(o: &OrientedSts, w: &[f64], v: &[f64], k: usize) -> Result<IterationTrace> {
    let n = o.n();
    if v.len() != n {
        return Err(Error::DimensionMismatch {
            left: v.len(),
            right: n,
        });
    }
    if !w.iter().chain(v).all(|x| x.is_finite()) {
        return Err(Error::NonFinite);
    }
    let a = float_companion(o, w)?;
    let mut iterates = vec![v.to_vec()];
    for _ in 0..k {
        iterates.push(matvec(&a, iterates.last().expect("nonempty")));
    }
    let normalized = iterates
        .iter()
        .map(|x| {
            let nx = norm(x);
            (nx > 0.0).then(|| x.iter().map(|c| c / nx).collect())
        })
        .collect();
    Ok(IterationTrace {
        w: w.to_vec(),
        v: v.to_vec(),
        iterates,
        normalized,
    })
}

#[derive(Clone, Debug)]
pub struct RankGrowth {
    /// ranks[k] = dim span{v, L^1 v, ..., L^k v}.
    pub ranks: Vec<usize>,
    /// First k with ranks[k] = ranks[k+1]; permanent from there on.
    pub plateau_k: Option<usize>,
    pub plateau_rank: Option<usize>,
}

fn plateau_of(ranks: &[usize]) -> (Option<usize>, Option<usize>) {
    for k in 0..ranks.len().saturating_sub(1) {
        if ranks[k] == ranks[k + 1] {
            return (Some(k), Some(ranks[k]));
        }
    }
    (None, None)
}

/// Exact-arithmetic rank growth of the iterate span.
pub fn rank_growth(
    o: &OrientedSts,
    v: &DesignVector,
    w: &DesignVector,
    max_k: usize,
) -> Result<RankGrowth> {
    let n = o.n();
    if v.dim() != n || w.dim() != n {
        return Err(Error::DimensionMismatch {
            left: v.dim().min(w.dim()),
            right: n,
        });
    }
    let a = companion_matrix(o, w)?;
    let mut cols = vec![v.clone()];
    let mut ranks = Vec::with_capacity(max_k + 1);
    ranks.push(rank_of_columns(&cols));
    for _ in 0..max_k {
        let next = a.apply(cols.last().expect("nonempty"))?;
        cols.push(next);
        ranks.push(rank_of_columns(&cols));
    }
    let (plateau_k, plateau_rank) = plateau_of(&ranks);
    Ok(RankGrowth {
        ranks,
        plateau_k,
        plateau_rank,
    })
}

/// Numerical rank by column-pivoted orthogonalization: columns whose
/// residual falls below tol.rank times the largest column norm do not count.
pub(crate) fn numerical_rank(cols: &[Vec<f64>], tol: &Tolerances) -> usize {
    let mut basis: Vec<Vec<f64>> = vec![];
    let scale = cols.iter().map(|c| norm(c)).fold(0.0f64, f64::max);
    if scale == 0.0 {
        return 0;
    }
    let mut remaining: Vec<Vec<f64>> = cols.to_vec();
    loop {
        // column pivoting: take the residual of largest norm
        let mut best = 0usize;
        let mut best_norm = -1.0;
        for (i, c) in remaining.iter().enumerate() {
            let n = norm(c);
            if n > best_norm {
                best_norm = n;
                best = i;
            }
        }
        if best_norm <= tol.rank * scale {
            break;
        }
        let mut u = remaining.swap_remove(best);
        let nu = norm(&u);
        for x in u.iter_mut() {
            *x /= nu;
        }
        for c in remaining.iter_mut() {
            let d: f64 = u.iter().zip(c.iter()).map(|(a, b)| a * b).sum();
            for (x, y) in c.iter_mut().zip(u.iter()) {
                *x -= d * y;
            }
        }
        basis.push(u);
        if remaining.is_empty() {
            break;
        }
    }
    basis.len()
}

/// Float-path rank growth for inputs that are not rational-representable.
pub fn rank_growth_float(
    o: &OrientedSts,
    v: &[f64],
    w: &[f64],
    max_k: usize,
    tol: &Tolerances,
) -> Result<RankGrowth> {
    let trace = iterate_l(o, w, v, max_k)?;
    let mut ranks = Vec::with_capacity(max_k + 1);
    for k in 0..=max_k {
        ranks.push(numerical_rank(&trace.iterates[..=k], tol));
    }
    let (plateau_k, plateau_rank) = plateau_of(&ranks);
    Ok(RankGrowth {
        ranks,
        plateau_k,
        plateau_rank,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_vector;
    use crate::design::builtin;

    #[test]
    fn identity_at_k_zero() {
        let o = builtin::oriented("zd7").unwrap();
        let v = vec![1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0];
        let w = vec![0.0; 7];
        let t = iterate_l(&o, &w, &v, 0).unwrap();
        assert_eq!(t.iterates.len(), 1);
        assert_eq!(t.iterates[0], v);
    }

    #[test]
    fn zero_w_gives_constant_zero_tail() {
        let o = builtin::oriented("zd7").unwrap();
        let v = vec![0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0];
        let t = iterate_l(&o, &[0.0; 7], &v, 3).unwrap();
        assert!(t.iterates[1..].iter().all(|x| x.iter().all(|&c| c == 0.0)));
        assert!(t.normalized[1..].iter().all(Option::is_none));
        assert!(t.normalized[0].is_some());
    }

    #[test]
    fn first_iterate_matches_published_formula() {
        // w = s1+s5 on the zero-divisor orientation:
        // [w x v] = (-v4, -v3+v7, v2+v6, v1-v5, v4, -v3+v7, -v2-v6)
        let o = builtin::oriented("zd7").unwrap();
        let w = vec![1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0];
        let v = vec![1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0];
        let t = iterate_l(&o, &w, &v, 1).unwrap();
        let expected = [
            -v[3],
            -v[2] + v[6],
            v[1] + v[5],
            v[0] - v[4],
            v[3],
            -v[2] + v[6],
            -v[1] - v[5],
        ];
        for (a, b) in t.iterates[1].iter().zip(expected) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn exact_rank_growth_examples() {
        let o = builtin::oriented("rg7b").unwrap();
        let v = parse_vector("s1+s2", 7).unwrap();
        let w = parse_vector("s2+s3+s4", 7).unwrap();
        let g = rank_growth(&o, &v, &w, 7).unwrap();
        assert_eq!(g.plateau_rank, Some(7));
        assert_eq!(g.ranks, vec![1, 2, 3, 4, 5, 6, 7, 7]);

        let o = builtin::oriented("rg7a").unwrap();
        let w = parse_vector("s2+s3+s5", 7).unwrap();
        let g = rank_growth(&o, &v, &w, 7).unwrap();
        assert_eq!(g.plateau_rank, Some(3));
        assert_eq!(g.plateau_k, Some(2));
    }

    #[test]
    fn float_rank_growth_agrees_with_exact() {
        let o = builtin::oriented("rg7b").unwrap();
        let v = parse_vector("s7", 7).unwrap();
        let w = parse_vector("s1+s3", 7).unwrap();
        let exact = rank_growth(&o, &v, &w, 7).unwrap();
        let float =
            rank_growth_float(&o, &v.to_f64(), &w.to_f64(), 7, &Tolerances::default()).unwrap();
        assert_eq!(exact.ranks, float.ranks);
        assert_eq!(exact.plateau_rank, Some(3));
    }

    #[test]
    fn plateau_is_permanent() {
        let o = builtin::oriented("rg7a").unwrap();
        let v = parse_vector("s1+s2", 7).unwrap();
        let w = parse_vector("s2+s3+s5", 7).unwrap();
        let g = rank_growth(&o, &v, &w, 12).unwrap();
        let k = g.plateau_k.unwrap();
        assert!(g.ranks[k..].iter().all(|&r| r == g.ranks[k]));
    }
}
