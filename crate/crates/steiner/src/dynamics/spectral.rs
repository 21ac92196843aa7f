//! Block diagonalization of real skew-symmetric matrices.
#![allow(clippy::needless_range_loop)]
//!
//! The route is deterministic: form the symmetric PSD matrix -A^2,
//! eigendecompose it with cyclic Jacobi sweeps in fixed order, cluster the
//! eigenvalues lambda^2, and build each invariant 2-plane from a unit
//! eigenvector u and A u / lambda. This guarantees orthogonality and
//! reproducibility, with lambda the square root of the -A^2 eigenvalue.

use crate::dynamics::Tolerances;
use crate::error::{Error, Result};

pub(crate) fn frobenius(m: &[Vec<f64>]) -> f64 {
    m.iter()
        .flat_map(|r| r.iter())
        .map(|x| x * x)
        .sum::<f64>()
        .sqrt()
}

pub(crate) fn matvec(m: &[Vec<f64>], v: &[f64]) -> Vec<f64> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

pub(crate) fn norm(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Cyclic Jacobi eigendecomposition of a symmetric matrix; returns
/// (eigenvalues, eigenvectors as rows), unsorted.
fn jacobi_eigh(sym: &[Vec<f64>]) -> (Vec<f64>, Vec<Vec<f64>>) {
    let n = sym.len();
    let mut a: Vec<Vec<f64>> = sym.to_vec();
    let mut v: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
        .collect();
    let scale = frobenius(sym).max(1.0);
    for _sweep in 0..100 {
        let mut off = 0.0;
        for p in 0..n {
            for q in p + 1..n {
                off += a[p][q] * a[p][q];
            }
        }
        if off.sqrt() <= 1e-15 * scale {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q].abs() <= 1e-18 * scale {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for k in 0..n {
                    let vpk = v[p][k];
                    let vqk = v[q][k];
                    v[p][k] = c * vpk - s * vqk;
                    v[q][k] = s * vpk + c * vqk;
                }
            }
        }
    }
    let eigs = (0..n).map(|i| a[i][i]).collect();
    (eigs, v)
}

/// The canonical form of a skew-symmetric matrix: the distinct rotation
/// rates, an orthonormal basis ordered as (pair, pair, ..., null), and the
/// implied block structure. Rows of `q` are the basis vectors, so
/// `q A q^T = B` with B the canonical block matrix.
#[derive(Clone, Debug)]
pub struct SkewSpectrum {
    pub n: usize,
    /// Distinct rotation rates, strictly decreasing, all > 0.
    pub lambdas: Vec<f64>,
    /// Invariant 2-planes per distinct rate.
    pub multiplicities: Vec<usize>,
    /// One rate per 2-plane, in row order (lambda repeated by multiplicity).
    pub pair_lambdas: Vec<f64>,
    /// Orthonormal basis rows: pair rows 2p, 2p+1 for each plane, then the
    /// null basis.
    pub q: Vec<Vec<f64>>,
    pub null_dim: usize,
    /// Minimum relative separation between distinct clusters, when any two
    /// clusters are close enough to make the clustering ambiguous.
    pub ambiguous_separation: Option<f64>,
}

impl SkewSpectrum {
    /// Row range of the 2-plane for pair index p.
    pub fn pair_rows(&self, p: usize) -> (&[f64], &[f64]) {
        (&self.q[2 * p], &self.q[2 * p + 1])
    }

    /// Pair indices belonging to the j-th distinct rate.
    pub fn cluster_pairs(&self, j: usize) -> std::ops::Range<usize> {
        let start: usize = self.multiplicities[..j].iter().sum();
        start..start + self.multiplicities[j]
    }

    /// The canonical block matrix B with 2x2 blocks [[0, l], [-l, 0]] and a
    /// zero tail.
    pub fn block_matrix(&self) -> Vec<Vec<f64>> {
        let mut b = vec![vec![0.0; self.n]; self.n];
        for (p, &l) in self.pair_lambdas.iter().enumerate() {
            b[2 * p][2 * p + 1] = l;
            b[2 * p + 1][2 * p] = -l;
        }
        b
    }

    /// Reconstruction Q^T B Q of the original matrix.
    pub fn reconstruct(&self) -> Vec<Vec<f64>> {
        let b = self.block_matrix();
        let n = self.n;
        // (Q^T B Q)_{ij} = sum_{k,l} q[k][i] b[k][l] q[l][j]
        let mut bq = vec![vec![0.0; n]; n];
        for k in 0..n {
            for l in 0..n {
                if b[k][l] == 0.0 {
                    continue;
                }
                for j in 0..n {
                    bq[k][j] += b[k][l] * self.q[l][j];
                }
            }
        }
        let mut out = vec![vec![0.0; n]; n];
        for i in 0..n {
            for k in 0..n {
                let qki = self.q[k][i];
                if qki == 0.0 {
                    continue;
                }
                for j in 0..n {
                    out[i][j] += qki * bq[k][j];
                }
            }
        }
        out
    }

    /// Relative reconstruction defect ||Q^T B Q - A||_F / ||A||_F.
    pub fn reconstruction_defect(&self, a: &[Vec<f64>]) -> f64 {
        let scale = frobenius(a);
        if scale == 0.0 {
            return 0.0;
        }
        let r = self.reconstruct();
        let mut defect = 0.0;
        for i in 0..self.n {
            for j in 0..self.n {
                defect += (r[i][j] - a[i][j]).powi(2);
            }
        }
        defect.sqrt() / scale
    }

    /// Orthogonality defect ||Q Q^T - I||_F.
    pub fn orthogonality_defect(&self) -> f64 {
        let n = self.n;
        let mut defect = 0.0;
        for i in 0..n {
            for j in 0..n {
                let d = dot(&self.q[i], &self.q[j]) - if i == j { 1.0 } else { 0.0 };
                defect += d * d;
            }
        }
        defect.sqrt()
    }

    /// Projection of v onto the invariant space V_j of the j-th distinct rate.
    pub fn project_cluster(&self, j: usize, v: &[f64]) -> Vec<f64> {
        let mut out = vec![0.0; self.n];
        for p in self.cluster_pairs(j) {
            for row in [&self.q[2 * p], &self.q[2 * p + 1]] {
                let c = dot(row, v);
                for (o, r) in out.iter_mut().zip(row.iter()) {
                    *o += c * r;
                }
            }
        }
        out
    }

    /// Projection of v onto the null space N.
    pub fn project_null(&self, v: &[f64]) -> Vec<f64> {
        let mut out = vec![0.0; self.n];
        let start = self.n - self.null_dim;
        for row in &self.q[start..] {
            let c = dot(row, v);
            for (o, r) in out.iter_mut().zip(row.iter()) {
                *o += c * r;
            }
        }
        out
    }
}

fn gram_schmidt_against(v: &mut [f64], basis: &[Vec<f64>]) {
    for b in basis {
        let c = dot(v, b);
        for (x, y) in v.iter_mut().zip(b.iter()) {
            *x -= c * y;
        }
    }
}

pub fn skew_block_diagonalize(a: &[Vec<f64>], tol: &Tolerances) -> Result<SkewSpectrum> {
    let n = a.len();
    let scale = frobenius(a);
    let mut skew_defect = 0.0f64;
    for i in 0..n {
        for j in 0..n {
            skew_defect += (a[i][j] + a[j][i]).powi(2);
        }
    }
    let skew_defect = skew_defect.sqrt();
    if scale > 0.0 && skew_defect > tol.skew * scale {
        return Err(Error::NotSkewSymmetric(skew_defect / scale));
    }

    // -A^2, symmetrized against rounding
    let mut b = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut acc = 0.0;
            for k in 0..n {
                acc += a[i][k] * a[k][j];
            }
            b[i][j] = -acc;
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            let m = 0.5 * (b[i][j] + b[j][i]);
            b[i][j] = m;
            b[j][i] = m;
        }
    }

    let (eigs, vecs) = jacobi_eigh(&b);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| eigs[y].partial_cmp(&eigs[x]).expect("finite"));
    let mu_max = eigs[order[0]].max(0.0);

    if mu_max <= 0.0 || scale == 0.0 {
        // zero matrix: empty spectrum, full null space
        let q: Vec<Vec<f64>> = order.iter().map(|&i| vecs[i].clone()).collect();
        return Ok(SkewSpectrum {
            n,
            lambdas: vec![],
            multiplicities: vec![],
            pair_lambdas: vec![],
            q,
            null_dim: n,
            ambiguous_separation: None,
        });
    }

    // cluster sorted eigenvalues; relative tolerance against mu_max
    let mut clusters: Vec<Vec<usize>> = vec![];
    for &idx in &order {
        let mu = eigs[idx];
        if mu <= tol.cluster * mu_max {
            break; // the rest belong to the null space
        }
        match clusters.last_mut() {
            Some(cl) if (eigs[cl[0]] - mu).abs() <= tol.cluster * mu_max => cl.push(idx),
            _ => clusters.push(vec![idx]),
        }
    }
    let clustered: usize = clusters.iter().map(Vec::len).sum();
    let null_indices: Vec<usize> = order[clustered..].to_vec();

    // ambiguity: two distinct clusters separated by less than 10x the merge
    // tolerance, or a cluster with an odd eigenvalue count
    let mut ambiguous: Option<f64> = None;
    for w in clusters.windows(2) {
        let gap = (eigs[w[0][0]] - eigs[w[1][0]]).abs() / mu_max;
        if gap < 10.0 * tol.cluster {
            ambiguous = Some(ambiguous.map_or(gap, |g: f64| g.min(gap)));
        }
    }
    if clusters.iter().any(|cl| cl.len() % 2 != 0) {
        return Err(Error::DegenerateSpectrum(ambiguous.unwrap_or(tol.cluster)));
    }

    let mut q: Vec<Vec<f64>> = vec![];
    let mut lambdas = vec![];
    let mut multiplicities = vec![];
    let mut pair_lambdas = vec![];
    for cl in &clusters {
        let mu = cl.iter().map(|&i| eigs[i]).sum::<f64>() / cl.len() as f64;
        let lambda = mu.sqrt();
        lambdas.push(lambda);
        multiplicities.push(cl.len() / 2);
        let mut cluster_rows: Vec<Vec<f64>> = vec![];
        for &idx in cl {
            if cluster_rows.len() == cl.len() {
                break;
            }
            let mut u = vecs[idx].clone();
            gram_schmidt_against(&mut u, &cluster_rows);
            let nu = norm(&u);
            if nu < 0.5 {
                continue; // already spanned by the pairs built so far
            }
            for x in u.iter_mut() {
                *x /= nu;
            }
            let mut au = matvec(a, &u);
            for x in au.iter_mut() {
                *x /= lambda;
            }
            gram_schmidt_against(&mut au, &cluster_rows);
            let c = dot(&au, &u);
            for (x, y) in au.iter_mut().zip(u.iter()) {
                *x -= c * y;
            }
            let na = norm(&au);
            for x in au.iter_mut() {
                *x /= na;
            }
            // row order (A u / lambda, u) realizes the block [[0, l], [-l, 0]]
            cluster_rows.push(au);
            cluster_rows.push(u);
            pair_lambdas.push(lambda);
        }
        debug_assert_eq!(cluster_rows.len(), cl.len());
        q.extend(cluster_rows);
    }
    let null_dim = n - q.len();
    debug_assert_eq!(null_dim, null_indices.len());
    let mut null_rows: Vec<Vec<f64>> = vec![];
    for &idx in &null_indices {
        let mut u = vecs[idx].clone();
        gram_schmidt_against(&mut u, &q);
        gram_schmidt_against(&mut u, &null_rows);
        let nu = norm(&u);
        debug_assert!(nu > 0.5);
        for x in u.iter_mut() {
            *x /= nu;
        }
        null_rows.push(u);
    }
    q.extend(null_rows);

    Ok(SkewSpectrum {
        n,
        lambdas,
        multiplicities,
        pair_lambdas,
        q,
        null_dim,
        ambiguous_separation: ambiguous,
    })
}

/// The orthogonal split v = v_1 + ... + v_r + N with v_j in the invariant
/// space of the j-th distinct rate and N in the null space.
#[derive(Clone, Debug)]
pub struct SpectralDecomposition {
    pub components: Vec<Vec<f64>>,
    pub null_part: Vec<f64>,
    /// Number of nonzero components at the zero tolerance.
    pub p: usize,
}

pub fn decompose(
    spec: &SkewSpectrum,
    v: &[f64],
    tol: &Tolerances,
) -> Result<SpectralDecomposition> {
    if v.len() != spec.n {
        return Err(Error::DimensionMismatch {
            left: v.len(),
            right: spec.n,
        });
    }
    let scale = norm(v);
    let components: Vec<Vec<f64>> = (0..spec.lambdas.len())
        .map(|j| spec.project_cluster(j, v))
        .collect();
    let null_part = spec.project_null(v);
    let p = components
        .iter()
        .filter(|c| norm(c) > tol.zero * scale)
        .count();
    Ok(SpectralDecomposition {
        components,
        null_part,
        p,
    })
}
