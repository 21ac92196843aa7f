//! Verification of the span-dimension and limit behavior of the iterated
//! left-product map for a concrete (v, w) pair.

use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::linalg::rank_of_columns;
use crate::algebra::{companion_matrix, DesignVector};
use crate::design::OrientedSts;
use crate::dynamics::iterate::{float_companion, numerical_rank};
use crate::dynamics::spectral::{decompose, matvec, norm, skew_block_diagonalize};
use crate::dynamics::Tolerances;
use crate::error::{Error, Result};

#[derive(Clone, Debug, Serialize)]
pub struct ThmdynCheck {
    pub name: String,
    pub expected: Value,
    pub measured: Value,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ThmdynReport {
    pub n: usize,
    /// Number of distinct rotation rates present in v.
    pub p: usize,
    pub lambdas: Vec<f64>,
    pub null_component: bool,
    pub checks: Vec<ThmdynCheck>,
    pub all_pass: bool,
}

impl ThmdynReport {
    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

fn dim_check(name: &str, expected: usize, measured: usize) -> ThmdynCheck {
    ThmdynCheck {
        name: name.into(),
        expected: json!(expected),
        measured: json!(measured),
        pass: expected == measured,
        note: None,
    }
}

fn bound_check(name: &str, bound: f64, measured: f64, note: Option<&str>) -> ThmdynCheck {
    ThmdynCheck {
        name: name.into(),
        expected: json!(format!("<= {bound:e}")),
        measured: json!(measured),
        pass: measured <= bound,
        note: note.map(String::from),
    }
}

fn vacuous(name: &str, note: &str) -> ThmdynCheck {
    ThmdynCheck {
        name: name.into(),
        expected: json!("vacuous"),
        measured: json!(0.0),
        pass: true,
        note: Some(note.into()),
    }
}

fn normalize(v: &mut [f64]) -> f64 {
    let n = norm(v);
    if n > 0.0 {
        for x in v.iter_mut() {
            *x /= n;
        }
    }
    n
}

/// Runs the six span/limit checks for a pair (v, w): iterate-span dimensions
/// against the spectral count 2p(+1) using the exact-rank oracle, existence
/// of the normalized L^{4t} limit and its invariant plane, the 2-periodicity
/// of normalized iterates of the limit, and the decay of the Cesaro average
/// of normalized iterates.
pub fn verify_thmdyn(
    o: &OrientedSts,
    w: &DesignVector,
    v: &DesignVector,
    horizon: usize,
    tol: &Tolerances,
) -> Result<ThmdynReport> {
    let n = o.n();
    if w.dim() != n || v.dim() != n {
        return Err(Error::DimensionMismatch {
            left: w.dim().min(v.dim()),
            right: n,
        });
    }
    let a_float = float_companion(o, &w.to_f64())?;
    let spectrum = skew_block_diagonalize(&a_float, tol)?;
    if let Some(sep) = spectrum.ambiguous_separation {
        return Err(Error::DegenerateSpectrum(sep));
    }
    let vf = v.to_f64();
    let split = decompose(&spectrum, &vf, tol)?;
    let p = split.p;
    let vnorm = norm(&vf);
    let null_component = norm(&split.null_part) > tol.zero * vnorm;

    // exact span dimensions of {v, L^1 v, ..., L^n v}
    let a_exact = companion_matrix(o, w)?;
    let mut cols = vec![v.clone()];
    for _ in 0..n {
        cols.push(a_exact.apply(cols.last().expect("nonempty"))?);
    }
    let rank_full = rank_of_columns(&cols);
    let rank_tail = rank_of_columns(&cols[1..]);

    let expected_full = if null_component { 2 * p + 1 } else { 2 * p };
    let mut checks = vec![
        dim_check("dim_full", expected_full, rank_full),
        dim_check("dim_iterates", 2 * p, rank_tail),
    ];

    if p == 0 {
        checks.push(vacuous(
            "limit_vbar",
            "all iterates vanish; the normalized limit is vacuous",
        ));
        checks.push(vacuous("vbar_plane_dim", "no rotational component"));
        checks.push(vacuous("anti_period", "no rotational component"));
    } else {
        // v_bar = lim L^{4t} v / |L^{4t} v|, via renormalized 4-step jumps
        let steps = (horizon / 4).max(16);
        let mut z = vf.clone();
        normalize(&mut z);
        let mut gap = f64::INFINITY;
        for _ in 0..steps {
            let mut next = z.clone();
            for _ in 0..4 {
                next = matvec(&a_float, &next);
            }
            normalize(&mut next);
            gap = next
                .iter()
                .zip(&z)
                .map(|(a, b)| (a - b) * (a - b))
                .sum::<f64>()
                .sqrt();
            z = next;
        }
        let j = (0..spectrum.lambdas.len())
            .find(|&j| norm(&split.components[j]) > tol.zero * vnorm)
            .expect("p >= 1");
        let proj = spectrum.project_cluster(j, &z);
        let residual = z
            .iter()
            .zip(&proj)
            .map(|(a, b)| (a - b) * (a - b))
            .sum::<f64>()
            .sqrt();
        checks.push(ThmdynCheck {
            name: "limit_vbar".into(),
            expected: json!(format!(
                "cauchy gap <= {:e}, residual in V_{} <= {:e}",
                tol.limit,
                j + 1,
                tol.subspace
            )),
            measured: json!({"cauchy_gap": gap, "residual": residual}),
            pass: gap <= tol.limit && residual <= tol.subspace,
            note: None,
        });

        let az = matvec(&a_float, &z);
        let aaz = matvec(&a_float, &az);
        let plane_dim = numerical_rank(&[z.clone(), az, aaz], tol);
        checks.push(dim_check("vbar_plane_dim", 2, plane_dim));

        // normalized iterates of v_bar satisfy x_{m+2} = -x_m
        let mut xs = vec![z.clone()];
        for _ in 0..10 {
            let mut next = matvec(&a_float, xs.last().expect("nonempty"));
            normalize(&mut next);
            xs.push(next);
        }
        let worst = (0..=7)
            .map(|m| {
                xs[m]
                    .iter()
                    .zip(&xs[m + 2])
                    .map(|(a, b)| (a + b) * (a + b))
                    .sum::<f64>()
                    .sqrt()
            })
            .fold(0.0f64, f64::max);
        checks.push(bound_check(
            "anti_period",
            tol.cycle,
            worst,
            Some("checked on stepwise-normalized iterates"),
        ));
    }

    // Cesaro average of normalized iterates
    let mut y = vf.clone();
    let mut acc = vec![0.0; n];
    for _ in 0..horizon {
        y = matvec(&a_float, &y);
        normalize(&mut y);
        for (s, x) in acc.iter_mut().zip(&y) {
            *s += x;
        }
    }
    let cesaro = norm(&acc) / horizon.max(1) as f64;
    checks.push(bound_check(
        "cesaro",
        tol.cesaro,
        cesaro,
        Some("average of normalized iterates"),
    ));

    let all_pass = checks.iter().all(|c| c.pass);
    Ok(ThmdynReport {
        n,
        p,
        lambdas: spectrum.lambdas.clone(),
        null_component,
        checks,
        all_pass,
    })
}
