use num::Zero;

use crate::algebra::vector::{inner_product, DesignVector, Scalar};
use crate::design::{OrientedSts, Point};
use crate::error::Result;

/// One entry of the symbolic product matrix M: a signed basis vector or zero.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SignedBasis {
    pub sign: i8,
    pub point: Option<Point>,
}

impl SignedBasis {
    fn zero() -> SignedBasis {
        SignedBasis {
            sign: 0,
            point: None,
        }
    }
}

impl std::fmt::Display for SignedBasis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match (self.sign, self.point) {
            (0, _) | (_, None) => write!(f, "0"),
            (s, Some(p)) => write!(f, "{}s{}", if s < 0 { "-" } else { "" }, p),
        }
    }
}

/// The matrix M with M[i][j] = s_i x s_j, stored symbolically.
#[derive(Clone, Debug)]
pub struct ProductTable {
    n: usize,
    entries: Vec<SignedBasis>,
}

impl ProductTable {
    pub fn n(&self) -> usize {
        self.n
    }

    /// M[i][j] by 1-based labels.
    pub fn get(&self, i: u32, j: u32) -> SignedBasis {
        self.entries[(i as usize - 1) * self.n + (j as usize - 1)]
    }
}

pub fn product_table(o: &OrientedSts) -> ProductTable {
    let n = o.n();
    let f = o.orientation_function();
    let mut entries = vec![SignedBasis::zero(); n * n];
    for i in 1..=n as u32 {
        for j in 1..=n as u32 {
            if i == j {
                continue;
            }
            let k = o.base().third_label(i, j);
            entries[(i as usize - 1) * n + (j as usize - 1)] = SignedBasis {
                sign: f.get(i, j),
                point: Some(Point::new(k)),
            };
        }
    }
    ProductTable { n, entries }
}

/// The bilinear product extending s x s' = f(s,s') s'' over the triple
/// {s,s',s''}.
pub fn steiner_product(
    o: &OrientedSts,
    a: &DesignVector,
    b: &DesignVector,
) -> Result<DesignVector> {
    a.check_dim(b)?;
    let n = o.n();
    if a.dim() != n {
        return Err(crate::error::Error::DimensionMismatch {
            left: a.dim(),
            right: n,
        });
    }
    let f = o.orientation_function();
    let mut out = vec![Scalar::zero(); n];
    for i in 1..=n as u32 {
        let ai = a.coord(i);
        if ai.is_zero() {
            continue;
        }
        for j in 1..=n as u32 {
            if i == j {
                continue;
            }
            let bj = b.coord(j);
            if bj.is_zero() {
                continue;
            }
            let sign = f.get(i, j);
            if sign == 0 {
                continue;
            }
            let k = o.base().third_label(i, j) as usize - 1;
            let term = ai * bj;
            if sign > 0 {
                out[k] = &out[k] + term;
            } else {
                out[k] = &out[k] - term;
            }
        }
    }
    Ok(DesignVector::from_coords(out))
}

/// The same product computed through the formal trace expansion
/// tr([a]^T M [b]) over the symbolic matrix M.
pub fn product_via_trace(
    o: &OrientedSts,
    a: &DesignVector,
    b: &DesignVector,
) -> Result<DesignVector> {
    a.check_dim(b)?;
    let table = product_table(o);
    let n = table.n();
    if a.dim() != n {
        return Err(crate::error::Error::DimensionMismatch {
            left: a.dim(),
            right: n,
        });
    }
    let mut out = vec![Scalar::zero(); n];
    for i in 1..=n as u32 {
        for j in 1..=n as u32 {
            let entry = table.get(i, j);
            let Some(p) = entry.point else { continue };
            let coeff = a.coord(i) * b.coord(j);
            let slot = p.index() as usize - 1;
            if entry.sign > 0 {
                out[slot] = &out[slot] + coeff;
            } else {
                out[slot] = &out[slot] - coeff;
            }
        }
    }
    Ok(DesignVector::from_coords(out))
}

/// The equal quantities <a, a x b> and <b, a x b> vanish for every
/// orientation; exposed for spot checks.
pub fn orthogonality_defect(
    o: &OrientedSts,
    a: &DesignVector,
    b: &DesignVector,
) -> Result<(Scalar, Scalar)> {
    let p = steiner_product(o, a, b)?;
    Ok((inner_product(a, &p)?, inner_product(b, &p)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::vector::parse_vector;
    use crate::design::builtin;
    use crate::sampling;

    #[test]
    fn basis_products_follow_cycles() {
        let o = builtin::oriented("o1_3").unwrap();
        let s1 = DesignVector::basis(3, 1);
        let s2 = DesignVector::basis(3, 2);
        let s3 = DesignVector::basis(3, 3);
        assert_eq!(steiner_product(&o, &s1, &s2).unwrap(), s3);
        assert_eq!(steiner_product(&o, &s2, &s1).unwrap(), s3.neg());
        assert_eq!(
            steiner_product(&o, &s1, &s1).unwrap(),
            DesignVector::zeros(3)
        );
    }

    #[test]
    fn zero_divisor_pair_multiplies_to_zero() {
        let o = builtin::oriented("zd7").unwrap();
        let a = parse_vector("s1+s5", 7).unwrap();
        let b = parse_vector("s3+s7", 7).unwrap();
        assert!(steiner_product(&o, &a, &b).unwrap().is_zero());
    }

    #[test]
    fn product_table_entries() {
        let o = builtin::oriented("zd7").unwrap();
        let t = product_table(&o);
        assert_eq!(t.get(1, 7).to_string(), "s6");
        assert_eq!(t.get(7, 1).to_string(), "-s6");
        for i in 1..=7 {
            assert_eq!(t.get(i, i).to_string(), "0");
        }
        // skew: m[i][j] = -m[j][i]
        for i in 1..=7u32 {
            for j in 1..=7u32 {
                let a = t.get(i, j);
                let b = t.get(j, i);
                assert_eq!(a.point, b.point);
                assert_eq!(a.sign, -b.sign);
            }
        }
    }

    #[test]
    fn trace_route_matches_direct_product() {
        let o = builtin::oriented("o1_9").unwrap();
        let mut rng = sampling::rng(11, "trace");
        for _ in 0..50 {
            let a = sampling::random_vector(&mut rng, 9);
            let b = sampling::random_vector(&mut rng, 9);
            assert_eq!(
                product_via_trace(&o, &a, &b).unwrap(),
                steiner_product(&o, &a, &b).unwrap()
            );
        }
    }

    #[test]
    fn product_of_vector_with_itself_vanishes() {
        let o = builtin::oriented("o2_7").unwrap();
        let mut rng = sampling::rng(3, "self");
        for _ in 0..20 {
            let a = sampling::random_vector(&mut rng, 7);
            assert!(product_via_trace(&o, &a, &a).unwrap().is_zero());
        }
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let o = builtin::oriented("o1_7").unwrap();
        let a = DesignVector::zeros(7);
        let b = DesignVector::zeros(9);
        assert!(steiner_product(&o, &a, &b).is_err());
    }
}
