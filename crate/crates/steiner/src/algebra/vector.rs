use num::{BigRational, One, Zero};
use serde_json::json;

use crate::error::{Error, Result};
use crate::group::Permutation;

/// Exact rational scalar. Kept reduced with a positive denominator by the
/// underlying representation.
pub type Scalar = BigRational;

/// An element of R^S with exact rational coordinates in the basis s1..sn.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DesignVector {
    coords: Vec<Scalar>,
}

impl DesignVector {
    pub fn zeros(n: usize) -> DesignVector {
        DesignVector {
            coords: vec![Scalar::zero(); n],
        }
    }

    /// The basis vector s_point (1-based).
    pub fn basis(n: usize, point: u32) -> DesignVector {
        let mut v = DesignVector::zeros(n);
        v.coords[point as usize - 1] = Scalar::one();
        v
    }

    pub fn from_coords(coords: Vec<Scalar>) -> DesignVector {
        DesignVector { coords }
    }

    pub fn from_integers(ints: &[i64]) -> DesignVector {
        DesignVector {
            coords: ints
                .iter()
                .map(|&k| Scalar::from_integer(k.into()))
                .collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    /// Coordinates in basis order s1..sn.
    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    /// Coefficient of s_point (1-based).
    pub fn coord(&self, point: u32) -> &Scalar {
        &self.coords[point as usize - 1]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &DesignVector) -> Result<DesignVector> {
        self.check_dim(other)?;
        Ok(DesignVector {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &DesignVector) -> Result<DesignVector> {
        self.check_dim(other)?;
        Ok(DesignVector {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn scale(&self, s: &Scalar) -> DesignVector {
        DesignVector {
            coords: self.coords.iter().map(|a| a * s).collect(),
        }
    }

    pub fn neg(&self) -> DesignVector {
        DesignVector {
            coords: self.coords.iter().map(|a| -a).collect(),
        }
    }

    /// Coordinates permuted by a lifted point map: the s_i coefficient moves
    /// to s_{φ(i)}.
    pub fn permuted(&self, phi: &Permutation) -> Result<DesignVector> {
        if phi.degree() != self.dim() {
            return Err(Error::DegreeMismatch {
                left: phi.degree(),
                right: self.dim(),
            });
        }
        let mut coords = vec![Scalar::zero(); self.dim()];
        for (i, a) in self.coords.iter().enumerate() {
            coords[phi.apply(i as u32 + 1) as usize - 1] = a.clone();
        }
        Ok(DesignVector { coords })
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.coords.iter().map(rational_to_f64).collect()
    }

    pub(crate) fn check_dim(&self, other: &DesignVector) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        Ok(())
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!(self
            .coords
            .iter()
            .map(format_rational)
            .collect::<Vec<String>>())
    }
}

/// The lift of a point permutation to R^S: sigma(a) = sum a_s sigma(s).
pub fn lift_automorphism(phi: &Permutation, a: &DesignVector) -> Result<DesignVector> {
    a.permuted(phi)
}

/// The standard inner product with S orthonormal.
pub fn inner_product(a: &DesignVector, b: &DesignVector) -> Result<Scalar> {
    a.check_dim(b)?;
    Ok(a.coords
        .iter()
        .zip(&b.coords)
        .map(|(x, y)| x * y)
        .fold(Scalar::zero(), |acc, t| acc + t))
}

pub fn format_rational(x: &Scalar) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn rational_to_f64(x: &Scalar) -> f64 {
    use num::ToPrimitive;
    x.to_f64().expect("small rationals fit in f64")
}

impl std::fmt::Display for DesignVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(format_rational).collect();
        write!(f, "{}", parts.join(" "))
    }
}

fn parse_rational(tok: &str) -> Option<Scalar> {
    let tok = tok.trim();
    if let Some((num, den)) = tok.split_once('/') {
        let n: i64 = num.trim().parse().ok()?;
        let d: i64 = den.trim().parse().ok()?;
        if d == 0 {
            return None;
        }
        Some(Scalar::new(n.into(), d.into()))
    } else {
        let n: i64 = tok.parse().ok()?;
        Some(Scalar::from_integer(n.into()))
    }
}

/// Parses a vector literal of dimension `n`. Accepts a coordinate list
/// (`"1 0 2/3"`), a symbolic sum over basis points (`"s1+2*s5-s7"`), or the
/// single token `"0"` for the zero vector; the presence of `s` selects the
/// symbolic grammar.
pub fn parse_vector(input: &str, n: usize) -> Result<DesignVector> {
    let text = input.trim().replace('\u{2212}', "-");
    if text == "0" {
        return Ok(DesignVector::zeros(n));
    }
    let bad = |msg: String| Error::Syntax {
        line: 1,
        col: 1,
        msg,
    };
    if text.contains('s') {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut v = DesignVector::zeros(n);
        let mut term = String::new();
        let mut terms: Vec<String> = vec![];
        for (i, ch) in compact.chars().enumerate() {
            if (ch == '+' || ch == '-') && i > 0 {
                terms.push(term.clone());
                term.clear();
            }
            term.push(ch);
        }
        terms.push(term);
        for t in terms {
            let (sign, rest) = match t.strip_prefix('-') {
                Some(r) => (-Scalar::one(), r),
                None => (Scalar::one(), t.strip_prefix('+').unwrap_or(&t)),
            };
            let (coeff, point_str) = match rest.split_once('*') {
                Some((c, p)) => (
                    parse_rational(c).ok_or_else(|| bad(format!("bad coefficient {c:?}")))?,
                    p,
                ),
                None => (Scalar::one(), rest),
            };
            let idx_str = point_str
                .strip_prefix('s')
                .ok_or_else(|| bad(format!("expected s<k>, got {point_str:?}")))?;
            let idx: usize = idx_str
                .parse()
                .map_err(|_| bad(format!("bad point index {idx_str:?}")))?;
            if idx < 1 || idx > n {
                return Err(bad(format!("point s{idx} out of range 1..={n}")));
            }
            v.coords[idx - 1] = &v.coords[idx - 1] + sign * coeff;
        }
        Ok(v)
    } else {
        let toks: Vec<&str> = text.split_whitespace().collect();
        if toks.len() != n {
            return Err(bad(format!("expected {n} coordinates, got {}", toks.len())));
        }
        let coords = toks
            .iter()
            .map(|t| parse_rational(t).ok_or_else(|| bad(format!("bad rational {t:?}"))))
            .collect::<Result<Vec<Scalar>>>()?;
        Ok(DesignVector::from_coords(coords))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inner_product_on_basis() {
        let s1 = DesignVector::basis(7, 1);
        let s2 = DesignVector::basis(7, 2);
        assert_eq!(inner_product(&s1, &s1).unwrap(), Scalar::one());
        assert_eq!(inner_product(&s1, &s2).unwrap(), Scalar::zero());
    }

    #[test]
    fn disjoint_supports_are_orthogonal() {
        let a = parse_vector("s1+s5", 7).unwrap();
        let b = parse_vector("s3+s7", 7).unwrap();
        assert_eq!(inner_product(&a, &b).unwrap(), Scalar::zero());
    }

    #[test]
    fn parse_both_grammars() {
        let a = parse_vector("1 0 0 0 1 0 0", 7).unwrap();
        let b = parse_vector("s1+s5", 7).unwrap();
        assert_eq!(a, b);
        let c = parse_vector("s1+2*s5-s7", 7).unwrap();
        assert_eq!(c.coord(5), &Scalar::from_integer(2.into()));
        assert_eq!(c.coord(7), &(-Scalar::one()));
        let d = parse_vector("2/3 -1/2 0", 3).unwrap();
        assert_eq!(format!("{d}"), "2/3 -1/2 0");
        assert_eq!(parse_vector("0", 9).unwrap(), DesignVector::zeros(9));
    }

    #[test]
    fn parse_rejects_malformed() {
        assert!(parse_vector("1 2", 3).is_err());
        assert!(parse_vector("s8", 7).is_err());
        assert!(parse_vector("x1", 7).is_err());
        assert!(parse_vector("1/0 0 0", 3).is_err());
    }

    #[test]
    fn permute_moves_basis() {
        let phi = Permutation::from_cycles(3, &[&[1, 2, 3]]).unwrap();
        let s1 = DesignVector::basis(3, 1);
        assert_eq!(s1.permuted(&phi).unwrap(), DesignVector::basis(3, 2));
        let id = Permutation::identity(3);
        let v = parse_vector("1/2 3 -5", 3).unwrap();
        assert_eq!(v.permuted(&id).unwrap(), v);
    }
}
