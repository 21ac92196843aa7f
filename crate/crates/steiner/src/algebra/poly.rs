//! Sparse multivariate polynomials over exact rationals, sufficient for the
//! degree-4 identity expansions and for symbolic minors of iterate matrices.

use std::collections::{BTreeMap, HashMap};

use num::{One, Zero};

use crate::algebra::vector::Scalar;

/// exponent vector -> coefficient; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Vec<u16>, Scalar>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Poly {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Scalar) -> Poly {
        let mut p = Poly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn var(nvars: usize, index: usize) -> Poly {
        let mut exps = vec![0u16; nvars];
        exps[index] = 1;
        let mut p = Poly::zero(nvars);
        p.terms.insert(exps, Scalar::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_assign(&mut self, other: &Poly) {
        for (e, c) in &other.terms {
            let entry = self.terms.entry(e.clone()).or_insert_with(Scalar::zero);
            *entry = &*entry + c;
            if entry.is_zero() {
                self.terms.remove(e);
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn neg(&self) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: &Scalar) -> Poly {
        if s.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * s)).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u16> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                let entry = out.terms.entry(e.clone()).or_insert_with(Scalar::zero);
                *entry = &*entry + c1 * c2;
                if entry.is_zero() {
                    out.terms.remove(&e);
                }
            }
        }
        out
    }

    pub fn eval(&self, values: &[Scalar]) -> Scalar {
        let mut acc = Scalar::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (i, &k) in e.iter().enumerate() {
                for _ in 0..k {
                    term *= &values[i];
                }
            }
            acc += term;
        }
        acc
    }
}

/// Determinant of a square polynomial matrix by expansion along the last
/// column, with minors memoized by row subset.
pub fn det(m: &[Vec<Poly>]) -> Poly {
    let k = m.len();
    if k == 0 {
        return Poly::constant(0, Scalar::one());
    }
    let nvars = m[0][0].nvars();
    let full: u32 = (1 << k) - 1;
    let mut memo: HashMap<u32, Poly> = HashMap::new();
    memo.insert(0, Poly::constant(nvars, Scalar::one()));
    fn minor(m: &[Vec<Poly>], mask: u32, memo: &mut HashMap<u32, Poly>) -> Poly {
        if let Some(p) = memo.get(&mask) {
            return p.clone();
        }
        let col = mask.count_ones() as usize - 1;
        let nvars = m[0][0].nvars();
        let mut acc = Poly::zero(nvars);
        let mut pos = 0usize;
        for row in 0..m.len() {
            if mask >> row & 1 == 0 {
                continue;
            }
            let sub = minor(m, mask & !(1 << row), memo);
            let term = m[row][col].mul(&sub);
            if pos % 2 == (col % 2) {
                acc.add_assign(&term);
            } else {
                acc.add_assign(&term.neg());
            }
            pos += 1;
        }
        memo.insert(mask, acc.clone());
        acc
    }
    minor(m, full, &mut memo)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64) -> Scalar {
        Scalar::from_integer(n.into())
    }

    #[test]
    fn ring_identities() {
        let x = Poly::var(2, 0);
        let y = Poly::var(2, 1);
        let p = x.add(&y); // x + y
        let q = x.sub(&y); // x - y
        let prod = p.mul(&q); // x^2 - y^2
        let direct = x.mul(&x).sub(&y.mul(&y));
        assert_eq!(prod, direct);
        assert!(p.sub(&p).is_zero());
        assert_eq!(prod.eval(&[rat(3), rat(2)]), rat(5));
    }

    #[test]
    fn det_of_symbolic_matrix() {
        // det [[x, y], [y, x]] = x^2 - y^2
        let x = Poly::var(2, 0);
        let y = Poly::var(2, 1);
        let m = vec![vec![x.clone(), y.clone()], vec![y.clone(), x.clone()]];
        let d = det(&m);
        assert_eq!(d, x.mul(&x).sub(&y.mul(&y)));
    }

    #[test]
    fn det_of_singular_matrix_is_zero() {
        let x = Poly::var(2, 0);
        let y = Poly::var(2, 1);
        let m = vec![vec![x.clone(), y.clone()], vec![x, y]];
        assert!(det(&m).is_zero());
    }

    #[test]
    fn det_three_by_three_constant() {
        let c = |v: i64| Poly::constant(1, rat(v));
        let m = vec![
            vec![c(2), c(0), c(1)],
            vec![c(1), c(1), c(0)],
            vec![c(0), c(3), c(1)],
        ];
        assert_eq!(det(&m), c(5));
    }
}
