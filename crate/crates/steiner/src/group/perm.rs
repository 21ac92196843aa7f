use serde::Serialize;

use crate::error::{Error, Result};

/// A permutation of {1..n}, stored as its image array.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
#[serde(transparent)]
pub struct Permutation {
    /// `images[i]` = φ(i+1).
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation {
            images: (1..=n as u32).collect(),
        }
    }

    /// Builds from an image array, checking bijectivity on 1..n.
    pub fn from_images(images: Vec<u32>) -> Result<Permutation> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v < 1 || v as usize > n || seen[v as usize - 1] {
                return Err(Error::DegreeMismatch { left: n, right: n });
            }
            seen[v as usize - 1] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds from disjoint cycles over 1..n; points not mentioned are fixed.
    pub fn from_cycles(n: usize, cycles: &[&[u32]]) -> Result<Permutation> {
        let mut images: Vec<u32> = (1..=n as u32).collect();
        for cyc in cycles {
            for (i, &x) in cyc.iter().enumerate() {
                if x < 1 || x as usize > n {
                    return Err(Error::DegreeMismatch {
                        left: x as usize,
                        right: n,
                    });
                }
                images[x as usize - 1] = cyc[(i + 1) % cyc.len()];
            }
        }
        Permutation::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// φ(p) for a 1-based point label.
    pub fn apply(&self, p: u32) -> u32 {
        self.images[p as usize - 1]
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &v)| v == i as u32 + 1)
    }

    /// Composition acting left-to-right on points: `(self.compose(g))(x) = self(g(x))`.
    pub fn compose(&self, g: &Permutation) -> Permutation {
        Permutation {
            images: g.images.iter().map(|&x| self.apply(x)).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v as usize - 1] = i as u32 + 1;
        }
        Permutation { images }
    }

    pub fn order(&self) -> usize {
        let mut k = 1;
        let mut acc = self.clone();
        while !acc.is_identity() {
            acc = self.compose(&acc);
            k += 1;
        }
        k
    }

    /// Nontrivial cycles in standard form (each cycle led by its minimum,
    /// cycles sorted by leading point).
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = vec![];
        for start in 1..=n as u32 {
            if seen[start as usize - 1] || self.apply(start) == start {
                seen[start as usize - 1] = true;
                continue;
            }
            let mut cyc = vec![];
            let mut x = start;
            while !seen[x as usize - 1] {
                seen[x as usize - 1] = true;
                cyc.push(x);
                x = self.apply(x);
            }
            out.push(cyc);
        }
        out
    }
}

impl std::fmt::Display for Permutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "id");
        }
        for cyc in cycles {
            write!(f, "(")?;
            for (i, p) in cyc.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}
