use crate::design::system::{OrientedSts, SteinerTripleSystem};
use crate::design::triple::{canonical_rotation, OrientedTriple};
use crate::error::{Error, Result};

/// Default cap on |T| for full orientation enumeration (2^|T| systems).
pub const DEFAULT_MAX_TRIPLES: usize = 24;

/// Streams all 2^|T| orientations of a system.
///
/// The order is the flip mask read as a binary counter over the sorted
/// triples: bit i set means triple i is taken in its descending cyclic order
/// `[a,c,b]` instead of `[a,b,c]`.
pub fn enumerate_orientations(sts: &SteinerTripleSystem) -> Result<Orientations<'_>> {
    enumerate_orientations_capped(sts, DEFAULT_MAX_TRIPLES)
}

pub fn enumerate_orientations_capped(
    sts: &SteinerTripleSystem,
    max_triples: usize,
) -> Result<Orientations<'_>> {
    let m = sts.triples().len();
    if m > max_triples || m >= 63 {
        return Err(Error::TooManyTriples {
            count: m,
            max: max_triples,
        });
    }
    Ok(Orientations {
        sts,
        mask: 0,
        end: 1u64 << m,
    })
}

/// The orientation of `sts` selected by a flip mask.
pub fn orientation_from_mask(sts: &SteinerTripleSystem, mask: u64) -> OrientedSts {
    let cycles: Vec<OrientedTriple> = sts
        .triples()
        .iter()
        .enumerate()
        .map(|(i, t)| {
            let [a, b, c] = t.labels();
            let cyc = if mask >> i & 1 == 0 {
                [a, b, c]
            } else {
                [a, c, b]
            };
            canonical_rotation(cyc).expect("triple points are distinct")
        })
        .collect();
    OrientedSts::new(sts.clone(), cycles).expect("mask orientation covers the base triples")
}

pub struct Orientations<'a> {
    sts: &'a SteinerTripleSystem,
    mask: u64,
    end: u64,
}

impl Iterator for Orientations<'_> {
    type Item = OrientedSts;

    fn next(&mut self) -> Option<OrientedSts> {
        if self.mask == self.end {
            return None;
        }
        let o = orientation_from_mask(self.sts, self.mask);
        self.mask += 1;
        Some(o)
    }
}

impl ExactSizeIterator for Orientations<'_> {
    fn len(&self) -> usize {
        (self.end - self.mask) as usize
    }
}
