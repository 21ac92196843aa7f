use crate::design::triple::{canonical_rotation, OrientedTriple, Point, Triple};
use crate::error::{Error, Result};

/// A Steiner triple system: `n` points and a set of triples covering every
/// pair of points exactly once.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SteinerTripleSystem {
    n: usize,
    triples: Vec<Triple>,
    /// `third[(i-1)*n + (j-1)]` = the third point of the triple through {i,j}, 0 on the diagonal.
    third: Vec<u32>,
    /// Index into `triples` of the triple through {i,j}, usize::MAX on the diagonal.
    pair_triple: Vec<usize>,
}

/// Validates a candidate triple list against the pair-cover condition.
pub fn validate_sts<I>(n: usize, triples: I) -> Result<SteinerTripleSystem>
where
    I: IntoIterator<Item = Triple>,
{
    if n < 3 || (n % 6 != 1 && n % 6 != 3) {
        return Err(Error::BadOrder(n));
    }
    let mut list: Vec<Triple> = triples.into_iter().collect();
    list.sort_unstable();
    list.dedup();
    let mut third = vec![0u32; n * n];
    let mut pair_triple = vec![usize::MAX; n * n];
    for (idx, t) in list.iter().enumerate() {
        let [a, b, c] = t.labels();
        if c as usize > n {
            return Err(Error::MalformedTriple(a, b, c));
        }
        for (x, y, z) in [(a, b, c), (a, c, b), (b, c, a)] {
            let slot = (x as usize - 1) * n + (y as usize - 1);
            if third[slot] != 0 {
                return Err(Error::PairDoubleCovered(x, y));
            }
            third[slot] = z;
            third[(y as usize - 1) * n + (x as usize - 1)] = z;
            pair_triple[slot] = idx;
            pair_triple[(y as usize - 1) * n + (x as usize - 1)] = idx;
        }
    }
    for i in 1..=n as u32 {
        for j in i + 1..=n as u32 {
            if third[(i as usize - 1) * n + (j as usize - 1)] == 0 {
                return Err(Error::PairUncovered(i, j));
            }
        }
    }
    Ok(SteinerTripleSystem {
        n,
        triples: list,
        third,
        pair_triple,
    })
}

impl SteinerTripleSystem {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Triples in ascending order.
    pub fn triples(&self) -> &[Triple] {
        &self.triples
    }

    /// The third point of the unique triple through two distinct points.
    pub fn third_point(&self, i: Point, j: Point) -> Option<Point> {
        if i == j {
            return None;
        }
        Some(Point::new(self.third[i.zi() * self.n + j.zi()]))
    }

    pub(crate) fn third_label(&self, i: u32, j: u32) -> u32 {
        self.third[(i as usize - 1) * self.n + (j as usize - 1)]
    }

    /// Index into `triples()` of the triple through two distinct points.
    pub(crate) fn triple_index(&self, i: u32, j: u32) -> usize {
        self.pair_triple[(i as usize - 1) * self.n + (j as usize - 1)]
    }
}

/// One of the two cyclic orders on every triple of a system.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrientedSts {
    base: SteinerTripleSystem,
    /// Canonical cycles, sorted lexicographically; equality of systems is
    /// equality of these lists.
    cycles: Vec<OrientedTriple>,
}

impl OrientedSts {
    /// Pairs an orientation with its base system, checking that the
    /// underlying triples agree exactly.
    pub fn new(base: SteinerTripleSystem, cycles: Vec<OrientedTriple>) -> Result<OrientedSts> {
        let mut sorted = cycles;
        sorted.sort_unstable();
        let mut underlying: Vec<Triple> = sorted.iter().map(|c| c.underlying()).collect();
        underlying.sort_unstable();
        if underlying != base.triples {
            let witness = sorted
                .iter()
                .map(|c| c.underlying())
                .find(|t| !base.triples.contains(t));
            let [a, b, c] = match witness {
                Some(t) => t.labels(),
                None => base.triples[0].labels(),
            };
            return Err(Error::MalformedTriple(a, b, c));
        }
        Ok(OrientedSts {
            base,
            cycles: sorted,
        })
    }

    /// Builds the orientation from raw cycles, inferring and validating the base system.
    pub fn from_cycles(n: usize, cycles: &[[u32; 3]]) -> Result<OrientedSts> {
        let oriented: Vec<OrientedTriple> = cycles
            .iter()
            .map(|&c| canonical_rotation(c))
            .collect::<Result<_>>()?;
        let triples: Vec<Triple> = oriented.iter().map(|c| c.underlying()).collect();
        let base = validate_sts(n, triples)?;
        OrientedSts::new(base, oriented)
    }

    pub fn n(&self) -> usize {
        self.base.n
    }

    pub fn base(&self) -> &SteinerTripleSystem {
        &self.base
    }

    /// Canonical cycles in sorted order.
    pub fn cycles(&self) -> &[OrientedTriple] {
        &self.cycles
    }

    /// Every cycle reversed, then re-canonicalized.
    pub fn reversed(&self) -> OrientedSts {
        let mut cycles: Vec<OrientedTriple> = self.cycles.iter().map(|c| c.reversed()).collect();
        cycles.sort_unstable();
        OrientedSts {
            base: self.base.clone(),
            cycles,
        }
    }

    /// The orientation function f: S x S -> {-1, 0, +1}.
    pub fn orientation_function(&self) -> OrientationFunction {
        let n = self.base.n;
        let mut table = vec![0i8; n * n];
        for c in &self.cycles {
            let [a, b, cc] = c.labels();
            for (x, y) in [(a, b), (b, cc), (cc, a)] {
                table[(x as usize - 1) * n + (y as usize - 1)] = 1;
                table[(y as usize - 1) * n + (x as usize - 1)] = -1;
            }
        }
        OrientationFunction { n, table }
    }

    /// The flip mask of this orientation relative to the ascending cycles of
    /// the sorted base triples (bit i set = triple i reversed).
    pub(crate) fn flip_mask(&self) -> u64 {
        let mut mask = 0u64;
        for c in &self.cycles {
            let [a, b, _] = c.underlying().labels();
            let idx = self.base.triple_index(a, b);
            if !c.is_ascending() {
                mask |= 1 << idx;
            }
        }
        mask
    }
}

impl std::fmt::Display for OrientedSts {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        write!(f, "{{")?;
        for c in &self.cycles {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
            first = false;
        }
        write!(f, "}}")
    }
}

/// Dense table of the skew function determined by an orientation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrientationFunction {
    n: usize,
    table: Vec<i8>,
}

impl OrientationFunction {
    pub fn n(&self) -> usize {
        self.n
    }

    /// f(i, j) by 1-based labels.
    pub fn get(&self, i: u32, j: u32) -> i8 {
        self.table[(i as usize - 1) * self.n + (j as usize - 1)]
    }

    pub fn negated(&self) -> OrientationFunction {
        OrientationFunction {
            n: self.n,
            table: self.table.iter().map(|v| -v).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::design::builtin;

    fn triples(list: &[[u32; 3]]) -> Vec<Triple> {
        list.iter()
            .map(|&[a, b, c]| Triple::new(a, b, c).unwrap())
            .collect()
    }

    #[test]
    fn validates_sts7() {
        let t = triples(&[
            [1, 2, 3],
            [1, 4, 5],
            [1, 6, 7],
            [2, 4, 6],
            [2, 5, 7],
            [3, 4, 7],
            [3, 5, 6],
        ]);
        let sts = validate_sts(7, t).unwrap();
        assert_eq!(sts.triples().len(), 7);
        assert_eq!(
            sts.third_point(Point::new(2), Point::new(5)),
            Some(Point::new(7))
        );
    }

    #[test]
    fn validates_sts3() {
        let sts = validate_sts(3, triples(&[[1, 2, 3]])).unwrap();
        assert_eq!(sts.triples().len(), 1);
    }

    #[test]
    fn detects_double_cover() {
        let t = triples(&[[1, 2, 3], [1, 2, 4]]);
        assert_eq!(validate_sts(7, t), Err(Error::PairDoubleCovered(1, 2)));
    }

    #[test]
    fn detects_uncovered_pair() {
        let t = triples(&[[1, 2, 3]]);
        assert_eq!(validate_sts(7, t), Err(Error::PairUncovered(1, 4)));
    }

    #[test]
    fn rejects_bad_order() {
        assert_eq!(
            validate_sts(6, triples(&[[1, 2, 3]])),
            Err(Error::BadOrder(6))
        );
        assert_eq!(validate_sts(2, vec![]), Err(Error::BadOrder(2)));
    }

    #[test]
    fn rejects_out_of_range_point() {
        let t = triples(&[[1, 2, 9]]);
        assert_eq!(validate_sts(3, t), Err(Error::MalformedTriple(1, 2, 9)));
    }

    #[test]
    fn orientation_function_values() {
        let o = OrientedSts::from_cycles(3, &[[1, 2, 3]]).unwrap();
        let f = o.orientation_function();
        assert_eq!(f.get(1, 2), 1);
        assert_eq!(f.get(2, 1), -1);
        assert_eq!(f.get(2, 3), 1);
        assert_eq!(f.get(3, 1), 1);
        for s in 1..=3 {
            assert_eq!(f.get(s, s), 0);
        }
    }

    #[test]
    fn orientation_function_of_reversal_is_negated() {
        let o = builtin::oriented("zd7").unwrap();
        let f = o.orientation_function();
        let g = o.reversed().orientation_function();
        assert_eq!(g, f.negated());
    }

    #[test]
    fn zd7_orientation_function_example() {
        let o = builtin::oriented("zd7").unwrap();
        let f = o.orientation_function();
        assert_eq!(f.get(1, 3), -1);
        assert_eq!(f.get(1, 7), 1);
    }

    #[test]
    fn each_point_lies_in_half_triples() {
        for name in ["sts7", "sts9"] {
            let sts = builtin::unoriented(name).unwrap();
            let n = sts.n();
            for p in 1..=n as u32 {
                let deg = sts
                    .triples()
                    .iter()
                    .filter(|t| t.contains(Point::new(p)))
                    .count();
                assert_eq!(deg, (n - 1) / 2);
            }
        }
    }

    #[test]
    fn orientation_must_match_base() {
        let base = validate_sts(3, triples(&[[1, 2, 3]])).unwrap();
        let wrong = vec![canonical_rotation([1, 2, 4]).unwrap()];
        assert!(OrientedSts::new(base, wrong).is_err());
    }
}
