use crate::design::{OrientedSts, SteinerTripleSystem, Triple};
use crate::error::{Error, Result};
use crate::group::group::PermutationGroup;
use crate::group::perm::Permutation;

/// Caps for the two automorphism-search strategies: exhaustive scan of S_n
/// up to `exhaustive_max`, backtracking with triple-consistency pruning up
/// to `backtrack_max`, and an error beyond that. Setting a cap to 0 disables
/// the strategy.
#[derive(Clone, Copy, Debug)]
pub struct AutOptions {
    pub exhaustive_max: usize,
    pub backtrack_max: usize,
}

impl Default for AutOptions {
    fn default() -> AutOptions {
        AutOptions {
            exhaustive_max: 9,
            backtrack_max: 31,
        }
    }
}

fn is_automorphism(sts: &SteinerTripleSystem, images: &[u32]) -> bool {
    sts.triples().iter().all(|t| {
        let [a, b, c] = t.labels();
        sts.third_label(images[a as usize - 1], images[b as usize - 1]) == images[c as usize - 1]
    })
}

fn exhaustive_scan(sts: &SteinerTripleSystem) -> Vec<Permutation> {
    let n = sts.n();
    let mut images: Vec<u32> = Vec::with_capacity(n);
    let mut used = vec![false; n + 1];
    let mut out = vec![];
    fn rec(
        sts: &SteinerTripleSystem,
        images: &mut Vec<u32>,
        used: &mut [bool],
        out: &mut Vec<Permutation>,
    ) {
        let n = sts.n();
        if images.len() == n {
            if is_automorphism(sts, images) {
                out.push(Permutation::from_images(images.clone()).expect("bijective"));
            }
            return;
        }
        for q in 1..=n as u32 {
            if !used[q as usize] {
                used[q as usize] = true;
                images.push(q);
                rec(sts, images, used, out);
                images.pop();
                used[q as usize] = false;
            }
        }
    }
    rec(sts, &mut images, &mut used, &mut out);
    out
}

fn backtracking_scan(sts: &SteinerTripleSystem) -> Vec<Permutation> {
    let n = sts.n();
    // For each point p, the triples {x,y,p} with x,y < p; checkable as soon
    // as phi(p) is chosen.
    let mut complete_at: Vec<Vec<(u32, u32)>> = vec![vec![]; n + 1];
    for t in sts.triples() {
        let [a, b, c] = t.labels();
        complete_at[c as usize].push((a, b));
    }
    let mut images: Vec<u32> = Vec::with_capacity(n);
    let mut used = vec![false; n + 1];
    let mut out = vec![];
    fn rec(
        sts: &SteinerTripleSystem,
        complete_at: &[Vec<(u32, u32)>],
        images: &mut Vec<u32>,
        used: &mut [bool],
        out: &mut Vec<Permutation>,
    ) {
        let n = sts.n();
        if images.len() == n {
            out.push(Permutation::from_images(images.clone()).expect("bijective"));
            return;
        }
        let p = images.len() + 1;
        'cand: for q in 1..=n as u32 {
            if used[q as usize] {
                continue;
            }
            for &(x, y) in &complete_at[p] {
                let fx = images[x as usize - 1];
                let fy = images[y as usize - 1];
                if sts.third_label(fx, fy) != q {
                    continue 'cand;
                }
            }
            used[q as usize] = true;
            images.push(q);
            rec(sts, complete_at, images, used, out);
            images.pop();
            used[q as usize] = false;
        }
    }
    rec(sts, &complete_at, &mut images, &mut used, &mut out);
    out
}

/// The full automorphism group {φ : φ(T) = T}.
pub fn sts_aut_group(sts: &SteinerTripleSystem, opts: &AutOptions) -> Result<PermutationGroup> {
    let n = sts.n();
    let elements = if n <= opts.exhaustive_max {
        exhaustive_scan(sts)
    } else if n <= opts.backtrack_max {
        backtracking_scan(sts)
    } else {
        return Err(Error::DegreeTooLarge {
            n,
            max: opts.exhaustive_max.max(opts.backtrack_max),
        });
    };
    Ok(PermutationGroup::from_elements(n, elements))
}

/// Maps an oriented system pointwise and re-canonicalizes each cycle.
pub fn apply(phi: &Permutation, o: &OrientedSts) -> Result<OrientedSts> {
    if phi.degree() != o.n() {
        return Err(Error::DegreeMismatch {
            left: phi.degree(),
            right: o.n(),
        });
    }
    let cycles: Vec<[u32; 3]> = o
        .cycles()
        .iter()
        .map(|c| {
            let [a, b, cc] = c.labels();
            [phi.apply(a), phi.apply(b), phi.apply(cc)]
        })
        .collect();
    OrientedSts::from_cycles(o.n(), &cycles)
}

/// The stabilizer of an orientation inside the automorphism group of its
/// base system.
pub fn oriented_aut_group(
    o: &OrientedSts,
    base_aut: &PermutationGroup,
) -> Result<PermutationGroup> {
    if base_aut.degree() != o.n() {
        return Err(Error::DegreeMismatch {
            left: base_aut.degree(),
            right: o.n(),
        });
    }
    let mask = o.flip_mask();
    let elements: Vec<Permutation> = base_aut
        .elements()
        .iter()
        .filter(|phi| {
            let action = TripleAction::new(o.base(), phi);
            action.act(mask) == mask
        })
        .cloned()
        .collect();
    Ok(PermutationGroup::from_elements(o.n(), elements))
}

/// The action of one base automorphism on flip masks: triple i maps to
/// triple `tperm[i]`, toggling its flip bit when `tflip` has bit i set.
pub(crate) struct TripleAction {
    tperm: Vec<usize>,
    tflip: u64,
}

impl TripleAction {
    pub(crate) fn new(sts: &SteinerTripleSystem, phi: &Permutation) -> TripleAction {
        let m = sts.triples().len();
        let mut tperm = vec![0usize; m];
        let mut tflip = 0u64;
        for (i, t) in sts.triples().iter().enumerate() {
            let [a, b, c] = t.labels();
            let (fa, fb, fc) = (phi.apply(a), phi.apply(b), phi.apply(c));
            let j = sts.triple_index(fa, fb);
            tperm[i] = j;
            // The image cycle [fa,fb,fc] is the ascending rotation of triple j
            // exactly when fc is the third point "after" the sorted pair; it
            // is flipped otherwise.
            let sorted = sts.triples()[j].labels();
            let asc = crate::design::canonical_rotation(sorted).expect("triple");
            let img = crate::design::canonical_rotation([fa, fb, fc]).expect("triple");
            if img != asc {
                tflip |= 1 << i;
            }
        }
        TripleAction { tperm, tflip }
    }

    pub(crate) fn act(&self, mask: u64) -> u64 {
        let mut out = 0u64;
        for (i, &j) in self.tperm.iter().enumerate() {
            let bit = (mask >> i & 1) ^ (self.tflip >> i & 1);
            out |= bit << j;
        }
        out
    }
}

/// Checks that a triple list is closed under a permutation (used in tests
/// and report validation).
pub fn permutes_triples(phi: &Permutation, triples: &[Triple]) -> bool {
    triples.iter().all(|t| {
        let [a, b, c] = t.labels();
        let img = Triple::new(phi.apply(a), phi.apply(b), phi.apply(c)).expect("distinct");
        triples.binary_search(&img).is_ok()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::design::builtin;

    #[test]
    fn aut_orders_for_builtin_systems() {
        let opts = AutOptions::default();
        let g3 = sts_aut_group(&builtin::unoriented("sts3").unwrap(), &opts).unwrap();
        assert_eq!(g3.order(), 6);
        let g7 = sts_aut_group(&builtin::unoriented("sts7").unwrap(), &opts).unwrap();
        assert_eq!(g7.order(), 168);
        let g9 = sts_aut_group(&builtin::unoriented("sts9").unwrap(), &opts).unwrap();
        assert_eq!(g9.order(), 432);
    }

    #[test]
    fn backtracking_agrees_with_exhaustive() {
        let sts = builtin::unoriented("sts7").unwrap();
        let ex = sts_aut_group(&sts, &AutOptions::default()).unwrap();
        let bt = sts_aut_group(
            &sts,
            &AutOptions {
                exhaustive_max: 0,
                backtrack_max: 31,
            },
        )
        .unwrap();
        assert_eq!(ex, bt);
    }

    #[test]
    fn degree_too_large_when_disabled() {
        let sts = builtin::unoriented("sts7").unwrap();
        let opts = AutOptions {
            exhaustive_max: 0,
            backtrack_max: 0,
        };
        assert!(matches!(
            sts_aut_group(&sts, &opts),
            Err(Error::DegreeTooLarge { n: 7, .. })
        ));
    }

    #[test]
    fn published_generators_for_base_groups() {
        let g7 = sts_aut_group(
            &builtin::unoriented("sts7").unwrap(),
            &AutOptions::default(),
        )
        .unwrap();
        let a = Permutation::from_cycles(7, &[&[1, 2, 4, 3, 6, 7, 5]]).unwrap();
        let b = Permutation::from_cycles(7, &[&[4, 5], &[6, 7]]).unwrap();
        assert_eq!(PermutationGroup::generate(7, &[a, b]), g7);

        let g9 = sts_aut_group(
            &builtin::unoriented("sts9").unwrap(),
            &AutOptions::default(),
        )
        .unwrap();
        let a = Permutation::from_cycles(9, &[&[2, 6, 4, 9, 3, 8, 7, 5]]).unwrap();
        let b = Permutation::from_cycles(9, &[&[1, 3, 2], &[4, 7, 5, 8, 6, 9]]).unwrap();
        assert_eq!(PermutationGroup::generate(9, &[a, b]), g9);
    }

    #[test]
    fn apply_identity_and_composition() {
        let o = builtin::oriented("o1_7").unwrap();
        let id = Permutation::identity(7);
        assert_eq!(apply(&id, &o).unwrap(), o);
        let f = Permutation::from_cycles(7, &[&[1, 2]]).unwrap();
        let g = Permutation::from_cycles(7, &[&[2, 3, 4]]).unwrap();
        let fg = f.compose(&g);
        assert_eq!(
            apply(&fg, &o).unwrap(),
            apply(&f, &apply(&g, &o).unwrap()).unwrap()
        );
    }

    #[test]
    fn apply_transposition_on_order_three() {
        let o = builtin::oriented("o1_3").unwrap();
        let phi = Permutation::from_cycles(3, &[&[2, 3]]).unwrap();
        let image = apply(&phi, &o).unwrap();
        assert_eq!(image.cycles()[0].labels(), [1, 3, 2]);
    }

    #[test]
    fn oriented_aut_orders() {
        let opts = AutOptions::default();
        let base7 = sts_aut_group(&builtin::unoriented("sts7").unwrap(), &opts).unwrap();
        let a1 = oriented_aut_group(&builtin::oriented("o1_7").unwrap(), &base7).unwrap();
        assert_eq!(a1.order(), 21);
        let a3 = oriented_aut_group(&builtin::oriented("o3_7").unwrap(), &base7).unwrap();
        assert_eq!(a3.order(), 3);
        let gen = Permutation::from_cycles(7, &[&[2, 4, 6], &[3, 5, 7]]).unwrap();
        assert!(a3.contains(&gen));

        let base9 = sts_aut_group(&builtin::unoriented("sts9").unwrap(), &opts).unwrap();
        let a19 = oriented_aut_group(&builtin::oriented("o1_9").unwrap(), &base9).unwrap();
        assert_eq!(a19.order(), 27);
        let gen = Permutation::from_cycles(9, &[&[4, 5, 6], &[7, 9, 8]]).unwrap();
        assert!(a19.contains(&gen));
    }

    #[test]
    fn zd7_aut_is_the_published_three_cycle_pair() {
        let opts = AutOptions::default();
        let base7 = sts_aut_group(&builtin::unoriented("sts7").unwrap(), &opts).unwrap();
        let a = oriented_aut_group(&builtin::oriented("zd7").unwrap(), &base7).unwrap();
        assert_eq!(a.order(), 3);
        let g = Permutation::from_cycles(7, &[&[2, 7, 4], &[3, 6, 5]]).unwrap();
        assert!(a.contains(&g));
    }

    #[test]
    fn stabilizer_elements_fix_the_orientation() {
        let opts = AutOptions::default();
        let o = builtin::oriented("o2_7").unwrap();
        let base = sts_aut_group(o.base(), &opts).unwrap();
        let stab = oriented_aut_group(&o, &base).unwrap();
        assert_eq!(stab.order(), 21);
        for phi in stab.elements() {
            assert_eq!(apply(phi, &o).unwrap(), o);
        }
    }
}
