use std::collections::{HashMap, HashSet};

use serde_json::json;

use crate::design::{
    orientation_from_mask, OrientedSts, OrientedTriple, SteinerTripleSystem, DEFAULT_MAX_TRIPLES,
};
use crate::error::{Error, Result};
use crate::group::aut::{oriented_aut_group, sts_aut_group, AutOptions, TripleAction};
use crate::group::group::PermutationGroup;
use crate::group::perm::Permutation;
use crate::group::profile::{profile_group, SubgroupProfile};

#[derive(Clone, Copy, Debug, Default)]
pub struct ClassifyOptions {
    pub aut: AutOptions,
    pub max_triples: Option<usize>,
}

/// One isomorphism class of orientations.
#[derive(Clone, Debug)]
pub struct OrientationClass {
    /// Lexicographically least orbit member.
    pub representative: OrientedSts,
    pub orbit_size: usize,
    pub aut: PermutationGroup,
    pub profile: SubgroupProfile,
    pub reflexive: bool,
    /// 1-based index of the class containing the reversal; None when reflexive.
    pub mirror: Option<usize>,
}

/// The orbit partition of all 2^|T| orientations under Aut(S,T), sorted by
/// descending automorphism order and then by representative.
#[derive(Clone, Debug)]
pub struct ClassificationReport {
    pub base_aut_order: usize,
    pub classes: Vec<OrientationClass>,
}

pub fn classify_orientations(
    sts: &SteinerTripleSystem,
    opts: &ClassifyOptions,
) -> Result<ClassificationReport> {
    let m = sts.triples().len();
    let cap = opts.max_triples.unwrap_or(DEFAULT_MAX_TRIPLES);
    if m > cap || m >= 63 {
        return Err(Error::TooManyTriples { count: m, max: cap });
    }
    let group = sts_aut_group(sts, &opts.aut)?;
    let actions: Vec<TripleAction> = group
        .elements()
        .iter()
        .map(|phi| TripleAction::new(sts, phi))
        .collect();

    let total = 1u64 << m;
    let mut visited = vec![false; total as usize];
    let mut orbits: Vec<(u64, usize)> = vec![]; // (lex-least member, orbit size)
    for mask in 0..total {
        if visited[mask as usize] {
            continue;
        }
        let mut size = 0usize;
        let mut least: Option<(Vec<OrientedTriple>, u64)> = None;
        for action in &actions {
            let image = action.act(mask);
            if !visited[image as usize] {
                visited[image as usize] = true;
                size += 1;
                let cycles = orientation_from_mask(sts, image).cycles().to_vec();
                match &least {
                    Some((best, _)) if *best <= cycles => {}
                    _ => least = Some((cycles, image)),
                }
            }
        }
        let (_, rep_mask) = least.expect("orbit is nonempty");
        orbits.push((rep_mask, size));
    }

    let mut classes: Vec<OrientationClass> = orbits
        .into_iter()
        .map(|(rep_mask, orbit_size)| {
            let representative = orientation_from_mask(sts, rep_mask);
            let aut = oriented_aut_group(&representative, &group)?;
            debug_assert_eq!(orbit_size * aut.order(), group.order());
            let profile = profile_group(&aut);
            Ok(OrientationClass {
                representative,
                orbit_size,
                aut,
                profile,
                reflexive: false,
                mirror: None,
            })
        })
        .collect::<Result<_>>()?;

    classes.sort_by(|a, b| {
        b.aut
            .order()
            .cmp(&a.aut.order())
            .then_with(|| a.representative.cycles().cmp(b.representative.cycles()))
    });

    // Reversal toggles every flip bit, so the mirror class of a
    // representative is the orbit of its complemented mask.
    let rep_index: HashMap<Vec<OrientedTriple>, usize> = classes
        .iter()
        .enumerate()
        .map(|(i, c)| (c.representative.cycles().to_vec(), i))
        .collect();
    let full = total - 1;
    let mirrors: Vec<usize> = classes
        .iter()
        .map(|c| {
            let rev_mask = c.representative.flip_mask() ^ full;
            let least = actions
                .iter()
                .map(|a| {
                    orientation_from_mask(sts, a.act(rev_mask))
                        .cycles()
                        .to_vec()
                })
                .min()
                .expect("group is nonempty");
            rep_index[&least]
        })
        .collect();
    for (i, class) in classes.iter_mut().enumerate() {
        let j = mirrors[i];
        debug_assert_eq!(mirrors[j], i, "mirror pairing is an involution");
        class.reflexive = i == j;
        class.mirror = if i == j { None } else { Some(j + 1) };
    }

    debug_assert_eq!(
        classes.iter().map(|c| c.orbit_size as u64).sum::<u64>(),
        total
    );
    Ok(ClassificationReport {
        base_aut_order: group.order(),
        classes,
    })
}

impl ClassificationReport {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "base_aut_order": self.base_aut_order,
            "classes": self.classes.iter().map(|c| {
                let rep: Vec<[u32;3]> = c.representative.cycles().iter().map(|t| t.labels()).collect();
                let gens: Vec<Vec<u32>> = c.aut.generators().iter().map(|g| g.images().to_vec()).collect();
                let mut obj = json!({
                    "representative": rep,
                    "orbit_size": c.orbit_size,
                    "aut_order": c.aut.order(),
                    "profile": c.profile.catalog_name,
                    "generators": gens,
                    "reflexive": c.reflexive,
                });
                if let Some(m) = c.mirror {
                    obj["mirror"] = json!(m);
                }
                obj
            }).collect::<Vec<_>>(),
        })
    }
}

impl std::fmt::Display for ClassificationReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "base automorphism group order: {}", self.base_aut_order)?;
        writeln!(f, "{} orientation classes:", self.classes.len())?;
        for (i, c) in self.classes.iter().enumerate() {
            writeln!(
                f,
                "class {}: aut order {} ({}), orbit size {}, {}",
                i + 1,
                c.aut.order(),
                c.profile.catalog_name,
                c.orbit_size,
                if c.reflexive {
                    "reflexive".to_string()
                } else {
                    format!("mirror of class {}", c.mirror.unwrap_or(0))
                }
            )?;
            writeln!(f, "  representative: {}", c.representative)?;
            let gens: Vec<String> = c.aut.generators().iter().map(|g| g.to_string()).collect();
            writeln!(f, "  generators: {}", gens.join(" "))?;
        }
        Ok(())
    }
}

/// Reverses every cycle of an orientation.
pub fn reverse_orientation(o: &OrientedSts) -> OrientedSts {
    o.reversed()
}

/// Searches for an isomorphism between two oriented systems of the same
/// degree. Over the same base system the search runs through Aut(S,T); over
/// different bases it is a pruned bijection search.
pub fn are_isomorphic(o1: &OrientedSts, o2: &OrientedSts) -> Result<Option<Permutation>> {
    if o1.n() != o2.n() {
        return Err(Error::DegreeMismatch {
            left: o1.n(),
            right: o2.n(),
        });
    }
    if o1.base() == o2.base() {
        let base_aut = sts_aut_group(o1.base(), &AutOptions::default())?;
        return are_isomorphic_in(&base_aut, o1, o2);
    }
    Ok(bijection_search(o1, o2))
}

/// Same-base isomorphism search through a precomputed Aut(S,T).
pub fn are_isomorphic_in(
    base_aut: &PermutationGroup,
    o1: &OrientedSts,
    o2: &OrientedSts,
) -> Result<Option<Permutation>> {
    if o1.n() != o2.n() || base_aut.degree() != o1.n() {
        return Err(Error::DegreeMismatch {
            left: o1.n(),
            right: o2.n(),
        });
    }
    let m1 = o1.flip_mask();
    let m2 = o2.flip_mask();
    for phi in base_aut.elements() {
        let action = TripleAction::new(o1.base(), phi);
        if action.act(m1) == m2 {
            return Ok(Some(phi.clone()));
        }
    }
    Ok(None)
}

fn bijection_search(o1: &OrientedSts, o2: &OrientedSts) -> Option<Permutation> {
    let n = o1.n();
    let cycles2: HashSet<[u32; 3]> = o2.cycles().iter().map(|c| c.labels()).collect();
    // Triples of o1 keyed by their largest point, checkable once that point
    // is assigned.
    let mut complete_at: Vec<Vec<[u32; 3]>> = vec![vec![]; n + 1];
    for c in o1.cycles() {
        let labels = c.labels();
        let max = *labels.iter().max().expect("nonempty");
        complete_at[max as usize].push(labels);
    }
    fn rec(
        n: usize,
        complete_at: &[Vec<[u32; 3]>],
        o2base: &SteinerTripleSystem,
        cycles2: &HashSet<[u32; 3]>,
        images: &mut Vec<u32>,
        used: &mut [bool],
    ) -> Option<Permutation> {
        if images.len() == n {
            return Some(Permutation::from_images(images.clone()).expect("bijective"));
        }
        let p = images.len() + 1;
        'cand: for q in 1..=n as u32 {
            if used[q as usize] {
                continue;
            }
            images.push(q);
            for cyc in &complete_at[p] {
                let img = [
                    images[cyc[0] as usize - 1],
                    images[cyc[1] as usize - 1],
                    images[cyc[2] as usize - 1],
                ];
                if o2base.third_label(img[0], img[1]) != img[2] {
                    images.pop();
                    continue 'cand;
                }
                let canon = crate::design::canonical_rotation(img).expect("distinct");
                if !cycles2.contains(&canon.labels()) {
                    images.pop();
                    continue 'cand;
                }
            }
            used[q as usize] = true;
            if let Some(found) = rec(n, complete_at, o2base, cycles2, images, used) {
                return Some(found);
            }
            used[q as usize] = false;
            images.pop();
        }
        None
    }
    let mut images = Vec::with_capacity(n);
    let mut used = vec![false; n + 1];
    rec(n, &complete_at, o2.base(), &cycles2, &mut images, &mut used)
}

/// True when the orientation is isomorphic to its full reversal.
pub fn is_reflexive(o: &OrientedSts) -> Result<bool> {
    Ok(are_isomorphic(o, &o.reversed())?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::design::builtin;
    use crate::group::aut::apply;

    #[test]
    fn sts3_has_one_reflexive_class() {
        let sts = builtin::unoriented("sts3").unwrap();
        let report = classify_orientations(&sts, &ClassifyOptions::default()).unwrap();
        assert_eq!(report.base_aut_order, 6);
        assert_eq!(report.classes.len(), 1);
        let c = &report.classes[0];
        assert_eq!(c.aut.order(), 3);
        assert_eq!(c.orbit_size, 2);
        assert!(c.reflexive);
        assert_eq!(c.profile.catalog_name, "C3");
    }

    #[test]
    fn order_three_orientations_are_isomorphic_via_transposition() {
        let o1 = OrientedSts::from_cycles(3, &[[1, 2, 3]]).unwrap();
        let o2 = OrientedSts::from_cycles(3, &[[1, 3, 2]]).unwrap();
        let w = are_isomorphic(&o1, &o2).unwrap().unwrap();
        assert_eq!(w.to_string(), "(2,3)");
        assert_eq!(apply(&w, &o1).unwrap(), o2);
    }

    #[test]
    fn distinct_classes_are_not_isomorphic() {
        let a = builtin::oriented("o1_7").unwrap();
        let b = builtin::oriented("o3_7").unwrap();
        assert!(are_isomorphic(&a, &b).unwrap().is_none());
    }

    #[test]
    fn mirror_of_first_class_is_second() {
        let a = builtin::oriented("o1_7").unwrap();
        let b = builtin::oriented("o2_7").unwrap();
        let w = are_isomorphic(&a.reversed(), &b).unwrap();
        assert!(w.is_some());
    }

    #[test]
    fn witness_maps_source_to_target() {
        let a = builtin::oriented("o4_7").unwrap();
        let g = crate::group::aut::sts_aut_group(a.base(), &AutOptions::default()).unwrap();
        // pick an arbitrary orbit member and find the witness back
        let phi = g.elements()[17].clone();
        let b = apply(&phi, &a).unwrap();
        let w = are_isomorphic(&a, &b).unwrap().unwrap();
        assert_eq!(apply(&w, &a).unwrap(), b);
    }

    #[test]
    fn bijection_search_handles_relabelled_base() {
        // Relabel sts7 by a permutation outside its automorphism group, so
        // the base triple sets differ.
        let o = builtin::oriented("o3_7").unwrap();
        let sigma = Permutation::from_cycles(7, &[&[1, 2]]).unwrap();
        let relabelled = apply(&sigma, &o).unwrap();
        assert_ne!(relabelled.base(), o.base());
        let w = are_isomorphic(&o, &relabelled).unwrap().unwrap();
        assert_eq!(apply(&w, &o).unwrap(), relabelled);
    }

    #[test]
    fn reflexivity_of_builtin_models() {
        assert!(is_reflexive(&builtin::oriented("o1_3").unwrap()).unwrap());
        assert!(!is_reflexive(&builtin::oriented("o1_7").unwrap()).unwrap());
        assert!(is_reflexive(&builtin::oriented("o1_9").unwrap()).unwrap());
    }
}
