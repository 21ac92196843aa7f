use serde::Serialize;

use crate::group::group::PermutationGroup;

/// Fingerprint of a small finite group, with a name from a closed catalog of
/// the isomorphism types that occur for oriented-system automorphism groups.
/// Anything outside the catalog is reported as `unknown(...)` rather than
/// guessed.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct SubgroupProfile {
    pub order: usize,
    pub is_abelian: bool,
    pub exponent: usize,
    pub is_cyclic: bool,
    pub catalog_name: String,
}

fn lcm(a: usize, b: usize) -> usize {
    fn gcd(mut a: usize, mut b: usize) -> usize {
        while b != 0 {
            let t = a % b;
            a = b;
            b = t;
        }
        a
    }
    a / gcd(a, b) * b
}

fn catalog(order: usize, abelian: bool, exponent: usize) -> String {
    match (order, abelian, exponent) {
        (1, _, _) => "C1".into(),
        (3, _, _) => "C3".into(),
        (6, false, _) => "S3".into(),
        (9, true, 3) => "C3xC3".into(),
        (9, true, 9) => "C9".into(),
        (21, false, _) => "C7:C3".into(),
        (27, false, 3) => "He3".into(),
        _ => format!("unknown(order={order}, abelian={abelian}, exponent={exponent})"),
    }
}

/// Computes order, abelian flag, exponent and cyclicity by direct iteration.
pub fn profile_group(g: &PermutationGroup) -> SubgroupProfile {
    let order = g.order();
    let elems = g.elements();
    let is_abelian = elems
        .iter()
        .enumerate()
        .all(|(i, a)| elems[i + 1..].iter().all(|b| a.compose(b) == b.compose(a)));
    let mut exponent = 1;
    let mut is_cyclic = order == 1;
    for e in elems {
        let k = e.order();
        exponent = lcm(exponent, k);
        if k == order {
            is_cyclic = true;
        }
    }
    SubgroupProfile {
        order,
        is_abelian,
        exponent,
        is_cyclic,
        catalog_name: catalog(order, is_abelian, exponent),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::perm::Permutation;

    #[test]
    fn s3_profile() {
        let g = PermutationGroup::generate(
            3,
            &[
                Permutation::from_cycles(3, &[&[1, 2, 3]]).unwrap(),
                Permutation::from_cycles(3, &[&[1, 2]]).unwrap(),
            ],
        );
        let p = profile_group(&g);
        assert_eq!(p.order, 6);
        assert!(!p.is_abelian);
        assert_eq!(p.exponent, 6);
        assert_eq!(p.catalog_name, "S3");
    }

    #[test]
    fn cyclic_profiles() {
        let c3 =
            PermutationGroup::generate(3, &[Permutation::from_cycles(3, &[&[1, 2, 3]]).unwrap()]);
        let p = profile_group(&c3);
        assert_eq!((p.order, p.is_cyclic), (3, true));
        assert_eq!(p.catalog_name, "C3");
        let c1 = PermutationGroup::trivial(4);
        assert_eq!(profile_group(&c1).catalog_name, "C1");
    }

    #[test]
    fn profile_invariant_under_conjugation() {
        let a = Permutation::from_cycles(7, &[&[2, 4, 6], &[3, 5, 7]]).unwrap();
        let h = PermutationGroup::generate(7, &[a]);
        let x = Permutation::from_cycles(7, &[&[1, 2], &[4, 5]]).unwrap();
        assert_eq!(profile_group(&h), profile_group(&h.conjugated_by(&x)));
    }

    #[test]
    fn out_of_catalog_is_unknown() {
        let c2 = PermutationGroup::generate(2, &[Permutation::from_cycles(2, &[&[1, 2]]).unwrap()]);
        assert_eq!(
            profile_group(&c2).catalog_name,
            "unknown(order=2, abelian=true, exponent=2)"
        );
    }
}
