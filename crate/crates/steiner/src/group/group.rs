use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::group::perm::Permutation;

/// A permutation group given by its explicit, sorted element list.
///
/// Every group occurring here has at most a few hundred elements, so the
/// list representation keeps all fingerprints computable by direct
/// iteration.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PermutationGroup {
    degree: usize,
    elements: Vec<Permutation>,
}

impl PermutationGroup {
    /// Wraps an element list (sorted, deduplicated). The caller asserts
    /// closure; `is_closed` checks it explicitly where wanted.
    pub fn from_elements(degree: usize, mut elements: Vec<Permutation>) -> PermutationGroup {
        elements.sort_unstable();
        elements.dedup();
        if elements.is_empty() {
            elements.push(Permutation::identity(degree));
        }
        PermutationGroup { degree, elements }
    }

    pub fn trivial(degree: usize) -> PermutationGroup {
        PermutationGroup::from_elements(degree, vec![Permutation::identity(degree)])
    }

    /// Closes a generating set under composition.
    pub fn generate(degree: usize, generators: &[Permutation]) -> PermutationGroup {
        let mut elems: HashSet<Permutation> = HashSet::new();
        elems.insert(Permutation::identity(degree));
        let mut frontier: Vec<Permutation> = vec![Permutation::identity(degree)];
        while let Some(x) = frontier.pop() {
            for g in generators {
                let y = g.compose(&x);
                if elems.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        PermutationGroup::from_elements(degree, elems.into_iter().collect())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &PermutationGroup) -> bool {
        self.degree == other.degree && self.elements.iter().all(|e| other.contains(e))
    }

    pub fn is_closed(&self) -> bool {
        self.elements.iter().all(|a| {
            self.contains(&a.inverse())
                && self.elements.iter().all(|b| self.contains(&a.compose(b)))
        })
    }

    /// A small generating list, chosen greedily over the sorted elements.
    pub fn generators(&self) -> Vec<Permutation> {
        let mut gens: Vec<Permutation> = vec![];
        let mut reached = PermutationGroup::trivial(self.degree);
        for e in &self.elements {
            if !reached.contains(e) {
                gens.push(e.clone());
                reached = PermutationGroup::generate(self.degree, &gens);
                if reached.order() == self.order() {
                    break;
                }
            }
        }
        gens
    }

    /// x H x^{-1} as an element list.
    pub fn conjugated_by(&self, x: &Permutation) -> PermutationGroup {
        let xinv = x.inverse();
        let elems = self
            .elements
            .iter()
            .map(|h| x.compose(h).compose(&xinv))
            .collect();
        PermutationGroup::from_elements(self.degree, elems)
    }
}

/// Searches the ambient group for an element conjugating `h` onto `k`.
pub fn are_conjugate_subgroups(
    h: &PermutationGroup,
    k: &PermutationGroup,
    g: &PermutationGroup,
) -> Result<Option<Permutation>> {
    if !h.is_subgroup_of(g) || !k.is_subgroup_of(g) {
        return Err(Error::NotSubgroup);
    }
    if h.order() != k.order() {
        return Ok(None);
    }
    for x in g.elements() {
        if h.conjugated_by(x) == *k {
            return Ok(Some(x.clone()));
        }
    }
    Ok(None)
}
