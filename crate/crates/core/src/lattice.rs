//! The inclusion poset of monomial ideals and its Hasse diagram.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use hashbrown::HashMap;

use crate::ideals::{is_abelian, MonomialIdeal};
use crate::root_system::RootSystem;
use crate::{Error, Result};

/// Monomial ideals ordered by inclusion, zero ideal at the bottom.
///
/// `edges` holds `(smaller, larger)` node indices for every cover relation,
/// sorted. Nested ideals one dimension apart always form a cover.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealLattice {
    pub nodes: Vec<MonomialIdeal>,
    pub edges: Vec<(usize, usize)>,
}

impl IdealLattice {
    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.nodes.len() - 1
    }

    /// Indices of nodes directly above `node`.
    pub fn covers_of(&self, node: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges
            .iter()
            .filter(move |&&(lo, _)| lo == node)
            .map(|&(_, hi)| hi)
    }
}

/// Sorts the ideals by (dimension, roots), adds the zero ideal and computes
/// the cover edges.
pub fn build_lattice(ideals: &[MonomialIdeal], rs: &RootSystem) -> Result<IdealLattice> {
    let mut nodes = Vec::with_capacity(ideals.len() + 1);
    nodes.push(MonomialIdeal::zero(rs));
    for j in ideals {
        let set = j.root_set();
        if set.iter().any(|g| g >= rs.len()) {
            return Err(Error::Structural(
                "ideal does not belong to this root system",
            ));
        }
        nodes.push(MonomialIdeal::new(set.clone(), rs)?);
    }
    nodes.sort_unstable();
    nodes.dedup();

    let mut edges = Vec::new();
    {
        let position: HashMap<&MonomialIdeal, usize> =
            nodes.iter().enumerate().map(|(i, j)| (j, i)).collect();
        for (hi, v) in nodes.iter().enumerate() {
            for g in v.root_set() {
                let below = MonomialIdeal::new_unchecked(v.root_set().without(g));
                // not closed => not a node
                if let Some(&lo) = position.get(&below) {
                    edges.push((lo, hi));
                }
            }
        }
    }
    edges.sort_unstable();
    Ok(IdealLattice { nodes, edges })
}

/// Ideal counts under both zero-ideal conventions.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DimensionCounts {
    /// Nonzero ideals per dimension.
    pub by_dimension: BTreeMap<usize, usize>,
    pub nonzero: usize,
    pub with_zero: usize,
    /// Abelian ideals, the zero ideal included.
    pub abelian_with_zero: usize,
}

pub fn counts_by_dimension(ideals: &[MonomialIdeal], rs: &RootSystem) -> DimensionCounts {
    let mut counts = DimensionCounts {
        abelian_with_zero: 1,
        ..Default::default()
    };
    for j in ideals.iter().filter(|j| !j.is_zero()) {
        *counts.by_dimension.entry(j.dimension()).or_default() += 1;
        counts.nonzero += 1;
        if is_abelian(j, rs) {
            counts.abelian_with_zero += 1;
        }
    }
    counts.with_zero = counts.nonzero + 1;
    counts
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideals::{abelian_ideals, enumerate_nilradical_ideals};
    use crate::Family;
    use alloc::vec;

    fn lattice(f: Family, n: usize) -> IdealLattice {
        let rs = RootSystem::new(f, n).unwrap();
        build_lattice(&enumerate_nilradical_ideals(&rs), &rs).unwrap()
    }

    #[test]
    fn a2_lattice_is_a_diamond_on_a_stem() {
        let l = lattice(Family::A, 2);
        assert_eq!(l.nodes.len(), 5);
        assert_eq!(l.edges, [(0, 1), (1, 2), (1, 3), (2, 4), (3, 4)]);
    }

    #[test]
    fn b2_lattice_splits_once() {
        let l = lattice(Family::B, 2);
        assert_eq!(l.nodes.len(), 6);
        let dims: Vec<_> = l.nodes.iter().map(MonomialIdeal::dimension).collect();
        assert_eq!(dims, [0, 1, 2, 3, 3, 4]);
        assert_eq!(l.edges, [(0, 1), (1, 2), (2, 3), (2, 4), (3, 5), (4, 5)]);
        assert_eq!(l.covers_of(2).collect::<Vec<_>>(), [3, 4]);
    }

    #[test]
    fn a1_lattice() {
        let l = lattice(Family::A, 1);
        assert_eq!(l.nodes.len(), 2);
        assert_eq!(l.edges, [(0, 1)]);
        assert_eq!((l.bottom(), l.top()), (0, 1));
    }

    #[test]
    fn counts() {
        for (f, by_dim, nonzero) in [
            (Family::A, vec![(1, 1), (2, 2), (3, 1)], 4),
            (Family::B, vec![(1, 1), (2, 1), (3, 2), (4, 1)], 5),
        ] {
            let rs = RootSystem::new(f, 2).unwrap();
            let c = counts_by_dimension(&enumerate_nilradical_ideals(&rs), &rs);
            assert_eq!(c.by_dimension.into_iter().collect::<Vec<_>>(), by_dim);
            assert_eq!(c.nonzero, nonzero);
            assert_eq!(c.with_zero, nonzero + 1);
            assert_eq!(c.abelian_with_zero, abelian_ideals(&rs).len());
        }
    }

    #[test]
    fn foreign_ideals_are_rejected() {
        let a3 = RootSystem::new(Family::A, 3).unwrap();
        let a2 = RootSystem::new(Family::A, 2).unwrap();
        let ideals = enumerate_nilradical_ideals(&a3);
        assert!(build_lattice(&ideals, &a2).is_err());
    }
}
