//! Subalgebras of the nilradical spanned by root vectors.
//!
//! Only root-vector-spanned ("monomial") subalgebras are handled. Elements
//! such as `X_a + c X_b` with a free parameter need signed structure constants
//! and are out of reach of the sign-free bracket used here.
//!
//! Normalizers and centralizers are taken inside `g'`; Cartan elements are
//! never part of the result.

use alloc::vec::Vec;

use crate::root_set::RootSet;
use crate::root_system::{Root, RootSystem};
use crate::{Error, Result};

/// A set of positive roots whose span is closed under the bracket.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialSubalgebra(RootSet);

impl MonomialSubalgebra {
    pub fn new(set: RootSet, rs: &RootSystem) -> Result<Self> {
        match bracket_violation(&set, rs) {
            None => Ok(Self(set)),
            Some((a, b, s)) => Err(Error::NotASubalgebra {
                left: rs.root(a).clone(),
                right: rs.root(b).clone(),
                sum: rs.root(s).clone(),
            }),
        }
    }

    pub fn from_roots<'a>(
        roots: impl IntoIterator<Item = &'a Root>,
        rs: &RootSystem,
    ) -> Result<Self> {
        Self::new(rs.set_of(roots)?, rs)
    }

    pub fn root_set(&self) -> &RootSet {
        &self.0
    }

    pub fn dimension(&self) -> usize {
        self.0.len()
    }

    pub fn roots<'a>(&'a self, rs: &'a RootSystem) -> impl Iterator<Item = &'a Root> + 'a {
        rs.roots_of(&self.0)
    }
}

fn bracket_violation(set: &RootSet, rs: &RootSystem) -> Option<(usize, usize, usize)> {
    set.iter().find_map(|a| {
        set.iter().find_map(|b| {
            rs.sum(a, b)
                .filter(|&s| !set.contains(s))
                .map(|s| (a, b, s))
        })
    })
}

/// Whether `roots` spans a subalgebra of `g'`. Rejects non-roots.
pub fn is_monomial_subalgebra<'a>(
    roots: impl IntoIterator<Item = &'a Root>,
    rs: &RootSystem,
) -> Result<bool> {
    Ok(bracket_violation(&rs.set_of(roots)?, rs).is_none())
}

/// Smallest monomial subalgebra containing `set`.
pub fn subalgebra_closure(set: &RootSet, rs: &RootSystem) -> MonomialSubalgebra {
    let mut closed = set.clone();
    let mut pending: Vec<usize> = set.iter().collect();
    while let Some(a) = pending.pop() {
        let members: Vec<usize> = closed.iter().collect();
        for b in members {
            if let Some(s) = rs.sum(a, b) {
                if closed.insert(s) {
                    pending.push(s);
                }
            }
        }
    }
    MonomialSubalgebra(closed)
}

/// `{ g in R+ : for all d in S, g + d is not a root or lies in S }`, the root
/// vectors of `g'` normalizing `span(S)`.
pub fn monomial_normalizer(s: &MonomialSubalgebra, rs: &RootSystem) -> MonomialSubalgebra {
    let set = s.root_set();
    let normalizer = RootSet::from_indices(
        rs.len(),
        (0..rs.len()).filter(|&g| {
            set.iter()
                .all(|d| rs.sum(g, d).is_none_or(|sum| set.contains(sum)))
        }),
    );
    debug_assert!(bracket_violation(&normalizer, rs).is_none());
    MonomialSubalgebra(normalizer)
}

/// `{ g in R+ : for all d in S, g + d is not a root }`, the root vectors of
/// `g'` commuting with all of `span(S)` whatever the structure constants.
pub fn monomial_centralizer(s: &MonomialSubalgebra, rs: &RootSystem) -> RootSet {
    let set = s.root_set();
    RootSet::from_indices(
        rs.len(),
        (0..rs.len()).filter(|&g| !rs.addable(g).intersects(set)),
    )
}
