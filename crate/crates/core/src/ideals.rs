//! Monomial ideals of the Borel subalgebra contained in its nilradical.
//!
//! Every ideal `J` of `g` inside `g'` is stable under the Cartan subalgebra,
//! hence a sum of root spaces `J = sum_{a in R_J} C X_a`, and it is an ideal
//! exactly when `R_J` is closed under adding simple roots. The nonzero ones
//! all contain the highest root, and every `(d+1)`-dimensional one is obtained
//! from a `d`-dimensional one by adjoining a root `g` whose raises `g + a_j`
//! are either non-roots or already in `R_J`. [`Enumerator`] walks these layers
//! breadth first.

use alloc::vec::Vec;
use core::fmt;

use hashbrown::HashSet;

use crate::root_set::RootSet;
use crate::root_system::{Root, RootStyle, RootSystem};
use crate::{Error, Result};

/// Largest `|R+|` the subset oracle accepts by default.
pub const DEFAULT_BRUTE_FORCE_BOUND: usize = 20;

/// A root subset `R_J` closed under adding simple roots; the empty set is the
/// zero ideal.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialIdeal(RootSet);

impl MonomialIdeal {
    pub fn zero(rs: &RootSystem) -> Self {
        Self(rs.empty_set())
    }

    /// The whole nilradical `g'`.
    pub fn nilradical(rs: &RootSystem) -> Self {
        Self(rs.full_set())
    }

    pub fn new(set: RootSet, rs: &RootSystem) -> Result<Self> {
        match closure_violation(&set, rs) {
            None => Ok(Self(set)),
            Some((root, missing)) => Err(Error::NotAnIdeal {
                root: rs.root(root).clone(),
                missing: rs.root(missing).clone(),
            }),
        }
    }

    pub fn from_roots<'a>(
        roots: impl IntoIterator<Item = &'a Root>,
        rs: &RootSystem,
    ) -> Result<Self> {
        Self::new(rs.set_of(roots)?, rs)
    }

    pub(crate) fn new_unchecked(set: RootSet) -> Self {
        Self(set)
    }

    pub fn root_set(&self) -> &RootSet {
        &self.0
    }

    pub fn into_root_set(self) -> RootSet {
        self.0
    }

    pub fn dimension(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, index: usize) -> bool {
        self.0.contains(index)
    }

    /// Members in canonical root order.
    pub fn roots<'a>(&'a self, rs: &'a RootSystem) -> impl Iterator<Item = &'a Root> + 'a {
        rs.roots_of(&self.0)
    }

    /// Indices of the roots that can be adjoined to give a larger ideal.
    pub fn candidates<'a>(&'a self, rs: &'a RootSystem) -> impl Iterator<Item = usize> + 'a {
        (0..rs.len()).filter(move |&g| !self.0.contains(g) && rs.raised(g).is_subset(&self.0))
    }

    /// All ideals of dimension one more that contain `self`.
    pub fn extensions<'a>(&'a self, rs: &'a RootSystem) -> impl Iterator<Item = Self> + 'a {
        self.candidates(rs).map(move |g| Self(self.0.with(g)))
    }

    /// `0` for the zero ideal, otherwise `[X[a1], X[a1+a2]]`.
    pub fn display<'a>(&'a self, rs: &'a RootSystem, style: RootStyle) -> IdealDisplay<'a> {
        IdealDisplay {
            set: &self.0,
            rs,
            style,
        }
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("MonomialIdeal").field(&self.0).finish()
    }
}

/// Renders a root set in the bracketed `[X[..], ..]` notation.
#[derive(Debug, Clone, Copy)]
pub struct IdealDisplay<'a> {
    set: &'a RootSet,
    rs: &'a RootSystem,
    style: RootStyle,
}

impl<'a> IdealDisplay<'a> {
    pub fn of_set(set: &'a RootSet, rs: &'a RootSystem, style: RootStyle) -> Self {
        Self { set, rs, style }
    }
}

impl fmt::Display for IdealDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.set.is_empty() {
            return f.write_str("0");
        }
        f.write_str("[")?;
        for (n, root) in self.rs.roots_of(self.set).enumerate() {
            if n > 0 {
                f.write_str(", ")?;
            }
            write!(f, "X[{}]", root.display(self.style))?;
        }
        f.write_str("]")
    }
}

/// First `(g, g + a_j)` with `g` in the set and `g + a_j` a root outside it.
fn closure_violation(set: &RootSet, rs: &RootSystem) -> Option<(usize, usize)> {
    set.iter().find_map(|g| {
        rs.raised(g)
            .iter()
            .find(|&up| !set.contains(up))
            .map(|up| (g, up))
    })
}

/// Whether a set of positive-root indices is closed under adding simple roots.
pub fn is_ideal_set(set: &RootSet, rs: &RootSystem) -> bool {
    closure_violation(set, rs).is_none()
}

/// Whether `roots` spans an ideal of `g`. Rejects non-roots.
pub fn is_monomial_ideal<'a>(
    roots: impl IntoIterator<Item = &'a Root>,
    rs: &RootSystem,
) -> Result<bool> {
    Ok(is_ideal_set(&rs.set_of(roots)?, rs))
}

/// The one-dimensional ideals `<X_g>` with `[X_a, X_g] = 0` for every simple
/// root `a`. For an irreducible system this is just the highest root.
pub fn one_dimensional_ideals(rs: &RootSystem) -> Vec<MonomialIdeal> {
    (0..rs.len())
        .filter(|&g| rs.raised(g).is_empty())
        .map(|g| MonomialIdeal(RootSet::from_indices(rs.len(), [g])))
        .collect()
}

/// Roots `g` outside `R_J` such that `R_J + g` is again an ideal.
///
/// Fails if `set` is not itself closed under adding simple roots.
pub fn extension_candidates(set: &RootSet, rs: &RootSystem) -> Result<Vec<Root>> {
    let ideal = MonomialIdeal::new(set.clone(), rs)?;
    Ok(ideal.candidates(rs).map(|g| rs.root(g).clone()).collect())
}

/// All ideals one dimension up from `layer`, deduplicated and sorted.
pub fn next_layer(layer: &[MonomialIdeal], rs: &RootSystem) -> Vec<MonomialIdeal> {
    let mut seen = HashSet::new();
    let mut next: Vec<MonomialIdeal> = layer
        .iter()
        .flat_map(|j| j.extensions(rs))
        .filter(|k| seen.insert(k.clone()))
        .collect();
    next.sort_unstable();
    next
}

/// Breadth-first enumeration of the nonzero monomial ideals, one dimension
/// per round, with an optional cap on the number of ideals produced.
#[derive(Debug, Clone)]
pub struct Enumerator<'a> {
    rs: &'a RootSystem,
    limit: Option<usize>,
}

impl<'a> Enumerator<'a> {
    pub fn new(rs: &'a RootSystem) -> Self {
        Self { rs, limit: None }
    }

    pub fn with_limit(mut self, limit: usize) -> Self {
        self.limit = Some(limit);
        self
    }

    pub fn run(&self) -> Result<Vec<MonomialIdeal>> {
        self.run_with(|layer| next_layer(layer, self.rs))
    }

    /// Like [`run`](Self::run), but computes each new layer with `expand`,
    /// which must return the deduplicated extensions of the layer it is given
    /// (in any order).
    pub fn run_with(
        &self,
        mut expand: impl FnMut(&[MonomialIdeal]) -> Vec<MonomialIdeal>,
    ) -> Result<Vec<MonomialIdeal>> {
        let mut all = Vec::new();
        let mut layer = one_dimensional_ideals(self.rs);
        while !layer.is_empty() {
            layer.sort_unstable();
            all.extend_from_slice(&layer);
            if let Some(limit) = self.limit {
                if all.len() > limit {
                    return Err(Error::Capacity {
                        what: "number of ideals",
                        limit,
                    });
                }
            }
            layer = expand(&layer);
        }
        Ok(all)
    }
}

/// Every nonzero monomial ideal of `g` inside `g'`, including `g'` itself, in
/// canonical order (dimension, then member roots).
pub fn enumerate_nilradical_ideals(rs: &RootSystem) -> Vec<MonomialIdeal> {
    Enumerator::new(rs)
        .run()
        .expect("enumeration without a limit cannot exceed capacity")
}

/// Oracle: every nonempty subset of `R+` that is closed under adding simple
/// roots, found by exhausting all `2^|R+|` subsets.
pub fn brute_force_ideals(rs: &RootSystem, bound: usize) -> Result<Vec<MonomialIdeal>> {
    let n = rs.len();
    if n > bound.min(63) {
        return Err(Error::Capacity {
            what: "number of positive roots for the subset oracle",
            limit: bound.min(63),
        });
    }
    let raised: Vec<u64> = (0..n)
        .map(|g| rs.raised(g).iter().fold(0, |m, up| m | 1 << up))
        .collect();
    let mut found = Vec::new();
    for mask in 1u64..1 << n {
        let closed = (0..n)
            .filter(|&g| mask & 1 << g != 0)
            .all(|g| raised[g] & !mask == 0);
        if closed {
            let set = RootSet::from_indices(n, (0..n).filter(|&g| mask & 1 << g != 0));
            found.push(MonomialIdeal(set));
        }
    }
    found.sort_unstable();
    Ok(found)
}

/// No two members (a root with itself included) sum to a root.
pub fn is_abelian(ideal: &MonomialIdeal, rs: &RootSystem) -> bool {
    is_abelian_set(ideal.root_set(), rs)
}

pub fn is_abelian_set(set: &RootSet, rs: &RootSystem) -> bool {
    set.iter().all(|g| !rs.addable(g).intersects(set))
}

/// The abelian monomial ideals, the zero ideal first, in canonical order.
pub fn abelian_ideals(rs: &RootSystem) -> Vec<MonomialIdeal> {
    let mut out = Vec::from([MonomialIdeal::zero(rs)]);
    out.extend(
        enumerate_nilradical_ideals(rs)
            .into_iter()
            .filter(|j| is_abelian(j, rs)),
    );
    out
}
