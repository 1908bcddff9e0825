//! Cartan parts of general ideals.
//!
//! An arbitrary ideal of `g` decomposes as `J = S + (J ∩ g')`, where the
//! monomial part `J ∩ g'` has root set `R_J` and `S` is any subspace of the
//! Cartan subalgebra on which every root outside `R_J` vanishes. So the full
//! ideal set is parametrized by pairs (monomial ideal, subspace of its Cartan
//! kernel). The kernel is infinite-dimensional in choices as soon as it is
//! nonzero, so it is reported as a basis.

use alloc::vec::Vec;
use core::fmt;

use crate::ideals::{enumerate_nilradical_ideals, is_abelian, MonomialIdeal};
use crate::linalg::Echelon;
use crate::root_system::{RootStyle, RootSystem};

/// Basis of `{ t in span(H_1..H_rank) : b(t) = 0 for all b in R+ \ R_J }`.
///
/// Each vector holds the coefficients of `sum_j c_j H_j`. The vectors are
/// primitive integer rows in reduced row-echelon form with positive pivots.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CartanKernelBasis {
    pub vectors: Vec<Vec<i64>>,
}

impl CartanKernelBasis {
    pub fn dimension(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_zero(&self) -> bool {
        self.vectors.is_empty()
    }
}

/// Renders `sum_j c_j H_j` as `2H[a1]+H[a2]`.
#[derive(Debug, Clone, Copy)]
pub struct CartanElementDisplay<'a> {
    pub coeffs: &'a [i64],
    pub style: RootStyle,
}

impl fmt::Display for CartanElementDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if c < 0 {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            let h = crate::BasisElement::Cartan(j);
            write!(f, "{}", h.display(self.style))?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Kernel of the roots outside `ideal`, computed exactly.
pub fn cartan_kernel(ideal: &MonomialIdeal, rs: &RootSystem) -> CartanKernelBasis {
    let mut m = Echelon::new(rs.rank());
    for b in (0..rs.len()).filter(|&b| !ideal.contains(b)) {
        m.insert(&rs.pairing_vector(b));
        if m.is_full() {
            break;
        }
    }
    CartanKernelBasis {
        vectors: m.nullspace(),
    }
}

/// One monomial ideal together with its admissible Cartan parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassifiedIdeal {
    pub ideal: MonomialIdeal,
    pub kernel: CartanKernelBasis,
    pub abelian: bool,
}

impl ClassifiedIdeal {
    /// Nonzero Cartan part possible while `R_J` is a proper subset of `R+`.
    pub fn is_mixed(&self, rs: &RootSystem) -> bool {
        !self.kernel.is_zero() && self.ideal.dimension() < rs.len()
    }
}

/// Every ideal of the Borel subalgebra, grouped by monomial part.
///
/// The ideals of `g` are exactly `span(S) + span(X_a : a in R_J)` where `R_J`
/// runs over [`entries`](Self::entries) (the zero ideal first, `g'` last) and
/// `S` runs over the subspaces of the matching kernel.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealClassification {
    pub entries: Vec<ClassifiedIdeal>,
}

impl IdealClassification {
    /// Builds the classification from the nonzero monomial ideals; the zero
    /// ideal is added here.
    pub fn from_ideals(ideals: &[MonomialIdeal], rs: &RootSystem) -> Self {
        let mut all = Vec::with_capacity(ideals.len() + 1);
        all.push(MonomialIdeal::zero(rs));
        all.extend(ideals.iter().filter(|j| !j.is_zero()).cloned());
        all.sort_unstable();
        all.dedup();
        let entries = all
            .into_iter()
            .map(|ideal| ClassifiedIdeal {
                kernel: cartan_kernel(&ideal, rs),
                abelian: is_abelian(&ideal, rs),
                ideal,
            })
            .collect();
        Self { entries }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn mixed<'a>(&'a self, rs: &'a RootSystem) -> impl Iterator<Item = &'a ClassifiedIdeal> {
        self.entries.iter().filter(move |e| e.is_mixed(rs))
    }
}

pub fn full_ideal_classification(rs: &RootSystem) -> IdealClassification {
    IdealClassification::from_ideals(&enumerate_nilradical_ideals(rs), rs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Family, Root};
    use alloc::string::ToString;
    use alloc::vec;

    fn ideal(rs: &RootSystem, roots: &[&[i32]]) -> MonomialIdeal {
        let roots: Vec<Root> = roots.iter().map(|c| Root::new(c.to_vec())).collect();
        MonomialIdeal::from_roots(&roots, rs).unwrap()
    }

    #[test]
    fn a2_kernels() {
        let rs = RootSystem::new(Family::A, 2).unwrap();
        let j = ideal(&rs, &[&[1, 0], &[1, 1]]);
        assert_eq!(cartan_kernel(&j, &rs).vectors, [vec![2, 1]]);
        let top = ideal(&rs, &[&[1, 1]]);
        assert!(cartan_kernel(&top, &rs).is_zero());
        let all = MonomialIdeal::nilradical(&rs);
        assert_eq!(cartan_kernel(&all, &rs).vectors, [vec![1, 0], vec![0, 1]]);
    }

    #[test]
    fn full_nilradical_has_full_cartan() {
        for (f, n) in [(Family::B, 3), (Family::E, 6), (Family::G, 2)] {
            let rs = RootSystem::new(f, n).unwrap();
            let k = cartan_kernel(&MonomialIdeal::nilradical(&rs), &rs);
            assert_eq!(k.dimension(), n);
        }
    }

    #[test]
    fn classification_dimensions() {
        let dims = |f, n| {
            let rs = RootSystem::new(f, n).unwrap();
            full_ideal_classification(&rs)
                .entries
                .iter()
                .map(|e| e.kernel.dimension())
                .collect::<Vec<_>>()
        };
        assert_eq!(dims(Family::A, 2), [0, 0, 1, 1, 2]);
        assert_eq!(dims(Family::A, 1), [0, 1]);
        let b2 = dims(Family::B, 2);
        assert_eq!(b2.len(), 6);
        assert_eq!(b2.last(), Some(&2));
    }

    #[test]
    fn mixed_ideals_in_a2() {
        let rs = RootSystem::new(Family::A, 2).unwrap();
        let c = full_ideal_classification(&rs);
        let mixed: Vec<_> = c
            .mixed(&rs)
            .map(|e| e.ideal.display(&rs, RootStyle::Ascii).to_string())
            .collect();
        assert_eq!(mixed, ["[X[a1], X[a1+a2]]", "[X[a2], X[a1+a2]]"]);
    }

    #[test]
    fn cartan_element_rendering() {
        let show = |c: &[i64]| {
            CartanElementDisplay {
                coeffs: c,
                style: RootStyle::Ascii,
            }
            .to_string()
        };
        assert_eq!(show(&[2, 1]), "2H[a1]+H[a2]");
        assert_eq!(show(&[1, -1, 0]), "H[a1]-H[a2]");
        assert_eq!(show(&[0, 0]), "0");
        assert_eq!(show(&[0, -3]), "-3H[a2]");
    }
}
