//! The Borel subalgebra `g = t + sum_{a > 0} C X_a` as a formal basis.
//!
//! Cartan generators `H_i` are the simple coroots, so a root `b` acts on
//! `H_j` by the Cartan pairing. Brackets of root vectors are modelled without
//! structure constants: `[X_a, X_b]` is reported as `X_{a+b}` when `a + b` is
//! a root and as zero otherwise. Every ideal-theoretic question asked in this
//! crate depends only on whether a root space is hit, never on the sign.

use alloc::vec::Vec;
use core::fmt;

use crate::root_system::{Root, RootStyle, RootSystem};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BasisElement {
    /// `H_{a_{i+1}}`, zero-based.
    Cartan(usize),
    RootVector(Root),
}

impl BasisElement {
    pub fn display(&self, style: RootStyle) -> BasisDisplay<'_> {
        BasisDisplay {
            element: self,
            style,
        }
    }
}

impl fmt::Display for BasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display(RootStyle::Ascii).fmt(f)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct BasisDisplay<'a> {
    element: &'a BasisElement,
    style: RootStyle,
}

impl fmt::Display for BasisDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.element, self.style) {
            (BasisElement::Cartan(i), RootStyle::Unicode) => {
                write!(
                    f,
                    "H[{}]",
                    Root::simple(i + 1, *i).display(RootStyle::Unicode)
                )
            }
            (BasisElement::Cartan(i), _) => write!(f, "H[a{}]", i + 1),
            (BasisElement::RootVector(r), style) => write!(f, "X[{}]", r.display(style)),
        }
    }
}

/// Cartan generators followed by one root vector per positive root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BorelBasis {
    pub cartan_part: Vec<BasisElement>,
    pub nilradical_part: Vec<BasisElement>,
}

impl BorelBasis {
    pub fn len(&self) -> usize {
        self.cartan_part.len() + self.nilradical_part.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = &BasisElement> {
        self.cartan_part.iter().chain(&self.nilradical_part)
    }
}

pub fn borel_basis(rs: &RootSystem) -> BorelBasis {
    BorelBasis {
        cartan_part: (0..rs.rank()).map(BasisElement::Cartan).collect(),
        nilradical_part: nilradical_basis(rs),
    }
}

/// Basis of the nilradical `g'`, one root vector per positive root.
pub fn nilradical_basis(rs: &RootSystem) -> Vec<BasisElement> {
    rs.positive_roots()
        .iter()
        .cloned()
        .map(BasisElement::RootVector)
        .collect()
}

/// Sign-free bracket `[X_a, X_b]`: `Some(a + b)` if that is a root.
pub fn monomial_bracket(a: &Root, b: &Root, rs: &RootSystem) -> Result<Option<Root>> {
    let lookup = |r: &Root| {
        rs.index_of(r)
            .ok_or_else(|| Error::NotPositiveRoot(r.clone()))
    };
    let (i, k) = (lookup(a)?, lookup(b)?);
    Ok(rs.sum(i, k).map(|s| rs.root(s).clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Family;
    use alloc::string::{String, ToString};

    fn r(c: &[i32]) -> Root {
        Root::new(c.to_vec())
    }

    fn rendered(basis: &BorelBasis) -> Vec<String> {
        basis.iter().map(ToString::to_string).collect()
    }

    #[test]
    fn a2_borel_basis() {
        let rs = RootSystem::new(Family::A, 2).unwrap();
        assert_eq!(
            rendered(&borel_basis(&rs)),
            ["H[a1]", "H[a2]", "X[a1]", "X[a2]", "X[a1+a2]"]
        );
    }

    #[test]
    fn basis_sizes() {
        let size = |f, n| borel_basis(&RootSystem::new(f, n).unwrap()).len();
        assert_eq!(size(Family::B, 2), 6);
        assert_eq!(size(Family::G, 2), 8);
        let f4 = RootSystem::new(Family::F, 4).unwrap();
        assert_eq!(nilradical_basis(&f4).len(), 24);
    }

    #[test]
    fn unicode_rendering() {
        let e = BasisElement::RootVector(r(&[1, 2]));
        assert_eq!(e.display(RootStyle::Unicode).to_string(), "X[α₁+2α₂]");
        assert_eq!(
            BasisElement::Cartan(1)
                .display(RootStyle::Unicode)
                .to_string(),
            "H[α₂]"
        );
        assert_eq!(BasisElement::Cartan(1).to_string(), "H[a2]");
    }

    #[test]
    fn bracket_examples() {
        let rs = RootSystem::new(Family::A, 2).unwrap();
        assert_eq!(
            monomial_bracket(&r(&[1, 0]), &r(&[0, 1]), &rs),
            Ok(Some(r(&[1, 1])))
        );
        assert_eq!(monomial_bracket(&r(&[1, 0]), &r(&[1, 1]), &rs), Ok(None));
        for g in rs.positive_roots() {
            assert_eq!(monomial_bracket(g, g, &rs), Ok(None));
        }
        assert_eq!(
            monomial_bracket(&r(&[2, 0]), &r(&[0, 1]), &rs),
            Err(Error::NotPositiveRoot(r(&[2, 0])))
        );
    }

    #[test]
    fn bracket_support_is_symmetric_and_graded() {
        for (f, n) in [(Family::B, 3), (Family::G, 2), (Family::F, 4)] {
            let rs = RootSystem::new(f, n).unwrap();
            for a in rs.positive_roots() {
                for b in rs.positive_roots() {
                    let ab = monomial_bracket(a, b, &rs).unwrap();
                    assert_eq!(ab, monomial_bracket(b, a, &rs).unwrap());
                    if let Some(s) = ab {
                        assert_eq!(s.height(), a.height() + b.height());
                    }
                }
            }
        }
    }

    #[test]
    fn cartan_action_is_bounded_by_the_matrix() {
        // |b(H_j)| <= 3 for every positive root b
        for f in Family::ALL {
            for n in 1..=8 {
                let Ok(rs) = RootSystem::new(f, n) else {
                    continue;
                };
                for i in 0..rs.len() {
                    for value in rs.pairing_vector(i) {
                        assert!((-3..=3).contains(&value), "{f}{n}: {value}");
                    }
                }
            }
        }
    }
}
