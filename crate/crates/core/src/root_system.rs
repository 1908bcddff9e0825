//! Cartan matrices, positive roots and the queries built on them.
//!
//! Conventions:
//!
//! * A root is an integer coefficient vector over the simple roots.
//! * `CartanMatrix::entry(i, j)` is the pairing `<a_i, a_j^v> = 2(a_i, a_j)/(a_j, a_j)`,
//!   so the pairing of a root `r` with the `j`-th simple coroot is
//!   `sum_i r[i] * entry(i, j)`.
//! * Simple roots are numbered as in Bourbaki. In particular `a_1` is long in
//!   `B2`, short in `G2`, and the highest root of `F4` is `2a1+3a2+4a3+2a4`.
//! * Simple-root indices in this API are zero-based; rendered names (`a1`,
//!   `H[a1]`) are one-based.

use alloc::collections::VecDeque;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt::{self, Write as _};
use core::ops::{Add, Sub};
use core::str::FromStr;

use hashbrown::HashMap;

use crate::root_set::RootSet;
use crate::{Error, Result};

/// The Cartan-Killing type of a simple Lie algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
    ];

    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    /// Rejects ranks for which the family has no irreducible member.
    pub fn check_rank(self, rank: usize) -> Result<()> {
        let constraint = match self {
            Family::A if rank < 1 => "A requires rank >= 1",
            Family::B if rank < 2 => "B requires rank >= 2",
            Family::C if rank < 2 => "C requires rank >= 2",
            Family::D if rank < 3 => "D requires rank >= 3 (D2 is reducible)",
            Family::E if !(6..=8).contains(&rank) => "E requires rank 6, 7 or 8",
            Family::F if rank != 4 => "F requires rank 4",
            Family::G if rank != 2 => "G requires rank 2",
            _ => return Ok(()),
        };
        Err(Error::InvalidRank {
            family: self,
            rank,
            constraint,
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_char(self.letter())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            "E" | "e" => Ok(Family::E),
            "F" | "f" => Ok(Family::F),
            "G" | "g" => Ok(Family::G),
            other => Err(Error::UnknownFamily(other.to_string())),
        }
    }
}

/// How to render a root as text.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RootStyle {
    /// `a1+2a2`
    #[default]
    Ascii,
    /// `α₁+2α₂`
    Unicode,
    /// `[1,2]`
    Vector,
}

/// An integer combination of simple roots.
///
/// Roots order canonically by height, then by coefficient vector with larger
/// leading coefficients first, so the simple roots come out as `a1, a2, ..`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Root(Vec<i32>);

impl Root {
    pub fn new(coeffs: Vec<i32>) -> Self {
        Root(coeffs)
    }

    pub fn zero(rank: usize) -> Self {
        Root(vec![0; rank])
    }

    /// The simple root `a_{index+1}`.
    pub fn simple(rank: usize, index: usize) -> Self {
        let mut coeffs = vec![0; rank];
        coeffs[index] = 1;
        Root(coeffs)
    }

    pub fn coeffs(&self) -> &[i32] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    /// Sum of the coefficients.
    pub fn height(&self) -> i32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// All coefficients nonnegative and at least one positive.
    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && !self.is_zero()
    }

    pub fn display(&self, style: RootStyle) -> RootDisplay<'_> {
        RootDisplay { root: self, style }
    }

    fn check_rank(&self, rank: usize) -> Result<()> {
        if self.rank() == rank {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: rank,
                found: self.rank(),
            })
        }
    }
}

/// Height of `root`, the sum of its coefficients.
pub fn root_height(root: &Root) -> i32 {
    root.height()
}

impl Ord for Root {
    fn cmp(&self, other: &Self) -> Ordering {
        self.height()
            .cmp(&other.height())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Root {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &Root {
    type Output = Root;

    fn add(self, rhs: &Root) -> Root {
        debug_assert_eq!(self.rank(), rhs.rank());
        Root(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Root {
    type Output = Root;

    fn sub(self, rhs: &Root) -> Root {
        debug_assert_eq!(self.rank(), rhs.rank());
        Root(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display(RootStyle::Ascii).fmt(f)
    }
}

impl fmt::Debug for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display(RootStyle::Ascii).fmt(f)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct RootDisplay<'a> {
    root: &'a Root,
    style: RootStyle,
}

fn write_subscript(f: &mut fmt::Formatter<'_>, n: usize) -> fmt::Result {
    const DIGITS: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];
    let s = n.to_string();
    for b in s.bytes() {
        f.write_char(DIGITS[(b - b'0') as usize])?;
    }
    Ok(())
}

impl fmt::Display for RootDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coeffs = self.root.coeffs();
        if self.style == RootStyle::Vector {
            f.write_char('[')?;
            for (i, c) in coeffs.iter().enumerate() {
                if i > 0 {
                    f.write_char(',')?;
                }
                write!(f, "{c}")?;
            }
            return f.write_char(']');
        }
        if self.root.is_zero() {
            return f.write_char('0');
        }
        let mut first = true;
        for (i, &c) in coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if c < 0 {
                f.write_char('-')?;
            } else if !first {
                f.write_char('+')?;
            }
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            match self.style {
                RootStyle::Unicode => {
                    f.write_char('α')?;
                    write_subscript(f, i + 1)?;
                }
                _ => write!(f, "a{}", i + 1)?,
            }
            first = false;
        }
        Ok(())
    }
}

/// Square integer matrix of simple-root/coroot pairings.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CartanMatrix {
    rank: usize,
    entries: Vec<i32>,
}

impl CartanMatrix {
    /// The Cartan matrix of `(family, rank)` in Bourbaki numbering.
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        family.check_rank(rank)?;
        let n = rank;
        let mut m = Self {
            rank: n,
            entries: vec![0; n * n],
        };
        for i in 0..n {
            m.set(i, i, 2);
        }
        let mut bond = |i: usize, j: usize| {
            m.set(i, j, -1);
            m.set(j, i, -1);
        };
        match family {
            Family::A | Family::B | Family::C => {
                for i in 1..n {
                    bond(i - 1, i);
                }
            }
            Family::D => {
                for i in 1..n - 1 {
                    bond(i - 1, i);
                }
                bond(n - 3, n - 1);
            }
            Family::E => {
                bond(0, 2);
                bond(1, 3);
                for i in 3..n {
                    bond(i - 1, i);
                }
            }
            Family::F => {
                bond(0, 1);
                bond(1, 2);
                bond(2, 3);
            }
            Family::G => bond(0, 1),
        }
        match family {
            // a_{n-1} long, a_n short
            Family::B => m.set(n - 2, n - 1, -2),
            // a_{n-1} short, a_n long
            Family::C => m.set(n - 1, n - 2, -2),
            // a_2 long, a_3 short
            Family::F => m.set(1, 2, -2),
            // a_1 short, a_2 long
            Family::G => m.set(1, 0, -3),
            _ => {}
        }
        Ok(m)
    }

    /// Validates an arbitrary matrix against the Cartan matrix axioms that the
    /// root generation relies on.
    pub fn from_rows(rows: &[Vec<i32>]) -> Result<Self> {
        let rank = rows.len();
        let mut entries = Vec::with_capacity(rank * rank);
        for row in rows {
            if row.len() != rank {
                return Err(Error::DimensionMismatch {
                    expected: rank,
                    found: row.len(),
                });
            }
            entries.extend_from_slice(row);
        }
        let m = Self { rank, entries };
        for i in 0..rank {
            if m.entry(i, i) != 2 {
                return Err(Error::Structural("Cartan matrix diagonal must be 2"));
            }
            for j in 0..rank {
                if i == j {
                    continue;
                }
                if !(-3..=0).contains(&m.entry(i, j)) {
                    return Err(Error::Structural(
                        "Cartan matrix off-diagonal entries must lie in {0,-1,-2,-3}",
                    ));
                }
                if (m.entry(i, j) == 0) != (m.entry(j, i) == 0) {
                    return Err(Error::Structural(
                        "Cartan matrix zero pattern must be symmetric",
                    ));
                }
            }
        }
        Ok(m)
    }

    fn set(&mut self, i: usize, j: usize, value: i32) {
        self.entries[i * self.rank + j] = value;
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `<a_i, a_j^v>`
    pub fn entry(&self, i: usize, j: usize) -> i32 {
        self.entries[i * self.rank + j]
    }

    pub fn row(&self, i: usize) -> &[i32] {
        &self.entries[i * self.rank..(i + 1) * self.rank]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[i32]> {
        self.entries.chunks(self.rank.max(1))
    }

    /// `<r, a_j^v>`, extended linearly from the simple roots.
    pub fn pairing(&self, root: &Root, j: usize) -> Result<i32> {
        root.check_rank(self.rank)?;
        if j >= self.rank {
            return Err(Error::IndexOutOfRange {
                index: j,
                rank: self.rank,
            });
        }
        Ok(self.pairing_unchecked(root.coeffs(), j))
    }

    fn pairing_unchecked(&self, coeffs: &[i32], j: usize) -> i32 {
        coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c * self.entry(i, j))
            .sum()
    }

    /// `s_j(r) = r - <r, a_j^v> a_j`. The result may be negative.
    pub fn reflect(&self, root: &Root, j: usize) -> Result<Root> {
        let p = self.pairing(root, j)?;
        let mut coeffs = root.coeffs().to_vec();
        coeffs[j] -= p;
        Ok(Root(coeffs))
    }

    /// One-line text description of the Dynkin diagram: one entry per bond,
    /// `-` for a simple bond, `=>`/`<=` for a double bond and `≡>`/`<≡` for a
    /// triple bond, the arrow pointing at the shorter root.
    pub fn dynkin_description(&self) -> String {
        let mut bonds = Vec::new();
        for i in 0..self.rank {
            for j in i + 1..self.rank {
                let (a, b) = (self.entry(i, j), self.entry(j, i));
                if a == 0 {
                    continue;
                }
                // |<a_i, a_j^v>| > |<a_j, a_i^v>| iff a_i is longer
                let link = match (a * b, a.abs().cmp(&b.abs())) {
                    (1, _) => "-",
                    (2, Ordering::Greater) => "=>",
                    (2, _) => "<=",
                    (3, Ordering::Greater) => "≡>",
                    (3, _) => "<≡",
                    _ => "?",
                };
                bonds.push(alloc::format!("a{}{}a{}", i + 1, link, j + 1));
            }
        }
        if bonds.is_empty() {
            (0..self.rank)
                .map(|i| alloc::format!("a{}", i + 1))
                .collect::<Vec<_>>()
                .join(" ")
        } else {
            bonds.join(", ")
        }
    }
}

/// Cartan matrix of `(family, rank)`.
pub fn cartan_matrix(family: Family, rank: usize) -> Result<CartanMatrix> {
    CartanMatrix::new(family, rank)
}

/// `<r, a_j^v>` for zero-based `j`.
pub fn coroot_pairing(root: &Root, j: usize, cartan: &CartanMatrix) -> Result<i32> {
    cartan.pairing(root, j)
}

/// The simple reflection `s_j` applied to `root`.
pub fn reflect_simple(root: &Root, j: usize, cartan: &CartanMatrix) -> Result<Root> {
    cartan.reflect(root, j)
}

/// All positive roots, in canonical order.
///
/// Starting from the simple roots, each new root `r` is reflected in every
/// simple root `a_j != r` with `<r, a_j^v> < 0`; this raises `r` by a positive
/// multiple of `a_j`. The process stops once a pass adds nothing.
pub fn generate_positive_roots(cartan: &CartanMatrix) -> Vec<Root> {
    let n = cartan.rank();
    let mut seen: hashbrown::HashSet<Root> = hashbrown::HashSet::new();
    let mut queue: VecDeque<Root> = (0..n).map(|i| Root::simple(n, i)).collect();
    seen.extend(queue.iter().cloned());
    while let Some(r) = queue.pop_front() {
        for j in 0..n {
            let p = cartan.pairing_unchecked(r.coeffs(), j);
            if p >= 0 {
                continue;
            }
            let mut coeffs = r.coeffs().to_vec();
            coeffs[j] -= p;
            let s = Root(coeffs);
            if seen.insert(s.clone()) {
                queue.push_back(s);
            }
        }
    }
    let mut roots: Vec<Root> = seen.into_iter().collect();
    roots.sort();
    roots
}

/// The highest root of each supported type in Bourbaki numbering, used to
/// guard the hard-coded Cartan matrices.
fn expected_highest_root(family: Family, rank: usize) -> Vec<i32> {
    let n = rank;
    match family {
        Family::A => vec![1; n],
        Family::B => {
            let mut v = vec![2; n];
            v[0] = 1;
            v
        }
        Family::C => {
            let mut v = vec![2; n];
            v[n - 1] = 1;
            v
        }
        Family::D if n == 3 => vec![1, 1, 1],
        Family::D => {
            let mut v = vec![2; n];
            v[0] = 1;
            v[n - 2] = 1;
            v[n - 1] = 1;
            v
        }
        Family::E => match n {
            6 => vec![1, 2, 2, 3, 2, 1],
            7 => vec![2, 2, 3, 4, 3, 2, 1],
            _ => vec![2, 3, 4, 6, 5, 4, 3, 2],
        },
        Family::F => vec![2, 3, 4, 2],
        Family::G => vec![3, 2],
    }
}

/// An irreducible root system together with the lookup tables used by the
/// ideal computations.
///
/// Positive roots are indexed `0..len()` in canonical order; the first `rank`
/// indices are the simple roots.
#[derive(Debug, Clone)]
pub struct RootSystem {
    family: Family,
    cartan: CartanMatrix,
    roots: Vec<Root>,
    index: HashMap<Root, usize>,
    highest: usize,
    /// `raise[i * rank + j]` = index of `roots[i] + a_j`
    raise: Vec<Option<u32>>,
    /// `sum[i * len + k]` = index of `roots[i] + roots[k]`
    sum: Vec<Option<u32>>,
    /// `{ roots[i] + a_j : j }` intersected with the positive roots
    raised: Vec<RootSet>,
    /// `{ k : roots[i] + roots[k] is a root }`
    addable: Vec<RootSet>,
}

impl RootSystem {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let cartan = CartanMatrix::new(family, rank)?;
        let roots = generate_positive_roots(&cartan);
        let n = roots.len();
        let index: HashMap<Root, usize> = roots
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, r)| (r, i))
            .collect();

        let lookup = |r: &Root| index.get(r).map(|&k| k as u32);
        let mut raise = Vec::with_capacity(n * rank);
        let mut raised = Vec::with_capacity(n);
        for r in &roots {
            let mut up = RootSet::empty(n);
            for j in 0..rank {
                let mut coeffs = r.coeffs().to_vec();
                coeffs[j] += 1;
                let hit = lookup(&Root(coeffs));
                if let Some(k) = hit {
                    up.insert(k as usize);
                }
                raise.push(hit);
            }
            raised.push(up);
        }
        let mut sum = Vec::with_capacity(n * n);
        let mut addable = Vec::with_capacity(n);
        for a in &roots {
            let mut partners = RootSet::empty(n);
            for (k, b) in roots.iter().enumerate() {
                let hit = lookup(&(a + b));
                if hit.is_some() {
                    partners.insert(k);
                }
                sum.push(hit);
            }
            addable.push(partners);
        }

        let top = roots
            .iter()
            .map(Root::height)
            .max()
            .ok_or(Error::Structural("empty root system"))?;
        let mut maximal = (0..n).filter(|&i| roots[i].height() == top);
        let highest = maximal
            .next()
            .ok_or(Error::Structural("empty root system"))?;
        if maximal.next().is_some() {
            return Err(Error::Structural("highest root is not unique"));
        }
        if roots[highest].coeffs() != expected_highest_root(family, rank).as_slice() {
            return Err(Error::Structural(
                "Cartan matrix numbering does not give the expected highest root",
            ));
        }

        Ok(Self {
            family,
            cartan,
            roots,
            index,
            highest,
            raise,
            sum,
            raised,
            addable,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    /// `A2`, `F4`, ...
    pub fn name(&self) -> String {
        alloc::format!("{}{}", self.family, self.rank())
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    /// Number of positive roots.
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn simple_roots(&self) -> &[Root] {
        &self.roots[..self.rank()]
    }

    pub fn root(&self, index: usize) -> &Root {
        &self.roots[index]
    }

    pub fn highest_root(&self) -> &Root {
        &self.roots[self.highest]
    }

    pub fn highest_index(&self) -> usize {
        self.highest
    }

    pub fn index_of(&self, root: &Root) -> Option<usize> {
        self.index.get(root).copied()
    }

    /// Membership in the positive roots.
    pub fn is_root(&self, candidate: &Root) -> bool {
        self.index.contains_key(candidate)
    }

    /// Index of `root(i) + a_j`, if that is a root.
    #[inline]
    pub fn raise(&self, i: usize, j: usize) -> Option<usize> {
        self.raise[i * self.rank() + j].map(|k| k as usize)
    }

    /// Index of `root(i) + root(k)`, if that is a root.
    #[inline]
    pub fn sum(&self, i: usize, k: usize) -> Option<usize> {
        self.sum[i * self.len() + k].map(|s| s as usize)
    }

    /// The roots `root(i) + a_j` over all `j`.
    pub fn raised(&self, i: usize) -> &RootSet {
        &self.raised[i]
    }

    /// The indices `k` with `root(i) + root(k)` a root.
    pub fn addable(&self, i: usize) -> &RootSet {
        &self.addable[i]
    }

    pub fn empty_set(&self) -> RootSet {
        RootSet::empty(self.len())
    }

    pub fn full_set(&self) -> RootSet {
        RootSet::full(self.len())
    }

    /// Converts roots to a set of indices, rejecting anything that is not a
    /// positive root of this system.
    pub fn set_of<'a>(&self, roots: impl IntoIterator<Item = &'a Root>) -> Result<RootSet> {
        let mut set = self.empty_set();
        for r in roots {
            r.check_rank(self.rank())?;
            let i = self
                .index_of(r)
                .ok_or_else(|| Error::NotPositiveRoot(r.clone()))?;
            set.insert(i);
        }
        Ok(set)
    }

    /// The members of `set` in canonical order.
    pub fn roots_of<'a>(&'a self, set: &'a RootSet) -> impl Iterator<Item = &'a Root> + 'a {
        set.iter().map(move |i| &self.roots[i])
    }

    /// `(b(H_1), .., b(H_rank))` for the root at `index`.
    pub fn pairing_vector(&self, index: usize) -> Vec<i64> {
        let coeffs = self.roots[index].coeffs();
        (0..self.rank())
            .map(|j| i64::from(self.cartan.pairing_unchecked(coeffs, j)))
            .collect()
    }
}

/// The highest root of `rs`: the unique positive root of maximal height.
pub fn highest_root(rs: &RootSystem) -> &Root {
    rs.highest_root()
}

/// Whether `candidate` is a positive root of `rs`.
pub fn is_root(candidate: &Root, rs: &RootSystem) -> bool {
    rs.is_root(candidate)
}
