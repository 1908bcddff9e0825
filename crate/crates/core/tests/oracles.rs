//! Cross-checks of the library against independent computations.

use std::collections::{BTreeSet, HashSet};

use borel_core::ideals::{
    abelian_ideals, brute_force_ideals, enumerate_nilradical_ideals, is_ideal_set,
    DEFAULT_BRUTE_FORCE_BOUND,
};
use borel_core::kernel::full_ideal_classification;
use borel_core::lattice::build_lattice;
use borel_core::root_system::{cartan_matrix, generate_positive_roots};
use borel_core::{CartanMatrix, Family, Root, RootSystem};
use num_rational::Ratio;

/// Every supported `(family, rank)` with rank at most 8.
fn supported() -> Vec<(Family, usize)> {
    Family::ALL
        .into_iter()
        .flat_map(|f| (1..=8).map(move |n| (f, n)))
        .filter(|&(f, n)| f.check_rank(n).is_ok())
        .collect()
}

fn classical_count(f: Family, n: usize) -> usize {
    match f {
        Family::A => n * (n + 1) / 2,
        Family::B | Family::C => n * n,
        Family::D => n * (n - 1),
        Family::E => match n {
            6 => 36,
            7 => 63,
            _ => 120,
        },
        Family::F => 24,
        Family::G => 6,
    }
}

/// Positive roots by root strings: for a root `b` and simple `a_j`, with `p`
/// the largest `k` such that `b - k a_j` is a root, `b + a_j` is a root
/// iff `p - <b, a_j^v> > 0`. Built height by height.
fn roots_by_strings(m: &CartanMatrix) -> BTreeSet<Vec<i32>> {
    let n = m.rank();
    let mut known: BTreeSet<Vec<i32>> = (0..n)
        .map(|i| (0..n).map(|k| i32::from(k == i)).collect())
        .collect();
    let mut layer: Vec<Vec<i32>> = known.iter().cloned().collect();
    while !layer.is_empty() {
        let mut next = BTreeSet::new();
        for b in &layer {
            for j in 0..n {
                let mut p = 0;
                let mut down = b.clone();
                loop {
                    down[j] -= 1;
                    if known.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i32 = (0..n).map(|i| b[i] * m.entry(i, j)).sum();
                if p - pairing > 0 {
                    let mut up = b.clone();
                    up[j] += 1;
                    next.insert(up);
                }
            }
        }
        known.extend(next.iter().cloned());
        layer = next.into_iter().collect();
    }
    known
}

#[test]
fn positive_root_counts_match_classical_values() {
    for (f, n) in supported() {
        let rs = RootSystem::new(f, n).unwrap();
        assert_eq!(rs.len(), classical_count(f, n), "{f}{n}");
    }
}

#[test]
fn reflection_closure_agrees_with_root_strings() {
    for (f, n) in supported() {
        let m = cartan_matrix(f, n).unwrap();
        let by_reflection: BTreeSet<Vec<i32>> = generate_positive_roots(&m)
            .into_iter()
            .map(|r| r.coeffs().to_vec())
            .collect();
        assert_eq!(by_reflection, roots_by_strings(&m), "{f}{n}");
    }
}

#[test]
fn closure_is_a_fixed_point() {
    // One more reflection pass, and all pairwise sums, add nothing new.
    for (f, n) in supported() {
        let rs = RootSystem::new(f, n).unwrap();
        let set: HashSet<&Root> = rs.positive_roots().iter().collect();
        for r in rs.positive_roots() {
            assert!(r.is_positive());
            for j in 0..n {
                let s = rs.cartan().reflect(r, j).unwrap();
                if s.is_positive() {
                    assert!(set.contains(&s), "{f}{n}: s{j}({r}) = {s}");
                } else {
                    assert_eq!(r, &Root::simple(n, j));
                }
            }
        }
        for r in rs.positive_roots() {
            for s in rs.positive_roots() {
                let sum = r + s;
                if rs.is_root(&sum) {
                    assert_eq!(
                        rs.index_of(&sum),
                        rs.sum(rs.index_of(r).unwrap(), rs.index_of(s).unwrap())
                    );
                }
            }
        }
        let distinct: HashSet<_> = rs.positive_roots().iter().collect();
        assert_eq!(distinct.len(), rs.len());
    }
}

#[test]
fn highest_root_is_the_unique_maximal_root() {
    for (f, n) in supported() {
        let rs = RootSystem::new(f, n).unwrap();
        let maximal: Vec<&Root> = rs
            .positive_roots()
            .iter()
            .filter(|r| (0..n).all(|j| !rs.is_root(&(*r + &Root::simple(n, j)))))
            .collect();
        assert_eq!(maximal, [rs.highest_root()], "{f}{n}");
        let top = rs.positive_roots().iter().map(Root::height).max().unwrap();
        assert_eq!(rs.highest_root().height(), top);
        for j in 0..n {
            assert!(rs.cartan().pairing(rs.highest_root(), j).unwrap() >= 0);
        }
    }
}

/// Systems small enough for the subset oracle.
const SMALL: &[(Family, usize)] = &[
    (Family::A, 1),
    (Family::A, 2),
    (Family::A, 3),
    (Family::A, 4),
    (Family::A, 5),
    (Family::B, 2),
    (Family::B, 3),
    (Family::B, 4),
    (Family::C, 3),
    (Family::C, 4),
    (Family::D, 4),
    (Family::G, 2),
];

#[test]
fn enumeration_equals_subset_oracle() {
    for &(f, n) in SMALL {
        let rs = RootSystem::new(f, n).unwrap();
        assert!(rs.len() <= DEFAULT_BRUTE_FORCE_BOUND);
        let oracle = brute_force_ideals(&rs, DEFAULT_BRUTE_FORCE_BOUND).unwrap();
        assert_eq!(enumerate_nilradical_ideals(&rs), oracle, "{f}{n}");
    }
}

#[test]
fn abelian_ideal_count_is_two_to_the_rank() {
    let mut systems = SMALL.to_vec();
    systems.push((Family::F, 4));
    for (f, n) in systems {
        let rs = RootSystem::new(f, n).unwrap();
        assert_eq!(abelian_ideals(&rs).len(), 1 << n, "{f}{n}");
    }
}

#[test]
fn enumerated_ideals_are_closed_and_contain_the_highest_root() {
    for (f, n) in [
        (Family::E, 6),
        (Family::F, 4),
        (Family::B, 5),
        (Family::D, 5),
    ] {
        let rs = RootSystem::new(f, n).unwrap();
        for j in enumerate_nilradical_ideals(&rs) {
            assert!(is_ideal_set(j.root_set(), &rs));
            assert!(j.contains(rs.highest_index()));
            for g in j.candidates(&rs) {
                assert!(is_ideal_set(&j.root_set().with(g), &rs));
            }
        }
    }
}

#[test]
fn every_ideal_has_a_removable_root() {
    // Monotone chain: removing some member leaves an ideal one dimension down.
    for &(f, n) in SMALL {
        let rs = RootSystem::new(f, n).unwrap();
        for j in enumerate_nilradical_ideals(&rs) {
            if j.dimension() < 2 {
                continue;
            }
            let removable = j
                .root_set()
                .iter()
                .any(|g| is_ideal_set(&j.root_set().without(g), &rs));
            assert!(removable, "{f}{n}: {j:?}");
        }
    }
}

/// Rank over Q by plain Gaussian elimination on rationals.
fn rational_rank(rows: &[Vec<i64>], width: usize) -> usize {
    let mut m: Vec<Vec<Ratio<i64>>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| Ratio::from_integer(x)).collect())
        .collect();
    let mut rank = 0;
    for c in 0..width {
        let Some(p) = (rank..m.len()).find(|&i| m[i][c] != Ratio::from_integer(0)) else {
            continue;
        };
        m.swap(rank, p);
        for i in 0..m.len() {
            if i != rank && m[i][c] != Ratio::from_integer(0) {
                let factor = m[i][c] / m[rank][c];
                let pivot = m[rank].clone();
                for (x, y) in m[i].iter_mut().zip(pivot) {
                    *x -= factor * y;
                }
            }
        }
        rank += 1;
    }
    rank
}

#[test]
fn cartan_kernels_are_exact() {
    for (f, n) in [
        (Family::A, 2),
        (Family::B, 2),
        (Family::G, 2),
        (Family::A, 4),
        (Family::C, 3),
        (Family::D, 4),
        (Family::F, 4),
    ] {
        let rs = RootSystem::new(f, n).unwrap();
        let c = full_ideal_classification(&rs);
        assert!(c.entries[0].ideal.is_zero());
        assert!(c.entries[0].kernel.is_zero(), "{f}{n}: center must vanish");
        assert_eq!(c.entries.last().unwrap().kernel.dimension(), n);
        for e in &c.entries {
            let outside: Vec<Vec<i64>> = (0..rs.len())
                .filter(|&b| !e.ideal.contains(b))
                .map(|b| rs.pairing_vector(b))
                .collect();
            for t in &e.kernel.vectors {
                for row in &outside {
                    let value: i64 = row.iter().zip(t).map(|(x, y)| x * y).sum();
                    assert_eq!(value, 0);
                }
                assert!(*t.iter().find(|&&x| x != 0).unwrap() > 0);
            }
            // rank-nullity against an independent rational elimination
            assert_eq!(e.kernel.dimension(), n - rational_rank(&outside, n));
            assert_eq!(rational_rank(&e.kernel.vectors, n), e.kernel.dimension());
        }
    }
}

#[test]
fn lattice_edges_are_exactly_the_covers() {
    for &(f, n) in SMALL {
        let rs = RootSystem::new(f, n).unwrap();
        let l = build_lattice(&enumerate_nilradical_ideals(&rs), &rs).unwrap();
        let edges: HashSet<(usize, usize)> = l.edges.iter().copied().collect();
        assert_eq!(edges.len(), l.edges.len());
        for (u, a) in l.nodes.iter().enumerate() {
            for (v, b) in l.nodes.iter().enumerate() {
                let cover =
                    a.root_set().is_subset(b.root_set()) && b.dimension() == a.dimension() + 1;
                assert_eq!(edges.contains(&(u, v)), cover, "{f}{n}: {u} -> {v}");
            }
        }
        // every node is reachable from the bottom
        let mut reached = vec![false; l.nodes.len()];
        reached[l.bottom()] = true;
        for &(lo, hi) in &l.edges {
            if reached[lo] {
                reached[hi] = true;
            }
        }
        assert!(reached.iter().all(|&r| r), "{f}{n}");
        assert_eq!(l.nodes[l.top()].dimension(), rs.len());
    }
}
