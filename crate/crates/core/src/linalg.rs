//! Fraction-free row reduction over the integers.
//!
//! Rows are kept primitive (gcd of entries 1) with a positive pivot, and every
//! pivot column is zero outside its pivot row. Dividing each row by its pivot
//! would give the rational reduced row-echelon form, so this is that form with
//! denominators cleared row by row.

use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;

fn make_primitive(row: &mut [i64]) {
    let g = row.iter().fold(0i64, |g, &x| g.gcd(&x));
    if g > 1 {
        row.iter_mut().for_each(|x| *x /= g);
    }
    if row.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) {
        row.iter_mut().for_each(|x| *x = -*x);
    }
}

/// `target <- (p/g) * target - (t/g) * pivot_row`, clearing column `col`.
fn eliminate(target: &mut [i64], pivot_row: &[i64], col: usize) {
    let t = target[col];
    if t == 0 {
        return;
    }
    let p = pivot_row[col];
    let g = p.gcd(&t);
    let (a, b) = (p / g, t / g);
    for (x, &y) in target.iter_mut().zip(pivot_row) {
        *x = a * *x - b * y;
    }
    make_primitive(target);
}

fn leading(row: &[i64]) -> Option<usize> {
    row.iter().position(|&x| x != 0)
}

/// Integer reduced row-echelon form, built one row at a time.
#[derive(Debug, Clone)]
pub(crate) struct Echelon {
    width: usize,
    rows: Vec<Vec<i64>>,
}

impl Echelon {
    pub fn new(width: usize) -> Self {
        Self {
            width,
            rows: Vec::new(),
        }
    }

    #[cfg(test)]
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.width
    }

    /// Adds a row; returns whether it raised the rank.
    pub fn insert(&mut self, row: &[i64]) -> bool {
        debug_assert_eq!(row.len(), self.width);
        let mut row = row.to_vec();
        for r in &self.rows {
            let c = leading(r).expect("stored rows are nonzero");
            eliminate(&mut row, r, c);
        }
        let Some(c) = leading(&row) else {
            return false;
        };
        make_primitive(&mut row);
        for r in &mut self.rows {
            eliminate(r, &row, c);
        }
        let at = self
            .rows
            .iter()
            .position(|r| leading(r) > Some(c))
            .unwrap_or(self.rows.len());
        self.rows.insert(at, row);
        true
    }

    #[cfg(test)]
    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// Primitive integer basis of `{ x : row . x = 0 for every row }`, itself
    /// in integer reduced row-echelon form.
    pub fn nullspace(&self) -> Vec<Vec<i64>> {
        let pivots: Vec<usize> = self
            .rows
            .iter()
            .map(|r| leading(r).expect("stored rows are nonzero"))
            .collect();
        let scale = self
            .rows
            .iter()
            .zip(&pivots)
            .fold(1i64, |l, (r, &c)| l.lcm(&r[c]));
        let mut basis = Echelon::new(self.width);
        for free in (0..self.width).filter(|c| !pivots.contains(c)) {
            let mut v = vec![0i64; self.width];
            v[free] = scale;
            for (r, &c) in self.rows.iter().zip(&pivots) {
                v[c] = -scale / r[c] * r[free];
            }
            basis.insert(&v);
        }
        basis.rows
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dot(a: &[i64], b: &[i64]) -> i64 {
        a.iter().zip(b).map(|(x, y)| x * y).sum()
    }

    #[test]
    fn single_row_kernel() {
        let mut m = Echelon::new(2);
        assert!(m.insert(&[-1, 2]));
        assert_eq!(m.rows(), [vec![1, -2]]);
        assert_eq!(m.nullspace(), [vec![2, 1]]);
    }

    #[test]
    fn dependent_rows_do_not_raise_rank() {
        let mut m = Echelon::new(3);
        assert!(m.insert(&[2, 4, 6]));
        assert!(!m.insert(&[-1, -2, -3]));
        assert!(m.insert(&[0, 3, 3]));
        assert!(!m.insert(&[2, 7, 9]));
        assert_eq!(m.rank(), 2);
        assert_eq!(m.rows(), [vec![1, 0, 1], vec![0, 1, 1]]);
        let ker = m.nullspace();
        assert_eq!(ker, [vec![1, 1, -1]]);
    }

    #[test]
    fn empty_matrix_has_identity_kernel() {
        let m = Echelon::new(3);
        assert_eq!(m.nullspace(), [vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
    }

    #[test]
    fn kernel_annihilates_rows() {
        let rows = [[3, -1, 0, 2, 5], [0, 2, -2, 1, 1], [6, 0, -2, 5, 11]];
        let mut m = Echelon::new(5);
        for r in &rows {
            m.insert(r);
        }
        assert_eq!(m.rank(), 2);
        let ker = m.nullspace();
        assert_eq!(ker.len(), 3);
        for v in &ker {
            for r in &rows {
                assert_eq!(dot(v, r), 0);
            }
            let lead = v.iter().find(|&&x| x != 0).unwrap();
            assert!(*lead > 0);
        }
    }
}
