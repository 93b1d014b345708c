//! Exact integer linear algebra: sparse fraction-free rank, an echelon
//! ℤ-lattice basis, and Smith normal form for dense matrices.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Sparse integer row vector: column index to nonzero entry.
pub type SparseRow = BTreeMap<usize, BigInt>;

fn content(row: &SparseRow) -> BigInt {
    row.values().fold(BigInt::zero(), |acc, v| acc.gcd(v))
}

fn primitive(mut row: SparseRow) -> SparseRow {
    let c = content(&row);
    if !c.is_zero() && !c.is_one() {
        for v in row.values_mut() {
            *v /= &c;
        }
    }
    row
}

/// `a * x - b * y`, dropping zeros.
fn combine(a: &BigInt, x: &SparseRow, b: &BigInt, y: &SparseRow) -> SparseRow {
    let mut out = SparseRow::new();
    for (&c, v) in x {
        out.insert(c, a * v);
    }
    for (&c, v) in y {
        let e = out.entry(c).or_insert_with(BigInt::zero);
        *e -= b * v;
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// Incremental rank over ℚ of integer rows using fraction-free elimination.
/// Rows are kept primitive (content divided out) so entries stay small.
#[derive(Clone, Debug, Default)]
pub struct RankAccumulator {
    pivots: BTreeMap<usize, SparseRow>,
}

impl RankAccumulator {
    pub fn new() -> Self {
        Self::default()
    }

    /// Inserts a row; returns true when it increased the rank.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        let mut row = primitive(row);
        loop {
            let Some((&lead, lead_val)) = row.iter().next() else {
                return false;
            };
            match self.pivots.get(&lead) {
                Some(p) => {
                    let b = lead_val.clone();
                    let a = p[&lead].clone();
                    row = primitive(combine(&a, &row, &b, p));
                }
                None => {
                    self.pivots.insert(lead, row);
                    return true;
                }
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

pub fn rank_of_rows<I: IntoIterator<Item = SparseRow>>(rows: I) -> usize {
    let mut acc = RankAccumulator::new();
    for r in rows {
        acc.insert(r);
    }
    acc.rank()
}

/// Echelon ℤ-basis of the lattice spanned by a set of integer rows.
///
/// Each insertion is a unimodular transformation of the current generators,
/// so the row lattice is preserved exactly (not just its ℚ-span).
#[derive(Clone, Debug, Default)]
pub struct LatticeEchelon {
    pivots: BTreeMap<usize, SparseRow>,
}

impl LatticeEchelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, mut row: SparseRow) {
        row.retain(|_, v| !v.is_zero());
        loop {
            let Some((&lead, lead_val)) = row.iter().next() else {
                return;
            };
            let Some(p) = self.pivots.get(&lead) else {
                self.pivots.insert(lead, row);
                return;
            };
            let a = p[&lead].clone();
            let b = lead_val.clone();
            let eg = a.extended_gcd(&b);
            // new pivot = x*p + y*row has leading entry gcd(a, b);
            // new row = (a/g)*row - (b/g)*p has zero there. Determinant 1.
            let mut new_pivot = SparseRow::new();
            for (&c, v) in p {
                new_pivot.insert(c, &eg.x * v);
            }
            for (&c, v) in &row {
                *new_pivot.entry(c).or_insert_with(BigInt::zero) += &eg.y * v;
            }
            new_pivot.retain(|_, v| !v.is_zero());
            let ag = &a / &eg.gcd;
            let bg = &b / &eg.gcd;
            row = combine(&ag, &row, &bg, p);
            self.pivots.insert(lead, new_pivot);
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Basis rows in increasing order of leading column.
    pub fn basis(&self) -> impl Iterator<Item = &SparseRow> {
        self.pivots.values()
    }

    /// Integer coordinates of `v` in [`LatticeEchelon::basis`] order, or
    /// `None` when `v` is not in the lattice.
    pub fn coordinates(&self, v: &SparseRow) -> Option<Vec<BigInt>> {
        let mut rest = v.clone();
        rest.retain(|_, x| !x.is_zero());
        let mut coords = Vec::with_capacity(self.pivots.len());
        for (&lead, p) in &self.pivots {
            let entry = rest.get(&lead).cloned().unwrap_or_else(BigInt::zero);
            let (q, r) = entry.div_rem(&p[&lead]);
            if !r.is_zero() {
                return None;
            }
            if !q.is_zero() {
                for (&c, x) in p {
                    let e = rest.entry(c).or_insert_with(BigInt::zero);
                    *e -= &q * x;
                }
                rest.retain(|_, x| !x.is_zero());
            }
            coords.push(q);
        }
        rest.is_empty().then_some(coords)
    }
}

/// Dense integer matrix, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            write!(f, "[{}]", row.join(" "))?;
        }
        write!(f, "]")
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, x) in row.iter().enumerate() {
                m[(i, j)] = x.clone().into();
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += factor * row[src]
    pub fn add_row_multiple(&mut self, dst: usize, src: usize, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = &self[(src, j)] * factor;
            self[(dst, j)] += v;
        }
    }

    /// col[dst] += factor * col[src]
    pub fn add_col_multiple(&mut self, dst: usize, src: usize, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = &self[(i, src)] * factor;
            self[(i, dst)] += v;
        }
    }

    pub fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -&self[(i, j)];
            self[(i, j)] = v;
        }
    }

    /// Nonzero invariant factors d₁ | d₂ | … of the Smith normal form, all
    /// positive. The rank is their count.
    pub fn smith_diagonal(&self) -> Vec<BigInt> {
        let mut a = self.clone();
        let (rows, cols) = (a.rows, a.cols);
        let mut diag = Vec::new();
        let mut t = 0;
        while t < rows.min(cols) {
            // Minimal nonzero |entry| of the trailing block becomes the pivot.
            let Some((pi, pj)) = min_abs_entry(&a, t) else {
                break;
            };
            a.swap_rows(t, pi);
            a.swap_cols(t, pj);
            loop {
                let mut dirty = false;
                for i in t + 1..rows {
                    if a[(i, t)].is_zero() {
                        continue;
                    }
                    let q = a[(i, t)].div_floor(&a[(t, t)]);
                    a.add_row_multiple(i, t, &-q);
                    if !a[(i, t)].is_zero() {
                        dirty = true;
                    }
                }
                for j in t + 1..cols {
                    if a[(t, j)].is_zero() {
                        continue;
                    }
                    let q = a[(t, j)].div_floor(&a[(t, t)]);
                    a.add_col_multiple(j, t, &-q);
                    if !a[(t, j)].is_zero() {
                        dirty = true;
                    }
                }
                if dirty {
                    let (pi, pj) = min_abs_in_cross(&a, t);
                    a.swap_rows(t, pi);
                    a.swap_cols(t, pj);
                    continue;
                }
                // Row and column are clear; enforce divisibility of the rest.
                let pivot = a[(t, t)].clone();
                let offender = (t + 1..rows)
                    .find(|&i| (t + 1..cols).any(|j| !a[(i, j)].is_multiple_of(&pivot)));
                match offender {
                    Some(i) => {
                        a.add_row_multiple(t, i, &BigInt::one());
                    }
                    None => break,
                }
            }
            diag.push(a[(t, t)].abs());
            t += 1;
        }
        diag
    }

    pub fn rank(&self) -> usize {
        self.smith_diagonal().len()
    }
}

fn min_abs_entry(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), BigInt)> = None;
    for i in t..a.rows {
        for j in t..a.cols {
            let v = &a[(i, j)];
            if v.is_zero() {
                continue;
            }
            let av = v.abs();
            if best.as_ref().is_none_or(|(_, b)| av < *b) {
                best = Some(((i, j), av));
            }
        }
    }
    best.map(|(ix, _)| ix)
}

/// Minimal nonzero entry on row t / column t (pivot included).
fn min_abs_in_cross(a: &IntMatrix, t: usize) -> (usize, usize) {
    let mut best = ((t, t), a[(t, t)].abs());
    let mut consider = |ix: (usize, usize), v: &BigInt| {
        if !v.is_zero() {
            let av = v.abs();
            if best.1.is_zero() || av < best.1 {
                best = (ix, av);
            }
        }
    };
    for i in t..a.rows {
        consider((i, t), &a[(i, t)]);
    }
    for j in t..a.cols {
        consider((t, j), &a[(t, j)]);
    }
    best.0
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(entries: &[(usize, i64)]) -> SparseRow {
        entries.iter().map(|&(c, v)| (c, BigInt::from(v))).collect()
    }

    #[test]
    fn rank_detects_dependence() {
        let rows = vec![
            row(&[(0, 1), (1, 2), (2, 3)]),
            row(&[(0, 2), (1, 4), (2, 6)]),
            row(&[(1, 1), (2, 1)]),
        ];
        assert_eq!(rank_of_rows(rows), 2);
    }

    #[test]
    fn lattice_keeps_index_two_sublattice() {
        // Lattice spanned by (2,0) and (0,2) does not contain (1,1) but does contain (2,2).
        let mut lat = LatticeEchelon::new();
        lat.insert(row(&[(0, 2)]));
        lat.insert(row(&[(1, 2)]));
        assert!(lat.coordinates(&row(&[(0, 1), (1, 1)])).is_none());
        let c = lat.coordinates(&row(&[(0, 2), (1, 2)])).unwrap();
        assert_eq!(c, vec![BigInt::from(1), BigInt::from(1)]);
    }

    #[test]
    fn lattice_gcd_merge() {
        // (4, 1) and (6, 0) span a lattice containing (2, -3)... and (2, 0)? 6 - 4 = 2 only with
        // second coordinate -1, so (2, -1) is in it but (2, 0) is not.
        let mut lat = LatticeEchelon::new();
        lat.insert(row(&[(0, 4), (1, 1)]));
        lat.insert(row(&[(0, 6)]));
        assert_eq!(lat.rank(), 2);
        assert!(lat.coordinates(&row(&[(0, 2), (1, -1)])).is_some());
        assert!(lat.coordinates(&row(&[(0, 2)])).is_none());
        assert!(lat.coordinates(&row(&[(0, 12), (1, 3)])).is_some());
    }

    #[test]
    fn snf_of_small_matrices() {
        let m = IntMatrix::from_rows(&[vec![2i64]]);
        assert_eq!(m.smith_diagonal(), vec![BigInt::from(2)]);

        let m = IntMatrix::from_rows(&[vec![2i64, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
        let d: Vec<i64> = m
            .smith_diagonal()
            .iter()
            .map(|x| x.try_into().unwrap())
            .collect();
        assert_eq!(d, vec![2, 6, 12]);

        let z = IntMatrix::zeros(3, 2);
        assert!(z.smith_diagonal().is_empty());
    }

    #[test]
    fn snf_divisibility_chain() {
        let m = IntMatrix::from_rows(&[vec![2i64, 0], vec![0, 3]]);
        let d: Vec<i64> = m
            .smith_diagonal()
            .iter()
            .map(|x| x.try_into().unwrap())
            .collect();
        assert_eq!(d, vec![1, 6]);
    }
}
