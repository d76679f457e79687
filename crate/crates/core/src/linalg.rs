//! Sparse exact linear algebra over a [`ScalarRing`].
//!
//! Vectors are index-sorted entry lists without explicit zeros; matrices are
//! stored by column, column `j` being the image of the `j`-th source basis
//! vector. Elimination routines need a field and report `UnsupportedScalar`
//! otherwise.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{format_scalar, Scalar, ScalarRing};

// A sorted Vec rather than a BTreeMap: product tables hold millions of
// one-term vectors, and a map node costs ~800 bytes each.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparseVec(Vec<(usize, Scalar)>);

impl SparseVec {
    pub fn new() -> Self {
        SparseVec(Vec::new())
    }

    pub fn unit(i: usize) -> Self {
        SparseVec(vec![(i, Scalar::one())])
    }

    pub fn from_entries(entries: impl IntoIterator<Item = (usize, Scalar)>) -> Self {
        let mut entries: Vec<(usize, Scalar)> = entries.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        if !entries.windows(2).all(|w| w[0].0 < w[1].0) {
            // later entries win, as with repeated inserts
            entries.reverse();
            entries.sort_by_key(|e| e.0);
            entries.dedup_by_key(|e| e.0);
        }
        SparseVec(entries)
    }

    fn position(&self, i: usize) -> std::result::Result<usize, usize> {
        self.0.binary_search_by_key(&i, |e| e.0)
    }

    pub fn get(&self, i: usize) -> Scalar {
        match self.position(i) {
            Ok(k) => self.0[k].1.clone(),
            Err(_) => Scalar::zero(),
        }
    }

    pub fn set(&mut self, i: usize, c: Scalar) {
        match (self.position(i), c.is_zero()) {
            (Ok(k), true) => {
                self.0.remove(k);
            }
            (Ok(k), false) => self.0[k].1 = c,
            (Err(_), true) => {}
            (Err(k), false) => self.0.insert(k, (i, c)),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Scalar)> + '_ {
        self.0.iter().map(|(i, c)| (*i, c))
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().map(|e| e.0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.0.len()
    }

    pub fn leading(&self) -> Option<(usize, &Scalar)> {
        self.0.first().map(|(i, c)| (*i, c))
    }

    pub fn max_index(&self) -> Option<usize> {
        self.0.last().map(|e| e.0)
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, ring: &ScalarRing, c: &Scalar, other: &SparseVec) {
        if c.is_zero() || other.is_zero() {
            return;
        }
        if other.nnz() * 8 < self.nnz() {
            for (i, x) in other.iter() {
                self.add_at(ring, i, &ring.mul(c, x));
            }
            return;
        }
        let mut out = Vec::with_capacity(self.nnz() + other.nnz());
        let mut left = std::mem::take(&mut self.0).into_iter().peekable();
        let mut right = other.0.iter().peekable();
        loop {
            let order = match (left.peek(), right.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Less,
                (None, Some(_)) => Ordering::Greater,
                (Some(l), Some(r)) => l.0.cmp(&r.0),
            };
            match order {
                Ordering::Less => out.extend(left.next()),
                Ordering::Greater => {
                    let (i, x) = right.next().unwrap();
                    let term = ring.mul(c, x);
                    if !term.is_zero() {
                        out.push((*i, term));
                    }
                }
                Ordering::Equal => {
                    let (i, y) = left.next().unwrap();
                    let (_, x) = right.next().unwrap();
                    let sum = ring.add(&y, &ring.mul(c, x));
                    if !sum.is_zero() {
                        out.push((i, sum));
                    }
                }
            }
        }
        self.0 = out;
    }

    /// `self += c * e_i`.
    pub fn add_at(&mut self, ring: &ScalarRing, i: usize, c: &Scalar) {
        match self.position(i) {
            Ok(k) => {
                let sum = ring.add(&self.0[k].1, c);
                if sum.is_zero() {
                    self.0.remove(k);
                } else {
                    self.0[k].1 = sum;
                }
            }
            Err(k) => {
                if !c.is_zero() {
                    self.0.insert(k, (i, c.clone()));
                }
            }
        }
    }

    pub fn scaled(&self, ring: &ScalarRing, c: &Scalar) -> SparseVec {
        SparseVec::from_entries(self.iter().map(|(i, x)| (i, ring.mul(c, x))))
    }

    pub fn add(&self, ring: &ScalarRing, other: &SparseVec) -> SparseVec {
        let mut out = self.clone();
        out.add_scaled(ring, &Scalar::one(), other);
        out
    }

    pub fn sub(&self, ring: &ScalarRing, other: &SparseVec) -> SparseVec {
        let mut out = self.clone();
        out.add_scaled(ring, &ring.neg(&Scalar::one()), other);
        out
    }

    pub fn neg(&self, ring: &ScalarRing) -> SparseVec {
        SparseVec::from_entries(self.iter().map(|(i, x)| (i, ring.neg(x))))
    }

    /// Renumbers indices through `f`, summing collisions.
    pub fn map_indices(&self, ring: &ScalarRing, f: impl Fn(usize) -> usize) -> SparseVec {
        let mut out = SparseVec::new();
        for (i, c) in self.iter() {
            out.add_at(ring, f(i), c);
        }
        out
    }

    /// Entries restricted to indices satisfying `keep`.
    pub fn filter(&self, keep: impl Fn(usize) -> bool) -> SparseVec {
        SparseVec(self.0.iter().filter(|e| keep(e.0)).cloned().collect())
    }

    pub fn to_dense(&self, len: usize) -> Vec<Scalar> {
        (0..len).map(|i| self.get(i)).collect()
    }

    /// Human-readable combination such as `"x - 1/2*y"`.
    pub fn format_with(&self, labels: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (i, c)) in self.iter().enumerate() {
            let label = labels.get(i).map(String::as_str).unwrap_or("?");
            let text = format_scalar(c);
            let (negative, magnitude) = match text.strip_prefix('-') {
                Some(m) => (true, m.to_string()),
                None => (false, text),
            };
            if k == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            if label == "1" {
                out.push_str(&magnitude);
            } else {
                if magnitude != "1" {
                    out.push_str(&magnitude);
                    out.push('*');
                }
                out.push_str(label);
            }
        }
        out
    }
}

impl FromIterator<(usize, Scalar)> for SparseVec {
    fn from_iter<T: IntoIterator<Item = (usize, Scalar)>>(iter: T) -> Self {
        SparseVec::from_entries(iter)
    }
}

/// Column-sparse matrix with `nrows` rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    nrows: usize,
    cols: Vec<SparseVec>,
}

impl Matrix {
    pub fn zero(nrows: usize, ncols: usize) -> Matrix {
        Matrix { nrows, cols: vec![SparseVec::new(); ncols] }
    }

    pub fn identity(n: usize) -> Matrix {
        Matrix { nrows: n, cols: (0..n).map(SparseVec::unit).collect() }
    }

    pub fn from_columns(nrows: usize, cols: Vec<SparseVec>) -> Result<Matrix> {
        for (j, c) in cols.iter().enumerate() {
            if let Some(i) = c.max_index() {
                if i >= nrows {
                    return Err(Error::BadIndex(format!("row {i} in column {j} of {nrows}-row matrix")));
                }
            }
        }
        Ok(Matrix { nrows, cols })
    }

    /// Builds a matrix from dense rows.
    pub fn from_rows(ncols: usize, rows: &[Vec<Scalar>]) -> Result<Matrix> {
        let mut cols = vec![SparseVec::new(); ncols];
        for (i, row) in rows.iter().enumerate() {
            if row.len() != ncols {
                return Err(Error::ShapeMismatch(format!("row {i} has {} entries, expected {ncols}", row.len())));
            }
            for (j, c) in row.iter().enumerate() {
                cols[j].set(i, c.clone());
            }
        }
        Ok(Matrix { nrows: rows.len(), cols })
    }

    /// Permutation-like matrix sending basis `j` to basis `f(j)`.
    pub fn from_index_map(nrows: usize, ncols: usize, f: impl Fn(usize) -> usize) -> Matrix {
        Matrix { nrows, cols: (0..ncols).map(|j| SparseVec::unit(f(j))).collect() }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn col(&self, j: usize) -> &SparseVec {
        &self.cols[j]
    }

    pub fn cols(&self) -> &[SparseVec] {
        &self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        self.cols[j].get(i)
    }

    pub fn apply(&self, ring: &ScalarRing, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (j, c) in v.iter() {
            out.add_scaled(ring, c, &self.cols[j]);
        }
        out
    }

    /// `self * other`.
    pub fn mul(&self, ring: &ScalarRing, other: &Matrix) -> Result<Matrix> {
        if self.ncols() != other.nrows {
            return Err(Error::ShapeMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.nrows,
                self.ncols(),
                other.nrows,
                other.ncols()
            )));
        }
        Ok(Matrix {
            nrows: self.nrows,
            cols: other.cols.iter().map(|c| self.apply(ring, c)).collect(),
        })
    }

    pub fn add(&self, ring: &ScalarRing, other: &Matrix) -> Result<Matrix> {
        self.same_shape(other)?;
        Ok(Matrix {
            nrows: self.nrows,
            cols: self.cols.iter().zip(&other.cols).map(|(a, b)| a.add(ring, b)).collect(),
        })
    }

    pub fn sub(&self, ring: &ScalarRing, other: &Matrix) -> Result<Matrix> {
        self.same_shape(other)?;
        Ok(Matrix {
            nrows: self.nrows,
            cols: self.cols.iter().zip(&other.cols).map(|(a, b)| a.sub(ring, b)).collect(),
        })
    }

    pub fn scaled(&self, ring: &ScalarRing, c: &Scalar) -> Matrix {
        Matrix { nrows: self.nrows, cols: self.cols.iter().map(|v| v.scaled(ring, c)).collect() }
    }

    fn same_shape(&self, other: &Matrix) -> Result<()> {
        if self.nrows != other.nrows || self.ncols() != other.ncols() {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} vs {}x{}",
                self.nrows,
                self.ncols(),
                other.nrows,
                other.ncols()
            )));
        }
        Ok(())
    }

    pub fn is_identity(&self) -> bool {
        self.nrows == self.ncols()
            && self.cols.iter().enumerate().all(|(j, c)| *c == SparseVec::unit(j))
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(SparseVec::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix { nrows: self.ncols(), cols: self.rows() }
    }

    /// Rows as sparse vectors indexed by column.
    pub fn rows(&self) -> Vec<SparseVec> {
        let mut rows = vec![Vec::new(); self.nrows];
        for (j, c) in self.cols.iter().enumerate() {
            for (i, x) in c.iter() {
                rows[i].push((j, x.clone()));
            }
        }
        rows.into_iter().map(SparseVec).collect()
    }

    /// Kronecker product: column `(j1, j2)` at index `j1 * other.ncols() + j2`.
    pub fn kronecker(&self, ring: &ScalarRing, other: &Matrix) -> Matrix {
        let mut cols = Vec::with_capacity(self.ncols() * other.ncols());
        for a in &self.cols {
            for b in &other.cols {
                let mut v = SparseVec::new();
                for (i1, x) in a.iter() {
                    for (i2, y) in b.iter() {
                        v.add_at(ring, i1 * other.nrows + i2, &ring.mul(x, y));
                    }
                }
                cols.push(v);
            }
        }
        Matrix { nrows: self.nrows * other.nrows, cols }
    }

    /// Block diagonal sum.
    pub fn direct_sum(&self, other: &Matrix) -> Matrix {
        let shift = self.nrows;
        let mut cols = self.cols.clone();
        cols.extend(other.cols.iter().map(|c| {
            SparseVec::from_entries(c.iter().map(|(i, x)| (i + shift, x.clone())))
        }));
        Matrix { nrows: self.nrows + other.nrows, cols }
    }

    /// Rows of `self` followed by rows of `other` (same column count).
    pub fn stack(&self, other: &Matrix) -> Result<Matrix> {
        if self.ncols() != other.ncols() {
            return Err(Error::ShapeMismatch("stacked matrices need equal column counts".into()));
        }
        let shift = self.nrows;
        let cols = self
            .cols
            .iter()
            .zip(&other.cols)
            .map(|(a, b)| {
                let mut v = a.clone();
                for (i, x) in b.iter() {
                    v.set(i + shift, x.clone());
                }
                v
            })
            .collect();
        Ok(Matrix { nrows: self.nrows + other.nrows, cols })
    }

    pub fn rank(&self, ring: &ScalarRing) -> Result<usize> {
        Ok(Echelon::from_rows(ring, self.rows())?.rank())
    }

    /// Basis of the null space, one vector per free column: the free
    /// coordinate is 1, the other free coordinates are 0.
    pub fn kernel(&self, ring: &ScalarRing) -> Result<Vec<SparseVec>> {
        let ech = Echelon::from_rows(ring, self.rows())?;
        let pivots: BTreeMap<usize, &SparseVec> = ech.rows.iter().map(|(&p, r)| (p, r)).collect();
        let mut basis = Vec::new();
        for f in 0..self.ncols() {
            if pivots.contains_key(&f) {
                continue;
            }
            let mut v = SparseVec::unit(f);
            for (&p, row) in &pivots {
                let c = row.get(f);
                if !c.is_zero() {
                    v.set(p, ring.neg(&c));
                }
            }
            basis.push(v);
        }
        Ok(basis)
    }

    /// Two-sided inverse of a square matrix, if it exists.
    pub fn inverse(&self, ring: &ScalarRing) -> Result<Option<Matrix>> {
        let n = self.nrows;
        if n != self.ncols() {
            return Err(Error::ShapeMismatch(format!("{}x{} is not square", n, self.ncols())));
        }
        let mut augmented = self.rows();
        for (i, row) in augmented.iter_mut().enumerate() {
            row.set(n + i, Scalar::one());
        }
        let ech = Echelon::from_rows(ring, augmented)?;
        if (0..n).any(|p| !ech.rows.contains_key(&p)) {
            return Ok(None);
        }
        let mut cols = vec![SparseVec::new(); n];
        for (&p, row) in &ech.rows {
            for (j, x) in row.iter() {
                if j >= n {
                    cols[j - n].set(p, x.clone());
                }
            }
        }
        Ok(Some(Matrix { nrows: n, cols }))
    }
}

/// Fully reduced row echelon form, keyed by pivot column. Every stored
/// row has a 1 at its pivot and zeros at all other pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon {
    ring: ScalarRing,
    rows: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new(ring: &ScalarRing) -> Result<Echelon> {
        ring.require_field()?;
        Ok(Echelon { ring: ring.clone(), rows: BTreeMap::new() })
    }

    pub fn from_rows(ring: &ScalarRing, rows: impl IntoIterator<Item = SparseVec>) -> Result<Echelon> {
        let mut ech = Echelon::new(ring)?;
        for r in rows {
            ech.insert(r);
        }
        Ok(ech)
    }

    /// Reduces `v` against the stored pivots.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut v = v.clone();
        for (&p, row) in &self.rows {
            let c = v.get(p);
            if !c.is_zero() {
                v.add_scaled(&self.ring, &self.ring.neg(&c), row);
            }
        }
        v
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let reduced = self.reduce(&v);
        let Some((p, lead)) = reduced.leading() else {
            return false;
        };
        let inv = self.ring.inv(lead).expect("nonzero element of a field");
        let row = reduced.scaled(&self.ring, &inv);
        for other in self.rows.values_mut() {
            let c = other.get(p);
            if !c.is_zero() {
                other.add_scaled(&self.ring, &self.ring.neg(&c), &row);
            }
        }
        self.rows.insert(p, row);
        true
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Coordinates of `v` in the echelon basis (ordered by pivot), if `v`
    /// lies in the span.
    pub fn coords(&self, v: &SparseVec) -> Option<SparseVec> {
        if !self.contains(v) {
            return None;
        }
        Some(SparseVec::from_entries(
            self.rows.keys().enumerate().map(|(k, &p)| (k, v.get(p))),
        ))
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    pub fn basis(&self) -> impl Iterator<Item = &SparseVec> + '_ {
        self.rows.values()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64) -> Scalar {
        Scalar::from_integer(n.into())
    }

    fn dense(ring: &ScalarRing, rows: &[&[i64]]) -> Matrix {
        let ncols = rows[0].len();
        let rows: Vec<Vec<Scalar>> =
            rows.iter().map(|r| r.iter().map(|&x| ring.from_int(x)).collect()).collect();
        Matrix::from_rows(ncols, &rows).unwrap()
    }

    #[test]
    fn kernel_of_difference_map() {
        let ring = ScalarRing::Rationals;
        let m = dense(&ring, &[&[1, -1]]);
        let ker = m.kernel(&ring).unwrap();
        assert_eq!(ker, vec![SparseVec::from_entries([(0, q(1)), (1, q(1))])]);
    }

    #[test]
    fn kernel_of_sum_map_is_echelon() {
        let ring = ScalarRing::Rationals;
        let m = dense(&ring, &[&[1, 1, 1]]);
        let ker = m.kernel(&ring).unwrap();
        assert_eq!(
            ker,
            vec![
                SparseVec::from_entries([(0, q(-1)), (1, q(1))]),
                SparseVec::from_entries([(0, q(-1)), (2, q(1))]),
            ]
        );
    }

    #[test]
    fn inverse_of_change_of_basis() {
        let ring = ScalarRing::Rationals;
        let m = dense(&ring, &[&[1, 1], &[1, -1]]);
        let inv = m.inverse(&ring).unwrap().unwrap();
        assert!(m.mul(&ring, &inv).unwrap().is_identity());
        assert!(inv.mul(&ring, &m).unwrap().is_identity());
        let singular = dense(&ring, &[&[1, 2], &[2, 4]]);
        assert!(singular.inverse(&ring).unwrap().is_none());
    }

    #[test]
    fn composite_modulus_rejected() {
        let ring = ScalarRing::integers_mod(6).unwrap();
        let m = dense(&ring, &[&[1, 1]]);
        assert_eq!(m.kernel(&ring).unwrap_err().kind(), "UnsupportedScalar");
    }

    #[test]
    fn elimination_mod_p() {
        let ring = ScalarRing::integers_mod(3).unwrap();
        // rows (1,1,1),(1,2,0) over Z/3
        let m = dense(&ring, &[&[1, 1, 1], &[1, 2, 0]]);
        assert_eq!(m.rank(&ring).unwrap(), 2);
        let ker = m.kernel(&ring).unwrap();
        assert_eq!(ker.len(), 1);
        assert!(m.apply(&ring, &ker[0]).is_zero());
    }

    #[test]
    fn formatting() {
        let labels = vec!["x".to_string(), "x⊗x".to_string()];
        let v = SparseVec::from_entries([(0, q(-1)), (1, q(1))]);
        assert_eq!(v.format_with(&labels), "-x + x⊗x");
        let w = SparseVec::from_entries([(1, Scalar::new(1.into(), 2.into()))]);
        assert_eq!(w.format_with(&labels), "1/2*x⊗x");
    }

    fn small_matrix() -> impl Strategy<Value = (usize, usize, Vec<i64>)> {
        (1usize..6, 1usize..6).prop_flat_map(|(r, c)| {
            (Just(r), Just(c), proptest::collection::vec(-3i64..4, r * c))
        })
    }

    proptest! {
        #[test]
        fn vector_ops_match_a_map_model(
            ops in proptest::collection::vec((0usize..40, -2i64..3, 0usize..3), 0..60),
            other in proptest::collection::vec((0usize..40, -2i64..3), 0..30),
            c in -2i64..3,
        ) {
            let ring = ScalarRing::integers_mod(5).unwrap();
            let mut v = SparseVec::new();
            let mut model = std::collections::BTreeMap::new();
            for &(i, x, op) in &ops {
                let x = ring.from_int(x);
                let old = model.get(&i).cloned().unwrap_or_else(Scalar::zero);
                let new = if op == 0 { v.set(i, x.clone()); x } else { v.add_at(&ring, i, &x); ring.add(&old, &x) };
                if new.is_zero() { model.remove(&i); } else { model.insert(i, new); }
            }
            let w = SparseVec::from_entries(other.iter().map(|&(i, x)| (i, ring.from_int(x))));
            let mut w_model = std::collections::BTreeMap::new();
            for &(i, x) in &other {
                // zeros are dropped, later entries win
                let x = ring.from_int(x);
                if !x.is_zero() { w_model.insert(i, x); }
            }
            prop_assert_eq!(w.iter().map(|(i, x)| (i, x.clone())).collect::<Vec<_>>(), w_model.clone().into_iter().collect::<Vec<_>>());
            let c = ring.from_int(c);
            v.add_scaled(&ring, &c, &w);
            for (i, x) in w_model {
                let sum = ring.add(&model.get(&i).cloned().unwrap_or_else(Scalar::zero), &ring.mul(&c, &x));
                if sum.is_zero() { model.remove(&i); } else { model.insert(i, sum); }
            }
            prop_assert_eq!(v.iter().map(|(i, x)| (i, x.clone())).collect::<Vec<_>>(), model.into_iter().collect::<Vec<_>>());
        }

        #[test]
        fn rank_nullity((r, c, entries) in small_matrix()) {
            let ring = ScalarRing::Rationals;
            let rows: Vec<Vec<Scalar>> = entries.chunks(c).map(|row| row.iter().map(|&x| q(x)).collect()).collect();
            let m = Matrix::from_rows(c, &rows).unwrap();
            prop_assert_eq!(m.nrows(), r);
            let ker = m.kernel(&ring).unwrap();
            for v in &ker {
                prop_assert!(m.apply(&ring, v).is_zero());
            }
            let kmat = Matrix::from_columns(c, ker.clone()).unwrap();
            prop_assert_eq!(kmat.rank(&ring).unwrap(), ker.len());
            prop_assert_eq!(ker.len() + m.rank(&ring).unwrap(), c);
        }

        #[test]
        fn inverse_is_two_sided((n, entries) in (1usize..5).prop_flat_map(|n| (Just(n), proptest::collection::vec(-3i64..4, n * n)))) {
            let ring = ScalarRing::integers_mod(7).unwrap();
            let rows: Vec<Vec<Scalar>> = entries.chunks(n).map(|row| row.iter().map(|&x| ring.from_int(x)).collect()).collect();
            let m = Matrix::from_rows(n, &rows).unwrap();
            match m.inverse(&ring).unwrap() {
                Some(inv) => {
                    prop_assert!(m.mul(&ring, &inv).unwrap().is_identity());
                    prop_assert!(inv.mul(&ring, &m).unwrap().is_identity());
                }
                None => prop_assert!(m.rank(&ring).unwrap() < n),
            }
        }
    }
}
