//! Finite-dimensional, possibly non-unital algebras given by structure
//! constants on a named basis.

use std::fmt;
use std::sync::Arc;

use crate::check::CheckBudget;
use crate::equivariance::{validate_action, validate_grading, GAction, GGrading};
use crate::error::{Error, Result};
use crate::linalg::SparseVec;
use crate::scalar::{Scalar, ScalarRing};

pub type AlgebraRef = Arc<Algebra>;

/// Degree bookkeeping for truncated carriers (polynomials in `t`, tensor
/// words). Products of basis elements whose degrees add up past `cap` are
/// stored as zero; [`Algebra::mul_checked`] refuses to form them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Filtration {
    pub degrees: Vec<usize>,
    pub cap: usize,
}

#[derive(Clone, Debug)]
pub struct Algebra {
    name: String,
    ring: ScalarRing,
    basis: Vec<String>,
    // row i: the nonzero products b_i * b_j, sorted by j
    table: Vec<Vec<(usize, SparseVec)>>,
    unit: Option<SparseVec>,
    action: Option<GAction>,
    grading: Option<GGrading>,
    filtration: Option<Filtration>,
}

impl Algebra {
    /// Assembles an algebra without checking associativity; see
    /// [`Algebra::validate`] and [`Algebra::build`].
    pub fn new(
        name: impl Into<String>,
        ring: ScalarRing,
        basis: Vec<String>,
        products: impl IntoIterator<Item = ((usize, usize), SparseVec)>,
        unit: Option<SparseVec>,
    ) -> Result<Algebra> {
        let d = basis.len();
        let mut table: Vec<Vec<(usize, SparseVec)>> = vec![Vec::new(); d];
        for ((i, j), v) in products {
            if i >= d || j >= d {
                return Err(Error::BadIndex(format!("product ({i}, {j}) in dimension {d}")));
            }
            if let Some(k) = v.max_index() {
                if k >= d {
                    return Err(Error::BadIndex(format!("product ({i}, {j}) has coordinate {k}")));
                }
            }
            let row = &mut table[i];
            match row.binary_search_by_key(&j, |(jj, _)| *jj) {
                Ok(pos) => {
                    let sum = row[pos].1.add(&ring, &v);
                    row[pos].1 = sum;
                }
                Err(pos) => row.insert(pos, (j, v)),
            }
        }
        for row in &mut table {
            row.retain(|(_, v)| !v.is_zero());
        }
        if let Some(u) = &unit {
            if u.max_index().is_some_and(|k| k >= d) {
                return Err(Error::BadIndex("unit coordinate out of range".into()));
            }
        }
        Ok(Algebra {
            name: name.into(),
            ring,
            basis,
            table,
            unit,
            action: None,
            grading: None,
            filtration: None,
        })
    }

    /// [`Algebra::new`] followed by [`Algebra::validate`].
    pub fn build(
        name: impl Into<String>,
        ring: ScalarRing,
        basis: Vec<String>,
        products: impl IntoIterator<Item = ((usize, usize), SparseVec)>,
        unit: Option<SparseVec>,
        budget: &CheckBudget,
    ) -> Result<Algebra> {
        let alg = Algebra::new(name, ring, basis, products, unit)?;
        alg.validate(budget)?;
        Ok(alg)
    }

    /// Checks associativity on basis triples (all of them when the budget
    /// allows) and the declared unit on every basis element.
    pub fn validate(&self, budget: &CheckBudget) -> Result<()> {
        if let Some((i, j, k)) = self.associativity_failure(budget) {
            return Err(Error::NotAssociative(i, j, k));
        }
        if let Some(u) = &self.unit {
            for i in 0..self.dim() {
                let b = SparseVec::unit(i);
                if self.mul(u, &b) != b || self.mul(&b, u) != b {
                    return Err(Error::BadUnit(i));
                }
            }
        }
        Ok(())
    }

    pub fn associativity_failure(&self, budget: &CheckBudget) -> Option<(usize, usize, usize)> {
        budget.triples(self.dim()).into_iter().find(|&(i, j, k)| {
            let left = match self.product(i, j) {
                Some(ij) => self.mul(ij, &SparseVec::unit(k)),
                None => SparseVec::new(),
            };
            let right = match self.product(j, k) {
                Some(jk) => self.mul(&SparseVec::unit(i), jk),
                None => SparseVec::new(),
            };
            left != right
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn ring(&self) -> &ScalarRing {
        &self.ring
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn label(&self, i: usize) -> &str {
        &self.basis[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.basis
            .iter()
            .position(|b| b == label)
            .ok_or_else(|| Error::BadIndex(format!("no basis element {label:?} in {}", self.name)))
    }

    /// `b_i * b_j`, or `None` when it is zero.
    pub fn product(&self, i: usize, j: usize) -> Option<&SparseVec> {
        let row = &self.table[i];
        row.binary_search_by_key(&j, |(jj, _)| *jj).ok().map(|pos| &row[pos].1)
    }

    /// All nonzero basis products `((i, j), b_i b_j)`.
    pub fn products(&self) -> impl Iterator<Item = ((usize, usize), &SparseVec)> + '_ {
        self.table
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().map(move |(j, v)| ((i, *j), v)))
    }

    pub fn mul(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (i, a) in x.iter() {
            let row = &self.table[i];
            if row.is_empty() {
                continue;
            }
            for (j, b) in y.iter() {
                if let Some(p) = self.product(i, j) {
                    out.add_scaled(&self.ring, &self.ring.mul(a, b), p);
                }
            }
        }
        out
    }

    /// Like [`Algebra::mul`] but fails instead of dropping terms past the
    /// filtration cap.
    pub fn mul_checked(&self, x: &SparseVec, y: &SparseVec) -> Result<SparseVec> {
        if let Some(f) = &self.filtration {
            let top = |v: &SparseVec| v.support().map(|i| f.degrees[i]).max().unwrap_or(0);
            let needed = top(x) + top(y);
            if !x.is_zero() && !y.is_zero() && needed > f.cap {
                return Err(Error::DegreeCapExceeded { cap: f.cap, needed });
            }
        }
        Ok(self.mul(x, y))
    }

    /// Whether `b_i b_j` is computed faithfully under the filtration cap.
    pub fn within_cap(&self, i: usize, j: usize) -> bool {
        match &self.filtration {
            Some(f) => f.degrees[i] + f.degrees[j] <= f.cap,
            None => true,
        }
    }

    pub fn unit(&self) -> Option<&SparseVec> {
        self.unit.as_ref()
    }

    pub fn action(&self) -> Option<&GAction> {
        self.action.as_ref()
    }

    pub fn grading(&self) -> Option<&GGrading> {
        self.grading.as_ref()
    }

    pub fn filtration(&self) -> Option<&Filtration> {
        self.filtration.as_ref()
    }

    pub fn require_action(&self) -> Result<&GAction> {
        self.action.as_ref().ok_or_else(|| Error::MissingAction(self.name.clone()))
    }

    pub fn require_grading(&self) -> Result<&GGrading> {
        self.grading.as_ref().ok_or_else(|| Error::MissingGrading(self.name.clone()))
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Algebra {
        self.name = name.into();
        self
    }

    /// Attaches a validated action (replacing any previous one).
    pub fn with_action(mut self, action: GAction, budget: &CheckBudget) -> Result<Algebra> {
        validate_action(&self, &action, budget)?;
        self.action = Some(action);
        Ok(self)
    }

    /// Attaches a validated grading (replacing any previous one).
    pub fn with_grading(mut self, grading: GGrading) -> Result<Algebra> {
        validate_grading(&self, &grading)?;
        self.grading = Some(grading);
        Ok(self)
    }

    pub fn with_filtration(mut self, filtration: Filtration) -> Result<Algebra> {
        if filtration.degrees.len() != self.dim() {
            return Err(Error::ShapeMismatch("filtration needs one degree per basis element".into()));
        }
        self.filtration = Some(filtration);
        Ok(self)
    }

    pub fn without_action(mut self) -> Algebra {
        self.action = None;
        self
    }

    pub fn without_grading(mut self) -> Algebra {
        self.grading = None;
        self
    }

    pub(crate) fn set_action_unchecked(&mut self, action: Option<GAction>) {
        self.action = action;
    }

    pub(crate) fn set_grading_unchecked(&mut self, grading: Option<GGrading>) {
        self.grading = grading;
    }

    /// Same basis labels and structure constants.
    pub fn same_structure(&self, other: &Algebra) -> bool {
        self.ring == other.ring
            && self.basis == other.basis
            && self.table == other.table
            && self.unit == other.unit
    }

    /// Same basis and structure constants after renaming `self`'s basis
    /// element `i` to `other`'s basis element `perm[i]`.
    pub fn isomorphic_via(&self, other: &Algebra, perm: &[usize]) -> bool {
        if self.dim() != other.dim() || perm.len() != self.dim() || self.ring != other.ring {
            return false;
        }
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                let lhs = self
                    .product(i, j)
                    .map(|v| v.map_indices(&self.ring, |k| perm[k]))
                    .unwrap_or_default();
                let rhs = other.product(perm[i], perm[j]).cloned().unwrap_or_default();
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }

    pub fn element(self: &Arc<Self>, coords: SparseVec) -> Element {
        Element { alg: self.clone(), coords }
    }

    pub fn basis_element(self: &Arc<Self>, i: usize) -> Element {
        self.element(SparseVec::unit(i))
    }

    /// Parses `{"label": "p/q", ...}` style coordinates.
    pub fn parse_vector<'a>(
        &self,
        entries: impl IntoIterator<Item = (&'a str, &'a str)>,
    ) -> Result<SparseVec> {
        let mut v = SparseVec::new();
        for (label, value) in entries {
            let i = match label.parse::<usize>() {
                Ok(i) if i < self.dim() => i,
                _ => self.index_of(label)?,
            };
            let c = self.ring.parse(value)?;
            v.add_at(&self.ring, i, &c);
        }
        Ok(v)
    }

    pub fn format(&self, v: &SparseVec) -> String {
        v.format_with(&self.basis)
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (dim {} over {})", self.name, self.dim(), self.ring)
    }
}

/// An element together with its algebra.
#[derive(Clone, Debug)]
pub struct Element {
    alg: AlgebraRef,
    coords: SparseVec,
}

impl Element {
    pub fn algebra(&self) -> &AlgebraRef {
        &self.alg
    }

    pub fn coords(&self) -> &SparseVec {
        &self.coords
    }

    pub fn into_coords(self) -> SparseVec {
        self.coords
    }

    fn check_parent(&self, other: &Element) -> Result<()> {
        if Arc::ptr_eq(&self.alg, &other.alg) || self.alg.same_structure(&other.alg) {
            Ok(())
        } else {
            Err(Error::ParentMismatch(self.alg.name().into(), other.alg.name().into()))
        }
    }

    pub fn add(&self, other: &Element) -> Result<Element> {
        self.check_parent(other)?;
        Ok(self.alg.element(self.coords.add(self.alg.ring(), &other.coords)))
    }

    pub fn sub(&self, other: &Element) -> Result<Element> {
        self.check_parent(other)?;
        Ok(self.alg.element(self.coords.sub(self.alg.ring(), &other.coords)))
    }

    pub fn mul(&self, other: &Element) -> Result<Element> {
        self.check_parent(other)?;
        Ok(self.alg.element(self.alg.mul_checked(&self.coords, &other.coords)?))
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        self.alg.element(self.coords.scaled(self.alg.ring(), c))
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_zero()
    }

    pub fn is_idempotent(&self) -> Result<bool> {
        Ok(self.mul(self)?.coords == self.coords)
    }
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        self.check_parent(other).is_ok() && self.coords == other.coords
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.alg.format(&self.coords))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn labels(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn non_associative_spec_rejected_with_first_triple() {
        // e1 e1 = e2, e2 e1 = e1: (e1 e1) e1 = e1 but e1 (e1 e1) = 0
        let alg = Algebra::build(
            "bad",
            ScalarRing::Rationals,
            labels(&["e1", "e2"]),
            [((0, 0), SparseVec::unit(1)), ((1, 0), SparseVec::unit(0))],
            None,
            &CheckBudget::default(),
        );
        assert_eq!(alg.unwrap_err(), Error::NotAssociative(0, 0, 0));
    }

    #[test]
    fn matrix_units_are_associative() {
        let idx = |i: usize, j: usize| 2 * i + j;
        let mut products = Vec::new();
        for i in 0..2 {
            for j in 0..2 {
                for l in 0..2 {
                    products.push(((idx(i, j), idx(j, l)), SparseVec::unit(idx(i, l))));
                }
            }
        }
        let unit = SparseVec::from_entries([(0, Scalar::one()), (3, Scalar::one())]);
        let alg = Algebra::build(
            "M2",
            ScalarRing::Rationals,
            labels(&["e11", "e12", "e21", "e22"]),
            products,
            Some(unit),
            &CheckBudget::default(),
        )
        .unwrap();
        assert_eq!(alg.dim(), 4);
        assert_eq!(alg.product(1, 2), Some(&SparseVec::unit(0)));
        assert_eq!(alg.product(1, 1), None);
    }

    #[test]
    fn bad_unit_detected() {
        let alg = Algebra::build(
            "x",
            ScalarRing::Rationals,
            labels(&["x"]),
            [],
            Some(SparseVec::unit(0)),
            &CheckBudget::default(),
        );
        assert_eq!(alg.unwrap_err(), Error::BadUnit(0));
    }

    #[test]
    fn out_of_range_structure() {
        let err = Algebra::new("x", ScalarRing::Rationals, labels(&["x"]), [((0, 1), SparseVec::unit(0))], None)
            .unwrap_err();
        assert_eq!(err.kind(), "BadIndex");
    }

    #[test]
    fn filtration_cap_is_enforced() {
        // l[t]/(t^3) with basis 1, t, t^2
        let products = (0..3).flat_map(|i| (0..3).filter(move |j| i + j < 3).map(move |j| ((i, j), SparseVec::unit(i + j))));
        let alg = Algebra::build("poly", ScalarRing::Rationals, labels(&["1", "t", "t^2"]), products, Some(SparseVec::unit(0)), &CheckBudget::default())
            .unwrap()
            .with_filtration(Filtration { degrees: vec![0, 1, 2], cap: 2 })
            .unwrap();
        assert_eq!(alg.mul(&SparseVec::unit(1), &SparseVec::unit(2)), SparseVec::new());
        assert_eq!(
            alg.mul_checked(&SparseVec::unit(1), &SparseVec::unit(2)).unwrap_err(),
            Error::DegreeCapExceeded { cap: 2, needed: 3 }
        );
        assert_eq!(alg.mul_checked(&SparseVec::unit(1), &SparseVec::unit(1)).unwrap(), SparseVec::unit(2));
    }
}
