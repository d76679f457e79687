//! Linear maps between algebras and the structural checks on them.

use std::sync::Arc;

use crate::algebra::AlgebraRef;
use crate::check::{CheckBudget, Verdict, Violation};
use crate::construct;
use crate::equivariance::same_group;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, SparseVec};
use crate::scalar::{Scalar, ScalarRing};

/// An `l`-linear map; column `j` of the matrix is the image of source
/// basis vector `j`.
#[derive(Clone, Debug)]
pub struct LinearMap {
    source: AlgebraRef,
    target: AlgebraRef,
    matrix: Matrix,
}

impl LinearMap {
    pub fn new(source: AlgebraRef, target: AlgebraRef, matrix: Matrix) -> Result<LinearMap> {
        if source.ring() != target.ring() {
            return Err(Error::ScalarMismatch(source.ring().to_string(), target.ring().to_string()));
        }
        if matrix.ncols() != source.dim() || matrix.nrows() != target.dim() {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} matrix for a map {} -> {}",
                matrix.nrows(),
                matrix.ncols(),
                source.dim(),
                target.dim()
            )));
        }
        Ok(LinearMap { source, target, matrix })
    }

    /// The map sending basis vector `j` to `f(j)`.
    pub fn from_fn(
        source: AlgebraRef,
        target: AlgebraRef,
        f: impl Fn(usize) -> SparseVec,
    ) -> Result<LinearMap> {
        let cols = (0..source.dim()).map(f).collect();
        let matrix = Matrix::from_columns(target.dim(), cols)?;
        LinearMap::new(source, target, matrix)
    }

    pub fn try_from_fn(
        source: AlgebraRef,
        target: AlgebraRef,
        f: impl Fn(usize) -> Result<SparseVec>,
    ) -> Result<LinearMap> {
        let cols = (0..source.dim()).map(f).collect::<Result<Vec<_>>>()?;
        let matrix = Matrix::from_columns(target.dim(), cols)?;
        LinearMap::new(source, target, matrix)
    }

    pub fn identity(a: &AlgebraRef) -> LinearMap {
        LinearMap { source: a.clone(), target: a.clone(), matrix: Matrix::identity(a.dim()) }
    }

    pub fn zero(source: &AlgebraRef, target: &AlgebraRef) -> LinearMap {
        LinearMap {
            source: source.clone(),
            target: target.clone(),
            matrix: Matrix::zero(target.dim(), source.dim()),
        }
    }

    pub fn source(&self) -> &AlgebraRef {
        &self.source
    }

    pub fn target(&self) -> &AlgebraRef {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn ring(&self) -> &ScalarRing {
        self.source.ring()
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        self.matrix.apply(self.ring(), v)
    }

    /// Image of source basis vector `j`.
    pub fn image(&self, j: usize) -> &SparseVec {
        self.matrix.col(j)
    }

    /// Same map viewed between other algebras with identical bases (for
    /// instance after attaching a structure).
    pub fn retarget(&self, source: &AlgebraRef, target: &AlgebraRef) -> Result<LinearMap> {
        if source.basis() != self.source.basis() || target.basis() != self.target.basis() {
            return Err(Error::ShapeMismatch(format!(
                "cannot view {} -> {} as {} -> {}",
                self.source.name(),
                self.target.name(),
                source.name(),
                target.name()
            )));
        }
        LinearMap::new(source.clone(), target.clone(), self.matrix.clone())
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &LinearMap) -> Result<LinearMap> {
        if !same_basis(&inner.target, &self.source) {
            return Err(Error::ShapeMismatch(format!(
                "cannot compose {} -> {} after {} -> {}",
                self.source.name(),
                self.target.name(),
                inner.source.name(),
                inner.target.name()
            )));
        }
        let matrix = self.matrix.mul(self.ring(), &inner.matrix)?;
        LinearMap::new(inner.source.clone(), self.target.clone(), matrix)
    }

    pub fn add(&self, other: &LinearMap) -> Result<LinearMap> {
        self.check_parallel(other)?;
        let matrix = self.matrix.add(self.ring(), &other.matrix)?;
        LinearMap::new(self.source.clone(), self.target.clone(), matrix)
    }

    pub fn sub(&self, other: &LinearMap) -> Result<LinearMap> {
        self.check_parallel(other)?;
        let matrix = self.matrix.sub(self.ring(), &other.matrix)?;
        LinearMap::new(self.source.clone(), self.target.clone(), matrix)
    }

    pub fn scaled(&self, c: &Scalar) -> LinearMap {
        LinearMap {
            source: self.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.scaled(self.ring(), c),
        }
    }

    fn check_parallel(&self, other: &LinearMap) -> Result<()> {
        if same_basis(&self.source, &other.source) && same_basis(&self.target, &other.target) {
            Ok(())
        } else {
            Err(Error::ShapeMismatch("maps between different algebras".into()))
        }
    }

    /// Exact equality of matrices, with the first differing column.
    pub fn agrees_with(&self, other: &LinearMap) -> Result<Verdict> {
        self.check_parallel(other)?;
        Ok(match (0..self.source.dim()).find(|&j| self.image(j) != other.image(j)) {
            Some(column) => Err(Violation::MatrixMismatch { column }),
            None => Ok(()),
        })
    }

    pub fn is_identity(&self) -> bool {
        same_basis(&self.source, &self.target) && self.matrix.is_identity()
    }

    pub fn rank(&self) -> Result<usize> {
        self.matrix.rank(self.ring())
    }

    pub fn kernel_basis(&self) -> Result<Vec<SparseVec>> {
        self.matrix.kernel(self.ring())
    }

    pub fn is_injective(&self) -> Result<bool> {
        Ok(self.rank()? == self.source.dim())
    }

    pub fn is_isomorphism(&self) -> Result<bool> {
        Ok(self.source.dim() == self.target.dim() && self.is_injective()?)
    }

    pub fn inverse(&self) -> Result<Option<LinearMap>> {
        Ok(self
            .matrix
            .inverse(self.ring())?
            .map(|m| LinearMap { source: self.target.clone(), target: self.source.clone(), matrix: m }))
    }

    /// `f(b_i b_j) = f(b_i) f(b_j)` on basis pairs (exhaustive or sampled
    /// per the budget), skipping pairs whose product is past the source's
    /// filtration cap; with `unital`, also `f(1) = 1` when both sides have
    /// units.
    pub fn is_homomorphism(&self, budget: &CheckBudget, unital: bool) -> Result<Verdict> {
        let d = self.source.dim();
        for (i, j) in budget.pairs(d, d) {
            if !self.source.within_cap(i, j) {
                continue;
            }
            let lhs = match self.source.product(i, j) {
                Some(p) => self.apply(p),
                None => SparseVec::new(),
            };
            let rhs = self.target.mul_checked(self.image(i), self.image(j))?;
            if lhs != rhs {
                return Ok(Err(Violation::ProductMismatch { left: i, right: j, coeff: None }));
            }
        }
        if unital {
            if let (Some(u), Some(w)) = (self.source.unit(), self.target.unit()) {
                if self.apply(u) != *w {
                    return Ok(Err(Violation::UnitNotPreserved));
                }
            }
        }
        Ok(Ok(()))
    }

    /// `f ∘ rho_source(g) = rho_target(g) ∘ f` for every group element.
    pub fn is_equivariant(&self) -> Result<Verdict> {
        let sa = self.source.require_action()?;
        let ta = self.target.require_action()?;
        same_group(sa.group(), ta.group())?;
        let ring = self.ring();
        for g in sa.group().elements() {
            for j in 0..self.source.dim() {
                let lhs = self.apply(sa.matrix(g).col(j));
                let rhs = ta.apply(ring, g, self.image(j));
                if lhs != rhs {
                    return Ok(Err(Violation::NotEquivariant {
                        group_element: sa.group().name(g).to_string(),
                        basis: j,
                    }));
                }
            }
        }
        Ok(Ok(()))
    }

    /// Every basis vector of degree `s` lands in the degree-`s` span.
    pub fn is_homogeneous(&self) -> Result<Verdict> {
        let sg = self.source.require_grading()?;
        let tg = self.target.require_grading()?;
        same_group(sg.group(), tg.group())?;
        for j in 0..self.source.dim() {
            let d = sg.degree(j);
            if self.image(j).support().any(|k| tg.degree(k) != d) {
                return Ok(Err(Violation::NotHomogeneous { basis: j }));
            }
        }
        Ok(Ok(()))
    }

    /// `f ⊗ g` between the given tensor products (which must have the
    /// factor bases in the standard order).
    pub fn tensor_between(
        &self,
        other: &LinearMap,
        source: &AlgebraRef,
        target: &AlgebraRef,
    ) -> Result<LinearMap> {
        if source.dim() != self.source.dim() * other.source.dim()
            || target.dim() != self.target.dim() * other.target.dim()
        {
            return Err(Error::ShapeMismatch("tensor of maps between wrong algebras".into()));
        }
        let matrix = self.matrix.kronecker(self.ring(), &other.matrix);
        LinearMap::new(source.clone(), target.clone(), matrix)
    }

    /// `f ⊗ g` between freshly built tensor products.
    pub fn tensor(&self, other: &LinearMap) -> Result<LinearMap> {
        let source = construct::tensor(&self.source, &other.source)?;
        let target = construct::tensor(&self.target, &other.target)?;
        self.tensor_between(other, &source, &target)
    }

    pub fn format_image(&self, j: usize) -> String {
        self.target.format(self.image(j))
    }
}

pub(crate) fn same_basis(a: &AlgebraRef, b: &AlgebraRef) -> bool {
    Arc::ptr_eq(a, b) || (a.ring() == b.ring() && a.basis() == b.basis())
}

/// Both composites are identities.
pub fn are_inverse(f: &LinearMap, g: &LinearMap) -> Result<Verdict> {
    let fg = f.compose(g)?;
    let gf = g.compose(f)?;
    if let Some(column) = (0..fg.source().dim()).find(|&j| *fg.image(j) != SparseVec::unit(j)) {
        return Ok(Err(Violation::Other(format!("f∘g differs from the identity on basis {column}"))));
    }
    if let Some(column) = (0..gf.source().dim()).find(|&j| *gf.image(j) != SparseVec::unit(j)) {
        return Ok(Err(Violation::Other(format!("g∘f differs from the identity on basis {column}"))));
    }
    Ok(Ok(()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{group_algebra, matrix2, scalar_algebra};
    use crate::equivariance::GAction;
    use crate::group::FiniteGroup;
    use crate::linalg::Matrix;
    use proptest::prelude::*;

    fn q() -> ScalarRing {
        ScalarRing::Rationals
    }

    #[test]
    fn identity_is_a_homomorphism() {
        let m = matrix2(&q());
        let id = LinearMap::identity(&m);
        assert!(id.is_identity());
        assert_eq!(id.is_homomorphism(&CheckBudget::default(), true).unwrap(), Ok(()));
    }

    #[test]
    fn doubling_is_not_multiplicative() {
        let l = scalar_algebra(&q());
        let two = Scalar::from_integer(2.into());
        let f = LinearMap::from_fn(l.clone(), l.clone(), |_| SparseVec::from_entries([(0, two.clone())])).unwrap();
        assert_eq!(
            f.is_homomorphism(&CheckBudget::default(), false).unwrap(),
            Err(Violation::ProductMismatch { left: 0, right: 0, coeff: None })
        );
    }

    #[test]
    fn kernel_of_difference() {
        let l = scalar_algebra(&q());
        let l2 = construct::direct_sum(&l, &l).unwrap();
        let one = Scalar::from_integer(1.into());
        let f = LinearMap::from_fn(l2, l, |j| {
            SparseVec::from_entries([(0, if j == 0 { one.clone() } else { -one.clone() })])
        })
        .unwrap();
        assert_eq!(
            f.kernel_basis().unwrap(),
            vec![SparseVec::from_entries([(0, one.clone()), (1, one.clone())])]
        );
        assert_eq!(f.rank().unwrap(), 1);
    }

    #[test]
    fn equivariance_witness() {
        // lG as a module with the regular action is not a G-algebra, so use
        // (lG)* with translation; d_e -> d_s style map chi_e -> chi_s.
        let c2 = Arc::new(FiniteGroup::cyclic(2));
        let a = construct::dual_group_algebra(&q(), &c2).unwrap();
        let f = LinearMap::from_fn(a.clone(), a.clone(), |_| SparseVec::unit(1)).unwrap();
        assert_eq!(
            f.is_equivariant().unwrap(),
            Err(Violation::NotEquivariant { group_element: "s".into(), basis: 0 })
        );
        let id = LinearMap::identity(&a);
        assert_eq!(id.is_equivariant().unwrap(), Ok(()));
        let bare = group_algebra(&q(), &c2);
        assert_eq!(LinearMap::identity(&bare).is_equivariant().unwrap_err().kind(), "MissingAction");
        let _ = GAction::trivial(c2, 1);
    }

    #[test]
    fn compose_shape_checked() {
        let l = scalar_algebra(&q());
        let m = matrix2(&q());
        let f = LinearMap::zero(&l, &m);
        assert_eq!(f.compose(&f).unwrap_err().kind(), "ShapeMismatch");
    }

    fn small_map(dim_s: usize, dim_t: usize) -> impl Strategy<Value = Vec<i64>> {
        proptest::collection::vec(-2i64..3, dim_s * dim_t)
    }

    fn map_from(entries: &[i64], s: &AlgebraRef, t: &AlgebraRef) -> LinearMap {
        let ring = q();
        let rows: Vec<Vec<Scalar>> = entries
            .chunks(s.dim())
            .map(|r| r.iter().map(|&x| ring.from_int(x)).collect())
            .collect();
        LinearMap::new(s.clone(), t.clone(), Matrix::from_rows(s.dim(), &rows).unwrap()).unwrap()
    }

    proptest! {
        #[test]
        fn tensor_of_maps_is_functorial(a in small_map(2, 2), b in small_map(2, 2), c in small_map(4, 4), d in small_map(4, 4)) {
            let l = scalar_algebra(&q());
            let l2 = construct::direct_sum(&l, &l).unwrap();
            let m = matrix2(&q());
            let (f, f2) = (map_from(&a, &l2, &l2), map_from(&b, &l2, &l2));
            let (g, g2) = (map_from(&c, &m, &m), map_from(&d, &m, &m));
            let t = construct::tensor(&l2, &m).unwrap();
            let lhs = f.tensor_between(&g, &t, &t).unwrap().compose(&f2.tensor_between(&g2, &t, &t).unwrap()).unwrap();
            let rhs = f.compose(&f2).unwrap().tensor_between(&g.compose(&g2).unwrap(), &t, &t).unwrap();
            prop_assert_eq!(lhs.agrees_with(&rhs).unwrap(), Ok(()));
        }
    }
}
