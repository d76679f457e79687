//! Group actions and group gradings on algebras, modules with basis, and
//! the matrix-algebra constructions built from them.

mod module;
mod stability;

pub use module::{GModuleWithBasis, ModuleMap};
pub use stability::{
    endf, finite_group_corner_maps, graded_swap_isos, matrix_units_translation, mg_algebra,
    mg_graded_algebra, regular_matrix, stab_iso_endf_factor, stab_iso_regular, CornerMaps,
    GradedSwapIsos,
};

use crate::algebra::Algebra;
use crate::check::CheckBudget;
use crate::error::{Error, Result};
use crate::group::{GroupRef, Subgroup};
use crate::linalg::{Matrix, SparseVec};
use crate::scalar::ScalarRing;

/// One matrix per group element (in group order) acting on the underlying
/// module of an algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GAction {
    group: GroupRef,
    matrices: Vec<Matrix>,
}

impl GAction {
    pub fn new(group: GroupRef, matrices: Vec<Matrix>) -> Result<GAction> {
        if matrices.len() != group.order() {
            return Err(Error::ShapeMismatch(format!(
                "{} action matrices for a group of order {}",
                matrices.len(),
                group.order()
            )));
        }
        Ok(GAction { group, matrices })
    }

    pub fn trivial(group: GroupRef, dim: usize) -> GAction {
        let matrices = vec![Matrix::identity(dim); group.order()];
        GAction { group, matrices }
    }

    /// Action permuting basis vectors: `g . b_i = b_{f(g, i)}`.
    pub fn permutation(group: GroupRef, dim: usize, f: impl Fn(usize, usize) -> usize) -> GAction {
        let matrices = group
            .elements()
            .map(|g| Matrix::from_index_map(dim, dim, |i| f(g, i)))
            .collect();
        GAction { group, matrices }
    }

    pub fn group(&self) -> &GroupRef {
        &self.group
    }

    pub fn matrix(&self, g: usize) -> &Matrix {
        &self.matrices[g]
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.matrices
    }

    pub fn dim(&self) -> usize {
        self.matrices.first().map_or(0, Matrix::ncols)
    }

    pub fn apply(&self, ring: &ScalarRing, g: usize, v: &SparseVec) -> SparseVec {
        self.matrices[g].apply(ring, v)
    }

    pub fn is_trivial(&self) -> bool {
        self.matrices.iter().all(Matrix::is_identity)
    }

    /// The same matrices for the members of `sub`, as an action of the
    /// subgroup's own group.
    pub fn restrict(&self, sub: &Subgroup) -> Result<GAction> {
        if **sub.parent() != *self.group {
            return Err(Error::NotASubgroup("subgroup of a different group".into()));
        }
        let matrices = sub.members().iter().map(|&g| self.matrices[g].clone()).collect();
        Ok(GAction { group: sub.group().clone(), matrices })
    }

    /// Diagonal action on a tensor product.
    pub fn tensor(&self, ring: &ScalarRing, other: &GAction) -> Result<GAction> {
        same_group(&self.group, &other.group)?;
        let matrices = self
            .matrices
            .iter()
            .zip(&other.matrices)
            .map(|(a, b)| a.kronecker(ring, b))
            .collect();
        Ok(GAction { group: self.group.clone(), matrices })
    }

    /// Block-diagonal action on a direct sum.
    pub fn direct_sum(&self, other: &GAction) -> Result<GAction> {
        same_group(&self.group, &other.group)?;
        let matrices =
            self.matrices.iter().zip(&other.matrices).map(|(a, b)| a.direct_sum(b)).collect();
        Ok(GAction { group: self.group.clone(), matrices })
    }
}

/// A degree (group element index) for every basis vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GGrading {
    group: GroupRef,
    degrees: Vec<usize>,
}

impl GGrading {
    pub fn new(group: GroupRef, degrees: Vec<usize>) -> Result<GGrading> {
        if let Some(&d) = degrees.iter().find(|&&d| d >= group.order()) {
            return Err(Error::BadIndex(format!("degree {d} is not a group element")));
        }
        Ok(GGrading { group, degrees })
    }

    pub fn trivial(group: GroupRef, dim: usize) -> GGrading {
        let e = group.identity();
        GGrading { group, degrees: vec![e; dim] }
    }

    pub fn group(&self) -> &GroupRef {
        &self.group
    }

    pub fn degree(&self, i: usize) -> usize {
        self.degrees[i]
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    /// The homogeneous component of `v` of degree `g`.
    pub fn component(&self, v: &SparseVec, g: usize) -> SparseVec {
        v.filter(|i| self.degrees[i] == g)
    }

    /// The degree of a nonzero homogeneous vector.
    pub fn degree_of(&self, v: &SparseVec) -> Option<usize> {
        let mut degs = v.support().map(|i| self.degrees[i]);
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn is_trivial(&self) -> bool {
        self.degrees.iter().all(|&d| d == self.group.identity())
    }
}

pub fn same_group(a: &GroupRef, b: &GroupRef) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::ShapeMismatch(format!("structures over different groups {a} and {b}")))
    }
}

/// Representation law plus multiplicativity of every `rho(g)`.
pub fn validate_action(alg: &Algebra, action: &GAction, budget: &CheckBudget) -> Result<()> {
    let g = action.group();
    let d = alg.dim();
    if action.matrices.iter().any(|m| m.nrows() != d || m.ncols() != d) {
        return Err(Error::ShapeMismatch(format!("action matrices must be {d}x{d}")));
    }
    let ring = alg.ring();
    let e = g.identity();
    if !action.matrix(e).is_identity() {
        return Err(Error::NotARepresentation(g.name(e).into(), g.name(e).into()));
    }
    for a in g.elements() {
        for b in g.elements() {
            let prod = action.matrix(a).mul(ring, action.matrix(b))?;
            if prod != *action.matrix(g.mul(a, b)) {
                return Err(Error::NotARepresentation(g.name(a).into(), g.name(b).into()));
            }
        }
    }
    let pairs = budget.pairs(d, d);
    for a in g.elements().filter(|&a| a != e) {
        let m = action.matrix(a);
        for &(i, j) in &pairs {
            let lhs = match alg.product(i, j) {
                Some(p) => m.apply(ring, p),
                None => SparseVec::new(),
            };
            let rhs = alg.mul(m.col(i), m.col(j));
            if lhs != rhs {
                return Err(Error::NotAutomorphism(g.name(a).into(), i, j));
            }
        }
    }
    Ok(())
}

/// `A_s A_t ⊆ A_st` on every nonzero basis product.
pub fn validate_grading(alg: &Algebra, grading: &GGrading) -> Result<()> {
    if grading.degrees.len() != alg.dim() {
        return Err(Error::ShapeMismatch("grading needs one degree per basis element".into()));
    }
    let g = grading.group();
    for ((i, j), v) in alg.products() {
        let expected = g.mul(grading.degree(i), grading.degree(j));
        if let Some(k) = v.support().find(|&k| grading.degree(k) != expected) {
            return Err(Error::NotMultiplicative(i, j, g.name(grading.degree(k)).into()));
        }
    }
    Ok(())
}
