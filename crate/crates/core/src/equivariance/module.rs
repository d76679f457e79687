use std::sync::Arc;

use crate::check::{Verdict, Violation};
use crate::error::{Error, Result};
use crate::group::GroupRef;
use crate::linalg::{Matrix, SparseVec};
use crate::scalar::ScalarRing;

use super::same_group;

/// A representation of a finite group on a free module with a chosen
/// finite basis. Nothing is multiplied here; `endf` turns it into an
/// algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GModuleWithBasis {
    name: String,
    ring: ScalarRing,
    group: GroupRef,
    basis: Vec<String>,
    matrices: Vec<Matrix>,
}

impl GModuleWithBasis {
    /// Validates `rho(e) = 1` and `rho(g) rho(h) = rho(gh)`.
    pub fn new(
        name: impl Into<String>,
        ring: ScalarRing,
        group: GroupRef,
        basis: Vec<String>,
        matrices: Vec<Matrix>,
    ) -> Result<GModuleWithBasis> {
        let d = basis.len();
        if matrices.len() != group.order() {
            return Err(Error::ShapeMismatch("one matrix per group element required".into()));
        }
        if matrices.iter().any(|m| m.nrows() != d || m.ncols() != d) {
            return Err(Error::ShapeMismatch(format!("module matrices must be {d}x{d}")));
        }
        let e = group.identity();
        if !matrices[e].is_identity() {
            return Err(Error::NotARepresentation(group.name(e).into(), group.name(e).into()));
        }
        for a in group.elements() {
            for b in group.elements() {
                if matrices[a].mul(&ring, &matrices[b])? != matrices[group.mul(a, b)] {
                    return Err(Error::NotARepresentation(group.name(a).into(), group.name(b).into()));
                }
            }
        }
        Ok(GModuleWithBasis { name: name.into(), ring, group, basis, matrices })
    }

    /// `lG` with `rho(g) b_h = b_{gh}`. Basis labels are the element names,
    /// so `endf` of this module has the labels `e_{s,t}` of `M_G`.
    pub fn regular(ring: &ScalarRing, group: &GroupRef) -> GModuleWithBasis {
        let n = group.order();
        let matrices = group
            .elements()
            .map(|g| Matrix::from_index_map(n, n, |h| group.mul(g, h)))
            .collect();
        GModuleWithBasis::new("lG", ring.clone(), group.clone(), group.names().to_vec(), matrices)
            .expect("regular representation")
    }

    /// The trivial representation on the given basis (written `W^τ`).
    pub fn trivial(ring: &ScalarRing, group: &GroupRef, basis: Vec<String>) -> GModuleWithBasis {
        let matrices = vec![Matrix::identity(basis.len()); group.order()];
        GModuleWithBasis::new("W", ring.clone(), group.clone(), basis, matrices)
            .expect("trivial representation")
    }

    /// The same basis with the trivial action.
    pub fn trivialized(&self) -> GModuleWithBasis {
        let mut out = GModuleWithBasis::trivial(&self.ring, &self.group, self.basis.clone());
        out.name = format!("{}^τ", self.name);
        out
    }

    /// Diagonal action on `V ⊗ W`, basis pair `(i, j)` at `i * dim(W) + j`.
    pub fn tensor(&self, other: &GModuleWithBasis) -> Result<GModuleWithBasis> {
        same_group(&self.group, &other.group)?;
        let basis = self
            .basis
            .iter()
            .flat_map(|x| other.basis.iter().map(move |y| format!("{x}⊗{y}")))
            .collect();
        let matrices = self
            .matrices
            .iter()
            .zip(&other.matrices)
            .map(|(a, b)| a.kronecker(&self.ring, b))
            .collect();
        GModuleWithBasis::new(
            format!("{}⊗{}", self.name, other.name),
            self.ring.clone(),
            self.group.clone(),
            basis,
            matrices,
        )
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn ring(&self) -> &ScalarRing {
        &self.ring
    }

    pub fn group(&self) -> &GroupRef {
        &self.group
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn matrix(&self, g: usize) -> &Matrix {
        &self.matrices[g]
    }
}

/// A linear map between modules with basis.
#[derive(Clone, Debug)]
pub struct ModuleMap {
    source: Arc<GModuleWithBasis>,
    target: Arc<GModuleWithBasis>,
    matrix: Matrix,
}

impl ModuleMap {
    pub fn from_fn(
        source: Arc<GModuleWithBasis>,
        target: Arc<GModuleWithBasis>,
        f: impl Fn(usize) -> SparseVec,
    ) -> Result<ModuleMap> {
        let cols = (0..source.dim()).map(f).collect();
        let matrix = Matrix::from_columns(target.dim(), cols)?;
        Ok(ModuleMap { source, target, matrix })
    }

    pub fn source(&self) -> &Arc<GModuleWithBasis> {
        &self.source
    }

    pub fn target(&self) -> &Arc<GModuleWithBasis> {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        self.matrix.apply(&self.source.ring, v)
    }

    pub fn compose(&self, inner: &ModuleMap) -> Result<ModuleMap> {
        if inner.target.basis != self.source.basis {
            return Err(Error::ShapeMismatch("module maps do not compose".into()));
        }
        let matrix = self.matrix.mul(&self.source.ring, &inner.matrix)?;
        Ok(ModuleMap { source: inner.source.clone(), target: self.target.clone(), matrix })
    }

    pub fn is_identity(&self) -> bool {
        self.source.basis == self.target.basis && self.matrix.is_identity()
    }

    pub fn is_equivariant(&self) -> Result<Verdict> {
        same_group(&self.source.group, &self.target.group)?;
        let ring = &self.source.ring;
        for g in self.source.group.elements() {
            let lhs = self.matrix.mul(ring, self.source.matrix(g))?;
            let rhs = self.target.matrix(g).mul(ring, &self.matrix)?;
            if let Some(j) = (0..self.source.dim()).find(|&j| lhs.col(j) != rhs.col(j)) {
                return Ok(Err(Violation::NotEquivariant {
                    group_element: self.source.group.name(g).to_string(),
                    basis: j,
                }));
            }
        }
        Ok(Ok(()))
    }
}
