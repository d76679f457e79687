//! Matrix algebras indexed by a group and the explicit isomorphisms that
//! relate them.

use std::sync::Arc;

use num_traits::Zero;

use crate::algebra::{Algebra, AlgebraRef};
use crate::construct::{self, budget, matrix_units, scalar_algebra, tensor};
use crate::error::{Error, Result};
use crate::group::GroupRef;
use crate::linalg::{Matrix, SparseVec};
use crate::map::LinearMap;
use crate::scalar::{Scalar, ScalarRing};

use super::{GAction, GGrading, GModuleWithBasis, ModuleMap};

/// `M_G` with the translation action `g . e_{s,t} = e_{gs,gt}`.
pub fn matrix_units_translation(ring: &ScalarRing, group: &GroupRef) -> Result<AlgebraRef> {
    let n = group.order();
    let units = Arc::unwrap_or_clone(matrix_units(ring, group.names())).with_name("M_G");
    let g = group.clone();
    let action = GAction::permutation(group.clone(), n * n, move |x, k| {
        g.mul(x, k / n) * n + g.mul(x, k % n)
    });
    Ok(Arc::new(units.with_action(action, &budget())?))
}

/// `M_G ⊗ A` with the diagonal action.
pub fn mg_algebra(a: &Algebra) -> Result<AlgebraRef> {
    let act = a.require_action()?;
    let units = matrix_units_translation(a.ring(), act.group())?;
    tensor(&units, a)
}

/// `M_G ⊗ A` graded by `|e_{s,t} ⊗ a| = s |a| t^-1`.
pub fn mg_graded_algebra(a: &Algebra) -> Result<AlgebraRef> {
    let gr = a.require_grading()?;
    let g = gr.group().clone();
    let n = g.order();
    let units = Arc::unwrap_or_clone(matrix_units(a.ring(), g.names())).with_name("M_G");
    let plain = Arc::unwrap_or_clone(tensor(&units, &a.clone().without_action())?);
    let da = a.dim();
    let degrees = (0..plain.dim())
        .map(|k| {
            let (st, i) = (k / da, k % da);
            let (s, t) = (st / n, st % n);
            g.mul(g.mul(s, gr.degree(i)), g.inv(t))
        })
        .collect();
    Ok(Arc::new(plain.with_grading(GGrading::new(g, degrees)?)?))
}

/// Element `sum_t e_{gt,t}` of `M_G`: the matrix of `rho(g)` on the regular
/// representation.
pub fn regular_matrix(ring: &ScalarRing, group: &GroupRef, g: usize) -> SparseVec {
    let n = group.order();
    SparseVec::from_entries(group.elements().map(|t| (group.mul(g, t) * n + t, ring.one())))
}

/// The full matrix algebra on `W`'s basis with `g . f = rho(g) f rho(g)^-1`.
pub fn endf(w: &GModuleWithBasis) -> Result<AlgebraRef> {
    let ring = w.ring();
    let n = w.dim();
    let units = Arc::unwrap_or_clone(matrix_units(ring, w.basis())).with_name(format!("End({})", w.name()));
    let group = w.group();
    let mut matrices = Vec::with_capacity(group.order());
    for g in group.elements() {
        let rho = w.matrix(g);
        let rho_inv = w.matrix(group.inv(g));
        let rows_inv = rho_inv.rows();
        let cols = (0..n * n)
            .map(|k| {
                let (v, x) = (k / n, k % n);
                // rho e_{v,x} rho^-1 = sum_{u,y} rho[u][v] rho^-1[x][y] e_{u,y}
                let mut out = SparseVec::new();
                for (u, a) in rho.col(v).iter() {
                    for (y, b) in rows_inv[x].iter() {
                        out.add_at(ring, u * n + y, &ring.mul(a, b));
                    }
                }
                out
            })
            .collect();
        matrices.push(Matrix::from_columns(n * n, cols)?);
    }
    let action = GAction::new(group.clone(), matrices)?;
    Ok(Arc::new(units.with_action(action, &budget())?))
}

/// `T: lG ⊗ W^τ -> lG ⊗ W`, `d_g ⊗ h -> d_g ⊗ g(h)`, and its inverse
/// `S: d_g ⊗ h -> d_g ⊗ g^-1(h)`.
pub fn stab_iso_regular(w: &GModuleWithBasis) -> Result<(ModuleMap, ModuleMap)> {
    let group = w.group();
    let regular = GModuleWithBasis::regular(w.ring(), group);
    let twisted = Arc::new(regular.tensor(&w.trivialized())?);
    let plain = Arc::new(regular.tensor(w)?);
    let m = w.dim();
    let ring = w.ring().clone();
    let image = |g: usize, k: usize, via: usize| -> SparseVec {
        w.matrix(via).col(k).map_indices(&ring, |j| g * m + j)
    };
    let t = ModuleMap::from_fn(twisted.clone(), plain.clone(), |idx| {
        let (g, k) = (idx / m, idx % m);
        image(g, k, g)
    })?;
    let s = ModuleMap::from_fn(plain, twisted, |idx| {
        let (g, k) = (idx / m, idx % m);
        image(g, k, group.inv(g))
    })?;
    Ok((t, s))
}

/// `End(lG) ⊗ End(W) -> End(lG ⊗ W)`, `e_{g,h} ⊗ e_{v,w} -> e_{(g,v),(h,w)}`.
pub fn stab_iso_endf_factor(w: &GModuleWithBasis) -> Result<LinearMap> {
    let group = w.group();
    let regular = GModuleWithBasis::regular(w.ring(), group);
    let source = tensor(&*endf(&regular)?, &*endf(w)?)?;
    let target = endf(&regular.tensor(w)?)?;
    let (n, m) = (group.order(), w.dim());
    LinearMap::from_fn(source, target, |idx| {
        let (gh, vw) = (idx / (m * m), idx % (m * m));
        let (g, h) = (gh / n, gh % n);
        let (v, x) = (vw / m, vw % m);
        SparseVec::unit((g * m + v) * (n * m) + (h * m + x))
    })
}

/// The two corner embeddings `l -> M_G`: `iota` is the corner `e_{e,e}`
/// with respect to the basis `lambda_e = (1/n) sum_g d_g`,
/// `lambda_h = d_e - d_h`; `iota_bar` is the same endomorphism written in
/// the basis `{d_g}` (every entry `1/n`). `change` has the `lambda_g` as
/// columns.
#[derive(Clone, Debug)]
pub struct CornerMaps {
    pub iota: LinearMap,
    pub iota_bar: LinearMap,
    pub change: Matrix,
    pub change_inv: Matrix,
}

pub fn finite_group_corner_maps(ring: &ScalarRing, group: &GroupRef) -> Result<CornerMaps> {
    let n = group.order();
    let inv_n = ring
        .inv_int(n)
        .ok_or_else(|| Error::OrderNotInvertible(n, ring.to_string()))?;
    let e = group.identity();
    let l = scalar_algebra(ring);
    let mg = matrix_units_translation(ring, group)?;
    let iota = LinearMap::from_fn(l.clone(), mg.clone(), |_| SparseVec::unit(e * n + e))?;
    let all = SparseVec::from_entries((0..n * n).map(|k| (k, inv_n.clone())));
    let iota_bar = LinearMap::from_fn(l, mg, |_| all.clone())?;
    let cols = group
        .elements()
        .map(|g| {
            if g == e {
                SparseVec::from_entries((0..n).map(|h| (h, inv_n.clone())))
            } else {
                SparseVec::from_entries([(e, ring.one()), (g, ring.neg(&ring.one()))])
            }
        })
        .collect();
    let change = Matrix::from_columns(n, cols)?;
    let change_inv = change
        .inverse(ring)?
        .ok_or_else(|| Error::NotInvertible("change of basis".into(), ring.to_string()))?;
    Ok(CornerMaps { iota, iota_bar, change, change_inv })
}

impl CornerMaps {
    /// An element of `M_G` (entry `(s,t)` at `s * n + t`) as an `n x n` matrix.
    pub fn as_matrix(v: &SparseVec, n: usize) -> Matrix {
        let mut cols = vec![SparseVec::new(); n];
        for (k, c) in v.iter() {
            cols[k % n].set(k / n, c.clone());
        }
        Matrix::from_columns(n, cols).expect("square")
    }

    /// `iota_bar(1) = C iota(1) C^-1` exactly.
    pub fn conjugation_holds(&self) -> Result<bool> {
        let ring = self.iota.ring();
        let n = self.change.nrows();
        let corner = CornerMaps::as_matrix(self.iota.image(0), n);
        let conj = self.change.mul(ring, &corner)?.mul(ring, &self.change_inv)?;
        Ok(conj == CornerMaps::as_matrix(self.iota_bar.image(0), n))
    }

    /// The inverse change of basis matches `d_e = lambda_e + (1/n) sum_{g != e} lambda_g`
    /// and `d_h = lambda_e - lambda_h + (1/n) sum_{g != e} lambda_g`.
    pub fn inverse_formulas_hold(&self, group: &GroupRef) -> bool {
        let ring = self.iota.ring();
        let n = group.order();
        let e = group.identity();
        let inv_n = match ring.inv_int(n) {
            Some(x) => x,
            None => return false,
        };
        group.elements().all(|h| {
            let mut expected: Vec<Scalar> =
                group.elements().map(|g| if g == e { ring.one() } else { inv_n.clone() }).collect();
            if h != e {
                expected[h] = ring.sub(&expected[h], &ring.one());
            }
            (0..n).all(|g| {
                let got = self.change_inv.get(g, h);
                got == expected[g] || (got.is_zero() && expected[g].is_zero())
            })
        })
    }
}

/// The graded isomorphisms `eta: M_G M_G A -> M_G M_|G| A` and
/// `mu: M_G M_|G| A -> M_|G| M_G A`, where `M_|G|` is `M_G` with the trivial
/// grading.
#[derive(Clone, Debug)]
pub struct GradedSwapIsos {
    pub eta: LinearMap,
    pub mu: LinearMap,
}

pub fn graded_swap_isos(a: &Algebra) -> Result<GradedSwapIsos> {
    let gr = a.require_grading()?;
    let g = gr.group().clone();
    let n = g.order();
    let da = a.dim();
    let inner = mg_graded_algebra(a)?;
    let source = mg_graded_algebra(&inner)?;
    let trivial_outer = construct::matrix_algebra(g.names(), a)?;
    let middle = mg_graded_algebra(&trivial_outer)?;
    let target = construct::matrix_algebra(g.names(), &inner)?;
    // index of e_{s,g} ⊗ e_{t,r} ⊗ a_i
    let idx = move |s: usize, x: usize, t: usize, r: usize, i: usize| ((s * n + x) * n * n + t * n + r) * da + i;
    let split = move |k: usize| {
        let i = k % da;
        let rest = k / da;
        let (outer, inner) = (rest / (n * n), rest % (n * n));
        (outer / n, outer % n, inner / n, inner % n, i)
    };
    let gg = g.clone();
    let eta = LinearMap::from_fn(source, middle.clone(), move |k| {
        let (s, x, t, r, i) = split(k);
        SparseVec::unit(idx(gg.mul(s, t), gg.mul(x, r), t, r, i))
    })?;
    let mu = LinearMap::from_fn(middle, target, move |k| {
        let (s, x, t, r, i) = split(k);
        SparseVec::unit(idx(t, r, s, x, i))
    })?;
    Ok(GradedSwapIsos { eta, mu })
}
