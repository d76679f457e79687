//! Restriction of actions to a subgroup and the induced algebra
//! `Ind_H^G(A)`, stored in normal form over a pointed coset section.
//!
//! The basis vector `xi(r, a_i)` (coset `c` with representative `r`) sits
//! at `c * dim(A) + i`. As a function `G -> A` it is
//! `xi(g, a) = sum_{h in H} chi_{gh} h^-1(a)`; [`InducedAlgebra::as_function`]
//! computes that model directly and the relation checks compare against it.

use std::sync::Arc;

use crate::algebra::{Algebra, AlgebraRef};
use crate::check::{CheckBudget, Verdict, Violation};
use crate::construct::{
    budget, dual_group_algebra, function_algebra, matrix_units, paren, scalar_algebra, swap_map,
    tensor, with_trivial_action,
};
use crate::equivariance::{same_group, GAction};
use crate::error::{Error, Result};
use crate::group::{CosetSpace, GroupRef, Subgroup};
use crate::linalg::{Matrix, SparseVec};
use crate::map::{are_inverse, LinearMap};
use crate::scalar::ScalarRing;

/// `A` with its action restricted to `sub`. A grading is dropped since it
/// is valued in the big group.
pub fn restrict(a: &Algebra, sub: &Subgroup) -> Result<AlgebraRef> {
    let action = a.require_action()?.restrict(sub)?;
    let alg = a.clone().without_grading().with_name(format!("Res({})", paren(a.name())));
    Ok(Arc::new(alg.with_action(action, &budget())?))
}

#[derive(Clone, Debug)]
pub struct InducedAlgebra {
    cosets: CosetSpace,
    base: AlgebraRef,
    alg: AlgebraRef,
}

impl InducedAlgebra {
    /// Builds `Ind_H^G(base)` for an `H`-algebra `base`, where `H` is the
    /// subgroup underlying `cosets`.
    pub fn new(base: AlgebraRef, cosets: CosetSpace) -> Result<InducedAlgebra> {
        let act = base.require_action()?;
        same_group(act.group(), cosets.subgroup().group())?;
        let ring = base.ring().clone();
        let d = base.dim();
        let n = cosets.len();
        let g = cosets.parent().clone();
        let basis = (0..n)
            .flat_map(|c| {
                let r = g.name(cosets.rep(c)).to_string();
                base.basis().iter().map(move |a| format!("xi({r},{a})"))
            })
            .collect();
        let mut products = Vec::new();
        for c in 0..n {
            for ((i, j), v) in base.products() {
                products.push(((c * d + i, c * d + j), v.map_indices(&ring, |k| c * d + k)));
            }
        }
        let unit = base.unit().map(|u| {
            let mut out = SparseVec::new();
            for c in 0..n {
                out.add_scaled(&ring, &ring.one(), &u.map_indices(&ring, |k| c * d + k));
            }
            out
        });
        let name = format!("Ind({})", paren(base.name()));
        let alg = Algebra::build(name, ring, basis, products, unit, &budget())?;
        let mut ind = InducedAlgebra { cosets, base, alg: Arc::new(alg) };
        let matrices = g
            .elements()
            .map(|s| {
                let cols = (0..n * d)
                    .map(|k| ind.xi(g.mul(s, ind.cosets.rep(k / d)), &SparseVec::unit(k % d)))
                    .collect();
                Matrix::from_columns(n * d, cols)
            })
            .collect::<Result<Vec<_>>>()?;
        let action = GAction::new(g, matrices)?;
        let alg = Arc::unwrap_or_clone(ind.alg).with_action(action, &budget())?;
        ind.alg = Arc::new(alg);
        Ok(ind)
    }

    pub fn cosets(&self) -> &CosetSpace {
        &self.cosets
    }

    pub fn group(&self) -> &GroupRef {
        self.cosets.parent()
    }

    pub fn base(&self) -> &AlgebraRef {
        &self.base
    }

    pub fn algebra(&self) -> &AlgebraRef {
        &self.alg
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    fn act_sub(&self, h: usize, a: &SparseVec) -> SparseVec {
        let local = self.cosets.subgroup().local_index(h).expect("element of the subgroup");
        let act = self.base.action().expect("base action");
        act.apply(self.base.ring(), local, a)
    }

    /// `xi(g, a)` in normal form: with `g = r h`, this is `xi(r, h.a)`.
    pub fn xi(&self, g: usize, a: &SparseVec) -> SparseVec {
        let (c, h) = self.cosets.decompose(g);
        let d = self.base.dim();
        self.act_sub(h, a).map_indices(self.base.ring(), |k| c * d + k)
    }

    /// The defining formula `xi(g, a) = sum_h chi_{gh} h^-1(a)` as a
    /// function on `G`, one vector of `A` per group element.
    pub fn xi_function(&self, g: usize, a: &SparseVec) -> Vec<SparseVec> {
        let grp = self.group();
        let mut f = vec![SparseVec::new(); grp.order()];
        for &h in self.cosets.subgroup().members() {
            f[grp.mul(g, h)] = self.act_sub(grp.inv(h), a);
        }
        f
    }

    /// An element in normal form as a function `G -> A`.
    pub fn as_function(&self, v: &SparseVec) -> Vec<SparseVec> {
        let ring = self.base.ring();
        let d = self.base.dim();
        let mut f = vec![SparseVec::new(); self.group().order()];
        for (k, x) in v.iter() {
            let part = self.xi_function(self.cosets.rep(k / d), &SparseVec::unit(k % d));
            for (slot, y) in f.iter_mut().zip(part) {
                slot.add_scaled(ring, x, &y);
            }
        }
        f
    }

    /// Expansion `f = sum_r xi(r, f(r))` of a function back into normal form.
    pub fn from_function(&self, f: &[SparseVec]) -> SparseVec {
        let ring = self.base.ring();
        let mut out = SparseVec::new();
        for c in 0..self.cosets.len() {
            let r = self.cosets.rep(c);
            out.add_scaled(ring, &ring.one(), &self.xi(r, &f[r]));
        }
        out
    }

    /// Checks, on every basis vector, group generator and subgroup element:
    /// the function model satisfies `f(s) = h(f(sh))`; the expansion over
    /// representatives recovers every function; products and the action
    /// agree with the pointwise product and `(g.f)(s) = f(g^-1 s)`;
    /// `s.xi(g,a) = xi(sg,a)`; `xi(gh, h^-1 a) = xi(g, a)`; and
    /// `xi(g,a) xi(g',a')` equals `xi(g', (g'^-1 g)(a) a')` when
    /// `g'^-1 g` lies in `H` and vanishes otherwise.
    pub fn validate_relations(&self, budget: &CheckBudget) -> Result<Verdict> {
        let grp = self.group().clone();
        let sub = self.cosets.subgroup();
        let ring = self.base.ring();
        let d = self.base.dim();
        let act = self.alg.require_action()?;
        let funcs: Vec<Vec<SparseVec>> =
            (0..self.dim()).map(|k| self.as_function(&SparseVec::unit(k))).collect();
        for (k, f) in funcs.iter().enumerate() {
            for s in grp.elements() {
                for &h in sub.members() {
                    if f[s] != self.act_sub(h, &f[grp.mul(s, h)]) {
                        return Ok(Err(Violation::Other(format!(
                            "basis {} is not H-equivariant as a function at s={}, h={}",
                            self.alg.label(k),
                            grp.name(s),
                            grp.name(h)
                        ))));
                    }
                }
            }
            if self.from_function(f) != SparseVec::unit(k) {
                return Ok(Err(Violation::Other(format!(
                    "expansion over representatives fails for {}",
                    self.alg.label(k)
                ))));
            }
        }
        for (i, j) in budget.pairs(self.dim(), self.dim()) {
            let prod = self.alg.mul(&SparseVec::unit(i), &SparseVec::unit(j));
            let pointwise: Vec<SparseVec> =
                funcs[i].iter().zip(&funcs[j]).map(|(x, y)| self.base.mul(x, y)).collect();
            if self.as_function(&prod) != pointwise {
                return Ok(Err(Violation::ProductMismatch { left: i, right: j, coeff: None }));
            }
        }
        for s in grp.generators() {
            let s_inv = grp.inv(s);
            for (k, f) in funcs.iter().enumerate() {
                let moved = self.as_function(&act.apply(ring, s, &SparseVec::unit(k)));
                let expected: Vec<SparseVec> =
                    grp.elements().map(|x| f[grp.mul(s_inv, x)].clone()).collect();
                if moved != expected {
                    return Ok(Err(Violation::NotEquivariant {
                        group_element: grp.name(s).to_string(),
                        basis: k,
                    }));
                }
            }
            for g in grp.elements() {
                for i in 0..d {
                    let a = SparseVec::unit(i);
                    if act.apply(ring, s, &self.xi(g, &a)) != self.xi(grp.mul(s, g), &a) {
                        return Ok(Err(Violation::Other(format!(
                            "{}.xi({},{}) != xi({},{})",
                            grp.name(s),
                            grp.name(g),
                            self.base.label(i),
                            grp.name(grp.mul(s, g)),
                            self.base.label(i)
                        ))));
                    }
                }
            }
        }
        for g in grp.elements() {
            for &h in sub.members() {
                for i in 0..d {
                    let a = SparseVec::unit(i);
                    let moved = self.act_sub(grp.inv(h), &a);
                    let gh = grp.mul(g, h);
                    if self.xi(gh, &moved) != self.xi(g, &a)
                        || self.xi_function(gh, &moved) != self.xi_function(g, &a)
                    {
                        return Ok(Err(Violation::Other(format!(
                            "xi({},{}) is not xi({}, {}^-1.{})",
                            grp.name(g),
                            self.base.label(i),
                            grp.name(gh),
                            grp.name(h),
                            self.base.label(i)
                        ))));
                    }
                }
            }
        }
        let n = grp.order();
        for (x, y) in budget.pairs(n * d, n * d) {
            let (g, i) = (x / d, x % d);
            let (g2, j) = (y / d, y % d);
            let (a, a2) = (SparseVec::unit(i), SparseVec::unit(j));
            let lhs = self.alg.mul(&self.xi(g, &a), &self.xi(g2, &a2));
            let between = grp.mul(grp.inv(g2), g);
            let rhs = if sub.contains(between) {
                self.xi(g2, &self.base.mul(&self.act_sub(between, &a), &a2))
            } else {
                SparseVec::new()
            };
            if lhs != rhs {
                return Ok(Err(Violation::Other(format!(
                    "xi({},{}) xi({},{}) has the wrong value",
                    grp.name(g),
                    self.base.label(i),
                    grp.name(g2),
                    self.base.label(j)
                ))));
            }
        }
        Ok(Ok(()))
    }

    /// Rebuilds over another pointed section and checks that
    /// `xi(r, a) -> xi(r, a)` (renormalized) is an equivariant unital
    /// isomorphism that preserves the function model.
    pub fn section_independence(&self, reps: &[usize], budget: &CheckBudget) -> Result<Verdict> {
        let cosets = CosetSpace::with_section(self.cosets.subgroup().clone(), reps)?;
        let other = InducedAlgebra::new(self.base.clone(), cosets)?;
        let d = self.base.dim();
        let map = LinearMap::from_fn(self.alg.clone(), other.alg.clone(), |k| {
            other.xi(self.cosets.rep(k / d), &SparseVec::unit(k % d))
        })?;
        for k in 0..self.dim() {
            if other.as_function(map.image(k)) != self.as_function(&SparseVec::unit(k)) {
                return Ok(Err(Violation::Other(format!(
                    "relabeling changes the function of {}",
                    self.alg.label(k)
                ))));
            }
        }
        if !map.is_isomorphism()? {
            return Ok(Err(Violation::Other("relabeling is not bijective".into())));
        }
        if let Err(v) = map.is_homomorphism(budget, true)? {
            return Ok(Err(v));
        }
        map.is_equivariant()
    }

    /// A second pointed section: the largest element of every coset
    /// other than `H`.
    pub fn alternate_section(&self) -> Vec<usize> {
        let e = self.group().identity();
        self.cosets
            .cosets()
            .iter()
            .map(|coset| if coset.contains(&e) { e } else { *coset.iter().max().unwrap() })
            .collect()
    }

    fn same_cosets(&self, other: &InducedAlgebra) -> Result<()> {
        if self.cosets != other.cosets {
            return Err(Error::ShapeMismatch("induced algebras over different sections".into()));
        }
        Ok(())
    }
}

/// `Ind(f): xi(r, a) -> xi(r, f(a))`.
pub fn induce_map(f: &LinearMap, source: &InducedAlgebra, target: &InducedAlgebra) -> Result<LinearMap> {
    source.same_cosets(target)?;
    if f.source().dim() != source.base.dim() || f.target().dim() != target.base.dim() {
        return Err(Error::ShapeMismatch("map does not match the induced bases".into()));
    }
    let ring = f.ring().clone();
    let (d, e) = (source.base.dim(), target.base.dim());
    LinearMap::from_fn(source.alg.clone(), target.alg.clone(), |k| {
        let c = k / d;
        f.image(k % d).map_indices(&ring, |j| c * e + j)
    })
}

/// `l^(G/H)` with `g . chi_{xH} = chi_{gxH}`.
pub fn coset_functions(ring: &ScalarRing, cosets: &CosetSpace) -> Result<AlgebraRef> {
    let alg = Arc::unwrap_or_clone(function_algebra(ring, &cosets.labels())).with_name("l^(G/H)");
    let space = cosets.clone();
    let action =
        GAction::permutation(cosets.parent().clone(), cosets.len(), move |g, c| space.translate(g, c));
    Ok(Arc::new(alg.with_action(action, &budget())?))
}

/// `M_{G/H}` with `g . e_{xH,yH} = e_{gxH,gyH}`.
pub fn coset_matrix_units(ring: &ScalarRing, cosets: &CosetSpace) -> Result<AlgebraRef> {
    let n = cosets.len();
    let alg = Arc::unwrap_or_clone(matrix_units(ring, &cosets.labels())).with_name("M_{G/H}");
    let space = cosets.clone();
    let action = GAction::permutation(cosets.parent().clone(), n * n, move |g, k| {
        space.translate(g, k / n) * n + space.translate(g, k % n)
    });
    Ok(Arc::new(alg.with_action(action, &budget())?))
}

/// The isomorphisms `Ind(B ⊗ Res A) <-> Ind(B) ⊗ A`:
/// `forward(xi(g, b⊗a)) = xi(g,b) ⊗ g.a` and
/// `backward(xi(g,b) ⊗ a) = xi(g, b ⊗ g^-1.a)`.
#[derive(Clone, Debug)]
pub struct ProjectionIsos {
    pub induced_tensor: InducedAlgebra,
    pub induced_base: InducedAlgebra,
    pub tensor_induced: AlgebraRef,
    pub forward: LinearMap,
    pub backward: LinearMap,
}

/// `b` is an `H`-algebra and `a` a `G`-algebra.
pub fn projection_isos(b: &AlgebraRef, a: &AlgebraRef, cosets: &CosetSpace) -> Result<ProjectionIsos> {
    let res_a = restrict(a, cosets.subgroup())?;
    let induced_tensor = InducedAlgebra::new(tensor(b, &res_a)?, cosets.clone())?;
    let induced_base = InducedAlgebra::new(b.clone(), cosets.clone())?;
    let tensor_induced = tensor(&induced_base.alg, a)?;
    let act = a.require_action()?;
    let grp = cosets.parent();
    let ring = a.ring().clone();
    let (db, da) = (b.dim(), a.dim());
    let forward = LinearMap::from_fn(induced_tensor.alg.clone(), tensor_induced.clone(), |k| {
        let (c, i, j) = (k / (db * da), (k / da) % db, k % da);
        let moved = act.apply(&ring, cosets.rep(c), &SparseVec::unit(j));
        moved.map_indices(&ring, |l| (c * db + i) * da + l)
    })?;
    let backward = LinearMap::from_fn(tensor_induced.clone(), induced_tensor.alg.clone(), |k| {
        let (ci, j) = (k / da, k % da);
        let (c, i) = (ci / db, ci % db);
        let moved = act.apply(&ring, grp.inv(cosets.rep(c)), &SparseVec::unit(j));
        moved.map_indices(&ring, |l| c * db * da + i * da + l)
    })?;
    Ok(ProjectionIsos { induced_tensor, induced_base, tensor_induced, forward, backward })
}

impl ProjectionIsos {
    /// Both maps are unital equivariant homomorphisms and mutually inverse.
    pub fn validate(&self, budget: &CheckBudget) -> Result<Verdict> {
        for f in [&self.forward, &self.backward] {
            if let Err(v) = f.is_homomorphism(budget, true)? {
                return Ok(Err(v));
            }
            if let Err(v) = f.is_equivariant()? {
                return Ok(Err(v));
            }
        }
        are_inverse(&self.forward, &self.backward)
    }
}

/// `Ind Res A -> l^(G/H) ⊗ A`, `xi(s, b) -> chi_{sH} ⊗ s.b`.
pub fn induced_restriction_iso(a: &AlgebraRef, cosets: &CosetSpace) -> Result<(InducedAlgebra, LinearMap)> {
    let ind = InducedAlgebra::new(restrict(a, cosets.subgroup())?, cosets.clone())?;
    let target = tensor(&*coset_functions(a.ring(), cosets)?, a)?;
    let act = a.require_action()?;
    let ring = a.ring().clone();
    let d = a.dim();
    let map = LinearMap::from_fn(ind.alg.clone(), target, |k| {
        let c = k / d;
        act.apply(&ring, cosets.rep(c), &SparseVec::unit(k % d)).map_indices(&ring, |l| c * d + l)
    })?;
    Ok((ind, map))
}

/// Homomorphism, equivariance and bijectivity of a candidate isomorphism.
pub fn check_isomorphism(map: &LinearMap, budget: &CheckBudget) -> Result<Verdict> {
    if let Err(v) = map.is_homomorphism(budget, true)? {
        return Ok(Err(v));
    }
    if let Err(v) = map.is_equivariant()? {
        return Ok(Err(v));
    }
    if !map.is_isomorphism()? {
        return Ok(Err(Violation::Other(format!("rank {} below dimension", map.rank()?))));
    }
    Ok(Ok(()))
}

/// `Ind Res A -> M_{G/H} ⊗ A`, `xi(s, b) -> e_{sH,sH} ⊗ s.b`.
pub fn counit_map(a: &AlgebraRef, cosets: &CosetSpace) -> Result<(InducedAlgebra, LinearMap)> {
    let ind = InducedAlgebra::new(restrict(a, cosets.subgroup())?, cosets.clone())?;
    let target = tensor(&*coset_matrix_units(a.ring(), cosets)?, a)?;
    let act = a.require_action()?;
    let ring = a.ring().clone();
    let (d, n) = (a.dim(), cosets.len());
    let map = LinearMap::from_fn(ind.alg.clone(), target, |k| {
        let c = k / d;
        act.apply(&ring, cosets.rep(c), &SparseVec::unit(k % d))
            .map_indices(&ring, |l| (c * n + c) * d + l)
    })?;
    Ok((ind, map))
}

/// `B -> Res Ind B`, `b -> xi(e, b)`.
pub fn unit_map(ind: &InducedAlgebra) -> Result<LinearMap> {
    let target = restrict(&ind.alg, ind.cosets.subgroup())?;
    let d = ind.base.dim();
    let c = ind.cosets.coset_of(ind.group().identity());
    LinearMap::from_fn(ind.base.clone(), target, |i| SparseVec::unit(c * d + i))
}

/// `B -> M_{G/H} ⊗ B`, `b -> e_{H,H} ⊗ b`, for an `H`-algebra `B`
/// (the matrix units carry the restricted translation action).
pub fn corner_embedding(b: &AlgebraRef, cosets: &CosetSpace) -> Result<LinearMap> {
    let units = restrict(&*coset_matrix_units(b.ring(), cosets)?, cosets.subgroup())?;
    let target = tensor(&units, b)?;
    let n = cosets.len();
    let c = cosets.coset_of(cosets.parent().identity());
    let d = b.dim();
    LinearMap::from_fn(b.clone(), target, |i| SparseVec::unit((c * n + c) * d + i))
}

/// The two sides of `Res(phi_A) ∘ psi_{Res A} = (a -> e_{H,H} ⊗ a)`.
#[derive(Clone, Debug)]
pub struct CompositePair {
    pub composite: LinearMap,
    pub expected: LinearMap,
}

impl CompositePair {
    pub fn verdict(&self) -> Result<Verdict> {
        self.composite.agrees_with(&self.expected)
    }
}

pub fn unit_counit_composite(a: &AlgebraRef, cosets: &CosetSpace) -> Result<CompositePair> {
    let sub = cosets.subgroup();
    let (ind, phi) = counit_map(a, cosets)?;
    let psi = unit_map(&ind)?;
    let res_phi = phi.retarget(psi.target(), &restrict(phi.target(), sub)?)?;
    let composite = res_phi.compose(&psi)?;
    let expected = corner_embedding(ind.base(), cosets)?;
    let expected = expected.retarget(composite.source(), composite.target())?;
    Ok(CompositePair { composite, expected })
}

/// `Ind(theta)` carried into `M_{G/H} ⊗ Ind B` through the projection
/// isomorphism, against `gamma: xi(g,b) -> e_{gH,gH} ⊗ xi(g,b)`.
pub fn induced_corner_composite(b: &AlgebraRef, cosets: &CosetSpace) -> Result<CompositePair> {
    let units = coset_matrix_units(b.ring(), cosets)?;
    let theta = corner_embedding(b, cosets)?;
    let ind_b = InducedAlgebra::new(b.clone(), cosets.clone())?;
    let ind_mb = InducedAlgebra::new(theta.target().clone(), cosets.clone())?;
    let ind_theta = induce_map(&theta, &ind_b, &ind_mb)?;
    let iso = projection_isos(b, &units, cosets)?;
    let (dm, db) = (units.dim(), b.dim());
    let inner_swap = swap_map(theta.target(), iso.induced_tensor.base(), dm, db)?;
    let ind_swap = induce_map(&inner_swap, &ind_mb, &iso.induced_tensor)?;
    let outer = tensor(&units, &ind_b.alg)?;
    let outer_swap = swap_map(&iso.tensor_induced, &outer, ind_b.dim(), dm)?;
    let composite = outer_swap.compose(&iso.forward.compose(&ind_swap.compose(&ind_theta)?)?)?;
    let n = cosets.len();
    let di = ind_b.dim();
    let gamma = LinearMap::from_fn(ind_b.alg.clone(), outer, |k| {
        let c = k / db;
        SparseVec::unit((c * n + c) * di + k)
    })?;
    Ok(CompositePair { composite, expected: gamma })
}

/// `Ind_{e}^{G} l` against `(lG)*` with translation, matching `xi(g,1)`
/// with `chi_g`.
pub fn regular_induction_check(ring: &ScalarRing, group: &GroupRef) -> Result<Verdict> {
    let sub = Subgroup::trivial(group.clone());
    let l = with_trivial_action(&scalar_algebra(ring), sub.group())?;
    let ind = InducedAlgebra::new(l, CosetSpace::new(sub))?;
    let dual = dual_group_algebra(ring, group)?;
    let map = LinearMap::from_fn(ind.alg.clone(), dual, |c| SparseVec::unit(ind.cosets.rep(c)))?;
    check_isomorphism(&map, &budget())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{matrix2, sum_swap_algebra};
    use crate::group::FiniteGroup;

    fn q() -> ScalarRing {
        ScalarRing::Rationals
    }

    fn c2() -> GroupRef {
        Arc::new(FiniteGroup::cyclic(2))
    }

    fn s3() -> GroupRef {
        Arc::new(FiniteGroup::symmetric3())
    }

    fn c3_in_s3() -> CosetSpace {
        let g = s3();
        let names = ["e", "(123)", "(132)"].map(String::from);
        CosetSpace::new(Subgroup::from_names(g, &names).unwrap())
    }

    fn trivial_line(cosets: &CosetSpace) -> AlgebraRef {
        with_trivial_action(&scalar_algebra(&q()), cosets.subgroup().group()).unwrap()
    }

    #[test]
    fn induction_from_trivial_subgroup_of_c2() {
        let cosets = CosetSpace::new(Subgroup::trivial(c2()));
        let ind = InducedAlgebra::new(trivial_line(&cosets), cosets).unwrap();
        assert_eq!(ind.dim(), 2);
        let one = SparseVec::unit(0);
        let (xe, xs) = (ind.xi(0, &one), ind.xi(1, &one));
        assert!(ind.algebra().mul(&xe, &xs).is_zero());
        let act = ind.algebra().action().unwrap();
        assert_eq!(act.apply(&q(), 1, &xe), xs);
        assert_eq!(ind.validate_relations(&budget()).unwrap(), Ok(()));
    }

    #[test]
    fn induction_from_the_whole_group_is_the_algebra() {
        let g = c2();
        let a = sum_swap_algebra(&q(), &g).unwrap();
        let cosets = CosetSpace::new(Subgroup::whole(g));
        let res = restrict(&a, cosets.subgroup()).unwrap();
        let ind = InducedAlgebra::new(res, cosets).unwrap();
        assert_eq!(ind.dim(), a.dim());
        assert!(ind.algebra().isomorphic_via(&a, &[0, 1]));
        assert_eq!(ind.validate_relations(&budget()).unwrap(), Ok(()));
    }

    #[test]
    fn s3_over_c3_relations_and_section_change() {
        let cosets = c3_in_s3();
        assert_eq!(cosets.len(), 2);
        let a = dual_group_algebra(&q(), &s3()).unwrap();
        let ind = InducedAlgebra::new(restrict(&a, cosets.subgroup()).unwrap(), cosets).unwrap();
        assert_eq!(ind.dim(), 12);
        assert_eq!(ind.validate_relations(&budget()).unwrap(), Ok(()));
        let reps = ind.alternate_section();
        assert_ne!(reps, ind.cosets().reps());
        assert_eq!(ind.section_independence(&reps, &budget()).unwrap(), Ok(()));
    }

    #[test]
    fn normal_subgroup_acts_trivially_on_its_cosets() {
        let cosets = c3_in_s3();
        let funcs = coset_functions(&q(), &cosets).unwrap();
        let res = restrict(&funcs, cosets.subgroup()).unwrap();
        assert!(res.action().unwrap().is_trivial());
        assert!(!funcs.action().unwrap().is_trivial());
    }

    #[test]
    fn projection_isos_on_c2() {
        let g = c2();
        let cosets = CosetSpace::new(Subgroup::trivial(g.clone()));
        let b = trivial_line(&cosets);
        let a = dual_group_algebra(&q(), &g).unwrap();
        let iso = projection_isos(&b, &a, &cosets).unwrap();
        assert_eq!(iso.validate(&budget()).unwrap(), Ok(()));
        let k = iso.induced_tensor.algebra().index_of("xi(s,1⊗chi_e)").unwrap();
        assert_eq!(iso.forward.format_image(k), "xi(s,1)⊗chi_s");
    }

    #[test]
    fn projection_isos_over_s3() {
        let cosets = c3_in_s3();
        let b = restrict(&sum_swap_algebra(&q(), &s3()).unwrap(), cosets.subgroup()).unwrap();
        let a = dual_group_algebra(&q(), &s3()).unwrap();
        let iso = projection_isos(&b, &a, &cosets).unwrap();
        assert_eq!(iso.validate(&budget()).unwrap(), Ok(()));
    }

    #[test]
    fn induced_restriction_isomorphism() {
        let g = c2();
        let a = with_trivial_action(&scalar_algebra(&q()), &g).unwrap();
        let cosets = CosetSpace::new(Subgroup::trivial(g));
        let (ind, map) = induced_restriction_iso(&a, &cosets).unwrap();
        let k = ind.algebra().index_of("xi(s,1)").unwrap();
        assert_eq!(map.format_image(k), "chi_sH⊗1");
        assert_eq!(check_isomorphism(&map, &budget()).unwrap(), Ok(()));

        let a = with_trivial_action(&scalar_algebra(&q()), &s3()).unwrap();
        let (_, map) = induced_restriction_iso(&a, &c3_in_s3()).unwrap();
        assert_eq!(map.rank().unwrap(), 2);
        assert_eq!(check_isomorphism(&map, &budget()).unwrap(), Ok(()));
    }

    #[test]
    fn unit_and_counit_maps() {
        let g = c2();
        let cosets = CosetSpace::new(Subgroup::trivial(g.clone()));
        let a = dual_group_algebra(&q(), &g).unwrap();
        let (ind, phi) = counit_map(&a, &cosets).unwrap();
        assert_eq!(phi.is_homomorphism(&budget(), false).unwrap(), Ok(()));
        assert_eq!(phi.is_equivariant().unwrap(), Ok(()));
        let k = ind.algebra().index_of("xi(s,chi_e)").unwrap();
        assert_eq!(phi.format_image(k), "e_{sH,sH}⊗chi_s");

        let b = InducedAlgebra::new(trivial_line(&cosets), cosets).unwrap();
        let psi = unit_map(&b).unwrap();
        assert_eq!(psi.format_image(0), "xi(e,1)");
        assert_eq!(psi.is_homomorphism(&budget(), false).unwrap(), Ok(()));
        assert_eq!(psi.is_equivariant().unwrap(), Ok(()));
    }

    #[test]
    fn composite_identities() {
        let spaces = [
            CosetSpace::new(Subgroup::trivial(c2())),
            c3_in_s3(),
            CosetSpace::new(Subgroup::trivial(s3())),
            CosetSpace::new(Subgroup::whole(s3())),
        ];
        for cosets in spaces {
            let g = cosets.parent().clone();
            let m2 = with_trivial_action(&matrix2(&q()), &g).unwrap();
            let a = tensor(&m2, &dual_group_algebra(&q(), &g).unwrap()).unwrap();
            let first = unit_counit_composite(&a, &cosets).unwrap();
            assert_eq!(first.verdict().unwrap(), Ok(()), "{}", g);
            let b = restrict(&a, cosets.subgroup()).unwrap();
            let second = induced_corner_composite(&b, &cosets).unwrap();
            assert_eq!(second.verdict().unwrap(), Ok(()), "{}", g);
        }
    }

    #[test]
    fn regular_induction_matches_dual_group_algebra() {
        for g in [c2(), s3(), Arc::new(FiniteGroup::cyclic(4))] {
            assert_eq!(regular_induction_check(&q(), &g).unwrap(), Ok(()));
        }
    }
}
