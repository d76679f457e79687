//! Crossed products `A ⋊ G`, smash products `G ⋊̂ B`, the maps relating
//! them to matrix algebras (Green-Julg, Baaj-Skandalis), and small
//! invariant-idempotent computations.

use std::sync::Arc;

use crate::algebra::{Algebra, AlgebraRef};
use crate::check::{Verdict, Violation};
use crate::construct::{
    budget, matrix_algebra, paren, swap_map, tensor, unitalization, with_trivial_action,
};
use crate::equivariance::{
    endf, finite_group_corner_maps, mg_algebra, mg_graded_algebra, GAction, GGrading,
    GModuleWithBasis,
};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupRef};
use crate::linalg::{Matrix, SparseVec};
use crate::map::LinearMap;
use crate::scalar::{Scalar, ScalarRing};

/// `A ⋊ G` on the basis `a_i ⋊ g` (index `i * |G| + g`), with
/// `(a ⋊ g)(b ⋊ h) = a (g.b) ⋊ gh`, graded by the group coordinate.
pub fn crossed_product(a: &Algebra) -> Result<AlgebraRef> {
    let act = a.require_action()?;
    let g = act.group().clone();
    let n = g.order();
    let ring = a.ring().clone();
    let basis = a
        .basis()
        .iter()
        .flat_map(|x| g.names().iter().map(move |s| format!("{x}⋊{s}")))
        .collect();
    let mut products = Vec::new();
    for i in 0..a.dim() {
        for x in g.elements() {
            let m = act.matrix(x);
            for j in 0..a.dim() {
                let prod = a.mul(&SparseVec::unit(i), m.col(j));
                if prod.is_zero() {
                    continue;
                }
                for y in g.elements() {
                    let xy = g.mul(x, y);
                    products.push(((i * n + x, j * n + y), prod.map_indices(&ring, |k| k * n + xy)));
                }
            }
        }
    }
    let unit = a.unit().map(|u| u.map_indices(&ring, |k| k * n + g.identity()));
    let name = format!("{}⋊G", paren(a.name()));
    let mut alg = Algebra::build(name, ring, basis, products, unit, &budget())?;
    let degrees = (0..a.dim() * n).map(|k| k % n).collect();
    alg = alg.with_grading(GGrading::new(g, degrees)?)?;
    Ok(Arc::new(alg))
}

/// `f ⋊ G: a ⋊ g -> f(a) ⋊ g` between crossed products.
pub fn crossed_product_map(f: &LinearMap, source: &AlgebraRef, target: &AlgebraRef) -> Result<LinearMap> {
    let n = source.require_grading()?.group().order();
    if source.dim() != f.source().dim() * n || target.dim() != f.target().dim() * n {
        return Err(Error::ShapeMismatch("crossed products of the wrong size".into()));
    }
    let ring = f.ring().clone();
    LinearMap::from_fn(source.clone(), target.clone(), |k| {
        let (i, g) = (k / n, k % n);
        f.image(i).map_indices(&ring, |j| j * n + g)
    })
}

/// `G ⋊̂ B` on the basis `chi_g ⋊ b_i` (index `g * dim(B) + i`) with
/// `(chi_g ⋊ a)(chi_h ⋊ b) = chi_g ⋊ a_{g^-1 h} b` and the translation
/// action on the `chi` factor.
pub fn smash_product(b: &Algebra) -> Result<AlgebraRef> {
    let gr = b.require_grading()?;
    let g = gr.group().clone();
    let n = g.order();
    let d = b.dim();
    let ring = b.ring().clone();
    let basis = g
        .names()
        .iter()
        .flat_map(|s| b.basis().iter().map(move |x| format!("chi_{s}⋊{x}")))
        .collect();
    let mut products = Vec::new();
    for x in g.elements() {
        for ((i, j), v) in b.products() {
            // a = b_i is homogeneous, so a_{x^-1 h} is nonzero only for h = x|a|
            let h = g.mul(x, gr.degree(i));
            products.push(((x * d + i, h * d + j), v.map_indices(&ring, |k| x * d + k)));
        }
    }
    let unit = b.unit().map(|u| {
        let mut out = SparseVec::new();
        for x in g.elements() {
            out = out.add(&ring, &u.map_indices(&ring, |k| x * d + k));
        }
        out
    });
    let name = format!("G⋊̂{}", paren(b.name()));
    let alg = Algebra::build(name, ring, basis, products, unit, &budget())?;
    let gg = g.clone();
    let action = GAction::permutation(g, n * d, move |s, k| gg.mul(s, k / d) * d + k % d);
    Ok(Arc::new(alg.with_action(action, &budget())?))
}

/// `phi: (A ⋊ G) ⊗ End(W) -> (A ⊗ End(W)) ⋊ G` and its inverse `psi`,
/// `phi(a ⋊ g ⊗ f) = a ⊗ f rho(g^-1) ⋊ g`, `psi(a ⊗ f ⋊ g) = a ⋊ g ⊗ f rho(g)`.
#[derive(Clone, Debug)]
pub struct CrossedStabilization {
    pub phi: LinearMap,
    pub psi: LinearMap,
}

pub fn crossed_stabilization_maps(a: &Algebra, w: &GModuleWithBasis) -> Result<CrossedStabilization> {
    let act = a.require_action()?;
    crate::equivariance::same_group(act.group(), w.group())?;
    let g = w.group().clone();
    let n = g.order();
    let m = w.dim();
    let end = endf(w)?;
    let plain_end = Arc::new((*end).clone().without_action());
    let source = tensor(&*crossed_product(a)?, &plain_end)?;
    let target = crossed_product(&*tensor(a, &end)?)?;
    // e_{v,w} rho(x) = sum_y rho(x)[w][y] e_{v,y}
    let times = |v: usize, col: usize, x: usize| -> Vec<(usize, Scalar)> {
        let rows = w.matrix(x).rows();
        rows[col].iter().map(|(y, c)| (v * m + y, c.clone())).collect()
    };
    let mm = m * m;
    let phi = LinearMap::from_fn(source.clone(), target.clone(), |k| {
        let (ig, f) = (k / mm, k % mm);
        let (i, x) = (ig / n, ig % n);
        let (v, col) = (f / m, f % m);
        SparseVec::from_entries(
            times(v, col, g.inv(x)).into_iter().map(|(f2, c)| (((i * mm + f2) * n + x), c)),
        )
    })?;
    let psi = LinearMap::from_fn(target, source, |k| {
        let (jf, x) = (k / n, k % n);
        let (i, f) = (jf / mm, jf % mm);
        let (v, col) = (f / m, f % m);
        SparseVec::from_entries(times(v, col, x).into_iter().map(|(f2, c)| ((i * n + x) * mm + f2, c)))
    })?;
    Ok(CrossedStabilization { phi, psi })
}

/// `alpha_A: A -> A^τ ⋊ G`, `a -> (1/n) sum_g a ⋊ g`.
pub fn green_julg_alpha(a: &Algebra, group: &GroupRef) -> Result<LinearMap> {
    let ring = a.ring().clone();
    let n = group.order();
    let inv_n = ring.inv_int(n).ok_or_else(|| Error::OrderNotInvertible(n, ring.to_string()))?;
    let source = Arc::new(a.clone());
    let target = crossed_product(&*with_trivial_action(a, group)?)?;
    LinearMap::from_fn(source, target, |i| {
        SparseVec::from_entries(group.elements().map(|g| (i * n + g, inv_n.clone())))
    })
}

/// `beta_B: (B ⋊ G)^τ -> M_G B`, `b ⋊ g -> sum_s e_{s,sg} ⊗ s(b)`.
pub fn green_julg_beta(b: &Algebra) -> Result<LinearMap> {
    let act = b.require_action()?;
    let g = act.group().clone();
    let n = g.order();
    let d = b.dim();
    let ring = b.ring().clone();
    let source = with_trivial_action(&*crossed_product(b)?, &g)?;
    let target = mg_algebra(b)?;
    LinearMap::from_fn(source, target, |k| {
        let (i, x) = (k / n, k % n);
        let mut out = SparseVec::new();
        for s in g.elements() {
            let st = s * n + g.mul(s, x);
            out = out.add(&ring, &act.matrix(s).col(i).map_indices(&ring, |j| st * d + j));
        }
        out
    })
}

/// `beta_{A^τ} ∘ alpha_{A^τ}` next to `iota_bar ⊗ id_A` (after `A = l ⊗ A`);
/// both as maps `A -> M_G A^τ`.
pub fn green_julg_composite(a: &Algebra, group: &GroupRef) -> Result<(LinearMap, LinearMap)> {
    let ring = a.ring().clone();
    let a_tau = with_trivial_action(a, group)?;
    let alpha = green_julg_alpha(&a_tau, group)?;
    let beta = green_julg_beta(&a_tau)?;
    let composite = beta.compose(&alpha.retarget(alpha.source(), beta.source())?)?;
    let corner = finite_group_corner_maps(&ring, group)?;
    let expected = corner.iota_bar.matrix().kronecker(&ring, &Matrix::identity(a.dim()));
    let expected = LinearMap::new(composite.source().clone(), composite.target().clone(), expected)?;
    Ok((composite, expected))
}

pub fn green_julg_composite_check(a: &Algebra, group: &GroupRef) -> Result<Verdict> {
    let (composite, expected) = green_julg_composite(a, group)?;
    composite.agrees_with(&expected)
}

/// Both sides of the conjugation identity in `M_G(B̃ ⋊ G)`, one column per
/// basis element `b ⋊ g` of `B ⋊ G`:
/// `psi ∘ (beta_B ⋊ G) ∘ alpha_{B⋊G}` and `T A_{b⋊g} T^-1` with
/// `A_{b⋊g} = (1/n) sum_{s,t} (b ⋊ g) e_{s,t}` and `T = sum_t (1 ⋊ t) e_{t,t}`.
#[derive(Clone, Debug)]
pub struct ConjugationSides {
    pub via_maps: LinearMap,
    pub via_matrices: LinearMap,
}

pub fn green_julg_conjugation(b: &Algebra) -> Result<ConjugationSides> {
    let act = b.require_action()?;
    let g = act.group().clone();
    let n = g.order();
    let ring = b.ring().clone();
    let inv_n = ring.inv_int(n).ok_or_else(|| Error::OrderNotInvertible(n, ring.to_string()))?;
    let bg = crossed_product(b)?;
    let d = b.dim();
    let dbg = bg.dim();

    // alpha_{B⋊G}: B⋊G -> (B⋊G)^τ ⋊ G
    let alpha = green_julg_alpha(&bg, &g)?;
    // beta_B ⋊ G: (B⋊G)^τ ⋊ G -> (M_G B) ⋊ G
    let beta = green_julg_beta(b)?;
    let mgb_g = crossed_product(beta.target())?;
    let beta_g = crossed_product_map(&beta, alpha.target(), &mgb_g)?;
    // (M_G ⊗ B) ⋊ G -> (B ⊗ M_G) ⋊ G
    let regular = GModuleWithBasis::regular(&ring, &g);
    let end = endf(&regular)?;
    let b_mg = tensor(b, &end)?;
    let flip = swap_map(beta.target(), &b_mg, n * n, d)?;
    let b_mg_g = crossed_product(&b_mg)?;
    let flip_g = crossed_product_map(&flip, &mgb_g, &b_mg_g)?;
    // psi: (B ⊗ M_G) ⋊ G -> (B ⋊ G) ⊗ M_G
    let stab = crossed_stabilization_maps(b, &regular)?;
    let psi = stab.psi.retarget(&b_mg_g, stab.psi.target())?;
    // (B ⋊ G) ⊗ M_G -> M_G ⊗ (B ⋊ G) -> M_G ⊗ (B̃ ⋊ G)
    let bt = unitalization(b)?;
    let bt_g = crossed_product(&bt)?;
    let mg_btg = matrix_algebra(g.names(), &bt_g)?;
    let mg_bg = matrix_algebra(g.names(), &bg)?;
    let flip_back = swap_map(psi.target(), &mg_bg, dbg, n * n)?;
    let embed = LinearMap::from_fn(mg_bg.clone(), mg_btg.clone(), |k| {
        let (st, x) = (k / dbg, k % dbg);
        let (i, h) = (x / n, x % n);
        SparseVec::unit(st * bt_g.dim() + (i + 1) * n + h)
    })?;
    let mut via_maps = alpha.clone();
    for next in [&beta_g, &flip_g, &psi, &flip_back, &embed] {
        via_maps = next.compose(&via_maps.retarget(via_maps.source(), next.source())?)?;
    }

    // T, T^-1 and A_{b⋊g} computed by multiplication in M_G(B̃ ⋊ G)
    let dbt = bt_g.dim();
    let diag = |f: &dyn Fn(usize) -> usize| {
        SparseVec::from_entries(g.elements().map(|t| ((t * n + t) * dbt + f(t), ring.one())))
    };
    // 1 ⋊ t sits at index t of B̃ ⋊ G
    let t_mat = diag(&|t| t);
    let t_inv = diag(&|t| g.inv(t));
    if mg_btg.mul(&t_mat, &t_inv) != *mg_btg.unit().expect("unital") {
        return Err(Error::ShapeMismatch("T T^-1 is not the identity".into()));
    }
    let via_matrices = LinearMap::from_fn(bg.clone(), mg_btg.clone(), |k| {
        let (i, x) = (k / n, k % n);
        let bx = (i + 1) * n + x; // b ⋊ g inside B̃ ⋊ G
        let a_mat = SparseVec::from_entries(
            (0..n * n).map(|st| (st * dbt + bx, inv_n.clone())),
        );
        mg_btg.mul(&mg_btg.mul(&t_mat, &a_mat), &t_inv)
    })?;
    let via_maps = via_maps.retarget(&bg, &mg_btg)?;
    Ok(ConjugationSides { via_maps, via_matrices })
}

pub fn green_julg_conjugation_check(b: &Algebra) -> Result<Verdict> {
    let sides = green_julg_conjugation(b)?;
    sides.via_maps.agrees_with(&sides.via_matrices)
}

/// Every 0/1 combination of a pointwise basis (`b_i b_j = δ_ij b_i`) is an
/// idempotent; keep those fixed by the action.
pub fn invariant_idempotents(a: &Algebra) -> Result<Vec<SparseVec>> {
    let act = a.require_action()?;
    let d = a.dim();
    for i in 0..d {
        for j in 0..d {
            let expected = if i == j { SparseVec::unit(i) } else { SparseVec::new() };
            let got = a.product(i, j).cloned().unwrap_or_default();
            if got != expected {
                return Err(Error::NotPointwiseBasis(format!(
                    "{} * {} = {}",
                    a.label(i),
                    a.label(j),
                    a.format(&got)
                )));
            }
        }
    }
    if d > 20 {
        return Err(Error::NotPointwiseBasis(format!("dimension {d} is too large to enumerate")));
    }
    let ring = a.ring();
    let mut out = Vec::new();
    for mask in 0u32..(1 << d) {
        let v = SparseVec::from_entries((0..d).filter(|i| mask >> i & 1 == 1).map(|i| (i, ring.one())));
        debug_assert_eq!(a.mul(&v, &v), v);
        if act.group().elements().all(|g| act.apply(ring, g, &v) == v) {
            out.push(v);
        }
    }
    Ok(out)
}

/// `phi_lambda(1) = chi_e ⋊ e + lambda (chi_e ⋊ s)` in `(lC2)* ⋊ C2`.
pub fn phi_lambda(ring: &ScalarRing, lambda: &Scalar) -> Result<(AlgebraRef, SparseVec)> {
    let c2 = Arc::new(FiniteGroup::cyclic(2));
    let cross = crossed_product(&*crate::construct::dual_group_algebra(ring, &c2)?)?;
    let lambda = ring.reduce(lambda)?;
    let v = SparseVec::from_entries([(0, ring.one()), (1, lambda)]);
    Ok((cross, v))
}

/// `T: G ⋊̂ (A ⋊ G) -> M_G ⊗ A` and its inverse `S`, with
/// `T(chi_g ⋊ (a ⋊ s)) = e_{g,gs} ⊗ g.a`, `S(e_{r,t} ⊗ a) = chi_r ⋊ (r^-1.a ⋊ r^-1 t)`.
#[derive(Clone, Debug)]
pub struct DualityIsos {
    pub forward: LinearMap,
    pub backward: LinearMap,
}

pub fn baaj_skandalis_a(a: &Algebra) -> Result<DualityIsos> {
    let act = a.require_action()?;
    let g = act.group().clone();
    let n = g.order();
    let d = a.dim();
    let ring = a.ring().clone();
    let source = smash_product(&*crossed_product(a)?)?;
    let target = mg_algebra(a)?;
    let dn = d * n;
    let forward = LinearMap::from_fn(source.clone(), target.clone(), |k| {
        let (x, rest) = (k / dn, k % dn);
        let (i, s) = (rest / n, rest % n);
        let st = x * n + g.mul(x, s);
        act.matrix(x).col(i).map_indices(&ring, |j| st * d + j)
    })?;
    let backward = LinearMap::from_fn(target, source, |k| {
        let (rt, i) = (k / d, k % d);
        let (r, t) = (rt / n, rt % n);
        let ri = g.inv(r);
        let s = g.mul(ri, t);
        act.matrix(ri).col(i).map_indices(&ring, |j| r * dn + j * n + s)
    })?;
    Ok(DualityIsos { forward, backward })
}

/// `T: (G ⋊̂ B) ⋊ G -> M_G B` (graded by `s|b|t^-1`) and its inverse, with
/// `T(chi_h ⋊ b ⋊ s) = e_{h, s^-1 h |b|} ⊗ b` on homogeneous `b` and
/// `S(e_{r,s} ⊗ b_q) = chi_r ⋊ b_q ⋊ r q s^-1`.
pub fn baaj_skandalis_b(b: &Algebra) -> Result<DualityIsos> {
    let gr = b.require_grading()?;
    let g = gr.group().clone();
    let n = g.order();
    let d = b.dim();
    let source = crossed_product(&*smash_product(b)?)?;
    let target = mg_graded_algebra(b)?;
    let forward = LinearMap::from_fn(source.clone(), target.clone(), |k| {
        let (hi, s) = (k / n, k % n);
        let (h, i) = (hi / d, hi % d);
        let col = g.mul(g.mul(g.inv(s), h), gr.degree(i));
        SparseVec::unit((h * n + col) * d + i)
    })?;
    let backward = LinearMap::from_fn(target, source, |k| {
        let (rs, i) = (k / d, k % d);
        let (r, s) = (rs / n, rs % n);
        let x = g.mul(g.mul(r, gr.degree(i)), g.inv(s));
        SparseVec::unit((r * d + i) * n + x)
    })?;
    Ok(DualityIsos { forward, backward })
}

/// `B -> (G ⋊̂ B) ⋊ G`, `b -> chi_e ⋊ b ⋊ |b|` on homogeneous `b`.
pub fn graded_embedding(b: &Algebra) -> Result<LinearMap> {
    let gr = b.require_grading()?;
    let g = gr.group().clone();
    let n = g.order();
    let d = b.dim();
    let target = crossed_product(&*smash_product(b)?)?;
    let e = g.identity();
    LinearMap::from_fn(Arc::new(b.clone()), target, |i| SparseVec::unit((e * d + i) * n + gr.degree(i)))
}

/// Violations of `T` being an inverse pair of structure-respecting
/// homomorphisms.
pub fn check_duality(isos: &DualityIsos, budget: &crate::check::CheckBudget, graded: bool) -> Result<Verdict> {
    if let Err(v) = crate::map::are_inverse(&isos.forward, &isos.backward)? {
        return Ok(Err(v));
    }
    for f in [&isos.forward, &isos.backward] {
        if let Err(v) = f.is_homomorphism(budget, false)? {
            return Ok(Err(v));
        }
        let structure = if graded { f.is_homogeneous()? } else { f.is_equivariant()? };
        if let Err(v) = structure {
            return Ok(Err(v));
        }
    }
    Ok(Ok(()))
}

/// `e^2 = e` or a witness.
pub fn idempotent_verdict(alg: &Algebra, v: &SparseVec) -> Result<Verdict> {
    if alg.mul_checked(v, v)? == *v {
        Ok(Ok(()))
    } else {
        Ok(Err(Violation::Other(format!("{} is not idempotent", alg.format(v)))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::check::CheckBudget;
    use crate::construct::{
        dual_group_algebra, function_algebra, graded_group_algebra, matrix2, scalar_algebra,
        sum_swap_algebra,
    };

    fn q() -> ScalarRing {
        ScalarRing::Rationals
    }

    fn group(n: usize) -> GroupRef {
        Arc::new(FiniteGroup::cyclic(n))
    }

    fn l_tau(g: &GroupRef) -> AlgebraRef {
        with_trivial_action(&scalar_algebra(&q()), g).unwrap()
    }

    fn half() -> Scalar {
        Scalar::new(1.into(), 2.into())
    }

    #[test]
    fn crossed_product_of_swapped_sum() {
        let g = group(2);
        let a = sum_swap_algebra(&q(), &g).unwrap();
        let cp = crossed_product(&a).unwrap();
        let e1s = cp.index_of("(1,0)⋊s").unwrap();
        assert!(cp.mul(&SparseVec::unit(e1s), &SparseVec::unit(e1s)).is_zero());
        let cp = crossed_product(&l_tau(&g)).unwrap();
        let one_s = SparseVec::unit(cp.index_of("1⋊s").unwrap());
        assert_eq!(cp.mul(&one_s, &one_s), SparseVec::unit(cp.index_of("1⋊e").unwrap()));
    }

    #[test]
    fn smash_product_rule() {
        let g = group(2);
        let b = graded_group_algebra(&q(), &g).unwrap();
        let sp = smash_product(&b).unwrap();
        let idx = |s: &str| SparseVec::unit(sp.index_of(s).unwrap());
        assert_eq!(sp.mul(&idx("chi_e⋊d_s"), &idx("chi_s⋊d_e")), idx("chi_e⋊d_s"));
        assert!(sp.mul(&idx("chi_e⋊d_s"), &idx("chi_e⋊d_e")).is_zero());
        assert_eq!(sp.action().unwrap().apply(&q(), 1, &idx("chi_e⋊d_e")), idx("chi_s⋊d_e"));
    }

    #[test]
    fn alpha_and_beta_on_c2() {
        let g = group(2);
        let l = scalar_algebra(&q());
        let alpha = green_julg_alpha(&l, &g).unwrap();
        let img = alpha.image(0).clone();
        assert_eq!(img, SparseVec::from_entries([(0, half()), (1, half())]));
        assert_eq!(alpha.target().mul(&img, &img), img);
        let beta = green_julg_beta(&l_tau(&g)).unwrap();
        let t = beta.target();
        let one_s = beta.source().index_of("1⋊s").unwrap();
        let expected = SparseVec::from_entries([
            (t.index_of("e_{e,s}⊗1").unwrap(), Scalar::from_integer(1.into())),
            (t.index_of("e_{s,e}⊗1").unwrap(), Scalar::from_integer(1.into())),
        ]);
        assert_eq!(beta.image(one_s), &expected);
        assert_eq!(beta.image(0), t.unit().unwrap());
        assert_eq!(beta.is_homomorphism(&CheckBudget::default(), true).unwrap(), Ok(()));
        assert_eq!(beta.is_equivariant().unwrap(), Ok(()));
    }

    #[test]
    fn composite_and_conjugation_on_small_cases() {
        let g = group(2);
        assert_eq!(green_julg_composite_check(&matrix2(&q()), &g).unwrap(), Ok(()));
        assert_eq!(green_julg_conjugation_check(&l_tau(&g)).unwrap(), Ok(()));
        assert_eq!(green_julg_conjugation_check(&dual_group_algebra(&q(), &g).unwrap()).unwrap(), Ok(()));
        let z2 = ScalarRing::integers_mod(2).unwrap();
        let err = green_julg_composite_check(&scalar_algebra(&z2), &g).unwrap_err();
        assert_eq!(err.kind(), "OrderNotInvertible");
    }

    #[test]
    fn phi_psi_on_c2_regular() {
        let g = group(2);
        let w = GModuleWithBasis::regular(&q(), &g);
        let maps = crossed_stabilization_maps(&l_tau(&g), &w).unwrap();
        let src = maps.phi.source();
        let k = src.index_of("1⋊s⊗e_{e,e}").unwrap();
        let img = maps.phi.image(k);
        assert_eq!(maps.phi.target().format(img), "1⊗e_{e,s}⋊s");
        assert_eq!(crate::map::are_inverse(&maps.phi, &maps.psi).unwrap(), Ok(()));
        assert_eq!(maps.phi.is_homomorphism(&CheckBudget::default(), true).unwrap(), Ok(()));
        assert_eq!(maps.psi.is_homomorphism(&CheckBudget::default(), true).unwrap(), Ok(()));
    }

    #[test]
    fn counting_invariant_idempotents() {
        let c2 = group(2);
        assert_eq!(invariant_idempotents(&dual_group_algebra(&q(), &c2).unwrap()).unwrap().len(), 2);
        let c3 = group(3);
        assert_eq!(invariant_idempotents(&dual_group_algebra(&q(), &c3).unwrap()).unwrap().len(), 2);
        let pts = function_algebra(&q(), &["1".to_string(), "2".to_string()]);
        let triv = with_trivial_action(&pts, &c2).unwrap();
        assert_eq!(invariant_idempotents(&triv).unwrap().len(), 4);
        let err = invariant_idempotents(&matrix2(&q()).as_ref().clone().with_action(
            GAction::trivial(c2, 4),
            &CheckBudget::default(),
        ).unwrap())
        .unwrap_err();
        assert_eq!(err.kind(), "NotPointwiseBasis");
    }

    #[test]
    fn phi_lambda_is_idempotent() {
        for lambda in [0, 1, -1] {
            let (alg, v) = phi_lambda(&q(), &Scalar::from_integer(lambda.into())).unwrap();
            assert_eq!(idempotent_verdict(&alg, &v).unwrap(), Ok(()));
        }
        let (alg, v) = phi_lambda(&q(), &Scalar::new(7.into(), 3.into())).unwrap();
        assert_eq!(idempotent_verdict(&alg, &v).unwrap(), Ok(()));
    }

    #[test]
    fn duality_isomorphisms() {
        let g = group(2);
        let a = baaj_skandalis_a(&l_tau(&g)).unwrap();
        let k = a.forward.source().index_of("chi_s⋊1⋊e").unwrap();
        assert_eq!(a.forward.format_image(k), "e_{s,s}⊗1");
        let k = a.forward.source().index_of("chi_s⋊1⋊s").unwrap();
        assert_eq!(a.forward.format_image(k), "e_{s,e}⊗1");
        assert_eq!(check_duality(&a, &CheckBudget::default(), false).unwrap(), Ok(()));
        let b = baaj_skandalis_b(&graded_group_algebra(&q(), &g).unwrap()).unwrap();
        let k = b.forward.source().index_of("chi_e⋊d_s⋊s").unwrap();
        assert_eq!(b.forward.format_image(k), "e_{e,e}⊗d_s");
        assert_eq!(check_duality(&b, &CheckBudget::default(), true).unwrap(), Ok(()));
    }

    #[test]
    fn graded_embedding_of_group_algebra() {
        let g = group(2);
        let b = graded_group_algebra(&q(), &g).unwrap();
        let emb = graded_embedding(&b).unwrap();
        assert_eq!(emb.format_image(1), "chi_e⋊d_s⋊s");
        assert_eq!(emb.format_image(0), "chi_e⋊d_e⋊e");
        assert_eq!(emb.is_homomorphism(&CheckBudget::default(), false).unwrap(), Ok(()));
        assert_eq!(emb.is_homogeneous().unwrap(), Ok(()));
        assert!(emb.is_injective().unwrap());
    }
}
