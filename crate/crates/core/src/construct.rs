//! Standard algebras and the constructions that combine them.
//!
//! Tensor products index the pair `(i, j)` at `i * dim(B) + j` and label it
//! `"a⊗b"`. Group and dual group algebras use the labels `d_g` and `chi_g`.

use std::sync::Arc;

use crate::algebra::{Algebra, AlgebraRef, Filtration};
use crate::check::CheckBudget;
use crate::equivariance::{GAction, GGrading};
use crate::error::{Error, Result};
use crate::group::GroupRef;
use crate::linalg::{Matrix, SparseVec};
use crate::map::LinearMap;
use crate::scalar::ScalarRing;

pub(crate) fn budget() -> CheckBudget {
    CheckBudget::default()
}

fn ones(ring: &ScalarRing, indices: impl IntoIterator<Item = usize>) -> SparseVec {
    SparseVec::from_entries(indices.into_iter().map(|i| (i, ring.one())))
}

/// The base ring as a one-dimensional algebra with basis `1`.
pub fn scalar_algebra(ring: &ScalarRing) -> AlgebraRef {
    let alg = Algebra::new(
        "l",
        ring.clone(),
        vec!["1".into()],
        [((0, 0), SparseVec::unit(0))],
        Some(SparseVec::unit(0)),
    )
    .expect("scalar algebra");
    Arc::new(alg)
}

/// `lG` with basis `d_g`, `d_g d_h = d_gh`, unit `d_e`. No action or
/// grading attached.
pub fn group_algebra(ring: &ScalarRing, group: &GroupRef) -> AlgebraRef {
    let basis = group.names().iter().map(|g| format!("d_{g}")).collect();
    let products = group
        .elements()
        .flat_map(|a| group.elements().map(move |b| ((a, b), SparseVec::unit(group.mul(a, b)))));
    let alg = Algebra::new("lG", ring.clone(), basis, products, Some(SparseVec::unit(group.identity())))
        .expect("group algebra");
    Arc::new(alg)
}

/// `lG` graded by `|d_g| = g`.
pub fn graded_group_algebra(ring: &ScalarRing, group: &GroupRef) -> Result<AlgebraRef> {
    let alg = Arc::unwrap_or_clone(group_algebra(ring, group));
    let grading = GGrading::new(group.clone(), group.elements().collect())?;
    Ok(Arc::new(alg.with_grading(grading)?))
}

/// `lG` with the conjugation action `g . d_h = d_{g h g^-1}`.
pub fn conjugation_group_algebra(ring: &ScalarRing, group: &GroupRef) -> Result<AlgebraRef> {
    let alg = Arc::unwrap_or_clone(group_algebra(ring, group));
    let g = group.clone();
    let action = GAction::permutation(group.clone(), g.order(), |a, h| g.mul(g.mul(a, h), g.inv(a)));
    Ok(Arc::new(alg.with_action(action, &budget())?))
}

/// Pointwise algebra `l^(S)` on the characteristic functions `chi_s`.
pub fn function_algebra(ring: &ScalarRing, points: &[String]) -> AlgebraRef {
    let basis = points.iter().map(|s| format!("chi_{s}")).collect();
    let products = (0..points.len()).map(|i| ((i, i), SparseVec::unit(i)));
    let unit = (!points.is_empty()).then(|| ones(ring, 0..points.len()));
    Arc::new(Algebra::new("l^(S)", ring.clone(), basis, products, unit).expect("function algebra"))
}

/// `(lG)*`: functions on the group with translation action
/// `g . chi_h = chi_{gh}`.
pub fn dual_group_algebra(ring: &ScalarRing, group: &GroupRef) -> Result<AlgebraRef> {
    let alg = Arc::unwrap_or_clone(function_algebra(ring, group.names())).with_name("(lG)*");
    let g = group.clone();
    let action = GAction::permutation(group.clone(), g.order(), |a, h| g.mul(a, h));
    Ok(Arc::new(alg.with_action(action, &budget())?))
}

/// Matrix units `e_{s,t}` indexed by `labels`; `e_{s,t}` sits at
/// `s * n + t`.
pub fn matrix_units(ring: &ScalarRing, labels: &[String]) -> AlgebraRef {
    let n = labels.len();
    let basis = labels
        .iter()
        .flat_map(|s| labels.iter().map(move |t| format!("e_{{{s},{t}}}")))
        .collect();
    let products = (0..n).flat_map(move |s| {
        (0..n).flat_map(move |t| (0..n).map(move |v| ((s * n + t, t * n + v), SparseVec::unit(s * n + v))))
    });
    let unit = (n > 0).then(|| ones(ring, (0..n).map(|s| s * n + s)));
    let name = format!("M_{n}");
    Arc::new(Algebra::new(name, ring.clone(), basis, products, unit).expect("matrix units"))
}

fn check_rings(a: &Algebra, b: &Algebra) -> Result<()> {
    if a.ring() != b.ring() {
        return Err(Error::ScalarMismatch(a.ring().to_string(), b.ring().to_string()));
    }
    Ok(())
}

/// `A ⊗ B` with the diagonal action when both factors carry one, the
/// product grading when both are graded, and the filtration of whichever
/// factor is filtered.
pub fn tensor(a: &Algebra, b: &Algebra) -> Result<AlgebraRef> {
    check_rings(a, b)?;
    let ring = a.ring().clone();
    let db = b.dim();
    let basis = a
        .basis()
        .iter()
        .flat_map(|x| b.basis().iter().map(move |y| format!("{x}⊗{y}")))
        .collect();
    let mut products = Vec::new();
    for ((i, j), v) in a.products() {
        for ((k, l), w) in b.products() {
            products.push(((i * db + k, j * db + l), kron_vec(&ring, v, w, db)));
        }
    }
    let unit = match (a.unit(), b.unit()) {
        (Some(u), Some(w)) => Some(kron_vec(&ring, u, w, db)),
        _ => None,
    };
    let name = format!("{}⊗{}", paren(a.name()), paren(b.name()));
    let mut alg = Algebra::new(name, ring.clone(), basis, products, unit)?;
    alg.validate(&budget())?;
    if let (Some(x), Some(y)) = (a.action(), b.action()) {
        alg = alg.with_action(x.tensor(&ring, y)?, &budget())?;
    }
    if let (Some(x), Some(y)) = (a.grading(), b.grading()) {
        crate::equivariance::same_group(x.group(), y.group())?;
        let g = x.group();
        let degrees = x
            .degrees()
            .iter()
            .flat_map(|&s| y.degrees().iter().map(move |&t| g.mul(s, t)))
            .collect();
        alg = alg.with_grading(GGrading::new(g.clone(), degrees)?)?;
    }
    match (a.filtration(), b.filtration()) {
        (Some(f), None) => {
            let degrees = f.degrees.iter().flat_map(|&d| std::iter::repeat_n(d, db)).collect();
            alg = alg.with_filtration(Filtration { degrees, cap: f.cap })?;
        }
        (None, Some(f)) => {
            let degrees = (0..a.dim()).flat_map(|_| f.degrees.iter().copied()).collect();
            alg = alg.with_filtration(Filtration { degrees, cap: f.cap })?;
        }
        _ => {}
    }
    Ok(Arc::new(alg))
}

pub(crate) fn kron_vec(ring: &ScalarRing, v: &SparseVec, w: &SparseVec, dw: usize) -> SparseVec {
    let mut out = SparseVec::new();
    for (i, x) in v.iter() {
        for (j, y) in w.iter() {
            out.add_at(ring, i * dw + j, &ring.mul(x, y));
        }
    }
    out
}

pub(crate) fn paren(name: &str) -> String {
    if name.contains('⊗') || name.contains('⊕') || name.contains('⋊') {
        format!("({name})")
    } else {
        name.to_string()
    }
}

/// `A ⊕ B` with componentwise product; labels `(a,0)` and `(0,b)`.
pub fn direct_sum(a: &Algebra, b: &Algebra) -> Result<AlgebraRef> {
    check_rings(a, b)?;
    let ring = a.ring().clone();
    let shift = a.dim();
    let mut basis: Vec<String> = a.basis().iter().map(|x| format!("({x},0)")).collect();
    basis.extend(b.basis().iter().map(|y| format!("(0,{y})")));
    let mut products: Vec<((usize, usize), SparseVec)> =
        a.products().map(|(ij, v)| (ij, v.clone())).collect();
    products.extend(
        b.products().map(|((k, l), w)| ((k + shift, l + shift), w.map_indices(&ring, |i| i + shift))),
    );
    let unit = match (a.unit(), b.unit()) {
        (Some(u), Some(w)) => Some(u.add(&ring, &w.map_indices(&ring, |i| i + shift))),
        _ => None,
    };
    let name = format!("{}⊕{}", paren(a.name()), paren(b.name()));
    let mut alg = Algebra::new(name, ring, basis, products, unit)?;
    alg.validate(&budget())?;
    if let (Some(x), Some(y)) = (a.action(), b.action()) {
        alg = alg.with_action(x.direct_sum(y)?, &budget())?;
    }
    if let (Some(x), Some(y)) = (a.grading(), b.grading()) {
        crate::equivariance::same_group(x.group(), y.group())?;
        let degrees = x.degrees().iter().chain(y.degrees()).copied().collect();
        alg = alg.with_grading(GGrading::new(x.group().clone(), degrees)?)?;
    }
    let zeros = |n: usize| vec![0; n];
    let filtration = match (a.filtration(), b.filtration()) {
        (Some(f), None) => Some(Filtration { degrees: [f.degrees.clone(), zeros(b.dim())].concat(), cap: f.cap }),
        (None, Some(f)) => Some(Filtration { degrees: [zeros(a.dim()), f.degrees.clone()].concat(), cap: f.cap }),
        (Some(f), Some(h)) if f.cap == h.cap => {
            Some(Filtration { degrees: [f.degrees.clone(), h.degrees.clone()].concat(), cap: f.cap })
        }
        _ => None,
    };
    if let Some(f) = filtration {
        alg = alg.with_filtration(f)?;
    }
    Ok(Arc::new(alg))
}

/// `M_S A = M_S ⊗ A`; the matrix factor carries the trivial action and the
/// trivial grading, so `A`'s structures pass through.
pub fn matrix_algebra(labels: &[String], a: &Algebra) -> Result<AlgebraRef> {
    let mut units = Arc::unwrap_or_clone(matrix_units(a.ring(), labels));
    let dim = units.dim();
    if let Some(act) = a.action() {
        units = units.with_action(GAction::trivial(act.group().clone(), dim), &budget())?;
    }
    if let Some(gr) = a.grading() {
        units = units.with_grading(GGrading::trivial(gr.group().clone(), dim))?;
    }
    tensor(&units, a)
}

/// `Ã = l·1 ⊕ A` with a new central unit, labelled `1` and placed first.
/// The new unit is fixed by the action and has degree `e`.
pub fn unitalization(a: &Algebra) -> Result<AlgebraRef> {
    let ring = a.ring().clone();
    let shift = |v: &SparseVec| v.map_indices(&ring, |i| i + 1);
    let mut basis = vec!["1".to_string()];
    basis.extend(a.basis().iter().cloned());
    let mut products = vec![((0, 0), SparseVec::unit(0))];
    for i in 0..a.dim() {
        products.push(((0, i + 1), SparseVec::unit(i + 1)));
        products.push(((i + 1, 0), SparseVec::unit(i + 1)));
    }
    products.extend(a.products().map(|((i, j), v)| ((i + 1, j + 1), shift(v))));
    let name = format!("{}~", paren(a.name()));
    let mut alg = Algebra::new(name, ring.clone(), basis, products, Some(SparseVec::unit(0)))?;
    alg.validate(&budget())?;
    if let Some(act) = a.action() {
        let one = Matrix::identity(1);
        let matrices = act.matrices().iter().map(|m| one.direct_sum(m)).collect();
        alg = alg.with_action(GAction::new(act.group().clone(), matrices)?, &budget())?;
    }
    if let Some(gr) = a.grading() {
        let mut degrees = vec![gr.group().identity()];
        degrees.extend(gr.degrees());
        alg = alg.with_grading(GGrading::new(gr.group().clone(), degrees)?)?;
    }
    Ok(Arc::new(alg))
}

/// The inclusion `A -> Ã`.
pub fn unitalization_inclusion(a: &AlgebraRef, unitalized: &AlgebraRef) -> Result<LinearMap> {
    LinearMap::from_fn(a.clone(), unitalized.clone(), |i| SparseVec::unit(i + 1))
}

/// The flip `A ⊗ B -> B ⊗ A`.
pub fn swap_map(ab: &AlgebraRef, ba: &AlgebraRef, dim_a: usize, dim_b: usize) -> Result<LinearMap> {
    if ab.dim() != dim_a * dim_b || ba.dim() != dim_a * dim_b {
        return Err(Error::ShapeMismatch("swap between tensor products of the wrong size".into()));
    }
    LinearMap::from_fn(ab.clone(), ba.clone(), |k| SparseVec::unit((k % dim_b) * dim_a + k / dim_b))
}

/// `A` with the trivial action of `group` (written `A^τ`).
pub fn with_trivial_action(a: &Algebra, group: &GroupRef) -> Result<AlgebraRef> {
    let action = GAction::trivial(group.clone(), a.dim());
    Ok(Arc::new(a.clone().with_action(action, &budget())?))
}

/// `A` with every basis element in degree `e`.
pub fn with_trivial_grading(a: &Algebra, group: &GroupRef) -> Result<AlgebraRef> {
    Ok(Arc::new(a.clone().with_grading(GGrading::trivial(group.clone(), a.dim()))?))
}

/// `l ⊕ l` with `g` exchanging the summands exactly when `sign[g]` is set.
pub fn sum_swap_algebra(ring: &ScalarRing, group: &GroupRef) -> Result<AlgebraRef> {
    let l = scalar_algebra(ring);
    let sum = Arc::unwrap_or_clone(direct_sum(&l, &l)?).with_name("l⊕l");
    let sign = group.sign_character().unwrap_or_else(|| vec![false; group.order()]);
    let action = GAction::permutation(group.clone(), 2, |g, i| if sign[g] { 1 - i } else { i });
    Ok(Arc::new(sum.with_action(action, &budget())?))
}

/// `M_2(l)` with basis `e_{1,1}, e_{1,2}, e_{2,1}, e_{2,2}`.
pub fn matrix2(ring: &ScalarRing) -> AlgebraRef {
    let alg = Arc::unwrap_or_clone(matrix_units(ring, &["1".to_string(), "2".to_string()]));
    Arc::new(alg.with_name("M_2"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;
    use crate::scalar::Scalar;
    use num_traits::One;

    fn q() -> ScalarRing {
        ScalarRing::Rationals
    }

    fn half() -> Scalar {
        Scalar::new(1.into(), 2.into())
    }

    #[test]
    fn group_algebra_products() {
        let c2: GroupRef = Arc::new(FiniteGroup::cyclic(2));
        let a = group_algebra(&q(), &c2);
        assert_eq!(a.product(1, 1), Some(&SparseVec::unit(0)));
        let c3: GroupRef = Arc::new(FiniteGroup::cyclic(3));
        let b = group_algebra(&q(), &c3);
        assert_eq!(b.product(1, 2), Some(&SparseVec::unit(0)));
        assert_eq!(b.basis(), &["d_e", "d_g", "d_g^2"]);
    }

    #[test]
    fn averaging_element_is_idempotent_in_c2() {
        let c2: GroupRef = Arc::new(FiniteGroup::cyclic(2));
        let a = group_algebra(&q(), &c2);
        let xi = SparseVec::from_entries([(0, half()), (1, half())]);
        assert_eq!(a.mul(&xi, &xi), xi);
    }

    #[test]
    fn dual_group_algebra_is_pointwise() {
        let c2: GroupRef = Arc::new(FiniteGroup::cyclic(2));
        let a = dual_group_algebra(&q(), &c2).unwrap();
        assert_eq!(a.product(0, 0), Some(&SparseVec::unit(0)));
        assert_eq!(a.product(0, 1), None);
        assert_eq!(a.format(a.unit().unwrap()), "chi_e + chi_s");
        let act = a.action().unwrap();
        assert_eq!(act.apply(a.ring(), 1, &SparseVec::unit(0)), SparseVec::unit(1));
    }

    #[test]
    fn regular_action_on_group_algebra_is_not_by_automorphisms() {
        let c2: GroupRef = Arc::new(FiniteGroup::cyclic(2));
        let a = Arc::unwrap_or_clone(group_algebra(&q(), &c2));
        let g = c2.clone();
        let regular = GAction::permutation(c2.clone(), 2, move |x, h| g.mul(x, h));
        let err = a.with_action(regular, &budget()).unwrap_err();
        assert_eq!(err.kind(), "NotAutomorphism");
    }

    #[test]
    fn matrix_unit_products() {
        let c2: GroupRef = Arc::new(FiniteGroup::cyclic(2));
        let m = matrix_units(&q(), c2.names());
        let ml = tensor(&m, &scalar_algebra(&q())).unwrap();
        // e_{e,s} e_{s,e} = e_{e,e}
        let es = ml.index_of("e_{e,s}⊗1").unwrap();
        let se = ml.index_of("e_{s,e}⊗1").unwrap();
        let ee = ml.index_of("e_{e,e}⊗1").unwrap();
        assert_eq!(ml.product(es, se), Some(&SparseVec::unit(ee)));
        assert_eq!(ml.dim(), 4);
    }

    #[test]
    fn function_algebra_on_two_points() {
        let f = function_algebra(&q(), &["1".to_string(), "2".to_string()]);
        assert_eq!(f.product(0, 1), None);
        assert_eq!(f.product(1, 1), Some(&SparseVec::unit(1)));
    }

    #[test]
    fn unitalization_of_zero_product_line() {
        let x = Algebra::new("x", q(), vec!["x".into()], [], None).unwrap();
        let u = unitalization(&x).unwrap();
        let one_plus_x = SparseVec::from_entries([(0, Scalar::one()), (1, Scalar::one())]);
        let two = Scalar::from_integer(2.into());
        assert_eq!(
            u.mul(&one_plus_x, &one_plus_x),
            SparseVec::from_entries([(0, Scalar::one()), (1, two)])
        );
    }

    #[test]
    fn sum_swap_action() {
        let c2: GroupRef = Arc::new(FiniteGroup::cyclic(2));
        let a = sum_swap_algebra(&q(), &c2).unwrap();
        assert_eq!(a.action().unwrap().apply(a.ring(), 1, &SparseVec::unit(0)), SparseVec::unit(1));
        let c3: GroupRef = Arc::new(FiniteGroup::cyclic(3));
        assert!(sum_swap_algebra(&q(), &c3).unwrap().action().unwrap().is_trivial());
    }

    #[test]
    fn scalar_mismatch() {
        let a = scalar_algebra(&q());
        let b = scalar_algebra(&ScalarRing::integers_mod(5).unwrap());
        assert_eq!(tensor(&a, &b).unwrap_err().kind(), "ScalarMismatch");
    }

    #[test]
    fn swap_is_an_isomorphism() {
        let m = matrix2(&q());
        let l2 = direct_sum(&scalar_algebra(&q()), &scalar_algebra(&q())).unwrap();
        let ab = tensor(&m, &l2).unwrap();
        let ba = tensor(&l2, &m).unwrap();
        let s = swap_map(&ab, &ba, 4, 2).unwrap();
        assert!(s.is_homomorphism(&budget(), true).unwrap().is_ok());
        assert!(s.is_isomorphism().unwrap());
        assert_eq!(ba.label(s.apply(&SparseVec::unit(1)).leading().unwrap().0), "(0,1)⊗e_{1,1}");
    }
}
