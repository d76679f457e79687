//! Dimensions and small closed-form values of the constructions, checked
//! against counts computed independently of the library.

use std::sync::Arc;

use eqkk_core::classify::{truncated_j, TensorAlgebra};
use eqkk_core::construct::{
    direct_sum, dual_group_algebra, graded_group_algebra, matrix2, matrix_units, scalar_algebra,
    sum_swap_algebra, tensor, with_trivial_action,
};
use eqkk_core::crossed::{crossed_product, smash_product};
use eqkk_core::equivariance::{mg_algebra, mg_graded_algebra};
use eqkk_core::homotopy::{loop_extension, path_extension};
use eqkk_core::induction::{restrict, InducedAlgebra};
use eqkk_core::{CheckBudget, CosetSpace, FiniteGroup, GroupRef, ScalarRing, SparseVec, Subgroup};

fn groups() -> Vec<GroupRef> {
    vec![
        Arc::new(FiniteGroup::trivial()),
        Arc::new(FiniteGroup::cyclic(2)),
        Arc::new(FiniteGroup::cyclic(3)),
        Arc::new(FiniteGroup::symmetric3()),
    ]
}

#[test]
fn product_constructions_have_expected_dimensions() {
    let ring = ScalarRing::Rationals;
    for g in groups() {
        let n = g.order();
        for a in [dual_group_algebra(&ring, &g).unwrap(), sum_swap_algebra(&ring, &g).unwrap()] {
            let d = a.dim();
            assert_eq!(crossed_product(&a).unwrap().dim(), d * n);
            assert_eq!(mg_algebra(&a).unwrap().dim(), n * n * d);
        }
        let graded = graded_group_algebra(&ring, &g).unwrap();
        assert_eq!(smash_product(&graded).unwrap().dim(), n * n);
        assert_eq!(mg_graded_algebra(&graded).unwrap().dim(), n * n * n);
    }
    let m2 = matrix2(&ring);
    let l = scalar_algebra(&ring);
    assert_eq!(tensor(&m2, &m2).unwrap().dim(), 16);
    assert_eq!(direct_sum(&m2, &l).unwrap().dim(), 5);
}

#[test]
fn matrix_units_multiply_by_index_matching() {
    let ring = ScalarRing::Rationals;
    let labels: Vec<String> = ["a", "b", "c"].iter().map(|s| s.to_string()).collect();
    let m = matrix_units(&ring, &labels);
    for k1 in 0..9 {
        for k2 in 0..9 {
            let (s, t, u, v) = (k1 / 3, k1 % 3, k2 / 3, k2 % 3);
            let want = if t == u { SparseVec::unit(s * 3 + v) } else { SparseVec::new() };
            assert_eq!(m.mul(&SparseVec::unit(k1), &SparseVec::unit(k2)), want);
        }
    }
    assert_eq!(m.label(5), "e_{b,c}");
}

#[test]
fn induced_dimension_is_index_times_base() {
    let ring = ScalarRing::Rationals;
    for g in groups() {
        let subgroups = [Subgroup::trivial(g.clone()), Subgroup::whole(g.clone())];
        for sub in subgroups {
            let index = g.order() / sub.order();
            let a = dual_group_algebra(&ring, &g).unwrap();
            let cosets = CosetSpace::new(sub);
            let ind = InducedAlgebra::new(restrict(&a, cosets.subgroup()).unwrap(), cosets).unwrap();
            assert_eq!(ind.dim(), index * a.dim());
            ind.algebra().validate(&CheckBudget::default()).unwrap();
        }
    }
}

#[test]
fn truncated_j_is_the_counit_kernel() {
    let ring = ScalarRing::Rationals;
    let g: GroupRef = Arc::new(FiniteGroup::cyclic(2));
    let inputs = [scalar_algebra(&ring), with_trivial_action(&matrix2(&ring), &g).unwrap()];
    for a in inputs {
        let d = a.dim();
        for depth in 1..=3 {
            let words: usize = (1..=depth).map(|k| d.pow(k as u32)).sum();
            assert_eq!(TensorAlgebra::new(&a, depth).unwrap().dim(), words);
            let j = truncated_j(&a, depth).unwrap();
            assert_eq!(j.dim(), words - d);
            assert_eq!(j.validate().unwrap(), Ok(()));
        }
    }
}

#[test]
fn extension_kernels_have_polynomial_dimensions() {
    let ring = ScalarRing::Rationals;
    let m2 = matrix2(&ring);
    let budget = CheckBudget::default();
    for cap in 1..=4 {
        // t A[t] over A: kernel is polynomials vanishing at 0 and 1
        let lp = loop_extension(&m2, cap).unwrap();
        assert_eq!(lp.middle_dim(), 4 * cap);
        assert_eq!(lp.kernel_dim(), 4 * (cap - 1));
        assert_eq!(lp.validate(&budget).unwrap(), Ok(()));
        let path = path_extension(&m2, cap).unwrap();
        assert_eq!(path.middle_dim(), 4 * (cap + 1));
        assert_eq!(path.kernel_dim(), 4 * (cap - 1));
    }
}

#[test]
fn group_algebra_grading_is_by_element() {
    let ring = ScalarRing::Rationals;
    for g in groups() {
        let lg = graded_group_algebra(&ring, &g).unwrap();
        let gr = lg.grading().unwrap();
        for x in g.elements() {
            assert_eq!(gr.degree(x), x);
        }
    }
}
