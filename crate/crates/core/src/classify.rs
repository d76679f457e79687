//! Truncated tensor algebras, the counit `T(A) -> A` and its kernel `J(A)`,
//! and classifying maps of weakly split extensions together with the
//! homotopies that make them unique.

use std::sync::Arc;

use crate::algebra::{Algebra, AlgebraRef, Filtration};
use crate::check::{CheckBudget, Verdict, Violation};
use crate::construct::budget;
use crate::equivariance::{GAction, GGrading};
use crate::error::{Error, Result};
use crate::homotopy::{loop_extension, Extension, Homotopy};
use crate::linalg::{Echelon, Matrix, SparseVec};
use crate::map::LinearMap;

/// `T_{<=N}(A)`: pure tensors of basis elements of length `1..=N`, ordered
/// by length and then lexicographically, with concatenation as product
/// (zero past length `N`). The diagonal action and the product grading of
/// the base are carried over. A base label `1` (the scalar algebra) is
/// printed as `x`, since it is no unit in `T`.
#[derive(Clone, Debug)]
pub struct TensorAlgebra {
    base: AlgebraRef,
    depth: usize,
    alg: AlgebraRef,
    offsets: Vec<usize>,
}

impl TensorAlgebra {
    pub fn new(base: &AlgebraRef, depth: usize) -> Result<TensorAlgebra> {
        if depth == 0 {
            return Err(Error::ShapeMismatch("tensor algebra needs depth >= 1".into()));
        }
        let d = base.dim();
        let ring = base.ring().clone();
        // offsets[k] = index of the first word of length k + 1
        let mut offsets = vec![0];
        for k in 1..=depth {
            offsets.push(offsets[k - 1] + d.pow(k as u32));
        }
        let total = offsets[depth];
        let names: Vec<String> = base
            .basis()
            .iter()
            .map(|l| if l == "1" { "x".to_string() } else { l.clone() })
            .collect();
        let mut shape = TensorAlgebra { base: base.clone(), depth, alg: base.clone(), offsets };
        let basis = (0..total)
            .map(|w| shape.word(w).iter().map(|&i| names[i].as_str()).collect::<Vec<_>>().join("⊗"))
            .collect();
        let mut products = Vec::new();
        for u in 0..total {
            let wu = shape.word(u);
            for v in 0..total {
                let wv = shape.word(v);
                if wu.len() + wv.len() <= depth {
                    let cat: Vec<usize> = wu.iter().chain(&wv).copied().collect();
                    products.push(((u, v), SparseVec::unit(shape.index_of_word(&cat))));
                }
            }
        }
        let name = format!("T<={depth}({})", base.name());
        let mut alg = Algebra::new(name, ring.clone(), basis, products, None)?;
        alg.validate(&budget())?;
        let lengths = (0..total).map(|w| shape.word_len(w)).collect();
        alg = alg.with_filtration(Filtration { degrees: lengths, cap: depth })?;
        if let Some(act) = base.action() {
            let matrices = act
                .matrices()
                .iter()
                .map(|m| {
                    let mut blocks = m.clone();
                    let mut power = m.clone();
                    for _ in 1..depth {
                        power = power.kronecker(&ring, m);
                        blocks = blocks.direct_sum(&power);
                    }
                    blocks
                })
                .collect();
            alg = alg.with_action(GAction::new(act.group().clone(), matrices)?, &budget())?;
        }
        if let Some(gr) = base.grading() {
            let g = gr.group();
            let degrees = (0..total)
                .map(|w| shape.word(w).iter().fold(g.identity(), |acc, &i| g.mul(acc, gr.degree(i))))
                .collect();
            alg = alg.with_grading(GGrading::new(g.clone(), degrees)?)?;
        }
        shape.alg = Arc::new(alg);
        Ok(shape)
    }

    pub fn base(&self) -> &AlgebraRef {
        &self.base
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn algebra(&self) -> &AlgebraRef {
        &self.alg
    }

    pub fn dim(&self) -> usize {
        self.offsets[self.depth]
    }

    fn word_len(&self, w: usize) -> usize {
        self.offsets.iter().position(|&o| o > w).expect("word index in range")
    }

    /// The basis indices of the letters of word `w`.
    pub fn word(&self, w: usize) -> Vec<usize> {
        let len = self.word_len(w);
        let d = self.base.dim();
        let mut rest = w - self.offsets[len - 1];
        let mut out = vec![0; len];
        for slot in out.iter_mut().rev() {
            *slot = rest % d;
            rest /= d;
        }
        out
    }

    pub fn index_of_word(&self, letters: &[usize]) -> usize {
        let d = self.base.dim();
        self.offsets[letters.len() - 1] + letters.iter().fold(0, |acc, &i| acc * d + i)
    }

    /// `mu_A: A -> T(A)`, the words of length one.
    pub fn inclusion(&self) -> LinearMap {
        LinearMap::from_fn(self.base.clone(), self.alg.clone(), SparseVec::unit).expect("degree-one inclusion")
    }

    /// The unique multiplicative extension of a linear map `h: A -> B`:
    /// `a_1 ⊗ ... ⊗ a_k -> h(a_1) ... h(a_k)`.
    pub fn extend(&self, h: &LinearMap) -> Result<LinearMap> {
        if h.source().basis() != self.base.basis() {
            return Err(Error::ShapeMismatch("map does not start at the base algebra".into()));
        }
        let target = h.target().clone();
        let mut cols: Vec<SparseVec> = Vec::with_capacity(self.dim());
        for w in 0..self.dim() {
            let letters = self.word(w);
            let col = if letters.len() == 1 {
                h.image(letters[0]).clone()
            } else {
                // prefix words come earlier in the order
                let prefix = self.index_of_word(&letters[..letters.len() - 1]);
                target.mul_checked(&cols[prefix], h.image(letters[letters.len() - 1]))?
            };
            cols.push(col);
        }
        LinearMap::new(self.alg.clone(), target.clone(), Matrix::from_columns(target.dim(), cols)?)
    }

    /// `eta_A(a_1 ⊗ ... ⊗ a_k) = a_1 ... a_k`.
    pub fn counit(&self) -> LinearMap {
        self.extend(&LinearMap::identity(&self.base)).expect("counit into the base")
    }

    /// `T(f): T(A) -> T(B)` for a linear `f: A -> B`.
    pub fn functor_map(&self, f: &LinearMap, other: &TensorAlgebra) -> Result<LinearMap> {
        if other.depth != self.depth || f.target().basis() != other.base.basis() {
            return Err(Error::ShapeMismatch("T(f) needs matching depths and bases".into()));
        }
        self.extend(&other.inclusion().compose(&f.retarget(&self.base, &other.base)?)?)
    }

    pub fn format(&self, v: &SparseVec) -> String {
        self.alg.format(v)
    }
}

/// `J_{<=N}(A) = ker(eta)` as an echelon basis of `T_{<=N}(A)`.
#[derive(Clone, Debug)]
pub struct TruncatedJ {
    tensor: TensorAlgebra,
    kernel: Echelon,
    basis: Vec<SparseVec>,
    counit_rank: usize,
}

pub fn truncated_j(a: &AlgebraRef, depth: usize) -> Result<TruncatedJ> {
    TruncatedJ::new(TensorAlgebra::new(a, depth)?)
}

impl TruncatedJ {
    pub fn new(tensor: TensorAlgebra) -> Result<TruncatedJ> {
        let ring = tensor.base.ring().clone();
        ring.require_field()?;
        let eta = tensor.counit();
        let basis = eta.kernel_basis()?;
        let kernel = Echelon::from_rows(&ring, basis.iter().cloned())?;
        let counit_rank = eta.rank()?;
        Ok(TruncatedJ { tensor, kernel, basis, counit_rank })
    }

    pub fn tensor(&self) -> &TensorAlgebra {
        &self.tensor
    }

    pub fn basis(&self) -> &[SparseVec] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Rank of the truncated counit; equals `dim(A)` when it is onto.
    pub fn counit_rank(&self) -> usize {
        self.counit_rank
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.kernel.contains(v)
    }

    pub fn coords(&self, v: &SparseVec) -> Option<SparseVec> {
        self.kernel.coords(v)
    }

    /// `eta` kills every basis vector and `J` is stable under the action
    /// and under taking homogeneous components.
    pub fn validate(&self) -> Result<Verdict> {
        let eta = self.tensor.counit();
        if let Some(basis) = self.basis.iter().position(|v| !eta.apply(v).is_zero()) {
            return Ok(Err(Violation::NotInKernel { basis }));
        }
        let alg = self.tensor.algebra();
        if let Some(act) = alg.action() {
            for g in act.group().elements() {
                if let Some(basis) = self.basis.iter().position(|v| !self.contains(&act.apply(alg.ring(), g, v))) {
                    return Ok(Err(Violation::NotEquivariant {
                        group_element: act.group().name(g).to_string(),
                        basis,
                    }));
                }
            }
        }
        if let Some(gr) = alg.grading() {
            for (basis, v) in self.basis.iter().enumerate() {
                if gr.group().elements().any(|g| !self.contains(&gr.component(v, g))) {
                    return Ok(Err(Violation::NotHomogeneous { basis }));
                }
            }
        }
        Ok(Ok(()))
    }

    pub fn format(&self, v: &SparseVec) -> String {
        self.tensor.format(v)
    }
}

/// `xi_hat = eta ∘ T(s): T(C) -> middle` and its restriction `xi` to `J(C)`,
/// recorded as the image of each `J` basis vector.
#[derive(Clone, Debug)]
pub struct ClassifyingMap {
    pub j: TruncatedJ,
    pub xi_hat: LinearMap,
    pub images: Vec<SparseVec>,
}

pub fn classifying_map(ext: &Extension, depth: usize) -> Result<ClassifyingMap> {
    let tensor = TensorAlgebra::new(ext.quotient(), depth)?;
    let j = TruncatedJ::new(tensor)?;
    classifying_map_on(ext, j)
}

fn classifying_map_on(ext: &Extension, j: TruncatedJ) -> Result<ClassifyingMap> {
    let tensor = j.tensor();
    let section = ext.section().retarget(ext.quotient(), ext.ambient())?;
    let xi_hat = tensor.extend(&section)?;
    let eta = tensor.counit();
    let projected = ext.proj().compose(&xi_hat.retarget(tensor.algebra(), ext.ambient())?)?;
    if let Some(w) = (0..tensor.dim()).find(|&w| projected.image(w) != eta.image(w)) {
        return Err(Error::SectionNotLinear(format!(
            "proj ∘ xi_hat differs from the counit on {}",
            tensor.algebra().label(w)
        )));
    }
    let kernel = Echelon::from_rows(ext.ambient().ring(), ext.kernel_basis())?;
    let kernel_rows: Vec<&SparseVec> = kernel.basis().collect();
    let mut images = Vec::with_capacity(j.dim());
    for (k, v) in j.basis().iter().enumerate() {
        let image = xi_hat.apply(v);
        // the square: image = inclusion(coordinates in the kernel basis)
        let coords = kernel.coords(&image).ok_or(Error::ImageEscapesKernel(k))?;
        let back = coords.iter().fold(SparseVec::new(), |mut acc, (p, c)| {
            acc.add_scaled(ext.ambient().ring(), c, kernel_rows[p]);
            acc
        });
        if back != image {
            return Err(Error::ImageEscapesKernel(k));
        }
        images.push(image);
    }
    Ok(ClassifyingMap { j, xi_hat, images })
}

/// `rho_A: J(A) -> Ω A`, the classifying map of the loop extension. The
/// carrier `A[t]` is taken with cap `depth`, which is exactly enough.
pub fn rho(a: &AlgebraRef, depth: usize) -> Result<ClassifyingMap> {
    classifying_map(&loop_extension(a, depth)?, depth)
}

/// A homotopy `T(C) -> middle[u]` obtained by interpolating two lifts of
/// the same map into the quotient and extending multiplicatively; on `J`
/// it lands in `kernel[u]`.
#[derive(Clone, Debug)]
pub struct InterpolationHomotopy {
    pub j: TruncatedJ,
    pub start: LinearMap,
    pub end: LinearMap,
    pub homotopy: Homotopy,
    kernel: Echelon,
}

/// `s_u = (1 - u) s1 + u s2`, extended multiplicatively.
pub fn section_homotopy(
    ext: &Extension,
    s1: &LinearMap,
    s2: &LinearMap,
    depth: usize,
) -> Result<InterpolationHomotopy> {
    let e1 = ext.with_section(s1.clone())?;
    let e2 = ext.with_section(s2.clone())?;
    let xi1 = classifying_map(&e1, depth)?;
    let xi2 = classifying_map(&e2, depth)?;
    let h = interpolate(ext, xi1.j.clone(), s1, s2)?;
    h.check_endpoints(&xi1.xi_hat, &xi2.xi_hat)?;
    Ok(h)
}

fn interpolate(ext: &Extension, j: TruncatedJ, lift0: &LinearMap, lift1: &LinearMap) -> Result<InterpolationHomotopy> {
    let ring = ext.ambient().ring().clone();
    let tensor = j.tensor().clone();
    let amb = ext.ambient().clone();
    let lift0 = lift0.retarget(tensor.base(), &amb)?;
    let lift1 = lift1.retarget(tensor.base(), &amb)?;
    let diff = lift1.sub(&lift0)?;
    let depth = tensor.depth();
    // coeffs[w][m]: u^m coefficient of the image of word w
    let mut coeffs: Vec<Vec<SparseVec>> = Vec::with_capacity(tensor.dim());
    for w in 0..tensor.dim() {
        let letters = tensor.word(w);
        let last = letters[letters.len() - 1];
        let factor = [lift0.image(last).clone(), diff.image(last).clone()];
        let poly = if letters.len() == 1 {
            factor.to_vec()
        } else {
            let prefix = &coeffs[tensor.index_of_word(&letters[..letters.len() - 1])];
            let mut out = vec![SparseVec::new(); prefix.len() + 1];
            for (a, pa) in prefix.iter().enumerate() {
                for (b, fb) in factor.iter().enumerate() {
                    let term = amb.mul_checked(pa, fb)?;
                    out[a + b].add_scaled(&ring, &ring.one(), &term);
                }
            }
            out
        };
        coeffs.push(poly);
    }
    let maps = (0..=depth)
        .map(|m| {
            LinearMap::from_fn(tensor.algebra().clone(), amb.clone(), |w| {
                coeffs[w].get(m).cloned().unwrap_or_default()
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let homotopy = Homotopy::new(maps)?;
    let start = homotopy.evaluate(&ring.zero())?;
    let end = homotopy.evaluate(&ring.one())?;
    let kernel = Echelon::from_rows(&ring, ext.kernel_basis())?;
    Ok(InterpolationHomotopy { j, start, end, homotopy, kernel })
}

impl InterpolationHomotopy {
    fn check_endpoints(&self, xi0: &LinearMap, xi1: &LinearMap) -> Result<()> {
        for (at, expected, got) in [(0, xi0, &self.start), (1, xi1, &self.end)] {
            if let Some(w) = (0..got.source().dim()).find(|&w| got.image(w) != expected.image(w)) {
                return Err(Error::EndpointMismatch(format!(
                    "u = {at} on {}",
                    got.source().label(w)
                )));
            }
        }
        Ok(())
    }

    /// Multiplicativity into `middle[u]` on `T` (pairs inside the cap),
    /// structure per coefficient, the endpoints, and `J -> kernel[u]`.
    pub fn validate(&self, budget: &CheckBudget) -> Result<Verdict> {
        if let Err(v) = self.homotopy.check(&self.start, &self.end, budget)? {
            return Ok(Err(v));
        }
        for h in self.homotopy.coefficients() {
            if let Some(basis) = self.j.basis().iter().position(|v| !self.kernel.contains(&h.apply(v))) {
                return Ok(Err(Violation::NotInKernel { basis }));
            }
        }
        Ok(Ok(()))
    }

    /// The `u`-coefficients of `H(v)` in the middle carrier.
    pub fn image(&self, v: &SparseVec) -> Vec<SparseVec> {
        let mut out: Vec<SparseVec> = self.homotopy.coefficients().iter().map(|h| h.apply(v)).collect();
        while out.last().is_some_and(SparseVec::is_zero) {
            out.pop();
        }
        out
    }
}

/// Morphism of extensions `E -> E'`: `middle` between the ambient carriers
/// and `quotient` between the quotients, forming a commuting square with
/// the projections. The naturality square `xi' ∘ J(quotient) ~ middle ∘ xi`
/// is witnessed by interpolating the lifts `middle ∘ s` and
/// `s' ∘ quotient`.
#[derive(Clone, Debug)]
pub struct NaturalityWitness {
    pub homotopy: InterpolationHomotopy,
    /// `xi' ∘ J(quotient)` agrees with the multiplicative extension of
    /// `s' ∘ quotient` on `T(C)`.
    pub functor_square: LinearMap,
}

pub fn naturality_homotopy(
    source: &Extension,
    target: &Extension,
    middle: &LinearMap,
    quotient: &LinearMap,
    depth: usize,
) -> Result<NaturalityWitness> {
    let mid = middle.retarget(source.ambient(), target.ambient())?;
    let quo = quotient.retarget(source.quotient(), target.quotient())?;
    for v in source.middle_basis() {
        if target.proj().apply(&mid.apply(&v)) != quo.apply(&source.proj().apply(&v)) {
            return Err(Error::ShapeMismatch("projections do not commute with the morphism".into()));
        }
    }
    let t_src = TensorAlgebra::new(source.quotient(), depth)?;
    let t_tgt = TensorAlgebra::new(target.quotient(), depth)?;
    let xi_src = classifying_map_on(source, TruncatedJ::new(t_src.clone())?)?;
    let xi_tgt = classifying_map_on(target, TruncatedJ::new(t_tgt.clone())?)?;
    let lift0 = mid.compose(&source.section().retarget(source.quotient(), source.ambient())?)?;
    let lift1 = target.section().retarget(target.quotient(), target.ambient())?.compose(&quo)?;
    let h = interpolate(target, TruncatedJ::new(t_src.clone())?, &lift0, &lift1)?;
    let start = mid.compose(&xi_src.xi_hat.retarget(t_src.algebra(), source.ambient())?)?;
    let t_quo = t_src.functor_map(&quo, &t_tgt)?;
    let end = xi_tgt.xi_hat.retarget(t_tgt.algebra(), target.ambient())?.compose(&t_quo)?;
    h.check_endpoints(&start, &end)?;
    Ok(NaturalityWitness { homotopy: h, functor_square: end })
}

/// `J(A) ⊗ L -> T_{<=M}(A) ⊗ L -> A ⊗ L` split by `a ⊗ l -> a ⊗ l` in
/// degree one.
pub fn tensored_universal_extension(a: &AlgebraRef, l: &AlgebraRef, depth: usize) -> Result<Extension> {
    let t = TensorAlgebra::new(a, depth)?;
    let ambient = crate::construct::tensor(t.algebra(), l)?;
    let quotient = crate::construct::tensor(a, l)?;
    let id_l = LinearMap::identity(l);
    let proj = t.counit().tensor_between(&id_l, &ambient, &quotient)?;
    let section = t.inclusion().tensor_between(&id_l, &quotient, &ambient)?;
    let constraints = Matrix::zero(0, ambient.dim());
    Extension::new(format!("J({})⊗{}", a.name(), l.name()), ambient, constraints, proj, section)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{matrix2, scalar_algebra, tensor};
    use crate::equivariance::GAction;
    use crate::group::FiniteGroup;
    use crate::homotopy::{path_extension, PolyAlgebra};
    use crate::scalar::{Scalar, ScalarRing};

    fn q() -> ScalarRing {
        ScalarRing::Rationals
    }

    fn int(n: i64) -> Scalar {
        Scalar::from_integer(n.into())
    }

    fn scalars_poly(p: &PolyAlgebra, coeffs: &[i64]) -> SparseVec {
        let cs: Vec<SparseVec> = coeffs.iter().map(|&c| SparseVec::from_entries([(0, int(c))])).collect();
        p.from_coefficients(&cs).unwrap()
    }

    #[test]
    fn word_order_and_counit() {
        let m2 = matrix2(&q());
        let t = TensorAlgebra::new(&m2, 2).unwrap();
        assert_eq!(t.dim(), 4 + 16);
        for w in 0..t.dim() {
            assert_eq!(t.index_of_word(&t.word(w)), w);
        }
        let e12 = m2.index_of("e_{1,2}").unwrap();
        let e21 = m2.index_of("e_{2,1}").unwrap();
        let w = t.index_of_word(&[e12, e21]);
        assert_eq!(t.algebra().label(w), "e_{1,2}⊗e_{2,1}");
        assert_eq!(t.counit().image(w), &SparseVec::unit(m2.index_of("e_{1,1}").unwrap()));
        assert_eq!(t.counit().is_homomorphism(&CheckBudget::default(), false).unwrap(), Ok(()));
        // eta ∘ mu = id
        assert!(t.counit().compose(&t.inclusion()).unwrap().is_identity());
    }

    #[test]
    fn counit_is_equivariant_for_translation() {
        let g = Arc::new(FiniteGroup::cyclic(2));
        let dual = crate::construct::dual_group_algebra(&q(), &g).unwrap();
        let t = TensorAlgebra::new(&dual, 2).unwrap();
        assert_eq!(t.counit().is_equivariant().unwrap(), Ok(()));
    }

    #[test]
    fn j_of_scalars() {
        let l = scalar_algebra(&q());
        let j2 = truncated_j(&l, 2).unwrap();
        assert_eq!(j2.dim(), 1);
        assert_eq!(j2.format(&j2.basis()[0]), "-x + x⊗x");
        let j3 = truncated_j(&l, 3).unwrap();
        assert_eq!(j3.dim(), 2);
        let t = j3.tensor();
        let xxx_minus_x = SparseVec::from_entries([(0, int(-1)), (t.index_of_word(&[0, 0, 0]), int(1))]);
        assert!(j3.contains(&xxx_minus_x));
        assert_eq!(j3.dim() + j3.counit_rank(), t.dim());
        assert_eq!(j3.validate().unwrap(), Ok(()));
    }

    #[test]
    fn rho_on_scalars() {
        let l = scalar_algebra(&q());
        let r = rho(&l, 3).unwrap();
        let p = PolyAlgebra::new(&l, 3).unwrap();
        let t = r.j.tensor();
        let xx = SparseVec::from_entries([(0, int(-1)), (t.index_of_word(&[0, 0]), int(1))]);
        assert_eq!(r.xi_hat.apply(&xx), scalars_poly(&p, &[0, -1, 1]));
        let xxx = SparseVec::from_entries([(0, int(-1)), (t.index_of_word(&[0, 0, 0]), int(1))]);
        assert_eq!(r.xi_hat.apply(&xxx), scalars_poly(&p, &[0, -1, 0, 1]));
        // ev_1 ∘ xi_hat = eta
        let eta = t.counit();
        for w in 0..t.dim() {
            assert_eq!(p.eval(r.xi_hat.image(w), &int(1)), *eta.image(w));
        }
    }

    #[test]
    fn path_extension_classifying_map_lands_in_loops() {
        let l = scalar_algebra(&q());
        let ext = path_extension(&l, 2).unwrap();
        let c = classifying_map(&ext, 2).unwrap();
        let p = PolyAlgebra::new(&l, 2).unwrap();
        for img in &c.images {
            assert!(p.eval(img, &int(0)).is_zero());
            assert!(p.eval(img, &int(1)).is_zero());
        }
        assert_eq!(c.j.dim(), 6 - 2);
    }

    #[test]
    fn section_interpolation_on_scalars() {
        let l = scalar_algebra(&q());
        let ext = loop_extension(&l, 4).unwrap();
        let p = PolyAlgebra::new(&l, 4).unwrap();
        let s1 = p.times_power(1).unwrap();
        let s2 = p.times_power(2).unwrap();
        let h = section_homotopy(&ext, &s1, &s2, 2).unwrap();
        assert_eq!(h.validate(&CheckBudget::default()).unwrap(), Ok(()));
        let t = h.j.tensor();
        let v = SparseVec::from_entries([(0, int(-1)), (t.index_of_word(&[0, 0]), int(1))]);
        assert_eq!(p.eval(&h.start.apply(&v), &int(0)), SparseVec::new());
        assert_eq!(h.end.apply(&v), scalars_poly(&p, &[0, 0, -1, 0, 1]));
        // equal sections give a constant witness
        let same = section_homotopy(&ext, &s1, &s1, 2).unwrap();
        assert!(same.homotopy.coefficients()[1..].iter().all(|m| m.matrix().is_zero()));
    }

    #[test]
    fn mismatched_section_is_rejected() {
        let l = scalar_algebra(&q());
        let ext = loop_extension(&l, 2).unwrap();
        let p = PolyAlgebra::new(&l, 2).unwrap();
        let bad = p.times_power(1).unwrap().scaled(&int(2));
        assert_eq!(ext.with_section(bad).unwrap_err().kind(), "SectionNotLinear");
    }

    #[test]
    fn naturality_for_scaling_of_loops() {
        // the identity morphism of the loop extension of M_2
        let m2 = matrix2(&q());
        let ext = loop_extension(&m2, 2).unwrap();
        let id_mid = LinearMap::identity(ext.ambient());
        let id_quo = LinearMap::identity(&m2);
        let w = naturality_homotopy(&ext, &ext, &id_mid, &id_quo, 2).unwrap();
        assert_eq!(w.homotopy.validate(&CheckBudget::default()).unwrap(), Ok(()));
    }

    #[test]
    fn tensored_extension_classifying_map() {
        let l = scalar_algebra(&q());
        let m2 = matrix2(&q());
        let ext = tensored_universal_extension(&l, &m2, 2).unwrap();
        assert_eq!(ext.validate(&CheckBudget::default()).unwrap(), Ok(()));
        let c = classifying_map(&ext, 2).unwrap();
        assert!(!c.images.is_empty());
        let lm = tensor(&l, &m2).unwrap();
        assert_eq!(c.j.tensor().base().basis(), lm.basis());
    }

    #[test]
    fn diagonal_action_on_words() {
        let g = Arc::new(FiniteGroup::cyclic(2));
        let dual = crate::construct::dual_group_algebra(&q(), &g).unwrap();
        let t = TensorAlgebra::new(&dual, 2).unwrap();
        let act: &GAction = t.algebra().action().unwrap();
        let w = t.index_of_word(&[0, 1]);
        assert_eq!(act.apply(&q(), 1, &SparseVec::unit(w)), SparseVec::unit(t.index_of_word(&[1, 0])));
    }
}
