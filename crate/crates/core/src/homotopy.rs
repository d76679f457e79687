//! Polynomial carriers `A[t]` truncated at a degree cap, evaluation maps,
//! elementary homotopies given by coefficient maps, and the path, loop and
//! mapping-path extensions.

use std::sync::Arc;

use num_traits::Zero;

use crate::algebra::{Algebra, AlgebraRef, Filtration};
use crate::check::{CheckBudget, Verdict, Violation};
use crate::construct::direct_sum;
use crate::equivariance::{GAction, GGrading};
use crate::error::{Error, Result};
use crate::linalg::{Echelon, Matrix, SparseVec};
use crate::map::LinearMap;
use crate::scalar::{format_scalar, Scalar, ScalarRing};

pub const DEFAULT_DEGREE_CAP: usize = 16;

/// `A[t]` with polynomials of degree at most `cap`. The basis element
/// `a_i t^k` sits at `k * dim(A) + i` and is labelled `a_i*t^k` (just `a_i`
/// for `k = 0`). The carrier is an honest algebra (`A[t] / t^(cap+1)`) with
/// the `t`-degree as filtration, so products that would need a larger cap
/// are refused by [`Algebra::mul_checked`].
#[derive(Clone, Debug)]
pub struct PolyAlgebra {
    base: AlgebraRef,
    cap: usize,
    alg: AlgebraRef,
}

impl PolyAlgebra {
    pub fn new(base: &AlgebraRef, cap: usize) -> Result<PolyAlgebra> {
        let d = base.dim();
        let ring = base.ring().clone();
        let mut basis = Vec::with_capacity(d * (cap + 1));
        for k in 0..=cap {
            for label in base.basis() {
                basis.push(match (k, label.as_str()) {
                    (0, _) => label.clone(),
                    (_, "1") => format!("t^{k}"),
                    _ => format!("{label}*t^{k}"),
                });
            }
        }
        let mut products = Vec::new();
        for k in 0..=cap {
            for l in 0..=cap - k {
                for ((i, j), v) in base.products() {
                    products.push(((k * d + i, l * d + j), v.map_indices(&ring, |x| (k + l) * d + x)));
                }
            }
        }
        let unit = base.unit().cloned();
        let mut alg = Algebra::new(format!("{}[t]", base.name()), ring.clone(), basis, products, unit)?;
        let degrees = (0..d * (cap + 1)).map(|x| x / d).collect();
        alg = alg.with_filtration(Filtration { degrees, cap })?;
        if let Some(act) = base.action() {
            let id = Matrix::identity(cap + 1);
            let matrices = act.matrices().iter().map(|m| id.kronecker(&ring, m)).collect();
            alg.set_action_unchecked(Some(GAction::new(act.group().clone(), matrices)?));
        }
        if let Some(gr) = base.grading() {
            let degrees = (0..d * (cap + 1)).map(|x| gr.degree(x % d)).collect();
            alg.set_grading_unchecked(Some(GGrading::new(gr.group().clone(), degrees)?));
        }
        Ok(PolyAlgebra { base: base.clone(), cap, alg: Arc::new(alg) })
    }

    pub fn base(&self) -> &AlgebraRef {
        &self.base
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn algebra(&self) -> &AlgebraRef {
        &self.alg
    }

    pub fn ring(&self) -> &ScalarRing {
        self.base.ring()
    }

    pub fn index(&self, k: usize, i: usize) -> usize {
        k * self.base.dim() + i
    }

    /// `a t^k`.
    pub fn monomial(&self, a: &SparseVec, k: usize) -> Result<SparseVec> {
        if k > self.cap && !a.is_zero() {
            return Err(Error::DegreeCapExceeded { cap: self.cap, needed: k });
        }
        Ok(a.map_indices(self.ring(), |i| self.index(k, i)))
    }

    /// `sum_k a_k t^k`.
    pub fn from_coefficients(&self, coeffs: &[SparseVec]) -> Result<SparseVec> {
        let mut out = SparseVec::new();
        for (k, a) in coeffs.iter().enumerate() {
            out.add_scaled(self.ring(), &self.ring().one(), &self.monomial(a, k)?);
        }
        Ok(out)
    }

    /// Coefficients of `t^0 .. t^deg`, without trailing zeros.
    pub fn coefficients(&self, p: &SparseVec) -> Vec<SparseVec> {
        let d = self.base.dim();
        let mut out = vec![SparseVec::new(); self.cap + 1];
        for (x, c) in p.iter() {
            out[x / d].set(x % d, c.clone());
        }
        while out.last().is_some_and(SparseVec::is_zero) {
            out.pop();
        }
        out
    }

    pub fn degree(&self, p: &SparseVec) -> Option<usize> {
        p.max_index().map(|x| x / self.base.dim())
    }

    /// `ev_c(p) = sum_k c^k p_k`.
    pub fn eval(&self, p: &SparseVec, c: &Scalar) -> SparseVec {
        let ring = self.ring();
        let mut out = SparseVec::new();
        let mut power = ring.one();
        for coeff in self.coefficients(p) {
            out.add_scaled(ring, &power, &coeff);
            power = ring.mul(&power, c);
        }
        out
    }

    pub fn ev(&self, c: &Scalar) -> Result<LinearMap> {
        let c = self.ring().reduce(c)?;
        LinearMap::from_fn(self.alg.clone(), self.base.clone(), |x| self.eval(&SparseVec::unit(x), &c))
    }

    pub fn ev0(&self) -> LinearMap {
        self.ev(&Scalar::zero()).expect("zero is a scalar")
    }

    pub fn ev1(&self) -> LinearMap {
        self.ev(&self.ring().one()).expect("one is a scalar")
    }

    /// `c_A: A -> A[t]`, the constant polynomials.
    pub fn constant(&self) -> LinearMap {
        LinearMap::from_fn(self.base.clone(), self.alg.clone(), SparseVec::unit).expect("constant embedding")
    }

    /// The map `a -> a t^k` (not multiplicative unless `k = 0`).
    pub fn times_power(&self, k: usize) -> Result<LinearMap> {
        LinearMap::try_from_fn(self.base.clone(), self.alg.clone(), |i| self.monomial(&SparseVec::unit(i), k))
    }

    /// Quotient of `p` by `t^2 - t`, if the division is exact.
    pub fn divide_by_t2_minus_t(&self, p: &SparseVec) -> Option<SparseVec> {
        let ring = self.ring();
        let mut rem = self.coefficients(p);
        if rem.len() < 3 {
            return rem.iter().all(SparseVec::is_zero).then(SparseVec::new);
        }
        let mut quot = vec![SparseVec::new(); rem.len() - 2];
        // long division from the top: t^2 - t has leading coefficient 1
        for k in (2..rem.len()).rev() {
            let lead = std::mem::take(&mut rem[k]);
            rem[k - 1] = rem[k - 1].add(ring, &lead);
            quot[k - 2] = lead;
        }
        if !(rem[0].is_zero() && rem[1].is_zero()) {
            return None;
        }
        self.from_coefficients(&quot).ok()
    }

    /// Polynomial literal such as `(1) + (-1)*t^1`.
    pub fn format(&self, p: &SparseVec) -> String {
        let terms: Vec<String> = self
            .coefficients(p)
            .iter()
            .enumerate()
            .filter(|(_, a)| !a.is_zero())
            .map(|(k, a)| {
                let inner = if self.base.basis() == ["1"] {
                    format_scalar(&a.get(0))
                } else {
                    self.base.format(a)
                };
                if k == 0 {
                    format!("({inner})")
                } else {
                    format!("({inner})*t^{k}")
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

/// A polynomial family `H = sum_k H_k u^k` of linear maps `A -> B`, read as
/// a map `A -> B[u]`.
#[derive(Clone, Debug)]
pub struct Homotopy {
    coeffs: Vec<LinearMap>,
}

impl Homotopy {
    pub fn new(coeffs: Vec<LinearMap>) -> Result<Homotopy> {
        let first = coeffs.first().ok_or_else(|| Error::ShapeMismatch("empty homotopy".into()))?;
        for h in &coeffs[1..] {
            if !Arc::ptr_eq(h.source(), first.source()) && h.source().basis() != first.source().basis()
                || !Arc::ptr_eq(h.target(), first.target()) && h.target().basis() != first.target().basis()
            {
                return Err(Error::ShapeMismatch("homotopy coefficients between different algebras".into()));
            }
        }
        Ok(Homotopy { coeffs })
    }

    /// `c_B ∘ f`.
    pub fn constant(f: &LinearMap) -> Homotopy {
        Homotopy { coeffs: vec![f.clone()] }
    }

    pub fn coefficients(&self) -> &[LinearMap] {
        &self.coeffs
    }

    pub fn source(&self) -> &AlgebraRef {
        self.coeffs[0].source()
    }

    pub fn target(&self) -> &AlgebraRef {
        self.coeffs[0].target()
    }

    /// `sum_k c^k H_k`.
    pub fn evaluate(&self, c: &Scalar) -> Result<LinearMap> {
        let ring = self.coeffs[0].ring().clone();
        let mut out = LinearMap::zero(self.source(), self.target());
        let mut power = ring.one();
        for h in &self.coeffs {
            out = out.add(&h.scaled(&power))?;
            power = ring.mul(&power, c);
        }
        Ok(out)
    }

    /// The witness for the opposite direction, `u -> 1 - u`.
    pub fn reversed(&self) -> Result<Homotopy> {
        let ring = self.coeffs[0].ring().clone();
        let n = self.coeffs.len();
        let mut out = vec![LinearMap::zero(self.source(), self.target()); n];
        // (1-u)^k = sum_m binom(k,m) (-1)^m u^m
        for (k, h) in self.coeffs.iter().enumerate() {
            for (m, slot) in out.iter_mut().enumerate().take(k + 1) {
                let binom = ring.from_int(binomial(k, m));
                let sign = if m % 2 == 0 { binom } else { ring.neg(&binom) };
                *slot = slot.add(&h.scaled(&sign))?;
            }
        }
        Ok(Homotopy { coeffs: out })
    }

    /// `H(b_i b_j) = H(b_i) H(b_j)` in `B[u]` (coefficientwise convolution)
    /// on budgeted basis pairs inside the source's cap, per-coefficient
    /// equivariance/homogeneity when both sides carry the structure, and
    /// the endpoint conditions `ev_0 H = f0`, `ev_1 H = f1`.
    pub fn check(&self, f0: &LinearMap, f1: &LinearMap, budget: &CheckBudget) -> Result<Verdict> {
        let dim = self.source().dim();
        let start = &self.coeffs[0];
        if let Some(basis) = (0..dim).find(|&j| start.image(j) != f0.image(j)) {
            return Ok(Err(Violation::Endpoint { at: 0, basis }));
        }
        let end = self.evaluate(&f1.ring().one())?;
        if let Some(basis) = (0..dim).find(|&j| end.image(j) != f1.image(j)) {
            return Ok(Err(Violation::Endpoint { at: 1, basis }));
        }
        let (src, tgt) = (self.source(), self.target());
        let ring = tgt.ring();
        let n = self.coeffs.len();
        for (i, j) in budget.pairs(dim, dim) {
            if !src.within_cap(i, j) {
                continue;
            }
            let prod = src.product(i, j);
            for m in 0..(2 * n - 1) {
                let mut rhs = SparseVec::new();
                for k in m.saturating_sub(n - 1)..=m.min(n - 1) {
                    let term = tgt.mul_checked(self.coeffs[k].image(i), self.coeffs[m - k].image(j))?;
                    rhs.add_scaled(ring, &ring.one(), &term);
                }
                let lhs = match (prod, self.coeffs.get(m)) {
                    (Some(p), Some(h)) => h.apply(p),
                    _ => SparseVec::new(),
                };
                if lhs != rhs {
                    return Ok(Err(Violation::ProductMismatch { left: i, right: j, coeff: Some(m) }));
                }
            }
        }
        if src.action().is_some() && tgt.action().is_some() {
            for h in &self.coeffs {
                if let Err(v) = h.is_equivariant()? {
                    return Ok(Err(v));
                }
            }
        }
        if src.grading().is_some() && tgt.grading().is_some() {
            for h in &self.coeffs {
                if let Err(v) = h.is_homogeneous()? {
                    return Ok(Err(v));
                }
            }
        }
        Ok(Ok(()))
    }
}

fn binomial(n: usize, k: usize) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

pub fn check_elementary_homotopy(
    f0: &LinearMap,
    f1: &LinearMap,
    h: &Homotopy,
    budget: &CheckBudget,
) -> Result<Verdict> {
    h.check(f0, f1, budget)
}

/// A weakly split extension `kernel -> middle -> quotient`. The middle
/// algebra is realized inside an ambient carrier as the subspace cut out by
/// `constraints`; the kernel is the part of the middle killed by `proj`.
#[derive(Clone, Debug)]
pub struct Extension {
    name: String,
    ambient: AlgebraRef,
    constraints: Matrix,
    quotient: AlgebraRef,
    proj: LinearMap,
    section: LinearMap,
    middle: Echelon,
    kernel: Echelon,
}

impl Extension {
    /// Checks that the section is linear into the middle, splits `proj`,
    /// and respects whatever action or grading both ends carry.
    pub fn new(
        name: impl Into<String>,
        ambient: AlgebraRef,
        constraints: Matrix,
        proj: LinearMap,
        section: LinearMap,
    ) -> Result<Extension> {
        let ring = ambient.ring().clone();
        if constraints.ncols() != ambient.dim() {
            return Err(Error::ShapeMismatch("constraints must act on the ambient carrier".into()));
        }
        let quotient = proj.target().clone();
        let middle = Echelon::from_rows(&ring, constraints.kernel(&ring)?)?;
        let kernel = Echelon::from_rows(&ring, constraints.stack(proj.matrix())?.kernel(&ring)?)?;
        let ext = Extension {
            name: name.into(),
            ambient,
            constraints,
            quotient,
            proj,
            section,
            middle,
            kernel,
        };
        ext.check_section()?;
        Ok(ext)
    }

    fn check_section(&self) -> Result<()> {
        let s = &self.section;
        if s.source().basis() != self.quotient.basis() || s.target().basis() != self.ambient.basis() {
            return Err(Error::SectionNotLinear("section has the wrong source or target".into()));
        }
        for j in 0..self.quotient.dim() {
            if !self.middle_contains(s.image(j)) {
                return Err(Error::SectionNotLinear(format!(
                    "s({}) leaves the middle algebra",
                    self.quotient.label(j)
                )));
            }
            if self.proj.apply(s.image(j)) != SparseVec::unit(j) {
                return Err(Error::SectionNotLinear(format!(
                    "proj(s({0})) != {0}",
                    self.quotient.label(j)
                )));
            }
        }
        let sv = s.retarget(&self.quotient, &self.ambient)?;
        if self.quotient.action().is_some() && self.ambient.action().is_some() {
            if let Err(v) = sv.is_equivariant()? {
                return Err(Error::SectionNotLinear(v.to_string()));
            }
        }
        if self.quotient.grading().is_some() && self.ambient.grading().is_some() {
            if let Err(v) = sv.is_homogeneous()? {
                return Err(Error::SectionNotLinear(v.to_string()));
            }
        }
        Ok(())
    }

    /// The same extension split by a different section.
    pub fn with_section(&self, section: LinearMap) -> Result<Extension> {
        let ext = Extension { section, ..self.clone() };
        ext.check_section()?;
        Ok(ext)
    }

    /// The middle is a subalgebra, the kernel a two-sided ideal in it, and
    /// `proj` is multiplicative on it; products past the carrier's cap are
    /// skipped.
    pub fn validate(&self, budget: &CheckBudget) -> Result<Verdict> {
        let mid: Vec<&SparseVec> = self.middle.basis().collect();
        let ker: Vec<&SparseVec> = self.kernel.basis().collect();
        for (i, j) in budget.pairs(mid.len(), mid.len()) {
            let prod = match self.ambient.mul_checked(mid[i], mid[j]) {
                Ok(p) => p,
                Err(Error::DegreeCapExceeded { .. }) => continue,
                Err(e) => return Err(e),
            };
            if !self.middle.contains(&prod) {
                return Ok(Err(Violation::Other(format!("middle not closed under product ({i}, {j})"))));
            }
            let lhs = self.proj.apply(&prod);
            let rhs = self.quotient.mul(&self.proj.apply(mid[i]), &self.proj.apply(mid[j]));
            if lhs != rhs {
                return Ok(Err(Violation::ProductMismatch { left: i, right: j, coeff: None }));
            }
        }
        for (i, k) in budget.pairs(mid.len(), ker.len()) {
            for prod in [self.ambient.mul_checked(mid[i], ker[k]), self.ambient.mul_checked(ker[k], mid[i])] {
                let prod = match prod {
                    Ok(p) => p,
                    Err(Error::DegreeCapExceeded { .. }) => continue,
                    Err(e) => return Err(e),
                };
                if !self.kernel.contains(&prod) {
                    return Ok(Err(Violation::NotInKernel { basis: k }));
                }
            }
        }
        Ok(Ok(()))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn ambient(&self) -> &AlgebraRef {
        &self.ambient
    }

    pub fn quotient(&self) -> &AlgebraRef {
        &self.quotient
    }

    pub fn proj(&self) -> &LinearMap {
        &self.proj
    }

    pub fn section(&self) -> &LinearMap {
        &self.section
    }

    pub fn constraints(&self) -> &Matrix {
        &self.constraints
    }

    pub fn middle_contains(&self, v: &SparseVec) -> bool {
        self.constraints.apply(self.ambient.ring(), v).is_zero()
    }

    pub fn kernel_contains(&self, v: &SparseVec) -> bool {
        self.middle_contains(v) && self.proj.apply(v).is_zero()
    }

    pub fn middle_basis(&self) -> Vec<SparseVec> {
        self.middle.basis().cloned().collect()
    }

    pub fn kernel_basis(&self) -> Vec<SparseVec> {
        self.kernel.basis().cloned().collect()
    }

    pub fn middle_dim(&self) -> usize {
        self.middle.rank()
    }

    pub fn kernel_dim(&self) -> usize {
        self.kernel.rank()
    }
}

/// Rows `ev_c` of a polynomial carrier, one per base coordinate.
fn eval_rows(poly: &PolyAlgebra, c: &Scalar) -> Result<Matrix> {
    Ok(poly.ev(c)?.matrix().clone())
}

/// `Ω A -> P A -> A` with `P A = t A[t]`, `proj = ev_1` and section
/// `a -> a t`.
pub fn loop_extension(a: &AlgebraRef, cap: usize) -> Result<Extension> {
    if cap == 0 {
        return Err(Error::DegreeCapExceeded { cap, needed: 1 });
    }
    let poly = PolyAlgebra::new(a, cap)?;
    let constraints = eval_rows(&poly, &Scalar::zero())?;
    let section = poly.times_power(1)?;
    Extension::new(format!("loop({})", a.name()), poly.algebra().clone(), constraints, poly.ev1(), section)
}

/// `Ω A -> A[t] -> A ⊕ A` with `proj = (ev_0, ev_1)` and section
/// `(a, b) -> (1 - t) a + t b`.
pub fn path_extension(a: &AlgebraRef, cap: usize) -> Result<Extension> {
    if cap == 0 {
        return Err(Error::DegreeCapExceeded { cap, needed: 1 });
    }
    let poly = PolyAlgebra::new(a, cap)?;
    let ring = a.ring().clone();
    let d = a.dim();
    let sum = direct_sum(a, a)?;
    let ev0 = poly.ev0();
    let ev1 = poly.ev1();
    let proj = LinearMap::from_fn(poly.algebra().clone(), sum.clone(), |x| {
        ev0.image(x).add(&ring, &ev1.image(x).map_indices(&ring, |i| i + d))
    })?;
    let section = LinearMap::try_from_fn(sum, poly.algebra().clone(), |x| {
        let (i, second) = (x % d, x >= d);
        let t = poly.monomial(&SparseVec::unit(i), 1)?;
        Ok(if second { t } else { SparseVec::unit(i).sub(&ring, &t) })
    })?;
    let constraints = Matrix::zero(0, poly.algebra().dim());
    Extension::new(format!("path({})", a.name()), poly.algebra().clone(), constraints, proj, section)
}

/// The path algebra of `f: A -> B`: pairs `(p, a)` in `B[t] ⊕ A` with
/// `p(0) = 0` and `p(1) = f(a)`, over `A` via `(p, a) -> a`, split by
/// `a -> (f(a) t, a)`. The kernel is `Ω B`.
pub fn mapping_path(f: &LinearMap, cap: usize) -> Result<Extension> {
    if cap == 0 {
        return Err(Error::DegreeCapExceeded { cap, needed: 1 });
    }
    let (a, b) = (f.source(), f.target());
    let ring = a.ring().clone();
    let poly = PolyAlgebra::new(b, cap)?;
    let ambient = direct_sum(poly.algebra(), a)?;
    let shift = poly.algebra().dim();
    let db = b.dim();
    let ev0 = poly.ev0();
    let ev1 = poly.ev1();
    // rows 0..db: ev_0(p); rows db..2db: ev_1(p) - f(a)
    let cols = (0..ambient.dim())
        .map(|x| {
            if x < shift {
                ev0.image(x).add(&ring, &ev1.image(x).map_indices(&ring, |i| i + db))
            } else {
                f.image(x - shift).neg(&ring).map_indices(&ring, |i| i + db)
            }
        })
        .collect();
    let constraints = Matrix::from_columns(2 * db, cols)?;
    let proj = LinearMap::from_fn(ambient.clone(), a.clone(), |x| {
        if x < shift {
            SparseVec::new()
        } else {
            SparseVec::unit(x - shift)
        }
    })?;
    let section = LinearMap::try_from_fn(a.clone(), ambient.clone(), |x| {
        let p = poly.monomial(f.image(x), 1)?;
        Ok(p.add(&ring, &SparseVec::unit(shift + x)))
    })?;
    Extension::new(format!("P_f({} -> {})", a.name(), b.name()), ambient, constraints, proj, section)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{matrix2, scalar_algebra};
    use num_traits::One;

    fn q() -> ScalarRing {
        ScalarRing::Rationals
    }

    fn int(n: i64) -> Scalar {
        Scalar::from_integer(n.into())
    }

    // dense polynomial over l as a coefficient list
    fn poly_of(p: &PolyAlgebra, coeffs: &[i64]) -> SparseVec {
        let cs: Vec<SparseVec> =
            coeffs.iter().map(|&c| SparseVec::from_entries([(0, int(c))])).collect();
        p.from_coefficients(&cs).unwrap()
    }

    #[test]
    fn t_squared_and_evaluation() {
        let l = scalar_algebra(&q());
        let p = PolyAlgebra::new(&l, 4).unwrap();
        let t = poly_of(&p, &[0, 1]);
        let t2 = p.algebra().mul_checked(&t, &t).unwrap();
        assert_eq!(t2, poly_of(&p, &[0, 0, 1]));
        assert_eq!(p.eval(&t, &Scalar::one()), SparseVec::unit(0));
        let loop_elt = poly_of(&p, &[0, -1, 1]);
        assert!(p.eval(&loop_elt, &Scalar::zero()).is_zero());
        assert!(p.eval(&loop_elt, &Scalar::one()).is_zero());
        assert_eq!(p.format(&poly_of(&p, &[1, -1])), "(1) + (-1)*t^1");
    }

    #[test]
    fn cap_overflow_is_reported() {
        let l = scalar_algebra(&q());
        let p = PolyAlgebra::new(&l, 2).unwrap();
        let t2 = poly_of(&p, &[0, 0, 1]);
        let err = p.algebra().mul_checked(&t2, &t2).unwrap_err();
        assert_eq!(err, Error::DegreeCapExceeded { cap: 2, needed: 4 });
    }

    #[test]
    fn evaluation_is_multiplicative_on_matrix_polynomials() {
        let m2 = matrix2(&q());
        let p = PolyAlgebra::new(&m2, 4).unwrap();
        for c in [int(0), int(1), int(-3), Scalar::new(2.into(), 7.into())] {
            let ev = p.ev(&c).unwrap();
            assert_eq!(ev.is_homomorphism(&CheckBudget::default(), true).unwrap(), Ok(()));
        }
        // ev_i ∘ c_A = id
        assert!(p.ev0().compose(&p.constant()).unwrap().is_identity());
        assert!(p.ev1().compose(&p.constant()).unwrap().is_identity());
    }

    #[test]
    fn division_by_t2_minus_t() {
        let l = scalar_algebra(&q());
        let p = PolyAlgebra::new(&l, 6).unwrap();
        // t^3 - t = (t^2 - t)(t + 1)
        assert_eq!(p.divide_by_t2_minus_t(&poly_of(&p, &[0, -1, 0, 1])), Some(poly_of(&p, &[1, 1])));
        assert_eq!(p.divide_by_t2_minus_t(&poly_of(&p, &[0, 1])), None);
        assert_eq!(p.divide_by_t2_minus_t(&SparseVec::new()), Some(SparseVec::new()));
    }

    #[test]
    fn constant_homotopy_and_a_broken_one() {
        let m2 = matrix2(&q());
        let id = LinearMap::identity(&m2);
        let h = Homotopy::constant(&id);
        assert_eq!(h.check(&id, &id, &CheckBudget::default()).unwrap(), Ok(()));
        // adding a nonzero u-coefficient breaks the endpoint at 1
        let bad = Homotopy::new(vec![id.clone(), id.clone()]).unwrap();
        let verdict = bad.check(&id, &id, &CheckBudget::default()).unwrap();
        assert!(matches!(verdict, Err(Violation::Endpoint { at: 1, .. })));
        // u - u: endpoints right, multiplicativity wrong in degree 1
        let wrong = Homotopy::new(vec![id.clone(), id.clone(), id.scaled(&int(-1))]).unwrap();
        let verdict = wrong.check(&id, &id, &CheckBudget::default()).unwrap();
        assert!(matches!(verdict, Err(Violation::ProductMismatch { coeff: Some(1), .. })));
    }

    #[test]
    fn reversal_swaps_endpoints() {
        let l = scalar_algebra(&q());
        let m2 = matrix2(&q());
        let e11 = SparseVec::unit(m2.index_of("e_{1,1}").unwrap());
        let e12 = SparseVec::unit(m2.index_of("e_{1,2}").unwrap());
        // u -> e11 + u e12 is idempotent for every u
        let h0 = LinearMap::from_fn(l.clone(), m2.clone(), |_| e11.clone()).unwrap();
        let h1 = LinearMap::from_fn(l.clone(), m2.clone(), |_| e12.clone()).unwrap();
        let h = Homotopy::new(vec![h0.clone(), h1]).unwrap();
        let f1 = h.evaluate(&Scalar::one()).unwrap();
        assert_eq!(h.check(&h0, &f1, &CheckBudget::default()).unwrap(), Ok(()));
        let r = h.reversed().unwrap();
        assert_eq!(r.check(&f1, &h0, &CheckBudget::default()).unwrap(), Ok(()));
    }

    #[test]
    fn loop_and_path_extensions_of_scalars() {
        let l = scalar_algebra(&q());
        let lp = loop_extension(&l, 4).unwrap();
        let p = PolyAlgebra::new(&l, 4).unwrap();
        assert_eq!(lp.section().image(0), &poly_of(&p, &[0, 1]));
        assert!(lp.kernel_contains(&poly_of(&p, &[0, -1, 1])));
        assert!(!lp.kernel_contains(&poly_of(&p, &[0, 1])));
        assert_eq!(lp.validate(&CheckBudget::default()).unwrap(), Ok(()));

        let path = path_extension(&l, 4).unwrap();
        let s10 = path.section().image(0);
        assert_eq!(s10, &poly_of(&p, &[1, -1]));
        assert_eq!(p.eval(s10, &Scalar::zero()), SparseVec::unit(0));
        assert!(p.eval(s10, &Scalar::one()).is_zero());
        assert!(path.proj().compose(path.section()).unwrap().is_identity());
        assert_eq!(path.validate(&CheckBudget::default()).unwrap(), Ok(()));
        assert_eq!(path.kernel_dim(), 3);
    }

    #[test]
    fn mapping_path_of_identity_and_zero() {
        let l = scalar_algebra(&q());
        let ext = mapping_path(&LinearMap::identity(&l), 2).unwrap();
        let amb = ext.ambient();
        let t_1 = SparseVec::from_entries([
            (amb.index_of("(t^1,0)").unwrap(), int(1)),
            (amb.index_of("(0,1)").unwrap(), int(1)),
        ]);
        assert!(ext.middle_contains(&t_1));
        assert_eq!(ext.section().image(0), &t_1);
        let sq = amb.mul_checked(&t_1, &t_1).unwrap();
        let t2_1 = SparseVec::from_entries([
            (amb.index_of("(t^2,0)").unwrap(), int(1)),
            (amb.index_of("(0,1)").unwrap(), int(1)),
        ]);
        assert_eq!(sq, t2_1);
        assert_eq!(ext.validate(&CheckBudget::default()).unwrap(), Ok(()));

        let m2 = matrix2(&q());
        let zero = LinearMap::zero(&m2, &m2);
        let ext = mapping_path(&zero, 3).unwrap();
        // P_0 = Ω M_2 ⊕ M_2: t-degrees 2..3 are free modulo one relation each
        assert_eq!(ext.middle_dim(), 4 * (3 - 1) + 4);
    }
}
