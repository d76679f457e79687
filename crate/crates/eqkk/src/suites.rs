//! The checks behind each suite. Every check is an independent closure
//! over immutable inputs; [`execute`] runs them on a thread pool and the
//! report sorts the records afterwards.

use std::panic::{catch_unwind, AssertUnwindSafe};

use eqkk_core::classify::{naturality_homotopy, rho, section_homotopy, truncated_j};
use eqkk_core::construct::group_algebra;
use eqkk_core::crossed::{
    baaj_skandalis_a, baaj_skandalis_b, check_duality, crossed_product, graded_embedding,
    green_julg_alpha, green_julg_beta, green_julg_composite_check, green_julg_conjugation_check,
    idempotent_verdict, invariant_idempotents, phi_lambda, crossed_stabilization_maps, smash_product,
};
use eqkk_core::equivariance::{
    finite_group_corner_maps, graded_swap_isos, mg_algebra, mg_graded_algebra, stab_iso_endf_factor,
    stab_iso_regular, validate_action, validate_grading, GModuleWithBasis,
};
use eqkk_core::homotopy::{loop_extension, mapping_path, path_extension, Homotopy, PolyAlgebra};
use eqkk_core::induction::{
    check_isomorphism, counit_map, induced_corner_composite, induced_restriction_iso, projection_isos,
    regular_induction_check, restrict, unit_counit_composite, unit_map, InducedAlgebra,
};
use eqkk_core::map::are_inverse;
use eqkk_core::{
    AlgebraRef, CheckBudget, CosetSpace, Error, GroupRef, LinearMap, Scalar, ScalarRing, SparseVec,
    Verdict, Violation,
};
use rayon::prelude::*;

use crate::report::{Record, Status};
use crate::scenario::{ExpectedFailure, Resolved, Scenario};
use crate::{HarnessError, Suite};

/// `Err` is a construction error, `Ok(Err)` a violated identity, and
/// `Ok(Ok(detail))` a pass.
type Step = eqkk_core::Result<Result<Option<String>, Violation>>;

macro_rules! hold {
    ($e:expr) => {
        if let Err(v) = $e? {
            return Ok(Err(v));
        }
    };
}

fn done() -> Step {
    Ok(Ok(None))
}

fn note(detail: impl Into<String>) -> Step {
    Ok(Ok(Some(detail.into())))
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> eqkk_core::Result<Verdict> {
    Ok(if cond { Ok(()) } else { Err(Violation::Other(msg())) })
}

enum Outcome {
    Pass(Option<String>),
    Fail { kind: Option<String>, witness: String },
    Skipped(String),
}

impl From<Step> for Outcome {
    fn from(step: Step) -> Outcome {
        match step {
            Ok(Ok(detail)) => Outcome::Pass(detail),
            Ok(Err(v)) => Outcome::Fail { kind: None, witness: v.to_string() },
            Err(e) => Outcome::Fail { kind: Some(e.kind().to_string()), witness: e.to_string() },
        }
    }
}

pub(crate) struct Check {
    suite: Suite,
    anchor: &'static str,
    instance: String,
    run: Box<dyn FnOnce() -> Outcome + Send>,
}

impl Check {
    fn record(self, expected: &[ExpectedFailure]) -> Record {
        let run = self.run;
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|panic| {
            let msg = panic
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".to_string());
            Outcome::Fail { kind: Some("Panic".into()), witness: msg }
        });
        let suite = self.suite.as_str();
        let (status, kind, witness, detail) = match outcome {
            Outcome::Pass(detail) => (Status::Pass, None, None, detail),
            Outcome::Skipped(reason) => (Status::Skipped, None, None, Some(reason)),
            Outcome::Fail { kind, witness } => {
                let declared = expected.iter().any(|x| {
                    x.suite == suite
                        && x.anchor.as_deref().is_none_or(|a| a == self.anchor)
                        && kind.as_deref() == Some(x.kind.as_str())
                });
                let status = if declared { Status::Expected } else { Status::Fail };
                (status, kind, Some(witness), None)
            }
        };
        Record {
            suite: suite.to_string(),
            anchor: self.anchor.to_string(),
            instance: self.instance,
            status,
            kind,
            witness,
            detail,
        }
    }
}

pub(crate) fn execute(
    checks: Vec<Check>,
    jobs: usize,
    expected: &[ExpectedFailure],
) -> Result<Vec<Record>, HarnessError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| HarnessError::Pool(e.to_string()))?;
    Ok(pool.install(|| checks.into_par_iter().map(|c| c.record(expected)).collect()))
}

// Size thresholds (in basis dimensions) above which a check is reported as
// skipped rather than run. The graded swap builds three algebras of
// dimension n^4 d with ~n^8 products each; S3 at 7776 needs ~1.7 GB.
const GRADED_SWAP_LIMIT: usize = 3_000;
const CONJUGATION_LIMIT: usize = 5_000;
const STABILIZATION_LIMIT: usize = 10_000;
const TENSOR_ALGEBRA_LIMIT: usize = 2_000;
const INDUCED_CORNER_LIMIT: usize = 10_000;

struct Plan<'a> {
    resolved: &'a Resolved,
    budget: CheckBudget,
    truncation: usize,
    checks: Vec<Check>,
}

impl Plan<'_> {
    fn add(
        &mut self,
        suite: Suite,
        anchor: &'static str,
        instance: impl Into<String>,
        f: impl FnOnce() -> Step + Send + 'static,
    ) {
        self.checks.push(Check {
            suite,
            anchor,
            instance: instance.into(),
            run: Box::new(move || Outcome::from(f())),
        });
    }

    fn skip(&mut self, suite: Suite, anchor: &'static str, instance: impl Into<String>, reason: impl Into<String>) {
        let reason = reason.into();
        self.checks.push(Check {
            suite,
            anchor,
            instance: instance.into(),
            run: Box::new(move || Outcome::Skipped(reason)),
        });
    }

    /// Runs `f` unless `size` exceeds `limit`.
    fn add_sized(
        &mut self,
        suite: Suite,
        anchor: &'static str,
        instance: impl Into<String>,
        size: usize,
        limit: usize,
        f: impl FnOnce() -> Step + Send + 'static,
    ) {
        if size > limit {
            self.skip(suite, anchor, instance, format!("dimension {size} above threshold {limit}"));
        } else {
            self.add(suite, anchor, instance, f);
        }
    }

    fn ring(&self) -> ScalarRing {
        self.resolved.ring.clone()
    }

    fn group(&self) -> GroupRef {
        self.resolved.group.clone()
    }

    /// Built algebras; in suites other than `axioms` every algebra that
    /// failed to build gets a skipped record.
    fn algebras(&mut self, suite: Suite) -> Vec<(String, AlgebraRef)> {
        let mut out = Vec::new();
        for a in &self.resolved.algebras {
            match &a.built {
                Ok(alg) => out.push((a.name.clone(), alg.clone())),
                Err(e) if suite != Suite::Axioms => {
                    let reason = format!("algebra did not build: {}", e.kind());
                    let name = a.name.clone();
                    self.skip(suite, "inputs/algebra", name, reason);
                }
                Err(_) => {}
            }
        }
        out
    }
}

pub(crate) fn collect(scenario: &Scenario, resolved: &Resolved, suite: Suite) -> Vec<Check> {
    let mut plan = Plan {
        resolved,
        budget: scenario.budget(scenario.seed),
        truncation: scenario.truncation,
        checks: Vec::new(),
    };
    for s in suite.expand() {
        match s {
            Suite::Axioms => axioms(&mut plan),
            Suite::Stability => stability(&mut plan),
            Suite::Homotopy => homotopy(&mut plan),
            Suite::Classify => classify(&mut plan),
            Suite::GreenJulg => green_julg(&mut plan),
            Suite::IndRes => ind_res(&mut plan),
            Suite::BaajSkandalis => baaj_skandalis(&mut plan),
            Suite::All => unreachable!("expanded"),
        }
    }
    plan.checks
}

fn group_label(g: &GroupRef) -> String {
    format!("G of order {}", g.order())
}

fn axioms(p: &mut Plan) {
    const S: Suite = Suite::Axioms;
    let g = p.group();
    let ring = p.ring();
    let budget = p.budget.clone();
    {
        let g = g.clone();
        p.add(S, "group/table", group_label(&g), move || note(format!("elements {}", g.names().join(", "))));
    }
    {
        let (g, ring) = (g.clone(), ring.clone());
        p.add(S, "group-algebra/averaging-idempotent", "lG", move || {
            let n = g.order();
            let inv = ring.inv_int(n).ok_or_else(|| Error::OrderNotInvertible(n, ring.to_string()))?;
            let lg = group_algebra(&ring, &g);
            let avg = SparseVec::from_entries(g.elements().map(|x| (x, inv.clone())));
            hold!(idempotent_verdict(&lg, &avg));
            note(lg.format(&avg))
        });
    }
    if let Some(cosets) = p.resolved.cosets.clone() {
        let instance = format!("index {}", cosets.len());
        p.add(S, "subgroup/cosets", instance, move || coset_partition(&cosets));
    }
    for a in &p.resolved.algebras {
        let name = a.name.clone();
        let alg = match &a.built {
            Ok(alg) => alg.clone(),
            Err(e) => {
                let e = e.clone();
                p.add(S, "algebra/associativity", name, move || Err(e));
                continue;
            }
        };
        {
            let (alg, budget) = (alg.clone(), budget.clone());
            p.add(S, "algebra/associativity", name.clone(), move || {
                alg.validate(&budget)?;
                let d = alg.dim();
                let mode = if d * d * d <= budget.triple_limit { "exhaustive" } else { "sampled" };
                note(format!("dim {d}, {mode}"))
            });
        }
        if alg.action().is_some() {
            let (a2, budget) = (alg.clone(), budget.clone());
            p.add(S, "algebra/action-laws", name.clone(), move || {
                validate_action(&a2, a2.require_action()?, &budget)?;
                done()
            });
            let (a2, budget) = (alg.clone(), p.budget.clone());
            p.add(S, "crossed-product/grading", name.clone(), move || {
                let cp = crossed_product(&a2)?;
                cp.validate(&budget)?;
                validate_grading(&cp, cp.require_grading()?)?;
                note(format!("dim {}", cp.dim()))
            });
            let (a2, budget) = (alg.clone(), p.budget.clone());
            p.add(S, "matrix-stabilization/action", name.clone(), move || {
                let m = mg_algebra(&a2)?;
                validate_action(&m, m.require_action()?, &budget)?;
                note(format!("dim {}", m.dim()))
            });
        } else {
            p.skip(S, "algebra/action-laws", name.clone(), "no action");
        }
        if alg.grading().is_some() {
            let a2 = alg.clone();
            p.add(S, "algebra/grading-laws", name.clone(), move || {
                validate_grading(&a2, a2.require_grading()?)?;
                done()
            });
            let (a2, budget) = (alg.clone(), p.budget.clone());
            p.add(S, "matrix-stabilization/grading", name.clone(), move || {
                let m = mg_graded_algebra(&a2)?;
                m.validate(&budget)?;
                validate_grading(&m, m.require_grading()?)?;
                note(format!("dim {}", m.dim()))
            });
            let (a2, budget) = (alg.clone(), p.budget.clone());
            p.add(S, "smash-product/action", name.clone(), move || {
                let s = smash_product(&a2)?;
                s.validate(&budget)?;
                validate_action(&s, s.require_action()?, &budget)?;
                note(format!("dim {}", s.dim()))
            });
        } else {
            p.skip(S, "algebra/grading-laws", name.clone(), "no grading");
        }
    }
}

fn coset_partition(cosets: &CosetSpace) -> Step {
    let g = cosets.parent();
    let h = cosets.subgroup().order();
    let mut seen = vec![false; g.order()];
    for (c, members) in cosets.cosets().iter().enumerate() {
        hold!(ensure(members.len() == h, || format!("coset {} has {} elements", cosets.label(c), members.len())));
        hold!(ensure(members.contains(&cosets.rep(c)), || format!("representative outside {}", cosets.label(c))));
        for &x in members {
            hold!(ensure(!seen[x], || format!("{} lies in two cosets", g.name(x))));
            seen[x] = true;
        }
    }
    hold!(ensure(seen.iter().all(|&s| s), || "cosets do not cover the group".into()));
    let e = g.identity();
    hold!(ensure(cosets.rep(cosets.coset_of(e)) == e, || "section is not pointed".into()));
    note(cosets.labels().join(" "))
}

fn stability(p: &mut Plan) {
    const S: Suite = Suite::Stability;
    let g = p.group();
    let ring = p.ring();
    let n = g.order();
    let regular = GModuleWithBasis::regular(&ring, &g);
    {
        let w = regular.clone();
        p.add(S, "regular-module/twist-iso", "W = lG", move || {
            let (t, s) = stab_iso_regular(&w)?;
            hold!(ensure(s.compose(&t)?.is_identity() && t.compose(&s)?.is_identity(), || {
                "maps are not mutually inverse".into()
            }));
            hold!(t.is_equivariant());
            hold!(s.is_equivariant());
            done()
        });
    }
    {
        let (w, budget) = (regular.clone(), p.budget.clone());
        p.add_sized(S, "endf/tensor-factor-iso", "W = lG", n.pow(4), STABILIZATION_LIMIT, move || {
            let f = stab_iso_endf_factor(&w)?;
            hold!(f.is_homomorphism(&budget, true));
            hold!(f.is_equivariant());
            hold!(ensure(f.is_isomorphism()?, || "not bijective".into()));
            note(format!("dim {}", f.source().dim()))
        });
    }
    {
        let (g, ring) = (g.clone(), ring.clone());
        p.add(S, "corner-maps/conjugation", group_label(&g), move || {
            let c = finite_group_corner_maps(&ring, &g)?;
            hold!(ensure(c.conjugation_holds()?, || "iota_bar(1) is not C iota(1) C^-1".into()));
            hold!(ensure(c.inverse_formulas_hold(&g), || "inverse change of basis differs".into()));
            done()
        });
    }
    for (name, a) in p.algebras(S) {
        if a.action().is_some() {
            let (w, budget) = (regular.clone(), p.budget.clone());
            let size = a.dim() * n * n * n;
            let a2 = a.clone();
            p.add_sized(S, "crossed-stabilization/inverse-homomorphisms", format!("{name}, W = lG"), size, STABILIZATION_LIMIT, move || {
                let m = crossed_stabilization_maps(&a2, &w)?;
                hold!(are_inverse(&m.phi, &m.psi));
                hold!(m.phi.is_homomorphism(&budget, true));
                hold!(m.psi.is_homomorphism(&budget, true));
                note(format!("dim {}", m.phi.source().dim()))
            });
        }
        if a.grading().is_some() {
            let budget = p.budget.clone();
            let size = a.dim() * n.pow(4);
            p.add_sized(S, "graded-swap/homogeneous-isos", name, size, GRADED_SWAP_LIMIT, move || {
                let iso = graded_swap_isos(&a)?;
                for f in [&iso.eta, &iso.mu] {
                    hold!(f.is_homomorphism(&budget, true));
                    hold!(f.is_homogeneous());
                    hold!(ensure(f.is_isomorphism()?, || "not bijective".into()));
                }
                note(format!("dim {}", iso.eta.source().dim()))
            });
        }
    }
}

fn homotopy(p: &mut Plan) {
    const S: Suite = Suite::Homotopy;
    let n = p.truncation;
    for (name, a) in p.algebras(S) {
        let instance = format!("{name}, N = {n}");
        let (a2, budget) = (a.clone(), p.budget.clone());
        p.add(S, "loop-extension/weakly-split", instance.clone(), move || {
            let ext = loop_extension(&a2, n)?;
            hold!(ext.validate(&budget));
            note(format!("middle {}, kernel {}", ext.middle_dim(), ext.kernel_dim()))
        });
        let (a2, budget) = (a.clone(), p.budget.clone());
        p.add(S, "path-extension/weakly-split", instance.clone(), move || {
            let ext = path_extension(&a2, n)?;
            hold!(ext.validate(&budget));
            note(format!("middle {}, kernel {}", ext.middle_dim(), ext.kernel_dim()))
        });
        let (a2, budget) = (a.clone(), p.budget.clone());
        p.add(S, "mapping-path/weakly-split", instance.clone(), move || {
            let ext = mapping_path(&LinearMap::identity(&a2), n)?;
            hold!(ext.validate(&budget));
            note(format!("middle {}, kernel {}", ext.middle_dim(), ext.kernel_dim()))
        });
        let budget = p.budget.clone();
        p.add(S, "polynomial-contraction/endpoints", instance, move || polynomial_contraction(&a, n, &budget));
    }
}

/// `p(t) -> p(ut)` is a homotopy from `c ∘ ev_0` to the identity of
/// `A[t]`; its reversal runs the other way.
fn polynomial_contraction(a: &AlgebraRef, n: usize, budget: &CheckBudget) -> Step {
    let poly = PolyAlgebra::new(a, n)?;
    let carrier = poly.algebra().clone();
    let d = a.dim();
    let coeffs = (0..=n)
        .map(|m| {
            LinearMap::from_fn(carrier.clone(), carrier.clone(), |k| {
                if k / d == m {
                    SparseVec::unit(k)
                } else {
                    SparseVec::new()
                }
            })
        })
        .collect::<eqkk_core::Result<Vec<_>>>()?;
    let h = Homotopy::new(coeffs)?;
    let start = poly.constant().compose(&poly.ev0())?;
    let end = LinearMap::identity(&carrier);
    hold!(h.check(&start, &end, budget));
    hold!(h.reversed()?.check(&end, &start, budget));
    done()
}

fn tensor_dim(d: usize, depth: usize) -> usize {
    (1..=depth).map(|k| d.saturating_pow(k as u32)).sum()
}

fn is_scalar_line(a: &AlgebraRef) -> bool {
    a.dim() == 1 && a.basis()[0] == "1" && a.unit() == Some(&SparseVec::unit(0))
}

fn classify(p: &mut Plan) {
    const S: Suite = Suite::Classify;
    let n = p.truncation;
    let depth = n.min(2);
    for (name, a) in p.algebras(S) {
        let instance = format!("{name}, N = {n}");
        let size = tensor_dim(a.dim(), n);
        let a2 = a.clone();
        p.add_sized(S, "truncated-j/validate", instance.clone(), size, TENSOR_ALGEBRA_LIMIT, move || {
            let j = truncated_j(&a2, n)?;
            hold!(j.validate());
            note(format!("dim J {}, rank of the counit {}", j.dim(), j.counit_rank()))
        });
        let a2 = a.clone();
        p.add_sized(S, "classifying-map/loop-divisibility", instance.clone(), size, TENSOR_ALGEBRA_LIMIT, move || {
            let r = rho(&a2, n)?;
            let poly = PolyAlgebra::new(&a2, n)?;
            for (k, img) in r.images.iter().enumerate() {
                hold!(ensure(poly.divide_by_t2_minus_t(img).is_some(), || {
                    format!("image of J basis {k} is not divisible by t^2 - t: {}", poly.format(img))
                }));
            }
            note(format!("{} images", r.images.len()))
        });
        if is_scalar_line(&a) && n >= 3 {
            let a2 = a.clone();
            p.add(S, "classifying-map/scalar-values", instance.clone(), move || scalar_values(&a2, n));
        }
        let size = tensor_dim(a.dim(), depth);
        let (a2, budget) = (a.clone(), p.budget.clone());
        let inst = format!("{name}, depth {depth}");
        p.add_sized(S, "section-homotopy/endpoints", inst.clone(), size, TENSOR_ALGEBRA_LIMIT, move || {
            let ext = loop_extension(&a2, 2 * depth)?;
            let poly = PolyAlgebra::new(&a2, 2 * depth)?;
            let h = section_homotopy(&ext, &poly.times_power(1)?, &poly.times_power(2)?, depth)?;
            hold!(h.validate(&budget));
            done()
        });
        let budget = p.budget.clone();
        p.add_sized(S, "naturality/identity-square", inst, size, TENSOR_ALGEBRA_LIMIT, move || {
            let ext = loop_extension(&a, depth)?;
            let id_mid = LinearMap::identity(ext.ambient());
            let id_quo = LinearMap::identity(&a);
            let w = naturality_homotopy(&ext, &ext, &id_mid, &id_quo, depth)?;
            hold!(w.homotopy.validate(&budget));
            done()
        });
    }
}

/// `rho(x⊗x - x) = t^2 - t` and `rho(x⊗x⊗x - x) = t^3 - t`.
fn scalar_values(a: &AlgebraRef, n: usize) -> Step {
    let r = rho(a, n)?;
    let poly = PolyAlgebra::new(a, n)?;
    let ring = a.ring();
    let t = r.j.tensor();
    let minus_one = ring.neg(&ring.one());
    let word = |len: usize| {
        SparseVec::from_entries([(0, minus_one.clone()), (t.index_of_word(&vec![0; len]), ring.one())])
    };
    let line = |c: i64| SparseVec::from_entries([(0, ring.from_int(c))]);
    for (len, expected) in [(2, [0, -1, 1, 0]), (3, [0, -1, 0, 1])] {
        let coeffs: Vec<SparseVec> = expected.iter().map(|&c| line(c)).collect();
        let want = poly.from_coefficients(&coeffs)?;
        let got = r.xi_hat.apply(&word(len));
        hold!(ensure(got == want, || {
            format!("rho({}) = {}, expected {}", t.format(&word(len)), poly.format(&got), poly.format(&want))
        }));
    }
    done()
}

/// Action matrices that permute the basis, as index permutations.
fn permutation_orbits(a: &AlgebraRef) -> Option<usize> {
    let act = a.action()?;
    let d = a.dim();
    let mut parent: Vec<usize> = (0..d).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        parent[x] = r;
        r
    }
    for m in act.matrices() {
        for j in 0..d {
            let col = m.col(j);
            let (i, c) = col.leading()?;
            if col.nnz() != 1 || !num_traits_is_one(c) {
                return None;
            }
            let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
            parent[ri] = rj;
        }
    }
    Some((0..d).filter(|&x| find(&mut parent, x) == x).count())
}

fn num_traits_is_one(c: &Scalar) -> bool {
    *c == Scalar::from_integer(1.into())
}

fn is_pointwise(a: &AlgebraRef) -> bool {
    let d = a.dim();
    d <= 20
        && (0..d).all(|i| {
            (0..d).all(|j| {
                let want = if i == j { Some(SparseVec::unit(i)) } else { None };
                a.product(i, j).cloned() == want
            })
        })
}

fn green_julg(p: &mut Plan) {
    const S: Suite = Suite::GreenJulg;
    let g = p.group();
    let ring = p.ring();
    let n = g.order();
    for (name, a) in p.algebras(S) {
        let (a2, g2) = (a.clone(), g.clone());
        p.add(S, "composite/beta-alpha", name.clone(), move || {
            hold!(green_julg_composite_check(&a2, &g2));
            done()
        });
        let (a2, g2, budget) = (a.clone(), g.clone(), p.budget.clone());
        p.add(S, "alpha/homomorphism", name.clone(), move || {
            let alpha = green_julg_alpha(&a2, &g2)?;
            hold!(alpha.is_homomorphism(&budget, false));
            done()
        });
        if a.action().is_some() {
            let (a2, budget) = (a.clone(), p.budget.clone());
            p.add(S, "beta/equivariant-homomorphism", name.clone(), move || {
                let beta = green_julg_beta(&a2)?;
                hold!(beta.is_homomorphism(&budget, true));
                hold!(beta.is_equivariant());
                done()
            });
            let a2 = a.clone();
            let size = n * n * n * (a.dim() + 1);
            p.add_sized(S, "conjugation/identity", name.clone(), size, CONJUGATION_LIMIT, move || {
                hold!(green_julg_conjugation_check(&a2));
                done()
            });
            if is_pointwise(&a) {
                let a2 = a.clone();
                p.add(S, "invariant-idempotents/count", name.clone(), move || {
                    let found = invariant_idempotents(&a2)?.len();
                    if let Some(orbits) = permutation_orbits(&a2) {
                        let want = 1usize << orbits;
                        hold!(ensure(found == want, || format!("{found} invariant idempotents, expected {want}")));
                    }
                    note(format!("{found} invariant 0/1 idempotents"))
                });
            }
        }
    }
    if n == 2 {
        for (label, num, den) in [("0", 0, 1), ("1", 1, 1), ("-1", -1, 1), ("7/3", 7, 3)] {
            let lambda = Scalar::new(num.into(), den.into());
            let instance = format!("lambda = {label}");
            if ring.reduce(&lambda).is_err() {
                p.skip(S, "phi-lambda/idempotent", instance, format!("{label} is not a scalar of {ring}"));
                continue;
            }
            let ring = ring.clone();
            p.add(S, "phi-lambda/idempotent", instance, move || {
                let (alg, v) = phi_lambda(&ring, &lambda)?;
                hold!(idempotent_verdict(&alg, &v));
                note(alg.format(&v))
            });
        }
    }
}

fn ind_res(p: &mut Plan) {
    const S: Suite = Suite::IndRes;
    let g = p.group();
    let ring = p.ring();
    {
        let (g, ring) = (g.clone(), ring.clone());
        p.add(S, "induction/regular-functions", group_label(&g), move || {
            hold!(regular_induction_check(&ring, &g));
            done()
        });
    }
    let Some(cosets) = p.resolved.cosets.clone() else {
        p.skip(S, "induction/relations", "no subgroup", "scenario has no subgroup");
        return;
    };
    let index = cosets.len();
    let sub_names: Vec<&str> = cosets.subgroup().members().iter().map(|&h| g.name(h)).collect();
    let h_label = format!("H = {{{}}}", sub_names.join(","));
    for (name, a) in p.algebras(S) {
        if a.action().is_none() {
            p.skip(S, "induction/relations", name, "no action");
            continue;
        }
        let instance = format!("{name}, {h_label}");
        let d = a.dim();
        let (a2, c2) = (a.clone(), cosets.clone());
        p.add(S, "restriction/action", instance.clone(), move || {
            let r = restrict(&a2, c2.subgroup())?;
            let trivial = r.require_action()?.is_trivial();
            note(if trivial { "restricted action is trivial" } else { "restricted action is nontrivial" })
        });
        let (a2, c2, budget) = (a.clone(), cosets.clone(), p.budget.clone());
        p.add(S, "induction/relations", instance.clone(), move || {
            let ind = InducedAlgebra::new(restrict(&a2, c2.subgroup())?, c2)?;
            hold!(ensure(ind.dim() == index * d, || format!("dim {} is not {index} x {d}", ind.dim())));
            hold!(ind.validate_relations(&budget));
            note(format!("dim {}", ind.dim()))
        });
        let (a2, c2, budget) = (a.clone(), cosets.clone(), p.budget.clone());
        p.add(S, "induction/section-independence", instance.clone(), move || {
            let ind = InducedAlgebra::new(restrict(&a2, c2.subgroup())?, c2)?;
            let reps = ind.alternate_section();
            hold!(ind.section_independence(&reps, &budget));
            let names: Vec<&str> = reps.iter().map(|&r| ind.group().name(r)).collect();
            note(format!("second section {}", names.join(", ")))
        });
        let (a2, c2, budget) = (a.clone(), cosets.clone(), p.budget.clone());
        p.add(S, "projection-formula/inverse-isomorphisms", instance.clone(), move || {
            let b = restrict(&a2, c2.subgroup())?;
            let iso = projection_isos(&b, &a2, &c2)?;
            hold!(iso.validate(&budget));
            note(format!("dim {}", iso.forward.source().dim()))
        });
        let (a2, c2, budget) = (a.clone(), cosets.clone(), p.budget.clone());
        p.add(S, "induced-restriction/isomorphism", instance.clone(), move || {
            let (_, map) = induced_restriction_iso(&a2, &c2)?;
            hold!(check_isomorphism(&map, &budget));
            let inverse = map.inverse()?.ok_or_else(|| Error::NotInvertible("induced restriction map".into(), a2.ring().to_string()))?;
            hold!(are_inverse(&map, &inverse));
            note(format!("rank {}", map.rank()?))
        });
        let (a2, c2, budget) = (a.clone(), cosets.clone(), p.budget.clone());
        p.add(S, "adjunction/counit-map", instance.clone(), move || {
            let (_, phi) = counit_map(&a2, &c2)?;
            hold!(phi.is_homomorphism(&budget, false));
            hold!(phi.is_equivariant());
            done()
        });
        let (a2, c2, budget) = (a.clone(), cosets.clone(), p.budget.clone());
        p.add(S, "adjunction/unit-map", instance.clone(), move || {
            let ind = InducedAlgebra::new(restrict(&a2, c2.subgroup())?, c2)?;
            let psi = unit_map(&ind)?;
            hold!(psi.is_homomorphism(&budget, false));
            hold!(psi.is_equivariant());
            done()
        });
        let (a2, c2) = (a.clone(), cosets.clone());
        p.add(S, "adjunction/unit-counit-composite", instance.clone(), move || {
            hold!(unit_counit_composite(&a2, &c2)?.verdict());
            done()
        });
        let c2 = cosets.clone();
        let size = index * index * index * d;
        p.add_sized(S, "adjunction/induced-corner", instance, size, INDUCED_CORNER_LIMIT, move || {
            let b = restrict(&a, c2.subgroup())?;
            hold!(induced_corner_composite(&b, &c2)?.verdict());
            done()
        });
    }
}

fn baaj_skandalis(p: &mut Plan) {
    const S: Suite = Suite::BaajSkandalis;
    for (name, a) in p.algebras(S) {
        if a.action().is_some() {
            let (a2, budget) = (a.clone(), p.budget.clone());
            p.add(S, "duality-a/inverse-isomorphisms", name.clone(), move || {
                let iso = baaj_skandalis_a(&a2)?;
                hold!(check_duality(&iso, &budget, false));
                note(format!("dim {}", iso.forward.source().dim()))
            });
        }
        if a.grading().is_some() {
            let (a2, budget) = (a.clone(), p.budget.clone());
            p.add(S, "duality-b/inverse-isomorphisms", name.clone(), move || {
                let iso = baaj_skandalis_b(&a2)?;
                hold!(check_duality(&iso, &budget, true));
                note(format!("dim {}", iso.forward.source().dim()))
            });
            let budget = p.budget.clone();
            p.add(S, "duality-b/graded-embedding", name, move || {
                let e = graded_embedding(&a)?;
                hold!(e.is_homomorphism(&budget, false));
                hold!(e.is_homogeneous());
                hold!(ensure(e.is_injective()?, || "not injective".into()));
                done()
            });
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(anchor: &'static str, run: impl FnOnce() -> Outcome + Send + 'static) -> Check {
        Check { suite: Suite::GreenJulg, anchor, instance: "x".into(), run: Box::new(run) }
    }

    fn failing(kind: &str) -> impl FnOnce() -> Outcome + Send + 'static {
        let kind = kind.to_string();
        move || Outcome::Fail { kind: Some(kind), witness: "w".into() }
    }

    #[test]
    fn declared_failures_match_suite_anchor_and_kind() {
        let declared = vec![ExpectedFailure {
            suite: "green-julg".into(),
            anchor: Some("alpha/homomorphism".into()),
            kind: "OrderNotInvertible".into(),
        }];
        let records = execute(
            vec![
                check("alpha/homomorphism", failing("OrderNotInvertible")),
                check("composite/beta-alpha", failing("OrderNotInvertible")),
                check("alpha/homomorphism", failing("NotAssociative")),
                check("alpha/homomorphism", || Outcome::Pass(None)),
            ],
            2,
            &declared,
        )
        .unwrap();
        let statuses: Vec<Status> = records.iter().map(|r| r.status).collect();
        assert_eq!(statuses, vec![Status::Expected, Status::Fail, Status::Fail, Status::Pass]);
    }

    #[test]
    fn panics_become_failures() {
        let records = execute(vec![check("p", || panic!("boom"))], 1, &[]).unwrap();
        assert_eq!(records[0].status, Status::Fail);
        assert_eq!(records[0].kind.as_deref(), Some("Panic"));
        assert_eq!(records[0].witness.as_deref(), Some("boom"));
    }

    #[test]
    fn steps_map_to_outcomes() {
        let violated: Step = Ok(Err(Violation::Other("no".into())));
        assert!(matches!(Outcome::from(violated), Outcome::Fail { kind: None, .. }));
        let broken: Step = Err(Error::MissingAction("A".into()));
        match Outcome::from(broken) {
            Outcome::Fail { kind, .. } => assert_eq!(kind.as_deref(), Some("MissingAction")),
            _ => panic!("construction error must fail"),
        }
    }

    #[test]
    fn orbit_count_of_a_permutation_action() {
        let ring = ScalarRing::Rationals;
        let g: GroupRef = std::sync::Arc::new(eqkk_core::FiniteGroup::cyclic(3));
        let dual = eqkk_core::construct::dual_group_algebra(&ring, &g).unwrap();
        assert_eq!(permutation_orbits(&dual), Some(1));
        assert!(is_pointwise(&dual));
        let lg = eqkk_core::construct::conjugation_group_algebra(&ring, &g).unwrap();
        assert_eq!(permutation_orbits(&lg), Some(3));
        assert!(!is_pointwise(&lg));
    }
}
