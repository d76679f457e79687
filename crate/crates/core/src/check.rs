//! Verification budgets and failure witnesses.
//!
//! Pair and triple checks run exhaustively while the number of cases stays
//! under the budget limits, and on a seeded random sample otherwise, so a
//! check is always reproducible from its seed.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckBudget {
    pub pair_limit: usize,
    pub triple_limit: usize,
    pub samples: usize,
    pub seed: u64,
}

impl Default for CheckBudget {
    fn default() -> Self {
        CheckBudget { pair_limit: 10_000, triple_limit: 100_000, samples: 1_000, seed: 0 }
    }
}

impl CheckBudget {
    pub fn with_seed(seed: u64) -> Self {
        CheckBudget { seed, ..Default::default() }
    }

    /// Pairs `(i, j)` with `i < n1`, `j < n2`.
    pub fn pairs(&self, n1: usize, n2: usize) -> Vec<(usize, usize)> {
        if n1 == 0 || n2 == 0 {
            return Vec::new();
        }
        if n1 * n2 <= self.pair_limit {
            return (0..n1).flat_map(|i| (0..n2).map(move |j| (i, j))).collect();
        }
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed ^ 0x7061_6972);
        let mut out: Vec<(usize, usize)> =
            (0..self.samples).map(|_| (rng.gen_range(0..n1), rng.gen_range(0..n2))).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Triples `(i, j, k)` with all entries below `n`.
    pub fn triples(&self, n: usize) -> Vec<(usize, usize, usize)> {
        if n == 0 {
            return Vec::new();
        }
        if n.saturating_mul(n).saturating_mul(n) <= self.triple_limit {
            let mut out = Vec::with_capacity(n * n * n);
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        out.push((i, j, k));
                    }
                }
            }
            return out;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed ^ 0x7472_6970);
        let mut out: Vec<(usize, usize, usize)> = (0..self.samples)
            .map(|_| (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n)))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Whether checks on `n1 x n2` pairs are exhaustive under this budget.
    pub fn pairs_exhaustive(&self, n1: usize, n2: usize) -> bool {
        n1 * n2 <= self.pair_limit
    }
}

/// Why a map failed a structural check, with the basis-level witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// `f(b_i b_j) != f(b_i) f(b_j)`; for homotopies `coeff` is the power of
    /// the homotopy parameter where the mismatch occurs.
    ProductMismatch { left: usize, right: usize, coeff: Option<usize> },
    UnitNotPreserved,
    NotEquivariant { group_element: String, basis: usize },
    NotHomogeneous { basis: usize },
    Endpoint { at: usize, basis: usize },
    MatrixMismatch { column: usize },
    NotInKernel { basis: usize },
    Other(String),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::ProductMismatch { left, right, coeff: None } => {
                write!(f, "not multiplicative on basis pair ({left}, {right})")
            }
            Violation::ProductMismatch { left, right, coeff: Some(k) } => {
                write!(f, "not multiplicative on basis pair ({left}, {right}) in coefficient {k}")
            }
            Violation::UnitNotPreserved => write!(f, "unit not preserved"),
            Violation::NotEquivariant { group_element, basis } => {
                write!(f, "not equivariant for {group_element} on basis {basis}")
            }
            Violation::NotHomogeneous { basis } => write!(f, "basis {basis} leaves its degree"),
            Violation::Endpoint { at, basis } => {
                write!(f, "evaluation at {at} differs on basis {basis}")
            }
            Violation::MatrixMismatch { column } => write!(f, "matrices differ in column {column}"),
            Violation::NotInKernel { basis } => write!(f, "image of basis {basis} leaves the kernel"),
            Violation::Other(msg) => write!(f, "{msg}"),
        }
    }
}

/// Outcome of a structural check: `Err` carries the witness.
pub type Verdict = Result<(), Violation>;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exhaustive_below_limits() {
        let b = CheckBudget::default();
        assert_eq!(b.pairs(3, 4).len(), 12);
        assert_eq!(b.triples(4).len(), 64);
    }

    #[test]
    fn sampling_is_seeded() {
        let b = CheckBudget::with_seed(7);
        let p1 = b.pairs(500, 500);
        assert!(p1.len() <= 1000 && p1.len() > 900);
        assert_eq!(p1, b.pairs(500, 500));
        assert_ne!(p1, CheckBudget::with_seed(8).pairs(500, 500));
        assert!(b.triples(100).iter().all(|&(i, j, k)| i < 100 && j < 100 && k < 100));
    }
}
