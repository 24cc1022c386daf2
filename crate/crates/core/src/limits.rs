use crate::error::{Error, Result};

/// Size guards for the exhaustive routines.
///
/// Every exact solver in this crate is exponential or high-degree polynomial;
/// rather than run for hours they refuse inputs above these bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest semigroup table accepted by exhaustive table operations.
    pub table: usize,
    /// Largest graph handed to the maximum-clique solver.
    pub clique_vertices: usize,
    /// Largest graph handed to the chromatic-number solver.
    pub chromatic_vertices: usize,
    /// Largest ring whose axioms are checked at construction.
    pub ring_order: usize,
    /// Maximum number of ideals enumerated before giving up.
    pub ideals: usize,
    /// Maximum number of truncated polynomials enumerated.
    pub polynomials: usize,
    /// Maximum number of standard monomials in a multivariate quotient.
    pub monomials: usize,
    /// Largest finite poset or space (points are stored in a 64-bit mask).
    pub points: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            table: 4096,
            clique_vertices: 200,
            chromatic_vertices: 64,
            ring_order: 1024,
            ideals: 10_000,
            polynomials: 50_000,
            monomials: 64,
            points: 20,
        }
    }
}

impl Limits {
    pub(crate) fn check(guard: &'static str, limit: usize, actual: usize) -> Result<()> {
        if actual > limit {
            Err(Error::GuardExceeded {
                guard,
                limit,
                actual,
            })
        } else {
            Ok(())
        }
    }
}
