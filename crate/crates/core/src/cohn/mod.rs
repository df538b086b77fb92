//! Degree-capped verification of the generalized Cohn theorem.
//!
//! The reversible elements of the free associative Z2-algebra (those fixed by
//! the reversal involution) form a right unital generalized Jordan subalgebra.
//! The theorem says they coincide with the bullet-subalgebra generated by 1,
//! the generators, and all even and odd tetrads. Both sides are computed here
//! independently, degree by degree up to a cap: the reversible side by
//! enumerating reversal orbits, the generated side by a closure fixed point,
//! and the comparison is exact.

mod congruence;
mod spanbasis;

use std::time::Instant;

use serde::Serialize;

use crate::freealg::{brace, FreePoly, Generator, Universe};
use crate::gja::bullet;

pub use congruence::{congruence_suite, congruence_suite_with_closure, identity15_exact, CongruenceOptions};
pub use spanbasis::{CohnError, SpanBasis};

/// The even and odd tetrads of a generator universe: braces of four distinct
/// increasing even symbols, and of one odd symbol followed by three distinct
/// increasing even symbols.
#[derive(Clone, Debug)]
pub struct TetradSet {
    pub even: Vec<[Generator; 4]>,
    pub odd: Vec<[Generator; 4]>,
}

impl TetradSet {
    /// Every tetrad as a brace polynomial of degree four.
    pub fn braces(&self) -> Vec<FreePoly> {
        self.even
            .iter()
            .chain(self.odd.iter())
            .map(|seq| brace(seq))
            .collect()
    }

    pub fn len(&self) -> usize {
        self.even.len() + self.odd.len()
    }

    pub fn is_empty(&self) -> bool {
        self.even.is_empty() && self.odd.is_empty()
    }
}

/// Enumerates all tetrads: `C(num_even, 4)` even ones and
/// `num_odd * C(num_even, 3)` odd ones.
pub fn enumerate_tetrads(universe: &Universe) -> TetradSet {
    let evens: Vec<Generator> = universe.even_generators().collect();
    let n = evens.len();
    let mut even = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    even.push([evens[a], evens[b], evens[c], evens[d]]);
                }
            }
        }
    }
    let mut odd = Vec::new();
    for theta in universe.odd_generators() {
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    odd.push([theta, evens[a], evens[b], evens[c]]);
                }
            }
        }
    }
    TetradSet { even, odd }
}

/// Basis of the +1 eigenspace of the reversal involution on the degree-capped
/// algebra: one brace per reversal orbit of monomials.
pub fn reversible_basis(universe: &Universe, maxdeg: usize) -> SpanBasis {
    let mut basis = SpanBasis::new(maxdeg);
    for m in universe.monomials_up_to(maxdeg) {
        if m.orbit_representative() == m {
            let letters: Vec<Generator> = m.letters().collect();
            basis.insert(&brace(&letters));
        }
    }
    basis
}

/// Least subspace of the degree-capped algebra containing the generators and
/// closed under the bullet product in both orders. Pairs whose combined
/// degree exceeds the cap are discarded whole; the free algebra is
/// length-graded, so for homogeneous generators no element of the generated
/// subalgebra below the cap ever needs an intermediate above it.
///
/// The worklist pairs rows of the current echelon basis, scheduling pairs by
/// ascending combined degree; the final sweep recomputes every pair against
/// the final rows and certifies the fixed point.
pub fn closure(generators: &[FreePoly], maxdeg: usize) -> SpanBasis {
    let mut basis = SpanBasis::new(maxdeg);
    // blocks[d] holds pivots of rows whose degree was d at insertion
    let mut blocks: Vec<Vec<crate::freealg::Monomial>> = vec![Vec::new(); maxdeg + 1];
    for g in generators {
        if g.is_zero() || g.degree() > maxdeg {
            continue;
        }
        if let Some(pivot) = basis.insert(g) {
            let d = basis.pivot_row(&pivot).expect("just inserted").degree();
            blocks[d].push(pivot);
        }
    }
    loop {
        let mut changed = false;
        for total in 0..=maxdeg {
            for d1 in 0..=total {
                let d2 = total - d1;
                let mut i = 0;
                while i < blocks[d1].len() {
                    let mut j = 0;
                    while j < blocks[d2].len() {
                        let a = basis
                            .pivot_row(&blocks[d1][i])
                            .expect("pivot indexed")
                            .clone();
                        let b = basis
                            .pivot_row(&blocks[d2][j])
                            .expect("pivot indexed")
                            .clone();
                        // rows can pick up mixed degrees when generators are
                        // inhomogeneous; discard by current degrees
                        if a.degree() + b.degree() <= maxdeg {
                            let p = bullet(&a, &b);
                            debug_assert!(
                                !(a.is_homogeneous() && b.is_homogeneous())
                                    || p.is_zero()
                                    || (p.is_homogeneous() && p.degree() == a.degree() + b.degree()),
                                "bullet of homogeneous elements must be homogeneous"
                            );
                            if !p.is_zero() {
                                if let Some(pivot) = basis.insert(&p) {
                                    let d = basis.pivot_row(&pivot).expect("just inserted").degree();
                                    blocks[d].push(pivot);
                                    changed = true;
                                }
                            }
                        }
                        j += 1;
                    }
                    i += 1;
                }
            }
        }
        if !changed {
            break;
        }
    }
    basis
}

/// Exact membership of `p` in a computed span.
pub fn membership(p: &FreePoly, span: &SpanBasis) -> Result<bool, CohnError> {
    span.membership(p)
}

/// Per-degree dimensions of the two sides.
#[derive(Clone, Debug, Serialize)]
pub struct DegreeDims {
    pub degree: usize,
    pub reversible: usize,
    pub closure: usize,
}

/// Machine-readable outcome of a theorem-verification run.
#[derive(Clone, Debug, Serialize)]
pub struct CohnReport {
    pub num_even: u16,
    pub num_odd: u16,
    pub max_deg: usize,
    pub dim_reversible: usize,
    pub dim_closure: usize,
    pub by_degree: Vec<DegreeDims>,
    pub equal: bool,
    pub failed_braces: Vec<String>,
    pub elapsed_ms: u128,
}

/// A verification run with both computed spans, for further queries.
#[derive(Debug)]
pub struct CohnVerification {
    pub report: CohnReport,
    pub closure: SpanBasis,
    pub reversible: SpanBasis,
}

/// Builds the generating set of the theorem: the unit, every generator, and
/// every tetrad brace that fits under the cap.
pub fn cohn_generators(universe: &Universe, maxdeg: usize) -> Vec<FreePoly> {
    let mut gens = vec![FreePoly::one()];
    gens.extend(universe.generators().map(FreePoly::generator));
    if maxdeg >= 4 {
        gens.extend(enumerate_tetrads(universe).braces());
    }
    gens.retain(|g| g.degree() <= maxdeg);
    gens
}

/// Verifies the generalized Cohn theorem up to `maxdeg`: computes the closure
/// of the tetrad generating set and the reversible basis independently,
/// compares dimensions degree by degree, and tests membership of every brace
/// of degree at most `maxdeg` in the closure.
pub fn verify_cohn_full(universe: &Universe, maxdeg: usize) -> CohnVerification {
    let start = Instant::now();
    let gens = cohn_generators(universe, maxdeg);
    let clo = closure(&gens, maxdeg);
    let rev = reversible_basis(universe, maxdeg);

    let mut failed_braces = Vec::new();
    for m in universe.monomials_up_to(maxdeg) {
        if m.orbit_representative() != m {
            continue;
        }
        let letters: Vec<Generator> = m.letters().collect();
        let b = brace(&letters);
        if !clo.contains(&b) {
            failed_braces.push(b.to_string());
        }
    }

    let by_degree: Vec<DegreeDims> = (0..=maxdeg)
        .map(|d| DegreeDims {
            degree: d,
            reversible: rev.dim_at_degree(d),
            closure: clo.dim_at_degree(d),
        })
        .collect();
    let equal = rev.dim() == clo.dim() && failed_braces.is_empty();
    let report = CohnReport {
        num_even: universe.num_even(),
        num_odd: universe.num_odd(),
        max_deg: maxdeg,
        dim_reversible: rev.dim(),
        dim_closure: clo.dim(),
        by_degree,
        equal,
        failed_braces,
        elapsed_ms: start.elapsed().as_millis(),
    };
    CohnVerification {
        report,
        closure: clo,
        reversible: rev,
    }
}

/// See [`verify_cohn_full`]; returns the report alone.
pub fn verify_cohn(universe: &Universe, maxdeg: usize) -> CohnReport {
    verify_cohn_full(universe, maxdeg).report
}
